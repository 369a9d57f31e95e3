#include "gctk/sparse_poly.hpp"

#include <algorithm>
#include <numeric>

namespace gctk {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

template <>
std::uint64_t BasicSparsePoly<mpz_class>::evaluate_mod(const std::vector<std::uint64_t>& point,
                                                       std::uint64_t p) const {
    std::uint64_t acc = 0;
    for (const auto& [m, c] : terms_) {
        mpz_class cm = c % p;
        if (cm < 0) cm += p;
        std::uint64_t t = cm.get_ui();
        for (const auto& [v, e] : m) {
            if (v >= point.size())
                throw std::invalid_argument("SparsePoly::evaluate_mod: point too short");
            t = mulmod(t, powmod(point[v] % p, e, p), p);
        }
        acc = addmod(acc, t, p);
    }
    return acc;
}

namespace {

int permutation_sign_inline(const std::vector<std::uint32_t>& p) {
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

SparsePoly generic_matrix_functional(std::uint32_t n, bool signed_terms) {
    SparsePoly out;
    if (n == 0) {
        out.add_term({}, 1);  // empty product convention
        return out;
    }
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        Monomial m;
        m.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) m.emplace_back(matrix_var(n, i, perm[i]), 1);
        std::sort(m.begin(), m.end());
        out.add_term(std::move(m), signed_terms ? permutation_sign_inline(perm) : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

SparsePoly permanent_poly(std::uint32_t n) { return generic_matrix_functional(n, false); }

SparsePoly determinant_poly(std::uint32_t n) { return generic_matrix_functional(n, true); }

}  // namespace gctk
