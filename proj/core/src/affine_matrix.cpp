#include "gctk/affine_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gctk {

AffineMatrix::AffineMatrix(std::uint32_t size, std::vector<SparsePoly> entries)
    : size_(size), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(size_) * size_)
        throw std::invalid_argument("AffineMatrix: entry count != size^2");
    for (const auto& e : entries_)
        if (e.total_degree() > 1)
            throw std::invalid_argument("AffineMatrix: entry of degree > 1");
}

void AffineMatrix::scale_row(std::uint32_t row, const mpz_class& c) {
    if (row >= size_) throw std::invalid_argument("AffineMatrix::scale_row: row out of range");
    for (std::uint32_t j = 0; j < size_; ++j) at(row, j) = at(row, j).scaled(c);
}

SparsePoly matrix_det_sym(const AffineMatrix& a, std::uint32_t max_size) {
    const std::uint32_t n = a.size();
    if (n > max_size)
        throw resource_cap_error("matrix_det_sym: size " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(max_size));
    if (n > 64) throw resource_cap_error("matrix_det_sym: size > 64 unsupported");

    // Nonzero column lists per row; DFS over column assignments prunes on them.
    std::vector<std::vector<std::uint32_t>> support(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (!a.at(i, j).is_zero()) support[i].push_back(j);

    SparsePoly det;
    std::vector<std::uint32_t> chosen(n, 0);
    auto dfs = [&](auto&& self, std::uint32_t row, std::uint64_t used, const SparsePoly& prod) -> void {
        if (row == n) {
            // Parity of the assembled permutation via cycle count.
            std::vector<bool> seen(n, false);
            int sign = 1;
            for (std::uint32_t i = 0; i < n; ++i) {
                if (seen[i]) continue;
                std::uint32_t j = i, len = 0;
                while (!seen[j]) {
                    seen[j] = true;
                    j = chosen[j];
                    ++len;
                }
                if (len % 2 == 0) sign = -sign;
            }
            if (sign > 0) det += prod;
            else det -= prod;
            return;
        }
        for (std::uint32_t col : support[row]) {
            if (used & (1ULL << col)) continue;
            chosen[row] = col;
            self(self, row + 1, used | (1ULL << col), prod * a.at(row, col));
        }
    };
    dfs(dfs, 0, 0, SparsePoly::constant(1));
    return det;
}

std::uint64_t matrix_eval_mod_p(const AffineMatrix& a, const std::vector<std::uint64_t>& point,
                                std::uint64_t p) {
    const std::uint32_t n = a.size();
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) m[i][j] = a.at(i, j).evaluate_mod(point, p);

    std::uint64_t det = 1;
    bool negate = false;
    for (std::uint32_t c = 0; c < n; ++c) {
        std::uint32_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            negate = !negate;
        }
        det = mulmod(det, m[c][c], p);
        const std::uint64_t inv = invmod(m[c][c], p);
        for (std::uint32_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const std::uint64_t f = mulmod(m[r][c], inv, p);
            for (std::uint32_t cc = c; cc < n; ++cc)
                m[r][cc] = submod(m[r][cc], mulmod(f, m[c][cc], p), p);
        }
    }
    return negate ? (p - det) % p : det;
}

VerifyReport verify_representation(const AffineMatrix& a, const SparsePoly& f, VerifyMode mode,
                                   std::uint32_t trials, std::uint64_t seed,
                                   std::uint32_t sym_max_size) {
    VerifyReport rep;
    rep.mode = mode;
    if (mode == VerifyMode::symbolic) {
        rep.verified = (matrix_det_sym(a, sym_max_size) == f);
        return rep;
    }
    if (trials == 0) throw std::invalid_argument("verify_representation: trials must be positive");

    const std::uint32_t nvars = std::max(f.variable_span(), [&] {
        std::uint32_t hi = 0;
        for (const auto& e : a.entries()) hi = std::max(hi, e.variable_span());
        return hi;
    }());
    const std::uint64_t degree_bound = std::max<std::uint64_t>(a.size(), f.total_degree());

    rep.trials = trials;
    const double per_trial =
        static_cast<double>(degree_bound) / static_cast<double>(kModulusP62);
    rep.error_bound = 1.0;
    for (std::uint32_t t = 0; t < trials; ++t) rep.error_bound *= per_trial;

    RngStream rng(seed, /*stream_tag=*/0xA11FE);
    std::vector<std::uint64_t> point(nvars);
    for (std::uint32_t t = 0; t < trials; ++t) {
        for (auto& x : point) x = rng.below(kModulusP62);
        if (matrix_eval_mod_p(a, point, kModulusP62) != f.evaluate_mod(point, kModulusP62)) {
            rep.verified = false;
            return rep;
        }
    }
    rep.verified = true;
    return rep;
}

}  // namespace gctk
