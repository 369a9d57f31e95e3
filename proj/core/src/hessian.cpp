#include "gctk/hessian.hpp"

#include <algorithm>
#include <stdexcept>

namespace gctk {

std::vector<std::vector<SparsePoly>> hessian(const SparsePoly& f, std::uint32_t nvars) {
    std::vector<SparsePoly> first(nvars);
    for (std::uint32_t v = 0; v < nvars; ++v) first[v] = f.derivative(v);
    std::vector<std::vector<SparsePoly>> h(nvars, std::vector<SparsePoly>(nvars));
    for (std::uint32_t i = 0; i < nvars; ++i)
        for (std::uint32_t j = i; j < nvars; ++j) {
            h[i][j] = first[i].derivative(j);
            if (j != i) h[j][i] = h[i][j];
        }
    return h;
}

namespace {

/* Bareiss fraction-free elimination with full pivoting on an integer matrix;
   returns the rank.  Exact throughout: every division is by the previous
   pivot and leaves no remainder. */
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    mpz_class prev(1);
    std::size_t r = 0;
    for (; r < std::min(rows, cols); ++r) {
        // Full pivot: any nonzero in the trailing block.
        std::size_t pi = r, pj = r;
        bool found = false;
        for (std::size_t i = r; i < rows && !found; ++i)
            for (std::size_t j = r; j < cols; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                    break;
                }
        if (!found) break;
        std::swap(m[r], m[pi]);
        if (pj != r)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][r], m[i][pj]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = r + 1; j < cols; ++j)
                m[i][j] = exact_div(m[r][r] * m[i][j] - m[i][r] * m[r][j], prev, "bareiss");
            m[i][r] = 0;
        }
        prev = m[r][r];
    }
    return r;
}

}  // namespace

std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
    if (m.empty()) return 0;
    std::vector<std::vector<mpz_class>> ints(m.size(), std::vector<mpz_class>(m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        mpz_class lcm(1);
        for (const auto& q : m[i]) {
            mpz_class den = q.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            mpq_class scaled = m[i][j] * mpq_class(lcm);
            scaled.canonicalize();
            if (scaled.get_den() != 1) throw std::logic_error("rational_rank: row clearing failed");
            ints[i][j] = scaled.get_num();
        }
    }
    return bareiss_rank(std::move(ints));
}

std::size_t rank_at(const std::vector<std::vector<SparsePoly>>& h,
                    const std::vector<mpq_class>& point) {
    std::vector<std::vector<mpq_class>> m(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        m[i].reserve(h[i].size());
        for (const auto& e : h[i]) m[i].push_back(e.evaluate(point));
    }
    return rational_rank(std::move(m));
}

SparsePoly pad_polynomial(const SparsePoly& f, std::uint32_t n, std::uint32_t t_index) {
    std::uint32_t m = f.total_degree();
    if (!f.is_homogeneous(m))
        throw std::invalid_argument("pad_polynomial: f must be homogeneous");
    if (n < m) throw std::invalid_argument("pad_polynomial: n < deg f");
    for (const auto& [mono, c] : f.terms())
        for (const auto& [v, e] : mono)
            if (v == t_index)
                throw std::invalid_argument("pad_polynomial: t_index occurs in f");
    if (n == m) return f;
    SparsePoly t_power;
    t_power.add_term({{t_index, n - m}}, 1);
    return f * t_power;
}

MignonRessayreReport mignon_ressayre_certificate(std::uint32_t m) {
    if (m < 2) throw std::invalid_argument("mignon_ressayre_certificate: m >= 2 required");
    if (m > 7) throw resource_cap_error("mignon_ressayre_certificate: m > 7 not budgeted");
    MignonRessayreReport rep;
    rep.m = m;
    rep.point.assign(m, std::vector<mpz_class>(m, 1));
    rep.point[m - 1][m - 1] = 1 - static_cast<long>(m);

    const SparsePoly per = permanent_poly(m);
    std::vector<mpq_class> flat(static_cast<std::size_t>(m) * m);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            flat[matrix_var(m, i, j)] = mpq_class(rep.point[i][j]);

    const mpq_class value = per.evaluate(flat);
    if (value.get_den() != 1) throw std::logic_error("mignon_ressayre: non-integer permanent");
    rep.permanent_value = value.get_num();

    rep.hessian_rank = rank_at(hessian(per, m * m), flat);
    rep.dc_lower_bound = (rep.hessian_rank + 1) / 2;
    return rep;
}

bool hessian_transform_check(const SparsePoly& f, const std::vector<std::vector<mpq_class>>& L,
                             const std::vector<mpq_class>& b, std::uint32_t trials,
                             std::uint64_t seed) {
    const std::uint32_t nf = f.variable_span();
    if (L.size() != nf || b.size() != nf)
        throw std::invalid_argument("hessian_transform_check: L/b shape mismatch");
    const std::uint32_t k = L.empty() ? 0 : static_cast<std::uint32_t>(L[0].size());
    for (const auto& row : L)
        if (row.size() != k)
            throw std::invalid_argument("hessian_transform_check: ragged L");

    // Compose F(y) = f(L y + b) over the rationals.
    RationalPoly F;
    {
        std::vector<RationalPoly> forms(nf);
        for (std::uint32_t v = 0; v < nf; ++v) {
            RationalPoly aff = RationalPoly::constant(b[v]);
            for (std::uint32_t j = 0; j < k; ++j) {
                if (L[v][j] == 0) continue;
                aff.add_term({{j, 1}}, L[v][j]);
            }
            forms[v] = std::move(aff);
        }
        RationalPoly fr;
        for (const auto& [mono, c] : f.terms()) fr.add_term(mono, mpq_class(c));
        F = fr.substitute(forms);
    }

    std::vector<RationalPoly> dF(k);
    for (std::uint32_t v = 0; v < k; ++v) dF[v] = F.derivative(v);
    std::vector<SparsePoly> df(nf);
    for (std::uint32_t v = 0; v < nf; ++v) df[v] = f.derivative(v);

    RngStream rng(seed, /*stream_tag=*/0x8E55);
    for (std::uint32_t t = 0; t < trials; ++t) {
        std::vector<mpq_class> y(k);
        for (auto& v : y) {
            const long num = rng.span(-9, 9);
            const long den = rng.span(1, 4);
            v = mpq_class(num, den);
            v.canonicalize();
        }
        std::vector<mpq_class> x(nf);
        for (std::uint32_t i = 0; i < nf; ++i) {
            x[i] = b[i];
            for (std::uint32_t j = 0; j < k; ++j) x[i] += L[i][j] * y[j];
        }
        // H_F(y) directly...
        std::vector<std::vector<mpq_class>> lhs(k, std::vector<mpq_class>(k));
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = i; j < k; ++j) {
                lhs[i][j] = dF[i].derivative(j).evaluate(y);
                if (i != j) lhs[j][i] = lhs[i][j];
            }
        // ...against L^T H_f(x) L.
        std::vector<std::vector<mpq_class>> hf(nf, std::vector<mpq_class>(nf));
        for (std::uint32_t i = 0; i < nf; ++i)
            for (std::uint32_t j = i; j < nf; ++j) {
                hf[i][j] = df[i].derivative(j).evaluate(x);
                if (i != j) hf[j][i] = hf[i][j];
            }
        for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j) {
                mpq_class rhs = 0;
                for (std::uint32_t u = 0; u < nf; ++u) {
                    if (L[u][i] == 0) continue;
                    mpq_class inner = 0;
                    for (std::uint32_t v = 0; v < nf; ++v) {
                        if (L[v][j] == 0) continue;
                        inner += hf[u][v] * L[v][j];
                    }
                    rhs += L[u][i] * inner;
                }
                if (rhs != lhs[i][j]) return false;
            }
    }
    return true;
}

}  // namespace gctk
