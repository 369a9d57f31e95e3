#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gctk/common.hpp"

namespace gctk {

/* Monomial: sorted (variable index, positive exponent) pairs.  The default
   vector ordering doubles as the canonical term order for serialization. */
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);

/* Multivariate polynomial as a term map with exact coefficients.  The public
   integer instantiation is SparsePoly; the rational one backs internal
   affine-substitution identities. */
template <class Coef>
class BasicSparsePoly {
public:
    using TermMap = std::map<Monomial, Coef>;

    BasicSparsePoly() = default;

    static BasicSparsePoly constant(Coef c) {
        BasicSparsePoly p;
        p.add_term({}, std::move(c));
        return p;
    }
    static BasicSparsePoly variable(std::uint32_t v) {
        BasicSparsePoly p;
        p.add_term({{v, 1}}, Coef(1));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(Monomial m, Coef c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BasicSparsePoly& operator+=(const BasicSparsePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BasicSparsePoly& operator-=(const BasicSparsePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    BasicSparsePoly operator+(const BasicSparsePoly& o) const {
        BasicSparsePoly r(*this);
        r += o;
        return r;
    }
    BasicSparsePoly operator-(const BasicSparsePoly& o) const {
        BasicSparsePoly r(*this);
        r -= o;
        return r;
    }
    BasicSparsePoly operator*(const BasicSparsePoly& o) const {
        BasicSparsePoly r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
        return r;
    }
    BasicSparsePoly negated() const {
        BasicSparsePoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    BasicSparsePoly scaled(const Coef& s) const {
        BasicSparsePoly r;
        if (s == 0) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    bool operator==(const BasicSparsePoly&) const = default;

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
        return d;
    }
    bool is_homogeneous(std::uint32_t degree) const {
        for (const auto& [m, c] : terms_)
            if (monomial_degree(m) != degree) return false;
        return true;
    }
    /* Largest variable index + 1 over the support. */
    std::uint32_t variable_span() const {
        std::uint32_t hi = 0;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) hi = std::max(hi, v + 1);
        return hi;
    }

    BasicSparsePoly derivative(std::uint32_t var) const {
        BasicSparsePoly r;
        for (const auto& [m, c] : terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i].first != var) continue;
                Monomial dm = m;
                Coef dc = c * Coef(m[i].second);
                if (--dm[i].second == 0) dm.erase(dm.begin() + static_cast<std::ptrdiff_t>(i));
                r.add_term(std::move(dm), std::move(dc));
                break;
            }
        }
        return r;
    }

    /* Exact evaluation; the point must cover every variable in the support. */
    template <class Val>
    Val evaluate(const std::vector<Val>& point) const {
        Val acc(0);
        for (const auto& [m, c] : terms_) {
            Val t(c);
            for (const auto& [v, e] : m) {
                if (v >= point.size())
                    throw std::invalid_argument("SparsePoly::evaluate: point too short");
                for (std::uint32_t k = 0; k < e; ++k) t *= point[v];
            }
            acc += t;
        }
        return acc;
    }

    std::uint64_t evaluate_mod(const std::vector<std::uint64_t>& point, std::uint64_t p) const;

    /* Substitutes forms[v] for variable v (composition). */
    BasicSparsePoly substitute(const std::vector<BasicSparsePoly>& forms) const {
        BasicSparsePoly acc;
        for (const auto& [m, c] : terms_) {
            BasicSparsePoly t = constant(c);
            for (const auto& [v, e] : m) {
                if (v >= forms.size())
                    throw std::invalid_argument("SparsePoly::substitute: missing form");
                for (std::uint32_t k = 0; k < e; ++k) t = t * forms[v];
            }
            acc += t;
        }
        return acc;
    }

private:
    static std::uint32_t monomial_degree(const Monomial& m) {
        std::uint32_t d = 0;
        for (const auto& [v, e] : m) d += e;
        return d;
    }

    TermMap terms_;
};

using SparsePoly = BasicSparsePoly<mpz_class>;
using RationalPoly = BasicSparsePoly<mpq_class>;

/* Variable convention for n x n matrix polynomials: entry (i, j), 0-based,
   lives at index i*n + j; a padding variable takes the next free index n*n. */
inline std::uint32_t matrix_var(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
    return i * n + j;
}

/* Symbolic permanent / determinant of the generic n x n matrix.  Term count
   is n!; callers gate n through their resource caps. */
SparsePoly permanent_poly(std::uint32_t n);
SparsePoly determinant_poly(std::uint32_t n);

}  // namespace gctk
