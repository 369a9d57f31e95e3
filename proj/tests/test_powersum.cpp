#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gctk/characters.hpp"
#include "gctk/partition.hpp"
#include "gctk/powersum.hpp"

using gctk::CharacterTable;
using gctk::Partition;
using gctk::PowerSumVector;

namespace {

Partition P(std::vector<std::uint32_t> parts) { return Partition(std::move(parts)); }

using Expo = std::vector<std::uint32_t>;  // exponent vector in k variables
using SymPoly = std::map<Expo, mpz_class, std::greater<Expo>>;

void sym_add(SymPoly& p, const Expo& e, const mpz_class& c) {
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

/* Exponent vectors of the monomial basis of Sym^n C^k. */
std::vector<Expo> symmetric_power_monomials(std::uint32_t n, std::uint32_t k) {
    std::vector<Expo> out;
    Expo e(k, 0);
    auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t left) -> void {
        if (pos + 1 == k) {
            e[pos] = left;
            out.push_back(e);
            return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
            e[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

/* GL_k-character of Sym^d Sym^n C^k: one monomial per size-d multiset of
   Sym^n monomials, exponents added. */
SymPoly plethysm_character(std::uint32_t n, std::uint32_t d, std::uint32_t k) {
    const std::vector<Expo> base = symmetric_power_monomials(n, k);
    SymPoly out;
    Expo acc(k, 0);
    auto rec = [&](auto&& self, std::size_t lo, std::uint32_t left) -> void {
        if (left == 0) {
            sym_add(out, acc, 1);
            return;
        }
        for (std::size_t i = lo; i < base.size(); ++i) {
            for (std::uint32_t v = 0; v < k; ++v) acc[v] += base[i][v];
            self(self, i, left - 1);
            for (std::uint32_t v = 0; v < k; ++v) acc[v] -= base[i][v];
        }
    };
    rec(rec, 0, d);
    return out;
}

/* Schur polynomial s_lam(x_1..x_k) by direct semistandard-tableau
   enumeration: rows weakly increase, columns strictly increase. */
SymPoly schur_polynomial(const Partition& lam, std::uint32_t k) {
    SymPoly out;
    if (lam.length() > k) return out;
    std::vector<std::vector<std::uint32_t>> fill(lam.length());
    for (std::size_t r = 0; r < lam.length(); ++r) fill[r].resize(lam.part(r), 0);
    Expo content(k, 0);
    auto rec = [&](auto&& self, std::size_t r, std::uint32_t c) -> void {
        if (r == fill.size()) {
            sym_add(out, content, 1);
            return;
        }
        if (c == fill[r].size()) {
            self(self, r + 1, 0);
            return;
        }
        std::uint32_t lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);
        if (r > 0) lo = std::max(lo, fill[r - 1][c] + 1);
        for (std::uint32_t v = lo; v <= k; ++v) {
            fill[r][c] = v;
            ++content[v - 1];
            self(self, r, c + 1);
            --content[v - 1];
        }
    };
    rec(rec, 0, 0);
    return out;
}

/* Schur expansion by leading-monomial peeling: the lex-top exponent of a
   symmetric polynomial is a partition, subtract that many copies of its
   Schur polynomial and repeat. */
std::map<Partition, mpz_class> peel_schur_expansion(SymPoly poly, std::uint32_t k) {
    std::map<Partition, mpz_class> mult;
    while (!poly.empty()) {
        const Expo top = poly.begin()->first;
        const mpz_class c = poly.begin()->second;
        std::vector<std::uint32_t> parts;
        for (std::uint32_t v : top)
            if (v > 0) parts.push_back(v);
        const Partition lam(parts);
        REQUIRE(c > 0);
        mult[lam] = c;
        for (const auto& [e, sc] : schur_polynomial(lam, k)) sym_add(poly, e, -c * sc);
    }
    return mult;
}

/* Weyl dimension formula for GL_k: prod_{i<j} (lam_i - lam_j + j - i)/(j - i). */
mpz_class weyl_dimension(const Partition& lam, std::uint32_t k) {
    std::vector<long> row(k, 0);
    for (std::size_t i = 0; i < lam.length(); ++i) row[i] = static_cast<long>(lam.part(i));
    mpz_class num = 1, den = 1;
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = i + 1; j < k; ++j) {
            num *= row[i] - row[j] + static_cast<long>(j) - static_cast<long>(i);
            den *= static_cast<long>(j) - static_cast<long>(i);
        }
    return gctk::exact_div(num, den, "weyl_dimension");
}

mpz_class binom(std::uint64_t n, std::uint64_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

TEST_CASE("complete homogeneous functions in the power-sum basis") {
    const PowerSumVector h1 = gctk::h_in_powersums(1);
    CHECK(h1.coefficient(P({1})) == 1);
    CHECK(h1.terms().size() == 1);

    const PowerSumVector h2 = gctk::h_in_powersums(2);
    CHECK(h2.coefficient(P({1, 1})) == mpq_class(1, 2));
    CHECK(h2.coefficient(P({2})) == mpq_class(1, 2));
    CHECK(h2.terms().size() == 2);

    const PowerSumVector h0 = gctk::h_in_powersums(0);
    CHECK(h0.coefficient(Partition()) == 1);
    CHECK(h0.degree() == 0);
}

TEST_CASE("vector arithmetic keeps degrees straight and prunes zeros") {
    PowerSumVector v(2);
    v.add_term(P({2}), mpq_class(1, 3));
    v.add_term(P({2}), mpq_class(-1, 3));
    CHECK(v.terms().empty());
    CHECK(v.coefficient(P({1, 1})) == 0);
    CHECK_THROWS_AS(v.add_term(P({3}), 1), std::invalid_argument);

    PowerSumVector w(2);
    w.add_term(P({1, 1}), 2);
    PowerSumVector u(2);
    u.add_term(P({2}), mpq_class(1, 2));
    const PowerSumVector prod = w * u;
    CHECK(prod.degree() == 4);
    CHECK(prod.coefficient(P({2, 1, 1})) == 1);
    u += w;
    CHECK(u.coefficient(P({1, 1})) == 2);
    CHECK(u.scaled(mpq_class(1, 4)).coefficient(P({1, 1})) == mpq_class(1, 2));
}

TEST_CASE("power-sum plethysm scales the indices") {
    const PowerSumVector h2 = gctk::h_in_powersums(2);
    CHECK(gctk::powersum_plethysm(1, h2) == h2);

    PowerSumVector p1(1);
    p1.add_term(P({1}), 1);
    const PowerSumVector doubled = gctk::powersum_plethysm(2, p1);
    CHECK(doubled.degree() == 2);
    CHECK(doubled.coefficient(P({2})) == 1);

    const PowerSumVector h2_in_p2 = gctk::powersum_plethysm(2, h2);
    CHECK(h2_in_p2.degree() == 4);
    CHECK(h2_in_p2.coefficient(P({2, 2})) == mpq_class(1, 2));
    CHECK(h2_in_p2.coefficient(P({4})) == mpq_class(1, 2));

    CHECK_THROWS_AS(gctk::powersum_plethysm(0, h2), std::invalid_argument);
}

TEST_CASE("outer plethysm base cases") {
    for (std::uint32_t n : {1u, 2u, 3u}) CHECK(gctk::outer_plethysm_h_h(1, n) == gctk::h_in_powersums(n));
    CHECK(gctk::outer_plethysm_h_h(2, 1) == gctk::h_in_powersums(2));
}

TEST_CASE("Schur expansion of the degree-4 outer plethysm") {
    CharacterTable chi;
    const PowerSumVector f = gctk::outer_plethysm_h_h(2, 2);
    CHECK(gctk::schur_coefficient(f, P({4}), chi) == 1);
    CHECK(gctk::schur_coefficient(f, P({3, 1}), chi) == 0);
    CHECK(gctk::schur_coefficient(f, P({2, 2}), chi) == 1);
    CHECK(gctk::schur_coefficient(f, P({2, 1, 1}), chi) == 0);
    CHECK(gctk::schur_coefficient(f, P({1, 1, 1, 1}), chi) == 0);
}

TEST_CASE("Schur coefficients of h_3") {
    CharacterTable chi;
    const PowerSumVector h3 = gctk::h_in_powersums(3);
    CHECK(gctk::schur_coefficient(h3, P({3}), chi) == 1);
    CHECK(gctk::schur_coefficient(h3, P({1, 1, 1}), chi) == 0);
}

TEST_CASE("plethysm multiplicity examples and argument checking") {
    CharacterTable chi;
    CHECK(gctk::pleth(2, 2, P({2, 2}), 2, chi) == 1);
    CHECK(gctk::pleth(2, 2, P({2, 2}), 5, chi) == 1);
    CHECK(gctk::pleth(2, 2, P({3, 1}), 3, chi) == 0);
    // More rows than variables contributes nothing.
    CHECK(gctk::pleth(2, 2, P({2, 1, 1}), 2, chi) == 0);
    CHECK_THROWS_AS(gctk::pleth(2, 2, P({2, 1}), 4, chi), std::invalid_argument);
}

TEST_CASE("d-th symmetric power of a single variable is one-dimensional") {
    CharacterTable chi;
    for (std::uint32_t d = 1; d <= 6; ++d) {
        for (const Partition& lam : gctk::enumerate_partitions(d)) {
            const mpz_class want = lam == P({d}) ? 1 : 0;
            CHECK(gctk::pleth(1, d, lam, 4, chi) == want);
        }
    }
}

TEST_CASE("Schur coefficients of outer plethysms are nonnegative integers, dn <= 12") {
    CharacterTable chi;
    for (std::uint32_t n = 1; n <= 12; ++n)
        for (std::uint32_t d = 1; d * n <= 12; ++d) {
            const PowerSumVector f = gctk::outer_plethysm_h_h(d, n);
            for (const Partition& lam : gctk::enumerate_partitions(d * n)) {
                const mpq_class c = gctk::schur_coefficient(f, lam, chi);
                CHECK(c.get_den() == 1);
                CHECK(c >= 0);
            }
        }
}

TEST_CASE("character-based expansion matches the monomial peel oracle, dn <= 8") {
    CharacterTable chi;
    for (std::uint32_t k : {2u, 3u})
        for (std::uint32_t n = 1; n * 1 <= 8; ++n)
            for (std::uint32_t d = 1; d * n <= 8; ++d) {
                const auto oracle = peel_schur_expansion(plethysm_character(n, d, k), k);
                for (const Partition& lam : gctk::enumerate_partitions(d * n)) {
                    mpz_class want = 0;
                    if (auto it = oracle.find(lam); it != oracle.end()) want = it->second;
                    CHECK(gctk::pleth(n, d, lam, k, chi) == want);
                }
            }
}

TEST_CASE("expansion dimensions sum to dim Sym^d Sym^n, dn <= 10") {
    CharacterTable chi;
    for (std::uint32_t k : {2u, 3u})
        for (std::uint32_t n = 1; n <= 10; ++n)
            for (std::uint32_t d = 1; d * n <= 10; ++d) {
                mpz_class total = 0;
                for (const Partition& lam : gctk::enumerate_partitions(d * n, k))
                    total += gctk::pleth(n, d, lam, k, chi) * weyl_dimension(lam, k);
                const mpz_class inner = binom(n + k - 1, n);
                const mpz_class want = binom(inner.get_ui() + d - 1, d);
                CHECK(total == want);
            }
}
