#pragma once

#include <cstdint>
#include <map>

#include "gctk/characters.hpp"
#include "gctk/partition.hpp"

namespace gctk {

/* Homogeneous symmetric function of fixed degree written in the power-sum
   basis: a finite map from partitions pi of the degree to exact rational
   coefficients of p_pi.  Ordered keys keep serialization and iteration
   deterministic. */
class PowerSumVector {
public:
    using TermMap = std::map<Partition, mpq_class, std::greater<Partition>>;

    explicit PowerSumVector(std::uint64_t degree) : degree_(degree) {}

    std::uint64_t degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    mpq_class coefficient(const Partition& pi) const;

    /* Adds c * p_pi; zero results are pruned.  Requires |pi| = degree. */
    void add_term(const Partition& pi, const mpq_class& c);

    PowerSumVector& operator+=(const PowerSumVector& other);
    PowerSumVector operator*(const PowerSumVector& other) const;  // degrees add
    PowerSumVector scaled(const mpq_class& c) const;

    bool operator==(const PowerSumVector&) const = default;

private:
    std::uint64_t degree_;
    TermMap terms_;
};

/* h_n = sum over rho |- n of p_rho / z_rho. */
PowerSumVector h_in_powersums(std::uint32_t n);

/* Plethysm by p_k: every part of every key is multiplied by k, coefficients
   unchanged (the Q-algebra endomorphism p_j -> p_{ jk }). */
PowerSumVector powersum_plethysm(std::uint32_t k, const PowerSumVector& f);

/* h_d[h_n] via h_d = sum_rho p_rho / z_rho and the p_k plethysm rule. */
PowerSumVector outer_plethysm_h_h(std::uint32_t d, std::uint32_t n);

/* <f, s_lambda> = sum_pi coeff(pi) * chi_lambda(pi). */
mpq_class schur_coefficient(const PowerSumVector& f, const Partition& lambda,
                            CharacterTable& chi);

/* Multiplicity of the GL-irreducible V_lambda inside Sym^d(Sym^n C^num_vars):
   the Schur coefficient of h_d[h_n] at lambda, or 0 when lambda has more than
   num_vars rows.  The result is a nonnegative integer; anything else raises
   std::logic_error. */
mpz_class pleth(std::uint32_t n, std::uint32_t d, const Partition& lambda,
                std::uint32_t num_vars, CharacterTable& chi);

}  // namespace gctk
