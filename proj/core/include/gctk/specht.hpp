#pragma once

#include <cstdint>
#include <vector>

#include "gctk/kronecker.hpp"
#include "gctk/partition.hpp"

namespace gctk {

/* Representation-theoretic cross-check for small symmetric groups, built
   without any character recursion: the Specht module of shape lambda is
   realized concretely inside the tabloid permutation module as the span of
   the standard polytabloids, the action matrices X_g are solved exactly from
   B X = P_g B over the rationals, and every character value is a trace.

   Deliberately independent of CharacterTable so the two routes can referee
   each other; exhaustive only for n <= kMaxDegree. */
class SpechtModule {
public:
    static constexpr std::uint32_t kMaxDegree = 5;

    explicit SpechtModule(const Partition& shape);

    std::size_t dimension() const { return dim_; }
    const Partition& shape() const { return shape_; }

    /* Trace of the representation matrix of g (one-line image array). */
    mpq_class trace(const std::vector<std::uint32_t>& g) const;
    /* Full matrix of g in the standard-polytabloid basis. */
    std::vector<std::vector<mpq_class>> matrix(const std::vector<std::uint32_t>& g) const;

private:
    std::size_t tabloid_index(const std::vector<std::uint8_t>& row_of) const;
    std::vector<std::vector<mpq_class>> action_columns(const std::vector<std::uint32_t>& g) const;

    Partition shape_;
    std::uint32_t degree_ = 0;
    std::size_t dim_ = 0;
    std::vector<std::vector<std::uint8_t>> tabloids_;      // row assignment per element
    std::vector<std::vector<mpz_class>> basis_;            // tabloid-count x dim
    std::vector<std::size_t> pivot_rows_;                  // dim independent rows of basis_
    std::vector<std::vector<mpq_class>> pivot_inverse_;    // inverse of basis_ at pivot rows
};

/* All one-line permutations of {0..n-1} in lexicographic order. */
std::vector<std::vector<std::uint32_t>> all_permutations(std::uint32_t n);

/* Kronecker coefficient by averaging the trace of the triple tensor of the
   explicit Specht matrices over the whole group: (1/n!) sum_g tr X_g tr Y_g tr Z_g.
   Requires |lambda| <= SpechtModule::kMaxDegree. */
mpz_class kron_oracle(const TripleQuery& q);

}  // namespace gctk
