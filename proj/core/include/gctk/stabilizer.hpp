#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace gctk {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Exact integer determinant (Bareiss fraction-free elimination).
mpz_class integer_determinant(const IntMatrix& m);

// True iff det(A X B^T) == det(X) and det(X^T) == det(X) for this triple.
bool stabilizer_identity_holds(const IntMatrix& a, const IntMatrix& b, const IntMatrix& x);

// Random determinant-one matrix built from integer elementary shears.
IntMatrix random_unimodular(std::uint32_t n, class RngStream& rng);

// Randomized check that pairs of determinant-one matrices acting by
// X -> A X B^T, together with transposition, preserve det exactly.
// Returns true iff every trial passes.
bool stabilizer_check(std::uint32_t n, std::uint32_t trials, std::uint64_t seed = 1);

}  // namespace gctk
