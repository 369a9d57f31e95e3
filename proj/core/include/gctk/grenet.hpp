#pragma once

#include <cstdint>

#include "gctk/affine_matrix.hpp"

namespace gctk {

/* Determinantal representation of the m x m permanent of size 2^m - 1:
   vertices are the proper subsets S of {1..m} ordered by (popcount, lex),
   with the empty set doubling as start and sink; the edge S -> S + {j}
   carries the variable x_{|S|+1, j} and every vertex except the first has a
   unit loop.  Entry (i, j) of the matrix is the weight of the edge from
   vertex j to vertex i, so det = (-1)^(m-1) * per_m.

   With normalize set, the first row is rescaled by (-1)^(m-1) so that
   det = per_m on the nose.

   Variables use the matrix_var(m, ., .) convention: x_{r, c} (1-based in the
   construction) sits at index (r-1)*m + (c-1). */
AffineMatrix grenet_matrix(std::uint32_t m, bool normalize = false);

/* The size-7 instance for the 3 x 3 permanent, written out literally entry
   by entry as a fixed reference object for regression tests. */
AffineMatrix reference_per3_matrix();

}  // namespace gctk
