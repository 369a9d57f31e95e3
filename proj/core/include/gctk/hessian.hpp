#pragma once

#include <cstdint>
#include <vector>

#include "gctk/sparse_poly.hpp"

namespace gctk {

/* Hessian of f with respect to the ordered variable list: the nvars x nvars
   matrix of second partials (SparsePoly entries), variables 0..nvars-1. */
std::vector<std::vector<SparsePoly>> hessian(const SparsePoly& f, std::uint32_t nvars);

/* Exact rank of the Hessian evaluated at a rational point: rows are cleared
   to integers and reduced by fraction-free (Bareiss) elimination with full
   pivoting. */
std::size_t rank_at(const std::vector<std::vector<SparsePoly>>& h,
                    const std::vector<mpq_class>& point);

/* Exact rank of a rational matrix (same elimination core). */
std::size_t rational_rank(std::vector<std::vector<mpq_class>> m);

/* t^(n-m) * f for homogeneous f of degree m <= n; t is the variable at
   t_index, which must not occur in f. */
SparsePoly pad_polynomial(const SparsePoly& f, std::uint32_t n, std::uint32_t t_index);

struct MignonRessayreReport {
    std::uint32_t m = 0;
    std::vector<std::vector<mpz_class>> point;  // all-ones with corner 1-m
    mpz_class permanent_value;                  // must be 0
    std::size_t hessian_rank = 0;               // must be m^2
    std::size_t dc_lower_bound = 0;             // ceil(rank / 2)
};

/* The permanent lower-bound certificate: at the all-ones matrix with corner
   entry 1-m the permanent vanishes while its Hessian has full rank m^2,
   giving dc(per_m) >= ceil(m^2 / 2). */
MignonRessayreReport mignon_ressayre_certificate(std::uint32_t m);

/* Numeric check of the Hessian transformation law
   H_{f(Lx+b)}(x) = L^T H_f(Lx+b) L at `trials` random rational points.
   L is nvars(f) x k, b is nvars(f) long. */
bool hessian_transform_check(const SparsePoly& f, const std::vector<std::vector<mpq_class>>& L,
                             const std::vector<mpq_class>& b, std::uint32_t trials,
                             std::uint64_t seed = 1);

}  // namespace gctk
