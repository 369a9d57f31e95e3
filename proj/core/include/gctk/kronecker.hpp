#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gctk/characters.hpp"
#include "gctk/partition.hpp"

namespace gctk {

struct TripleQuery {
    Partition lambda, mu, nu;
};

/* Kronecker coefficient k(lambda, mu, nu) as the exact class sum
   sum_rho |C_rho| chi_lambda(rho) chi_mu(rho) chi_nu(rho) / n!.
   The division must come out exact and nonnegative or std::logic_error. */
mpz_class kron(const TripleQuery& q, CharacterTable& chi);

/* Rectangular Kronecker k(lambda, n x d, n x d) with d = |lambda| / n;
   requires n | |lambda|. */
mpz_class kron_rect(std::uint32_t n, const Partition& lambda, CharacterTable& chi);

/* Smallest s in [1, s_max] with kron_rect(n, s*lambda) > 0, if any. */
std::optional<std::uint32_t> stretch_probe(std::uint32_t n, const Partition& lambda,
                                           std::uint32_t s_max, CharacterTable& chi);

struct ObstructionReport {
    Partition lambda;
    std::uint32_t n = 0, d = 0, m = 0;
    mpz_class pleth_value;
    mpz_class kron_value;
    bool shape_ok = false;  // length <= m^2 + 1 and lambda_1 >= d*(n - m)
};

struct ObstructionSearchConfig {
    bool enforce_shape = false;    // skip candidates failing the shape filter
    std::uint32_t max_rows = 0;    // 0: scan up to n^2 rows; else custom bound
    std::uint64_t candidate_cap = 100000;
    unsigned threads = 1;
};

struct ObstructionScan {
    std::uint64_t candidates = 0;  // partitions examined
    std::vector<ObstructionReport> reports;
};

/* Scans lambda |- d*n with at most n^2 rows for multiplicity obstructions:
   candidates where the plethysm multiplicity is positive but the rectangular
   Kronecker coefficient vanishes.  Reports come back in enumeration order
   regardless of the worker count.  Throws resource_cap_error if the candidate
   list exceeds the configured cap. */
ObstructionScan obstruction_search(std::uint32_t n, std::uint32_t d, std::uint32_t m,
                                   const ObstructionSearchConfig& cfg);

}  // namespace gctk
