#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gctk/partition.hpp"

namespace gctk {

/* Irreducible S_n character values chi_lambda(rho) by the Murnaghan-Nakayama
   border-strip recursion on first-column hook lengths (beta-sets).

   A table instance owns a private partition interner plus a memo keyed on
   (remaining shape, remaining cycle multiset); evaluations against the same
   shape family share all intermediate work.  Instances are not synchronized:
   concurrent callers replicate one table per worker, which is sound because
   the results are pure values. */
class CharacterTable {
public:
    /* chi_lambda(rho); requires |lambda| = |rho|. */
    mpz_class character(const Partition& lambda, const Partition& rho);

    /* chi_lambda(1^n): the dimension of the irreducible. */
    mpz_class dimension(const Partition& lambda);

    std::size_t memo_entries() const { return memo_.size(); }

private:
    std::uint32_t intern(const Partition& p);
    std::uint32_t intern_owned(std::vector<std::uint32_t> parts);
    const mpz_class& strip_sum(std::uint32_t shape_id, std::uint32_t cyc_id);

    std::unordered_map<Partition, std::uint32_t, PartitionHash> ids_;
    std::vector<Partition> pool_;
    /* tail_of_[cid] = id of the cycle partition minus its first part. */
    std::vector<std::int64_t> tail_of_;
    std::unordered_map<std::uint64_t, mpz_class> memo_;
};

}  // namespace gctk
