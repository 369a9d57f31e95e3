#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gctk/common.hpp"

namespace gctk {

/* Integer partition: weakly decreasing positive parts.  The empty partition
   is the unique partition of 0. */
class Partition {
public:
    Partition() = default;
    /* Validates: throws std::invalid_argument on increasing or zero parts. */
    explicit Partition(std::vector<std::uint32_t> parts);

    std::uint64_t size() const { return size_; }        // |lambda|
    std::size_t length() const { return parts_.size(); }  // number of parts
    std::uint32_t first() const { return parts_.empty() ? 0 : parts_[0]; }
    std::uint32_t part(std::size_t i) const { return parts_[i]; }
    const std::vector<std::uint32_t>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    /* Componentwise scaling s*lambda (stretching). */
    Partition scaled(std::uint32_t s) const;
    /* Componentwise sum; shorter argument padded with zeros. */
    Partition plus(const Partition& other) const;

    bool operator==(const Partition&) const = default;
    /* Lexicographic on the part vector; enumeration emits lex-decreasing. */
    auto operator<=>(const Partition& other) const {
        return parts_ <=> other.parts_;
    }

private:
    friend struct PartitionHash;
    std::vector<std::uint32_t> parts_;
    std::uint64_t size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::uint64_t h = 0xCBF29CE484222325ULL;
        for (std::uint32_t v : p.parts()) {
            h ^= v;
            h *= 0x100000001B3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

/* All partitions of n in lexicographically decreasing order, optionally
   restricted to at most max_parts parts and first part at most max_first.
   n = 0 yields exactly the empty partition. */
std::vector<Partition> enumerate_partitions(
    std::uint64_t n,
    std::optional<std::uint32_t> max_parts = std::nullopt,
    std::optional<std::uint32_t> max_first = std::nullopt);

/* Conjugacy class of S_n identified by its cycle type. */
class ClassType {
public:
    explicit ClassType(Partition cycle_type);

    const Partition& cycle_type() const { return cycles_; }
    std::uint64_t degree() const { return cycles_.size(); }  // the n of S_n
    /* z_rho = prod_j j^{m_j} m_j!  (centralizer order). */
    const mpz_class& centralizer_order() const { return z_; }
    /* n! / z_rho. */
    mpz_class class_size() const;
    /* Sign character: (-1)^(n - #cycles). */
    int sign() const;

private:
    Partition cycles_;
    mpz_class z_;
};

}  // namespace gctk
