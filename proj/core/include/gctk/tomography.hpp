#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "gctk/partition.hpp"

namespace gctk {

// Finite subset of N^3 with unique points, kept sorted.
class Relation3D {
public:
    using Point = std::array<std::uint32_t, 3>;

    Relation3D() = default;
    explicit Relation3D(std::vector<Point> pts);

    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool contains(const Point& p) const;
    bool operator==(const Relation3D&) const = default;

private:
    std::vector<Point> points_;
};

// Per-axis slice counts indexed from 0, plus the total coordinate weight
// sum_{(x,y,z) in R} (x+y+z).
struct MarginalTriple {
    std::vector<std::uint64_t> xm, ym, zm;
    mpz_class weighted_size;
};

MarginalTriple marginals(const Relation3D& r);

// True iff R is downward-closed in the coordinatewise order.
bool is_pyramid(const Relation3D& r);

// Mean coordinate sum of a nonempty relation, exact.
mpq_class mean_coordinate_sum(const Relation3D& r);

// Number of 3D-relations whose axis marginals are the conjugates of
// lambda, mu, nu.  All three partitions must have equal size d; weights
// beyond weight_cap are refused.
std::uint64_t count_relations_t(const Partition& lambda, const Partition& mu,
                                const Partition& nu, std::uint32_t weight_cap = 10);

// Same count restricted to pyramids.
std::uint64_t count_pyramids_p(const Partition& lambda, const Partition& mu,
                               const Partition& nu, std::uint32_t weight_cap = 10);

// Materialized variants for small weights (testing and inspection).
std::vector<Relation3D> enumerate_relations(const Partition& lambda, const Partition& mu,
                                            const Partition& nu, std::uint32_t weight_cap = 10);
std::vector<Relation3D> enumerate_pyramids(std::uint32_t d, std::uint32_t weight_cap = 10);

// The staircase simplex P(s) = {(x,y,z) : x+y+z < s}.
Relation3D simplex_relation(std::uint32_t s);

struct SimplexData {
    std::uint32_t s = 0;          // largest s with |P(s)| <= d
    mpz_class simplex_size;       // |P(s)| = s(s+1)(s+2)/6
    mpq_class h;                  // interpolated mean coordinate sum at weight d
};

SimplexData simplex_data(std::uint64_t d);

// Barycenter test: sum_i i*(lambda'_i + mu'_i + nu'_i) == d * h(d).
bool is_simplex_like(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace gctk
