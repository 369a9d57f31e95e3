#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gctk/common.hpp"
#include "gctk/partition.hpp"

using gctk::ClassType;
using gctk::Partition;

namespace {

Partition P(std::vector<std::uint32_t> parts) { return Partition(std::move(parts)); }

/* Independent route: p(n, parts <= k) by the classic DP over largest part. */
std::uint64_t partition_count_dp(std::uint32_t n, std::uint32_t max_part) {
    std::vector<std::uint64_t> ways(n + 1, 0);
    ways[0] = 1;
    for (std::uint32_t part = 1; part <= max_part; ++part)
        for (std::uint32_t s = part; s <= n; ++s) ways[s] += ways[s - part];
    return ways[n];
}

}  // namespace

TEST_CASE("enumeration of 4 lists all five partitions in lex-decreasing order") {
    const auto got = gctk::enumerate_partitions(4);
    const std::vector<Partition> want = {P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}),
                                         P({1, 1, 1, 1})};
    CHECK(got == want);
}

TEST_CASE("enumeration of 0 yields exactly the empty partition") {
    const auto got = gctk::enumerate_partitions(0);
    REQUIRE(got.size() == 1);
    CHECK(got[0].empty());
    CHECK(got[0].size() == 0);
}

TEST_CASE("enumeration counts match the largest-part DP for n <= 20") {
    for (std::uint32_t n = 1; n <= 20; ++n) {
        CHECK(gctk::enumerate_partitions(n).size() == partition_count_dp(n, n));
        // max_first restriction = DP with bounded largest part.
        CHECK(gctk::enumerate_partitions(n, std::nullopt, 3).size() == partition_count_dp(n, 3));
        // max_parts restriction = conjugate of the largest-part bound.
        CHECK(gctk::enumerate_partitions(n, 3).size() == partition_count_dp(n, 3));
    }
}

TEST_CASE("frozen enumeration sizes at 36") {
    CHECK(gctk::enumerate_partitions(36).size() == 17977);
    CHECK(gctk::enumerate_partitions(36, 7).size() == 4011);
}

TEST_CASE("every enumerated partition is valid, in range, and strictly lex-decreasing") {
    for (std::uint32_t n : {6u, 9u}) {
        const auto all = gctk::enumerate_partitions(n, 4, 5);
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].size() == n);
            CHECK(all[i].length() <= 4);
            CHECK(all[i].first() <= 5);
            if (i + 1 < all.size()) CHECK(all[i] > all[i + 1]);
        }
    }
}

TEST_CASE("constructor rejects increasing or zero parts") {
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(P({0}), std::invalid_argument);
    CHECK_NOTHROW(P({2, 2, 1}));
}

TEST_CASE("conjugate examples") {
    CHECK(P({2, 1, 1}).conjugate() == P({3, 1}));
    CHECK(Partition().conjugate() == Partition());
    CHECK(P({13, 13, 2, 2, 2, 2, 2}).conjugate() ==
          P({7, 7, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}));
}

TEST_CASE("conjugation is an involution on everything up to size 10") {
    for (std::uint32_t n = 0; n <= 10; ++n)
        for (const Partition& lam : gctk::enumerate_partitions(n))
            CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("scaled and plus") {
    CHECK(P({3, 1}).scaled(2) == P({6, 2}));
    CHECK(P({3, 1}).scaled(1) == P({3, 1}));
    CHECK(P({2, 1}).plus(P({1, 1})) == P({3, 2}));
    CHECK(P({2, 1}).plus(P({3})) == P({5, 1}));
    CHECK(Partition().plus(P({2})) == P({2}));
}

TEST_CASE("ordering is lexicographic on parts") {
    CHECK(P({2, 2}) > P({2, 1, 1}));
    CHECK(P({3}) > P({2, 2}));
    CHECK(P({1, 1}) < P({2}));
}

TEST_CASE("class type centralizer orders, sizes, and signs on S_3") {
    CHECK(ClassType(P({1, 1, 1})).centralizer_order() == 6);
    CHECK(ClassType(P({2, 1})).centralizer_order() == 2);
    CHECK(ClassType(P({3})).centralizer_order() == 3);
    CHECK(ClassType(P({1, 1, 1})).class_size() == 1);
    CHECK(ClassType(P({2, 1})).class_size() == 3);
    CHECK(ClassType(P({3})).class_size() == 2);
    CHECK(ClassType(P({1, 1, 1})).sign() == 1);
    CHECK(ClassType(P({2, 1})).sign() == -1);
    CHECK(ClassType(P({3})).sign() == 1);
    CHECK(ClassType(P({3})).degree() == 3);
}

TEST_CASE("class sizes sum to N! for N <= 9") {
    for (std::uint32_t n = 1; n <= 9; ++n) {
        mpz_class total = 0;
        for (const Partition& rho : gctk::enumerate_partitions(n))
            total += ClassType(rho).class_size();
        CHECK(total == gctk::factorial(n));
    }
}

TEST_CASE("sign equals parity of n minus cycle count") {
    for (std::uint32_t n = 1; n <= 8; ++n)
        for (const Partition& rho : gctk::enumerate_partitions(n)) {
            const int want = (n - rho.length()) % 2 == 0 ? 1 : -1;
            CHECK(ClassType(rho).sign() == want);
        }
}

TEST_CASE("factorial and exact division") {
    CHECK(gctk::factorial(0) == 1);
    CHECK(gctk::factorial(5) == 120);
    CHECK(gctk::exact_div(mpz_class(120), mpz_class(24), "test") == 5);
    CHECK_THROWS_AS(gctk::exact_div(mpz_class(7), mpz_class(2), "test"), std::logic_error);
}

TEST_CASE("rng streams are deterministic per (seed, tag) and disjoint across tags") {
    gctk::RngStream a(42, 7), b(42, 7), c(42, 8);
    bool tag_differs = false;
    for (int i = 0; i < 5; ++i) {
        const std::uint64_t va = a.next();
        CHECK(va == b.next());
        if (va != c.next()) tag_differs = true;
    }
    CHECK(tag_differs);

    gctk::RngStream d(1, 1);
    for (int i = 0; i < 1000; ++i) CHECK(d.below(10) < 10);
    for (int i = 0; i < 100; ++i) {
        const long v = d.span(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}

TEST_CASE("hash is usable as an unordered key") {
    std::map<Partition, int, std::greater<Partition>> ordered;
    ordered[P({2, 1})] = 1;
    CHECK(gctk::PartitionHash{}(P({2, 1})) == gctk::PartitionHash{}(P({2, 1})));
    CHECK(gctk::PartitionHash{}(P({2, 1})) != gctk::PartitionHash{}(P({3})));
}
