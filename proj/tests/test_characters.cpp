#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gctk/characters.hpp"
#include "gctk/partition.hpp"

using gctk::CharacterTable;
using gctk::ClassType;
using gctk::Partition;

namespace {

Partition P(std::vector<std::uint32_t> parts) { return Partition(std::move(parts)); }

/* Hook-length dimension oracle: n! / product of hook lengths. */
mpz_class hook_dimension(const Partition& lam) {
    const Partition conj = lam.conjugate();
    mpz_class hooks = 1;
    for (std::size_t i = 0; i < lam.length(); ++i)
        for (std::uint32_t j = 0; j < lam.part(i); ++j)
            hooks *= (lam.part(i) - j) + (conj.part(j) - i) - 1;
    return gctk::exact_div(gctk::factorial(lam.size()), hooks, "hook_dimension");
}

/* Standard-tableau count by direct backtracking: place 1..n one box at a
   time, always into a cell whose left and upper neighbours are filled. */
std::uint64_t count_syt(const Partition& lam) {
    std::vector<std::uint32_t> filled(lam.length(), 0);  // boxes used per row
    std::uint64_t count = 0;
    auto place = [&](auto&& self, std::uint64_t remaining) -> void {
        if (remaining == 0) {
            ++count;
            return;
        }
        for (std::size_t r = 0; r < lam.length(); ++r) {
            if (filled[r] == lam.part(r)) continue;
            if (r > 0 && filled[r - 1] <= filled[r]) continue;
            ++filled[r];
            self(self, remaining - 1);
            --filled[r];
        }
    };
    place(place, lam.size());
    return count;
}

}  // namespace

TEST_CASE("full character table of S_3") {
    CharacterTable chi;
    const Partition c111 = P({1, 1, 1}), c21 = P({2, 1}), c3 = P({3});
    CHECK(chi.character(P({3}), c111) == 1);
    CHECK(chi.character(P({3}), c21) == 1);
    CHECK(chi.character(P({3}), c3) == 1);
    CHECK(chi.character(P({2, 1}), c111) == 2);
    CHECK(chi.character(P({2, 1}), c21) == 0);
    CHECK(chi.character(P({2, 1}), c3) == -1);
    CHECK(chi.character(P({1, 1, 1}), c111) == 1);
    CHECK(chi.character(P({1, 1, 1}), c21) == -1);
    CHECK(chi.character(P({1, 1, 1}), c3) == 1);
}

TEST_CASE("full character table of S_4") {
    CharacterTable chi;
    const std::vector<Partition> classes = {P({1, 1, 1, 1}), P({2, 1, 1}), P({2, 2}),
                                            P({3, 1}), P({4})};
    const std::vector<std::pair<Partition, std::vector<int>>> rows = {
        {P({4}), {1, 1, 1, 1, 1}},
        {P({3, 1}), {3, 1, -1, 0, -1}},
        {P({2, 2}), {2, 0, 2, -1, 0}},
        {P({2, 1, 1}), {3, -1, -1, 0, 1}},
        {P({1, 1, 1, 1}), {1, -1, 1, 1, -1}},
    };
    for (const auto& [lam, values] : rows)
        for (std::size_t c = 0; c < classes.size(); ++c)
            CHECK(chi.character(lam, classes[c]) == values[c]);
}

TEST_CASE("one-row shape is the trivial character, one-column the sign") {
    CharacterTable chi;
    for (std::uint32_t n : {5u, 6u})
        for (const Partition& rho : gctk::enumerate_partitions(n)) {
            CHECK(chi.character(P({n}), rho) == 1);
            CHECK(chi.character(P(std::vector<std::uint32_t>(n, 1)), rho) ==
                  ClassType(rho).sign());
        }
    CHECK(chi.character(P({1, 1}), P({2})) == -1);
}

TEST_CASE("size mismatch is rejected") {
    CharacterTable chi;
    CHECK_THROWS_AS(chi.character(P({2, 1}), P({2})), std::invalid_argument);
}

TEST_CASE("dimension matches the hook-length formula up to n = 10") {
    CharacterTable chi;
    for (std::uint32_t n = 1; n <= 10; ++n)
        for (const Partition& lam : gctk::enumerate_partitions(n))
            CHECK(chi.dimension(lam) == hook_dimension(lam));
}

TEST_CASE("dimension matches the standard-tableau count up to n = 7") {
    CharacterTable chi;
    for (std::uint32_t n = 1; n <= 7; ++n)
        for (const Partition& lam : gctk::enumerate_partitions(n))
            CHECK(chi.dimension(lam) == count_syt(lam));
}

TEST_CASE("first orthogonality relation for N <= 7") {
    CharacterTable chi;
    for (std::uint32_t n = 1; n <= 7; ++n) {
        const auto shapes = gctk::enumerate_partitions(n);
        const mpz_class nfact = gctk::factorial(n);
        for (const Partition& lam : shapes)
            for (const Partition& mu : shapes) {
                mpz_class sum = 0;
                for (const Partition& rho : gctk::enumerate_partitions(n))
                    sum += ClassType(rho).class_size() * chi.character(lam, rho) *
                           chi.character(mu, rho);
                CHECK(sum == (lam == mu ? nfact : mpz_class(0)));
            }
    }
}

TEST_CASE("conjugate shape twists by the sign character for N <= 7") {
    CharacterTable chi;
    for (std::uint32_t n = 1; n <= 7; ++n)
        for (const Partition& lam : gctk::enumerate_partitions(n))
            for (const Partition& rho : gctk::enumerate_partitions(n))
                CHECK(chi.character(lam.conjugate(), rho) ==
                      ClassType(rho).sign() * chi.character(lam, rho));
}

TEST_CASE("memoized and fresh tables agree, in any evaluation order") {
    CharacterTable shared;
    const auto shapes = gctk::enumerate_partitions(8);
    const auto classes = gctk::enumerate_partitions(8);
    // Warm the shared table backwards, then query forwards.
    for (auto it = shapes.rbegin(); it != shapes.rend(); ++it)
        for (const Partition& rho : classes) (void)shared.character(*it, rho);
    CHECK(shared.memo_entries() > 0);
    for (const Partition& lam : shapes)
        for (const Partition& rho : classes) {
            CharacterTable fresh;
            CHECK(shared.character(lam, rho) == fresh.character(lam, rho));
        }
}
