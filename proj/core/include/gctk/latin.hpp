#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace gctk {

// Order-n square with 1-based entries; every row and column is a
// permutation of 1..n.
class LatinSquare {
public:
    LatinSquare(std::uint32_t n, std::vector<std::vector<std::uint32_t>> grid);

    std::uint32_t order() const { return n_; }
    std::uint32_t at(std::uint32_t row, std::uint32_t col) const { return grid_[row][col]; }
    const std::vector<std::vector<std::uint32_t>>& grid() const { return grid_; }

private:
    std::uint32_t n_;
    std::vector<std::vector<std::uint32_t>> grid_;
};

// Product over columns of the sign of the column read as a permutation.
int column_sign(const LatinSquare& square);

struct AlonTarsiReport {
    std::uint32_t order = 0;
    std::uint64_t even = 0;   // squares with column sign +1
    std::uint64_t odd = 0;    // squares with column sign -1
    std::int64_t difference = 0;
};

// Exact signed census of all order-n Latin squares.  Work is split across
// `threads` workers by first-row permutation; the merge is an exact sum.
AlonTarsiReport alon_tarsi_statistic(std::uint32_t n, std::uint32_t order_cap = 5,
                                     std::uint32_t threads = 1);

// Total number of order-n Latin squares.
std::uint64_t count_latin_squares(std::uint32_t n, std::uint32_t order_cap = 5);

// Materialize every order-n square (small n only).
std::vector<LatinSquare> enumerate_latin(std::uint32_t n, std::uint32_t order_cap = 5);

}  // namespace gctk
