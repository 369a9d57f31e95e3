#include "gctk/grenet.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace gctk {

AffineMatrix grenet_matrix(std::uint32_t m, bool normalize) {
    // (2^m - 1)^2 materialized entries: past m = 10 the matrix alone is absurd.
    if (m == 0 || m > 10) throw std::invalid_argument("grenet_matrix: m out of range");
    const std::uint32_t full = (1u << m) - 1;

    // Proper subsets of {1..m}, ordered by (popcount, lexicographic on the
    // sorted element lists); the empty set lands first and stands in for the
    // full set on incoming edges.
    std::vector<std::uint32_t> nodes;
    nodes.reserve(full);
    for (std::uint32_t s = 0; s < full + 1u; ++s)
        if (s != full) nodes.push_back(s);
    std::sort(nodes.begin(), nodes.end(), [m](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        for (std::uint32_t j = 0; j < m; ++j) {  // smaller first element wins
            const bool ia = a >> j & 1u, ib = b >> j & 1u;
            if (ia != ib) return ia;
        }
        return false;
    });
    std::vector<std::uint32_t> index(full + 1u, 0);
    for (std::uint32_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;

    const std::uint32_t size = static_cast<std::uint32_t>(nodes.size());
    std::vector<SparsePoly> entries(static_cast<std::size_t>(size) * size);
    AffineMatrix a(size, std::move(entries));

    for (std::uint32_t src = 0; src < size; ++src) {
        const std::uint32_t s = nodes[src];
        if (s != 0) a.at(src, src) = SparsePoly::constant(1);
        const std::uint32_t level = static_cast<std::uint32_t>(std::popcount(s));
        for (std::uint32_t j = 0; j < m; ++j) {
            if (s >> j & 1u) continue;
            const std::uint32_t t = s | (1u << j);
            const std::uint32_t dst = (t == full) ? 0 : index[t];
            a.at(dst, src) = SparsePoly::variable(matrix_var(m, level, j));
        }
    }

    if (normalize && m % 2 == 0) a.scale_row(0, mpz_class(-1));
    return a;
}

AffineMatrix reference_per3_matrix() {
    auto x = [](std::uint32_t r, std::uint32_t c) {
        return SparsePoly::variable(matrix_var(3, r - 1, c - 1));
    };
    const SparsePoly O;
    const SparsePoly I = SparsePoly::constant(1);
    std::vector<SparsePoly> e = {
        O,       O,       O,       O,       x(3, 3), x(3, 2), x(3, 1),
        x(1, 1), I,       O,       O,       O,       O,       O,
        x(1, 2), O,       I,       O,       O,       O,       O,
        x(1, 3), O,       O,       I,       O,       O,       O,
        O,       x(2, 2), x(2, 1), O,       I,       O,       O,
        O,       x(2, 3), O,       x(2, 1), O,       I,       O,
        O,       O,       x(2, 3), x(2, 2), O,       O,       I,
    };
    return AffineMatrix(7, std::move(e));
}

}  // namespace gctk
