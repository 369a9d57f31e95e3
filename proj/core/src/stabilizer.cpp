#include "gctk/stabilizer.hpp"

#include <stdexcept>
#include <utility>

#include "gctk/common.hpp"

namespace gctk {

mpz_class integer_determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("integer_determinant: matrix not square");
    if (n == 0) return 1;

    IntMatrix w = m;
    mpz_class prev(1);
    bool negate = false;
    for (std::size_t r = 0; r + 1 < n; ++r) {
        if (w[r][r] == 0) {
            std::size_t pivot = r;
            while (pivot < n && w[pivot][r] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(w[r], w[pivot]);
            negate = !negate;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j)
                w[i][j] = exact_div(w[r][r] * w[i][j] - w[i][r] * w[r][j], prev, "determinant");
            w[i][r] = 0;
        }
        prev = w[r][r];
    }
    return negate ? mpz_class(-w[n - 1][n - 1]) : w[n - 1][n - 1];
}

namespace {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix out(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

IntMatrix transpose(const IntMatrix& a) {
    const std::size_t n = a.size();
    IntMatrix out(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[j][i] = a[i][j];
    return out;
}

}  // namespace

bool stabilizer_identity_holds(const IntMatrix& a, const IntMatrix& b, const IntMatrix& x) {
    const mpz_class dx = integer_determinant(x);
    if (integer_determinant(transpose(x)) != dx) return false;
    return integer_determinant(multiply(multiply(a, x), transpose(b))) == dx;
}

IntMatrix random_unimodular(std::uint32_t n, RngStream& rng) {
    if (n == 0) throw std::invalid_argument("random_unimodular: n >= 1 required");
    IntMatrix m(n, std::vector<mpz_class>(n, 0));
    for (std::uint32_t i = 0; i < n; ++i) m[i][i] = 1;
    if (n == 1) return m;
    // Fifty row shears r_i += c * r_j with c in [-3,3] \ {0}: each has det 1.
    for (int step = 0; step < 50; ++step) {
        const std::uint32_t i = static_cast<std::uint32_t>(rng.below(n));
        std::uint32_t j = static_cast<std::uint32_t>(rng.below(n - 1));
        if (j >= i) ++j;
        long c = rng.span(-3, 3);
        if (c == 0) c = 1;
        for (std::uint32_t col = 0; col < n; ++col) m[i][col] += c * m[j][col];
    }
    return m;
}

bool stabilizer_check(std::uint32_t n, std::uint32_t trials, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("stabilizer_check: n >= 1 required");
    if (n > 8) throw resource_cap_error("stabilizer_check: n > 8 not budgeted");
    RngStream rng(seed, /*stream_tag=*/0x57AB);
    for (std::uint32_t t = 0; t < trials; ++t) {
        const IntMatrix a = random_unimodular(n, rng);
        const IntMatrix b = random_unimodular(n, rng);
        if (integer_determinant(a) != 1 || integer_determinant(b) != 1)
            throw std::logic_error("stabilizer_check: shear product lost det 1");
        IntMatrix x(n, std::vector<mpz_class>(n));
        for (auto& row : x)
            for (auto& e : row) e = rng.span(-9, 9);
        if (!stabilizer_identity_holds(a, b, x)) return false;
    }
    return true;
}

}  // namespace gctk
