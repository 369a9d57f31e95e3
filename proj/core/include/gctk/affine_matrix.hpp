#pragma once

#include <cstdint>
#include <vector>

#include "gctk/sparse_poly.hpp"

namespace gctk {

/* Square matrix whose entries are affine forms (degree <= 1 integer
   polynomials); the vehicle for determinantal representations. */
class AffineMatrix {
public:
    AffineMatrix() = default;
    /* entries: row-major, size*size affine polynomials. */
    AffineMatrix(std::uint32_t size, std::vector<SparsePoly> entries);

    std::uint32_t size() const { return size_; }
    const SparsePoly& at(std::uint32_t i, std::uint32_t j) const {
        return entries_[static_cast<std::size_t>(i) * size_ + j];
    }
    SparsePoly& at(std::uint32_t i, std::uint32_t j) {
        return entries_[static_cast<std::size_t>(i) * size_ + j];
    }
    const std::vector<SparsePoly>& entries() const { return entries_; }

    /* Multiplies every entry of one row by an integer (unit) constant. */
    void scale_row(std::uint32_t row, const mpz_class& c);

private:
    std::uint32_t size_ = 0;
    std::vector<SparsePoly> entries_;
};

/* Symbolic determinant by depth-first expansion over nonzero diagonals.
   Refuses sizes beyond max_size (resource_cap_error): term growth is the
   caller's budget to spend. */
SparsePoly matrix_det_sym(const AffineMatrix& a, std::uint32_t max_size = 16);

/* Determinant of the entrywise evaluation at a point, mod p (Gaussian
   elimination over F_p).  point indexes the polynomial variables. */
std::uint64_t matrix_eval_mod_p(const AffineMatrix& a, const std::vector<std::uint64_t>& point,
                                std::uint64_t p = kModulusP62);

enum class VerifyMode { symbolic, modular };

struct VerifyReport {
    bool verified = false;
    VerifyMode mode = VerifyMode::symbolic;
    std::uint32_t trials = 0;       // modular only
    double error_bound = 0.0;       // false-accept probability bound, modular only
};

/* Checks det(A) == f, either exactly (symbolic expansion) or probabilistically
   at `trials` random points mod kModulusP62 drawn from the seeded stream.
   The modular bound is Schwartz-Zippel: (max(deg det, deg f) / p) per trial. */
VerifyReport verify_representation(const AffineMatrix& a, const SparsePoly& f, VerifyMode mode,
                                   std::uint32_t trials = 20, std::uint64_t seed = 1,
                                   std::uint32_t sym_max_size = 16);

}  // namespace gctk
