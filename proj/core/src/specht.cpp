#include "gctk/specht.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gctk {

namespace {

/* Standard Young tableaux of the given shape, cells filled 0..n-1 so that
   rows and columns increase. */
std::vector<std::vector<std::vector<std::uint32_t>>> standard_tableaux(const Partition& shape) {
    std::vector<std::vector<std::vector<std::uint32_t>>> out;
    const std::size_t rows = shape.length();
    std::vector<std::vector<std::uint32_t>> grid(rows);
    std::vector<std::size_t> filled(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) grid[r].assign(shape.part(r), 0);
    const std::uint32_t n = static_cast<std::uint32_t>(shape.size());

    auto rec = [&](auto&& self, std::uint32_t v) -> void {
        if (v == n) {
            out.push_back(grid);
            return;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            const std::size_t c = filled[r];
            if (c >= shape.part(r)) continue;
            if (r > 0 && filled[r - 1] <= c) continue;  // cell above still empty
            grid[r][c] = v;
            ++filled[r];
            self(self, v + 1);
            --filled[r];
        }
    };
    rec(rec, 0);
    return out;
}

int permutation_sign(const std::vector<std::uint32_t>& p) {
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> all_permutations(std::uint32_t n) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<std::vector<std::uint32_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

SpechtModule::SpechtModule(const Partition& shape) : shape_(shape) {
    if (shape.size() == 0 || shape.size() > kMaxDegree)
        throw std::invalid_argument("SpechtModule: degree out of supported range");
    degree_ = static_cast<std::uint32_t>(shape.size());

    // Tabloids: all ways to deal elements 0..n-1 into rows of the given sizes.
    {
        std::vector<std::uint8_t> assign(degree_, 0);
        std::vector<std::uint32_t> room(shape.length());
        for (std::size_t r = 0; r < shape.length(); ++r) room[r] = shape.part(r);
        auto rec = [&](auto&& self, std::uint32_t e) -> void {
            if (e == degree_) {
                tabloids_.push_back(assign);
                return;
            }
            for (std::size_t r = 0; r < room.size(); ++r) {
                if (room[r] == 0) continue;
                --room[r];
                assign[e] = static_cast<std::uint8_t>(r);
                self(self, e + 1);
                ++room[r];
            }
        };
        rec(rec, 0);
    }

    // Basis columns: one polytabloid per standard tableau, expanded over the
    // column group with signs.
    const auto tableaux = standard_tableaux(shape);
    dim_ = tableaux.size();
    basis_.assign(tabloids_.size(), std::vector<mpz_class>(dim_, 0));
    const Partition conj = shape.conjugate();
    for (std::size_t t = 0; t < tableaux.size(); ++t) {
        const auto& tab = tableaux[t];
        std::vector<std::vector<std::uint32_t>> columns(conj.length());
        for (std::size_t c = 0; c < conj.length(); ++c)
            for (std::size_t r = 0; r < conj.part(c); ++r)
                columns[c].push_back(tab[r][c]);

        std::vector<std::uint32_t> image(degree_);
        std::iota(image.begin(), image.end(), 0u);
        auto expand = [&](auto&& self, std::size_t ci, int sign) -> void {
            if (ci == columns.size()) {
                std::vector<std::uint8_t> assign(degree_);
                for (std::size_t r = 0; r < tab.size(); ++r)
                    for (std::uint32_t e : tab[r])
                        assign[image[e]] = static_cast<std::uint8_t>(r);
                basis_[tabloid_index(assign)][t] += sign;
                return;
            }
            const auto& col = columns[ci];
            std::vector<std::uint32_t> perm(col.size());
            std::iota(perm.begin(), perm.end(), 0u);
            do {
                for (std::size_t i = 0; i < col.size(); ++i) image[col[i]] = col[perm[i]];
                self(self, ci + 1, sign * permutation_sign(perm));
            } while (std::next_permutation(perm.begin(), perm.end()));
            for (std::uint32_t e : col) image[e] = e;
        };
        expand(expand, 0, 1);
    }

    // Row-reduce a rational copy to locate dim_ independent rows of basis_.
    std::vector<std::vector<mpq_class>> work(basis_.size(), std::vector<mpq_class>(dim_));
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < dim_; ++j) work[i][j] = mpq_class(basis_[i][j]);
    std::vector<std::size_t> row_of(work.size());
    std::iota(row_of.begin(), row_of.end(), std::size_t{0});
    std::size_t rank = 0;
    for (std::size_t c = 0; c < dim_; ++c) {
        std::size_t piv = rank;
        while (piv < work.size() && work[piv][c] == 0) ++piv;
        if (piv == work.size())
            throw std::logic_error("SpechtModule: polytabloids not independent");
        std::swap(work[rank], work[piv]);
        std::swap(row_of[rank], row_of[piv]);
        pivot_rows_.push_back(row_of[rank]);
        for (std::size_t r = rank + 1; r < work.size(); ++r) {
            if (work[r][c] == 0) continue;
            const mpq_class f = work[r][c] / work[rank][c];
            for (std::size_t cc = c; cc < dim_; ++cc) work[r][cc] -= f * work[rank][cc];
        }
        ++rank;
    }

    // Invert the pivot square by Gauss-Jordan.
    std::vector<std::vector<mpq_class>> aug(dim_, std::vector<mpq_class>(2 * dim_));
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) aug[i][j] = mpq_class(basis_[pivot_rows_[i]][j]);
        aug[i][dim_ + i] = 1;
    }
    for (std::size_t c = 0; c < dim_; ++c) {
        std::size_t piv = c;
        while (aug[piv][c] == 0) ++piv;
        std::swap(aug[c], aug[piv]);
        const mpq_class inv = 1 / aug[c][c];
        for (auto& x : aug[c]) x *= inv;
        for (std::size_t r = 0; r < dim_; ++r) {
            if (r == c || aug[r][c] == 0) continue;
            const mpq_class f = aug[r][c];
            for (std::size_t cc = 0; cc < 2 * dim_; ++cc) aug[r][cc] -= f * aug[c][cc];
        }
    }
    pivot_inverse_.assign(dim_, std::vector<mpq_class>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) pivot_inverse_[i][j] = aug[i][dim_ + j];
}

std::size_t SpechtModule::tabloid_index(const std::vector<std::uint8_t>& row_of) const {
    // Tabloids were generated in lexicographic order of the assignment vector.
    auto it = std::lower_bound(tabloids_.begin(), tabloids_.end(), row_of);
    if (it == tabloids_.end() || *it != row_of)
        throw std::logic_error("SpechtModule: unknown tabloid");
    return static_cast<std::size_t>(it - tabloids_.begin());
}

std::vector<std::vector<mpq_class>> SpechtModule::action_columns(
    const std::vector<std::uint32_t>& g) const {
    if (g.size() != degree_)
        throw std::invalid_argument("SpechtModule: permutation degree mismatch");
    /* (P_g B) restricted to the pivot rows: row i of P_g B is row g^{-1}(i)
       of B, i.e. the tabloid obtained by relabelling through g. */
    std::vector<std::vector<mpq_class>> rhs(dim_, std::vector<mpq_class>(dim_));
    std::vector<std::uint8_t> pre(degree_);
    for (std::size_t i = 0; i < dim_; ++i) {
        const auto& tab = tabloids_[pivot_rows_[i]];
        for (std::uint32_t e = 0; e < degree_; ++e) pre[e] = tab[g[e]];
        const auto& row = basis_[tabloid_index(pre)];
        for (std::size_t j = 0; j < dim_; ++j) rhs[i][j] = mpq_class(row[j]);
    }
    return rhs;
}

std::vector<std::vector<mpq_class>> SpechtModule::matrix(
    const std::vector<std::uint32_t>& g) const {
    const auto rhs = action_columns(g);
    std::vector<std::vector<mpq_class>> X(dim_, std::vector<mpq_class>(dim_, 0));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                X[i][j] += pivot_inverse_[i][k] * rhs[k][j];
    return X;
}

mpq_class SpechtModule::trace(const std::vector<std::uint32_t>& g) const {
    const auto rhs = action_columns(g);
    mpq_class tr = 0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k)
            tr += pivot_inverse_[i][k] * rhs[k][i];
    return tr;
}

mpz_class kron_oracle(const TripleQuery& q) {
    const std::uint64_t N = q.lambda.size();
    if (q.mu.size() != N || q.nu.size() != N)
        throw std::invalid_argument("kron_oracle: partition sizes differ");
    if (N == 0 || N > SpechtModule::kMaxDegree)
        throw std::invalid_argument("kron_oracle: degree out of supported range");

    const SpechtModule A(q.lambda), B(q.mu), C(q.nu);
    mpq_class acc = 0;
    for (const auto& g : all_permutations(static_cast<std::uint32_t>(N)))
        acc += A.trace(g) * B.trace(g) * C.trace(g);
    acc /= mpq_class(factorial(N));
    if (acc.get_den() != 1 || acc < 0)
        throw std::logic_error("kron_oracle: average is not a nonnegative integer");
    return acc.get_num();
}

}  // namespace gctk
