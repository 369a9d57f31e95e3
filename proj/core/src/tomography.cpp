#include "gctk/tomography.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "gctk/common.hpp"

namespace gctk {

Relation3D::Relation3D(std::vector<Point> pts) : points_(std::move(pts)) {
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
        throw std::invalid_argument("Relation3D: duplicate point");
}

bool Relation3D::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

MarginalTriple marginals(const Relation3D& r) {
    MarginalTriple out;
    out.weighted_size = 0;
    if (r.size() == 0) return out;
    std::uint32_t mx = 0, my = 0, mz = 0;
    for (const auto& p : r.points()) {
        mx = std::max(mx, p[0]);
        my = std::max(my, p[1]);
        mz = std::max(mz, p[2]);
    }
    out.xm.assign(mx + 1, 0);
    out.ym.assign(my + 1, 0);
    out.zm.assign(mz + 1, 0);
    for (const auto& p : r.points()) {
        ++out.xm[p[0]];
        ++out.ym[p[1]];
        ++out.zm[p[2]];
        out.weighted_size += static_cast<unsigned long>(p[0]) + p[1] + p[2];
    }
    return out;
}

bool is_pyramid(const Relation3D& r) {
    for (const auto& p : r.points())
        for (int axis = 0; axis < 3; ++axis) {
            if (p[axis] == 0) continue;
            Relation3D::Point q = p;
            --q[axis];
            if (!r.contains(q)) return false;
        }
    return true;
}

mpq_class mean_coordinate_sum(const Relation3D& r) {
    if (r.size() == 0) throw std::invalid_argument("mean_coordinate_sum: empty relation");
    mpq_class h(marginals(r).weighted_size, mpz_class(static_cast<unsigned long>(r.size())));
    h.canonicalize();
    return h;
}

namespace {

std::vector<std::uint64_t> conjugate_counts(const Partition& p) {
    const Partition c = p.conjugate();
    std::vector<std::uint64_t> out(c.length());
    for (std::size_t i = 0; i < c.length(); ++i) out[i] = c.part(i);
    return out;
}

struct SliceSearch {
    std::vector<std::uint64_t> a;       // per-x-slice targets
    std::vector<std::uint64_t> b, c;    // remaining y / z budgets
    std::uint64_t count = 0;
    std::vector<Relation3D>* collect = nullptr;
    std::vector<Relation3D::Point> acc;

    void run() { slice(0); }

    void slice(std::size_t i) {
        if (i == a.size()) {
            ++count;
            if (collect) collect->emplace_back(acc);
            return;
        }
        choose(i, 0, a[i]);
    }

    // Pick `need` distinct (y,z) cells for slice x=i, scanning the grid in
    // row-major order so each subset is visited once.
    void choose(std::size_t i, std::size_t cell, std::uint64_t need) {
        if (need == 0) {
            slice(i + 1);
            return;
        }
        const std::size_t total = b.size() * c.size();
        if (total - cell < need) return;
        const std::size_t y = cell / c.size(), z = cell % c.size();
        if (b[y] > 0 && c[z] > 0) {
            --b[y];
            --c[z];
            if (collect)
                acc.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(y),
                               static_cast<std::uint32_t>(z)});
            choose(i, cell + 1, need - 1);
            if (collect) acc.pop_back();
            ++b[y];
            ++c[z];
        }
        choose(i, cell + 1, need);
    }
};

SliceSearch make_search(const Partition& lambda, const Partition& mu, const Partition& nu,
                        std::uint32_t weight_cap) {
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw std::invalid_argument("relation counts: partition sizes differ");
    if (lambda.size() > weight_cap)
        throw resource_cap_error("relation counts: weight " + std::to_string(lambda.size()) +
                                 " exceeds cap " + std::to_string(weight_cap));
    SliceSearch s;
    s.a = conjugate_counts(lambda);
    s.b = conjugate_counts(mu);
    s.c = conjugate_counts(nu);
    return s;
}

// Plane partitions of weight d: row-and-column weakly decreasing arrays of
// positive integers, visited via row prefixes.
struct PlanePartitionWalk {
    std::vector<std::vector<std::uint32_t>> rows;
    std::function<void(const std::vector<std::vector<std::uint32_t>>&)> emit;

    void next_row(std::uint32_t rem) {
        if (rem == 0) {
            emit(rows);
            return;
        }
        // Copy, not a pointer into rows: recursion reallocates the row stack.
        std::vector<std::uint32_t> prev;
        const bool have_prev = !rows.empty();
        if (have_prev) prev = rows.back();
        std::vector<std::uint32_t> acc;
        extend(acc, 0, 0, rem, have_prev ? &prev : nullptr);
    }

    void extend(std::vector<std::uint32_t>& acc, std::size_t idx, std::uint32_t rsum,
                std::uint32_t rem, const std::vector<std::uint32_t>* prev) {
        if (!acc.empty()) {
            rows.push_back(acc);
            next_row(rem - rsum);
            rows.pop_back();
        }
        const std::size_t maxlen = prev ? prev->size() : rem;
        if (idx >= maxlen) return;
        std::uint32_t hi = prev ? (*prev)[idx] : rem;
        if (!acc.empty()) hi = std::min(hi, acc.back());
        hi = std::min(hi, rem - rsum);
        for (std::uint32_t v = hi; v >= 1; --v) {
            acc.push_back(v);
            extend(acc, idx + 1, rsum + v, rem, prev);
            acc.pop_back();
        }
    }
};

Relation3D stack_to_relation(const std::vector<std::vector<std::uint32_t>>& rows) {
    std::vector<Relation3D::Point> pts;
    for (std::uint32_t x = 0; x < rows.size(); ++x)
        for (std::uint32_t y = 0; y < rows[x].size(); ++y)
            for (std::uint32_t z = 0; z < rows[x][y]; ++z) pts.push_back({x, y, z});
    return Relation3D(std::move(pts));
}

}  // namespace

std::uint64_t count_relations_t(const Partition& lambda, const Partition& mu,
                                const Partition& nu, std::uint32_t weight_cap) {
    SliceSearch s = make_search(lambda, mu, nu, weight_cap);
    s.run();
    return s.count;
}

std::vector<Relation3D> enumerate_relations(const Partition& lambda, const Partition& mu,
                                            const Partition& nu, std::uint32_t weight_cap) {
    SliceSearch s = make_search(lambda, mu, nu, weight_cap);
    std::vector<Relation3D> out;
    s.collect = &out;
    s.run();
    return out;
}

std::uint64_t count_pyramids_p(const Partition& lambda, const Partition& mu,
                               const Partition& nu, std::uint32_t weight_cap) {
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw std::invalid_argument("count_pyramids_p: partition sizes differ");
    if (lambda.size() > weight_cap)
        throw resource_cap_error("count_pyramids_p: weight " + std::to_string(lambda.size()) +
                                 " exceeds cap " + std::to_string(weight_cap));
    const auto want_x = conjugate_counts(lambda);
    const auto want_y = conjugate_counts(mu);
    const auto want_z = conjugate_counts(nu);
    std::uint64_t count = 0;
    PlanePartitionWalk walk;
    walk.emit = [&](const std::vector<std::vector<std::uint32_t>>& rows) {
        std::vector<std::uint64_t> xm(rows.size(), 0);
        std::size_t width = 0;
        std::uint32_t height = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            width = std::max(width, rows[r].size());
            for (std::uint32_t v : rows[r]) {
                xm[r] += v;
                height = std::max(height, v);
            }
        }
        if (xm != want_x) return;
        std::vector<std::uint64_t> ym(width, 0);
        std::vector<std::uint64_t> zm(height, 0);
        for (const auto& row : rows)
            for (std::size_t j = 0; j < row.size(); ++j) {
                ym[j] += row[j];
                for (std::uint32_t k = 0; k < row[j]; ++k) ++zm[k];
            }
        if (ym == want_y && zm == want_z) ++count;
    };
    walk.next_row(static_cast<std::uint32_t>(lambda.size()));
    return count;
}

std::vector<Relation3D> enumerate_pyramids(std::uint32_t d, std::uint32_t weight_cap) {
    if (d > weight_cap)
        throw resource_cap_error("enumerate_pyramids: weight " + std::to_string(d) +
                                 " exceeds cap " + std::to_string(weight_cap));
    std::vector<Relation3D> out;
    PlanePartitionWalk walk;
    walk.emit = [&](const std::vector<std::vector<std::uint32_t>>& rows) {
        out.push_back(stack_to_relation(rows));
    };
    walk.next_row(d);
    return out;
}

Relation3D simplex_relation(std::uint32_t s) {
    std::vector<Relation3D::Point> pts;
    for (std::uint32_t x = 0; x < s; ++x)
        for (std::uint32_t y = 0; x + y < s; ++y)
            for (std::uint32_t z = 0; x + y + z < s; ++z) pts.push_back({x, y, z});
    return Relation3D(std::move(pts));
}

SimplexData simplex_data(std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("simplex_data: d >= 1 required");
    SimplexData out;
    mpz_class dd(static_cast<unsigned long>(d));
    std::uint32_t s = 0;
    for (;;) {
        mpz_class nxt = mpz_class(s + 1) * (s + 2) * (s + 3) / 6;
        if (nxt <= dd)
            ++s;
        else
            break;
    }
    out.s = s;
    out.simplex_size = mpz_class(s) * (s + 1) * (s + 2) / 6;
    // Total coordinate sum over P(s): sum_{l<s} l*binom(l+2,2) = (s-1)s(s+1)(s+2)/8.
    mpz_class total = mpz_class(s - 1) * s * (s + 1) * (s + 2);
    mpz_class rem;
    mpz_tdiv_qr_ui(total.get_mpz_t(), rem.get_mpz_t(), total.get_mpz_t(), 8);
    if (rem != 0) throw std::logic_error("simplex_data: weight formula not integral");
    // Interpolation between the full simplex mean and the next shell height:
    // h = total/d + ((d - |P(s)|) * s) / d.
    out.h = mpq_class(total, dd) + mpq_class((dd - out.simplex_size) * s, dd);
    out.h.canonicalize();
    return out;
}

bool is_simplex_like(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() || mu.size() != nu.size())
        throw std::invalid_argument("is_simplex_like: partition sizes differ");
    const std::uint64_t d = lambda.size();
    if (d == 0) return true;
    mpz_class lhs = 0;
    for (const Partition* p : {&lambda, &mu, &nu}) {
        const Partition c = p->conjugate();
        for (std::size_t i = 0; i < c.length(); ++i)
            lhs += mpz_class(static_cast<unsigned long>(i)) * c.part(i);
    }
    const SimplexData sd = simplex_data(d);
    return mpq_class(lhs) == mpq_class(mpz_class(static_cast<unsigned long>(d))) * sd.h;
}

}  // namespace gctk
