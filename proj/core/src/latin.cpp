#include "gctk/latin.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "gctk/common.hpp"

namespace gctk {

LatinSquare::LatinSquare(std::uint32_t n, std::vector<std::vector<std::uint32_t>> grid)
    : n_(n), grid_(std::move(grid)) {
    if (n == 0) throw std::invalid_argument("LatinSquare: order >= 1 required");
    if (n > 31) throw std::invalid_argument("LatinSquare: order beyond supported range");
    if (grid_.size() != n) throw std::invalid_argument("LatinSquare: wrong row count");
    const std::uint32_t full = ((1u << n) - 1u) << 1;
    std::vector<std::uint32_t> colmask(n, 0);
    for (const auto& row : grid_) {
        if (row.size() != n) throw std::invalid_argument("LatinSquare: ragged row");
        std::uint32_t rowmask = 0;
        for (std::uint32_t c = 0; c < n; ++c) {
            const std::uint32_t v = row[c];
            if (v < 1 || v > n) throw std::invalid_argument("LatinSquare: entry out of range");
            const std::uint32_t bit = 1u << v;
            if (rowmask & bit) throw std::invalid_argument("LatinSquare: repeated entry in row");
            if (colmask[c] & bit) throw std::invalid_argument("LatinSquare: repeated entry in column");
            rowmask |= bit;
            colmask[c] |= bit;
        }
        if (rowmask != full) throw std::logic_error("LatinSquare: row mask incomplete");
    }
}

int column_sign(const LatinSquare& square) {
    const std::uint32_t n = square.order();
    int sign = 1;
    std::vector<bool> seen(n);
    for (std::uint32_t c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t i = 0; i < n; ++i) {
            if (seen[i]) continue;
            std::uint32_t len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = square.at(j, c) - 1;
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
    }
    return sign;
}

namespace {

struct Census {
    std::uint64_t even = 0, odd = 0;
};

// Complete a square below a fixed first row, tracking column-inversion
// parity incrementally: appending v to a column adds one inversion per
// already-placed larger value.
struct SquareSearch {
    std::uint32_t n = 0;
    std::uint32_t full = 0;
    std::vector<std::uint32_t> colmask;
    std::vector<std::vector<std::uint32_t>> rows;
    unsigned parity = 0;
    Census census;
    const std::function<void(const std::vector<std::vector<std::uint32_t>>&)>* sink = nullptr;

    void start(const std::vector<std::uint32_t>& first_row) {
        colmask.assign(n, 0);
        rows.assign(1, first_row);
        parity = 0;
        for (std::uint32_t c = 0; c < n; ++c) colmask[c] = 1u << first_row[c];
        row(1);
    }

    void row(std::uint32_t r) {
        if (r == n) {
            if (parity == 0)
                ++census.even;
            else
                ++census.odd;
            if (sink) (*sink)(rows);
            return;
        }
        rows.emplace_back(n, 0);
        cell(r, 0, 0);
        rows.pop_back();
    }

    void cell(std::uint32_t r, std::uint32_t c, std::uint32_t rowmask) {
        if (c == n) {
            row(r + 1);
            return;
        }
        std::uint32_t avail = full & ~(rowmask | colmask[c]);
        while (avail) {
            const std::uint32_t bit = avail & (0u - avail);
            avail ^= bit;
            const std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(bit));
            const unsigned added = static_cast<unsigned>(std::popcount(colmask[c] >> (v + 1)));
            rows.back()[c] = v;
            colmask[c] |= bit;
            parity ^= added & 1u;
            cell(r, c + 1, rowmask | bit);
            parity ^= added & 1u;
            colmask[c] &= ~bit;
        }
        rows.back()[c] = 0;
    }
};

std::vector<std::vector<std::uint32_t>> first_rows(std::uint32_t n) {
    std::vector<std::uint32_t> base(n);
    std::iota(base.begin(), base.end(), 1u);
    std::vector<std::vector<std::uint32_t>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

void check_order(const char* what, std::uint32_t n, std::uint32_t order_cap) {
    if (n == 0) throw std::invalid_argument(std::string(what) + ": order >= 1 required");
    if (n > order_cap)
        throw resource_cap_error(std::string(what) + ": order " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(order_cap));
    if (n > 8)
        throw resource_cap_error(std::string(what) + ": order beyond hard limit 8");
}

}  // namespace

AlonTarsiReport alon_tarsi_statistic(std::uint32_t n, std::uint32_t order_cap,
                                     std::uint32_t threads) {
    check_order("alon_tarsi_statistic", n, order_cap);
    if (threads == 0) throw std::invalid_argument("alon_tarsi_statistic: threads >= 1 required");

    const auto tasks = first_rows(n);
    std::vector<Census> slots(tasks.size());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_guard;

    auto work = [&]() {
        SquareSearch search;
        search.n = n;
        search.full = ((1u << n) - 1u) << 1;
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) break;
            search.census = Census{};
            search.start(tasks[i]);
            slots[i] = search.census;
        }
    };
    auto guarded_work = [&]() {
        try {
            work();
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_guard);
            if (!failure) failure = std::current_exception();
            cursor.store(tasks.size());
        }
    };

    const std::uint32_t nw = std::min<std::uint32_t>(threads, static_cast<std::uint32_t>(tasks.size()));
    if (nw <= 1) {
        guarded_work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (std::uint32_t t = 0; t < nw; ++t) pool.emplace_back(guarded_work);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    AlonTarsiReport rep;
    rep.order = n;
    for (const Census& s : slots) {
        rep.even += s.even;
        rep.odd += s.odd;
    }
    rep.difference = static_cast<std::int64_t>(rep.even) - static_cast<std::int64_t>(rep.odd);
    return rep;
}

std::uint64_t count_latin_squares(std::uint32_t n, std::uint32_t order_cap) {
    const AlonTarsiReport rep = alon_tarsi_statistic(n, order_cap, 1);
    return rep.even + rep.odd;
}

std::vector<LatinSquare> enumerate_latin(std::uint32_t n, std::uint32_t order_cap) {
    check_order("enumerate_latin", n, order_cap);
    std::vector<LatinSquare> out;
    std::function<void(const std::vector<std::vector<std::uint32_t>>&)> sink =
        [&](const std::vector<std::vector<std::uint32_t>>& rows) { out.emplace_back(n, rows); };
    SquareSearch search;
    search.n = n;
    search.full = ((1u << n) - 1u) << 1;
    search.sink = &sink;
    for (const auto& first : first_rows(n)) {
        search.census = Census{};
        search.start(first);
    }
    return out;
}

}  // namespace gctk
