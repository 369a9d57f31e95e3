#include "gctk/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace gctk {

mpz_class factorial(std::uint64_t n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den, const char* context) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error(std::string(context) + ": inexact division");
    return q;
}

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("Partition: zero part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<std::uint32_t> conj;
    conj.reserve(first());
    for (std::uint32_t j = 1; j <= first(); ++j) {
        std::uint32_t c = 0;
        for (std::uint32_t p : parts_) {
            if (p >= j) ++c;
            else break;
        }
        conj.push_back(c);
    }
    return Partition(std::move(conj));
}

Partition Partition::scaled(std::uint32_t s) const {
    if (s == 0) return Partition();
    std::vector<std::uint32_t> out(parts_);
    for (auto& p : out) p *= s;
    return Partition(std::move(out));
}

Partition Partition::plus(const Partition& other) const {
    const auto& a = parts_;
    const auto& b = other.parts_;
    std::vector<std::uint32_t> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    return Partition(std::move(out));
}

std::vector<Partition> enumerate_partitions(std::uint64_t n,
                                            std::optional<std::uint32_t> max_parts,
                                            std::optional<std::uint32_t> max_first) {
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    const std::uint64_t part_budget = max_parts ? *max_parts : n;
    std::vector<std::uint32_t> prefix;

    // Descending first-part choice at every level gives global lex-decreasing order.
    auto rec = [&](auto&& self, std::uint64_t rem, std::uint64_t cap) -> void {
        if (rem == 0) {
            out.emplace_back(Partition(prefix));
            return;
        }
        if (prefix.size() >= part_budget) return;
        // Remaining parts can cover rem only if cap * free_slots >= rem.
        const std::uint64_t free_slots = part_budget - prefix.size();
        std::uint64_t hi = std::min<std::uint64_t>(rem, cap);
        for (std::uint64_t p = hi; p >= 1; --p) {
            if (p * free_slots < rem) break;
            prefix.push_back(static_cast<std::uint32_t>(p));
            self(self, rem - p, p);
            prefix.pop_back();
        }
    };
    std::uint64_t first_cap = max_first ? std::min<std::uint64_t>(n, *max_first) : n;
    rec(rec, n, first_cap);
    return out;
}

ClassType::ClassType(Partition cycle_type) : cycles_(std::move(cycle_type)), z_(1) {
    std::uint64_t run = 0;
    std::uint32_t prev = 0;
    mpz_class jpow;
    auto flush = [&]() {
        if (run == 0) return;
        mpz_ui_pow_ui(jpow.get_mpz_t(), prev, run);
        z_ *= jpow * factorial(run);
    };
    for (std::uint32_t p : cycles_.parts()) {
        if (p == prev) {
            ++run;
        } else {
            flush();
            prev = p;
            run = 1;
        }
    }
    flush();
}

mpz_class ClassType::class_size() const {
    return exact_div(factorial(cycles_.size()), z_, "ClassType::class_size");
}

int ClassType::sign() const {
    return (cycles_.size() - cycles_.length()) % 2 == 0 ? 1 : -1;
}

}  // namespace gctk
