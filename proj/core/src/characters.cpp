#include "gctk/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace gctk {

std::uint32_t CharacterTable::intern(const Partition& p) {
    auto it = ids_.find(p);
    if (it != ids_.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(pool_.size());
    pool_.push_back(p);
    tail_of_.push_back(-1);
    ids_.emplace(pool_.back(), id);
    return id;
}

std::uint32_t CharacterTable::intern_owned(std::vector<std::uint32_t> parts) {
    return intern(Partition(std::move(parts)));
}

mpz_class CharacterTable::character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("character: |lambda| != |rho|");
    return strip_sum(intern(lambda), intern(rho));
}

mpz_class CharacterTable::dimension(const Partition& lambda) {
    std::vector<std::uint32_t> ones(static_cast<std::size_t>(lambda.size()), 1);
    return character(lambda, Partition(std::move(ones)));
}

const mpz_class& CharacterTable::strip_sum(std::uint32_t shape_id, std::uint32_t cyc_id) {
    const std::uint64_t key = (static_cast<std::uint64_t>(shape_id) << 32) | cyc_id;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    static const mpz_class one = 1;
    if (pool_[shape_id].empty()) {
        // empty shape, empty cycle list: the trivial character of S_0
        return memo_.emplace(key, one).first->second;
    }

    /* Remove one border strip for the largest remaining cycle; the strips of
       length r correspond to beads b of the beta-set with b - r >= 0 free,
       with sign (-1)^(beads strictly between b-r and b).

       Everything needed from the interned shape is copied out up front:
       interning below can grow the pool and invalidate references into it. */
    const std::uint32_t r = pool_[cyc_id].first();
    const std::size_t L = pool_[shape_id].length();
    const std::uint32_t rim = pool_[shape_id].first() + static_cast<std::uint32_t>(L) - 1;
    std::vector<std::uint32_t> beta(L);
    for (std::size_t i = 0; i < L; ++i)
        beta[i] = pool_[shape_id].part(i) + static_cast<std::uint32_t>(L - 1 - i);

    mpz_class acc = 0;
    // No border strip can exceed the rim; skip the bead scan outright.
    if (r <= rim) {
        if (tail_of_[cyc_id] < 0) {
            const auto& cyc = pool_[cyc_id].parts();
            std::vector<std::uint32_t> tail(cyc.begin() + 1, cyc.end());
            std::uint32_t tid = intern_owned(std::move(tail));
            tail_of_[cyc_id] = tid;
        }
        const std::uint32_t tail_id = static_cast<std::uint32_t>(tail_of_[cyc_id]);

        for (std::size_t i = 0; i < L; ++i) {
            if (beta[i] < r) break;  // beta is strictly decreasing
            const std::uint32_t nb = beta[i] - r;
            std::size_t height = 0;
            bool occupied = false;
            for (std::size_t j = i + 1; j < L; ++j) {
                if (beta[j] > nb) {
                    ++height;
                } else {
                    occupied = (beta[j] == nb);
                    break;
                }
            }
            if (occupied) continue;

            // New beta-set: bead i moved down to nb, order restored by shifting.
            std::vector<std::uint32_t> nparts;
            nparts.reserve(L);
            for (std::size_t k = 0; k < L; ++k) {
                std::uint32_t bead;
                if (k < i) {
                    bead = beta[k];
                } else if (k < i + height) {
                    bead = beta[k + 1];
                } else if (k == i + height) {
                    bead = nb;
                } else {
                    bead = beta[k];
                }
                const std::uint32_t offset = static_cast<std::uint32_t>(L - 1 - k);
                if (bead > offset) nparts.push_back(bead - offset);
            }
            const std::uint32_t sub_id = intern_owned(std::move(nparts));
            const mpz_class& sub = strip_sum(sub_id, tail_id);
            if (height % 2 == 0) acc += sub;
            else acc -= sub;
        }
    }
    return memo_.emplace(key, std::move(acc)).first->second;
}

}  // namespace gctk
