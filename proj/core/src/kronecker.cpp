#include "gctk/kronecker.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gctk/powersum.hpp"

namespace gctk {

mpz_class kron(const TripleQuery& q, CharacterTable& chi) {
    const std::uint64_t N = q.lambda.size();
    if (q.mu.size() != N || q.nu.size() != N)
        throw std::invalid_argument("kron: partition sizes differ");
    mpz_class acc = 0;
    for (const Partition& rho : enumerate_partitions(N)) {
        const mpz_class cl = chi.character(q.lambda, rho);
        if (cl == 0) continue;
        const mpz_class cm = chi.character(q.mu, rho);
        if (cm == 0) continue;
        const mpz_class cn = chi.character(q.nu, rho);
        if (cn == 0) continue;
        acc += ClassType(rho).class_size() * cl * cm * cn;
    }
    mpz_class k = exact_div(acc, factorial(N), "kron");
    if (k < 0) throw std::logic_error("kron: negative coefficient");
    return k;
}

mpz_class kron_rect(std::uint32_t n, const Partition& lambda, CharacterTable& chi) {
    if (n == 0) throw std::invalid_argument("kron_rect: n must be positive");
    const std::uint64_t N = lambda.size();
    if (N % n != 0)
        throw std::invalid_argument("kron_rect: n does not divide |lambda|");
    const std::uint32_t d = static_cast<std::uint32_t>(N / n);
    Partition rect(std::vector<std::uint32_t>(n, d));

    mpz_class acc = 0;
    for (const Partition& rho : enumerate_partitions(N)) {
        const mpz_class cr = chi.character(rect, rho);
        if (cr == 0) continue;
        const mpz_class cl = chi.character(lambda, rho);
        if (cl == 0) continue;
        acc += ClassType(rho).class_size() * cl * cr * cr;
    }
    mpz_class k = exact_div(acc, factorial(N), "kron_rect");
    if (k < 0) throw std::logic_error("kron_rect: negative coefficient");
    return k;
}

std::optional<std::uint32_t> stretch_probe(std::uint32_t n, const Partition& lambda,
                                           std::uint32_t s_max, CharacterTable& chi) {
    for (std::uint32_t s = 1; s <= s_max; ++s) {
        if (kron_rect(n, lambda.scaled(s), chi) > 0) return s;
    }
    return std::nullopt;
}

ObstructionScan obstruction_search(std::uint32_t n, std::uint32_t d, std::uint32_t m,
                                   const ObstructionSearchConfig& cfg) {
    if (n == 0 || d == 0 || m == 0)
        throw std::invalid_argument("obstruction_search: n, d, m must be positive");
    if (m >= n)
        throw std::invalid_argument("obstruction_search: requires m < n");

    const std::uint64_t N = static_cast<std::uint64_t>(d) * n;
    const std::uint32_t rows_all = cfg.max_rows ? cfg.max_rows : n * n;
    const std::uint32_t rows_shape = m * m + 1;
    // First part must make up for everything the m^2+1 admissible rows lose:
    // lambda_1 >= |lambda| * (1 - m/n) = d*(n - m).
    const std::uint64_t first_min = static_cast<std::uint64_t>(d) * (n - m);

    std::vector<Partition> candidates;
    for (Partition& lam : enumerate_partitions(N, rows_all)) {
        if (cfg.enforce_shape) {
            if (lam.length() > rows_shape) continue;
            if (lam.first() < first_min) continue;
        }
        candidates.push_back(std::move(lam));
    }
    if (candidates.size() > cfg.candidate_cap)
        throw resource_cap_error("obstruction_search: " + std::to_string(candidates.size()) +
                                 " candidates exceed cap " + std::to_string(cfg.candidate_cap));

    const PowerSumVector expansion = outer_plethysm_h_h(d, n);

    /* Workers claim candidate indices from a shared counter and write into
       per-candidate slots, so the merged output is in enumeration order no
       matter how the indices interleave.  Each worker owns its character
       table; the tables are memo caches of pure values. */
    std::vector<std::optional<ObstructionReport>> slots(candidates.size());
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_guard;
    auto work = [&]() {
        CharacterTable chi;
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= candidates.size()) break;
            const Partition& lam = candidates[i];
            const mpq_class p = schur_coefficient(expansion, lam, chi);
            if (p.get_den() != 1 || p < 0)
                throw std::logic_error("obstruction_search: bad plethysm coefficient");
            if (p == 0) continue;
            const mpz_class k = kron_rect(n, lam, chi);
            if (k != 0) continue;
            ObstructionReport rep;
            rep.lambda = lam;
            rep.n = n;
            rep.d = d;
            rep.m = m;
            rep.pleth_value = p.get_num();
            rep.kron_value = k;
            rep.shape_ok = lam.length() <= rows_shape && lam.first() >= first_min;
            slots[i] = std::move(rep);
        }
    };

    auto guarded_work = [&]() {
        try {
            work();
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_guard);
            if (!failure) failure = std::current_exception();
            cursor.store(candidates.size());  // drain remaining work
        }
    };

    const unsigned workers =
        std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(candidates.size())));
    if (workers == 1) {
        guarded_work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(guarded_work);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    ObstructionScan out;
    out.candidates = candidates.size();
    for (auto& slot : slots)
        if (slot) out.reports.push_back(std::move(*slot));
    return out;
}

}  // namespace gctk
