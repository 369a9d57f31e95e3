/* Acceptance gate: one [PASS]/[FAIL] line per criterion, a trailing summary
   line naming the failed criteria, exit code = number of failures.

   Criterion 6 includes a reference claim about a specific order-4 square
   that exact computation contradicts; that sub-assertion is implemented as
   stated, fails, and prints the full computed evidence.  The expected suite
   state is therefore seven passes and exactly that one failure. */

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gctk/affine_matrix.hpp"
#include "gctk/characters.hpp"
#include "gctk/grenet.hpp"
#include "gctk/hessian.hpp"
#include "gctk/kronecker.hpp"
#include "gctk/latin.hpp"
#include "gctk/partition.hpp"
#include "gctk/powersum.hpp"
#include "gctk/specht.hpp"
#include "gctk/sparse_poly.hpp"
#include "gctk/tomography.hpp"

namespace {

using gctk::CharacterTable;
using gctk::Partition;
using gctk::TripleQuery;
using json = nlohmann::ordered_json;

Partition P(std::vector<std::uint32_t> parts) { return Partition(std::move(parts)); }

struct CliResult {
    int status = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    CliResult res;
    const std::string cmd = std::string(GCTK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
    const int rc = pclose(pipe);
    if (WIFEXITED(rc)) res.status = WEXITSTATUS(rc);
    return res;
}

mpz_class binom(std::uint64_t n, std::uint64_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class weyl_dimension(const Partition& lam, std::uint32_t k) {
    std::vector<long> row(k, 0);
    for (std::size_t i = 0; i < lam.length(); ++i) row[i] = static_cast<long>(lam.part(i));
    mpz_class num = 1, den = 1;
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = i + 1; j < k; ++j) {
            num *= row[i] - row[j] + static_cast<long>(j) - static_cast<long>(i);
            den *= static_cast<long>(j) - static_cast<long>(i);
        }
    return gctk::exact_div(num, den, "weyl_dimension");
}

void subsets_of_size(std::uint32_t n, std::uint32_t s,
                     const std::function<void(const std::vector<std::uint32_t>&)>& sink) {
    std::vector<std::uint32_t> pick;
    auto rec = [&](auto&& self, std::uint32_t lo) -> void {
        if (pick.size() == s) {
            sink(pick);
            return;
        }
        for (std::uint32_t v = lo; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

/* ---- criterion 1: flagship degree-36 values through the CLI ---- */
bool criterion_flagship(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const CliResult pl =
        run_cli("pleth --n 3 --d 12 --lambda 13,13,2,2,2,2,2 --vars 9 --format json");
    const CliResult kr = run_cli("kron-rect --n 3 --lambda 13,13,2,2,2,2,2 --format json");
    const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (pl.status != 0 || kr.status != 0) {
        detail = "CLI exits " + std::to_string(pl.status) + "/" + std::to_string(kr.status);
        return false;
    }
    std::string pleth_value, kron_value;
    try {
        pleth_value = json::parse(pl.output).at("pleth").get<std::string>();
        kron_value = json::parse(kr.output).at("kron_rect").get<std::string>();
    } catch (const std::exception& e) {
        detail = std::string("bad CLI JSON: ") + e.what();
        return false;
    }
    char stamp[64];
    std::snprintf(stamp, sizeof stamp, "%.2f s", dt);
    detail = "pleth = " + pleth_value + ", kron_rect = " + kron_value + " in " + stamp;
    return pleth_value == "1" && kron_value == "0" && dt < 900.0;
}

/* ---- criterion 2: permanent representations ---- */
bool criterion_representations(std::string& detail) {
    bool ok = true;
    for (std::uint32_t m = 1; m <= 4; ++m) {
        const auto rep = gctk::verify_representation(
            gctk::grenet_matrix(m, true), gctk::permanent_poly(m), gctk::VerifyMode::symbolic);
        ok = ok && rep.verified;
    }
    const auto ref = gctk::verify_representation(
        gctk::reference_per3_matrix(), gctk::permanent_poly(3), gctk::VerifyMode::symbolic);
    ok = ok && ref.verified;
    double worst_bound = 0.0;
    for (std::uint32_t m : {5u, 6u}) {
        const auto rep =
            gctk::verify_representation(gctk::grenet_matrix(m, true), gctk::permanent_poly(m),
                                        gctk::VerifyMode::modular, 12, 2026);
        ok = ok && rep.verified && rep.trials >= 10;
        worst_bound = std::max(worst_bound, rep.error_bound);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "symbolic m=1..4 plus the literal 7x7; modular m=5,6 at 12 points, "
                  "false-accept bound <= %.3g",
                  worst_bound);
    detail = buf;
    return ok && worst_bound > 0.0 && worst_bound < 1e-12;
}

/* ---- criterion 3: second-derivative certificates ---- */
bool criterion_certificates(std::string& detail) {
    bool ok = true;
    for (std::uint32_t m = 2; m <= 6; ++m) {
        const auto rep = gctk::mignon_ressayre_certificate(m);
        ok = ok && rep.permanent_value == 0 &&
             rep.hessian_rank == static_cast<std::size_t>(m) * m &&
             rep.dc_lower_bound == (static_cast<std::size_t>(m) * m + 1) / 2;
    }
    std::string pattern;
    for (std::uint32_t n = 2; n <= 5 && ok; ++n) {
        const auto hess = gctk::hessian(gctk::determinant_poly(n), n * n);
        pattern += (n > 2 ? "; n=" : "n=") + std::to_string(n) + ":";
        for (std::uint32_t s = 0; s < n && ok; ++s) {
            long shared = -1;
            subsets_of_size(n, s, [&](const std::vector<std::uint32_t>& ones) {
                std::vector<mpq_class> point(n * n, 0);
                for (std::uint32_t i : ones) point[gctk::matrix_var(n, i, i)] = 1;
                const std::size_t r = gctk::rank_at(hess, point);
                if (shared < 0) shared = static_cast<long>(r);
                if (static_cast<long>(r) != shared || r > 2 * n) ok = false;
            });
            pattern += " " + std::to_string(shared);
        }
    }
    detail = "per: value 0 and rank m^2 for m=2..6, bound ceil(m^2/2); det diagonal ranks " +
             pattern + " (cap 2n, placement-independent)";
    return ok;
}

/* ---- criterion 4: coefficient route vs module route ---- */
bool criterion_kron_routes(std::string& detail) {
    CharacterTable chi;
    std::uint64_t triples = 0;
    for (std::uint32_t n = 1; n <= 5; ++n) {
        const auto shapes = gctk::enumerate_partitions(n);
        for (const Partition& a : shapes)
            for (const Partition& b : shapes)
                for (const Partition& c : shapes) {
                    const TripleQuery q{a, b, c};
                    const mpz_class k = gctk::kron(q, chi);
                    if (k != gctk::kron_oracle(q)) {
                        detail = "route mismatch";
                        return false;
                    }
                    if (k != gctk::kron(TripleQuery{b, c, a}, chi) ||
                        k != gctk::kron(TripleQuery{a, c, b}, chi) ||
                        k != gctk::kron(TripleQuery{a.conjugate(), b.conjugate(), c}, chi)) {
                        detail = "symmetry violated";
                        return false;
                    }
                    ++triples;
                }
    }
    detail = "both routes, symmetry, and two-argument conjugation agree on all " +
             std::to_string(triples) + " triples with N <= 5";
    return triples == 504;
}

/* ---- criterion 5: sandwich and collapse ---- */
bool criterion_sandwich(std::string& detail) {
    CharacterTable chi;
    for (std::uint32_t d = 1; d <= 6; ++d) {
        const auto shapes = gctk::enumerate_partitions(d);
        for (const Partition& a : shapes)
            for (const Partition& b : shapes)
                for (const Partition& c : shapes) {
                    const mpz_class k = gctk::kron(TripleQuery{a, b, c}, chi);
                    if (mpz_class(gctk::count_pyramids_p(a, b, c)) > k ||
                        k > mpz_class(gctk::count_relations_t(a, b, c))) {
                        detail = "sandwich violated at d=" + std::to_string(d);
                        return false;
                    }
                }
    }
    std::uint64_t simplex_like = 0;
    for (std::uint32_t d = 1; d <= 8; ++d) {
        const auto shapes = gctk::enumerate_partitions(d);
        for (const Partition& a : shapes)
            for (const Partition& b : shapes)
                for (const Partition& c : shapes) {
                    if (!gctk::is_simplex_like(a, b, c)) continue;
                    ++simplex_like;
                    const mpz_class k = gctk::kron(TripleQuery{a, b, c}, chi);
                    if (mpz_class(gctk::count_pyramids_p(a, b, c)) != k ||
                        mpz_class(gctk::count_relations_t(a, b, c)) != k) {
                        detail = "collapse violated at d=" + std::to_string(d);
                        return false;
                    }
                }
    }
    const Partition w = P({2, 1, 1});
    const bool witness = gctk::is_simplex_like(w, w, w) &&
                         gctk::count_relations_t(w, w, w) == 1 &&
                         gctk::count_pyramids_p(w, w, w) == 1 &&
                         gctk::kron(TripleQuery{w, w, w}, chi) == 1;
    detail = "p <= k <= t on every triple with d <= 6; p = k = t on all " +
             std::to_string(simplex_like) +
             " simplex-like triples with d <= 8; witness (2,1,1)^3 collapses at 1";
    return witness && simplex_like == 379;
}

/* ---- criterion 6: signed census plus the reference square claim ---- */
bool criterion_latin(std::string& detail) {
    const auto n2 = gctk::alon_tarsi_statistic(2);
    const auto n3 = gctk::alon_tarsi_statistic(3);
    const auto n4 = gctk::alon_tarsi_statistic(4);
    const auto n5 = gctk::alon_tarsi_statistic(5, 5, 2);
    const bool census_ok = n2.difference == -2 && n3.difference == 0 &&
                           n4.difference == 576 && n5.difference == 0;

    const gctk::LatinSquare figure(
        4, {{1, 2, 3, 4}, {4, 1, 2, 3}, {3, 4, 1, 2}, {2, 3, 4, 1}});
    std::string signs;
    for (std::uint32_t c = 0; c < 4; ++c) {
        std::uint32_t inversions = 0;
        for (std::uint32_t i = 0; i < 4; ++i)
            for (std::uint32_t j = i + 1; j < 4; ++j)
                if (figure.at(i, c) > figure.at(j, c)) ++inversions;
        signs += inversions % 2 == 0 ? '+' : '-';
    }
    const int sign = gctk::column_sign(figure);
    const bool reference_claim = sign == -1;  // as stated; computation says +1

    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "census n=2: %lld, n=3: %lld, n=4: %+lld, n=5: %lld%s; reference square "
                  "claim (column sign -1) irreproducible: computed sign %+d, columns %s, and "
                  "the full census shows every order-4 square is column-even (576/0)",
                  static_cast<long long>(n2.difference), static_cast<long long>(n3.difference),
                  static_cast<long long>(n4.difference), static_cast<long long>(n5.difference),
                  census_ok ? " (all as frozen)" : " (MISMATCH)", sign, signs.c_str());
    detail = buf;
    return census_ok && reference_claim;
}

/* ---- criterion 7: dimension identity ---- */
bool criterion_dimensions(std::string& detail) {
    CharacterTable chi;
    std::uint32_t pairs = 0;
    for (std::uint32_t k : {2u, 3u})
        for (std::uint32_t n = 1; n <= 10; ++n)
            for (std::uint32_t d = 1; d * n <= 10; ++d) {
                mpz_class total = 0;
                for (const Partition& lam : gctk::enumerate_partitions(d * n, k))
                    total += gctk::pleth(n, d, lam, k, chi) * weyl_dimension(lam, k);
                const mpz_class inner = binom(n + k - 1, n);
                if (total != binom(inner.get_ui() + d - 1, d)) {
                    detail = "mismatch at k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                             ", d=" + std::to_string(d);
                    return false;
                }
                ++pairs;
            }
    detail = "Schur-expansion dimensions sum to dim Sym^d Sym^n for all " +
             std::to_string(pairs) + " (d, n, vars) cases with dn <= 10 in 2 and 3 variables";
    return true;
}

/* ---- criterion 8: byte-stable JSON across worker counts ---- */
bool criterion_determinism(std::string& detail) {
    namespace fs = std::filesystem;
    const fs::path tmp = fs::temp_directory_path();
    const fs::path point_file = tmp / "gctk_acceptance_point.json";
    const fs::path matrix_file = tmp / "gctk_acceptance_matrix.json";
    {
        std::ofstream out(point_file);
        out << "[1,0,0,0,1,0,0,0,0]\n";
    }
    const CliResult mat = run_cli("grenet --m 3 --normalize --out " + matrix_file.string());
    if (mat.status != 0) {
        detail = "could not materialize the matrix file";
        return false;
    }

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"kron", "kron --lambda 2,1 --mu 2,1 --nu 2,1"},
        {"kron-rect", "kron-rect --n 2 --lambda 2,2"},
        {"pleth", "pleth --n 2 --d 2 --lambda 2,2"},
        {"obstruct", "obstruct --n 3 --d 2 --m 2"},
        {"grenet", "grenet --m 3 --normalize --verify modular --trials 5"},
        {"mr-bound", "mr-bound --m 3"},
        {"hessian-rank", "hessian-rank --poly det --n 3 --point " + point_file.string()},
        {"tomo", "tomo --lambda 2,1,1 --mu 2,1,1 --nu 2,1,1 --with-k"},
        {"latin", "latin --n 4"},
        {"stretch", "stretch --n 2 --lambda 1,1 --smax 4"},
        {"verify",
         "verify --matrix " + matrix_file.string() + " --poly per --n 3 --mode modular --trials 5"},
    };
    std::string checked;
    for (const auto& [name, args] : commands) {
        std::string reference;
        for (const char* threads : {"1", "2", "8"}) {
            const CliResult run =
                run_cli(args + " --format json --seed 7 --threads " + threads);
            if (run.status != 0) {
                detail = name + " exited " + std::to_string(run.status);
                return false;
            }
            if (reference.empty())
                reference = run.output;
            else if (run.output != reference) {
                detail = name + " output differs between worker counts";
                return false;
            }
        }
        checked += checked.empty() ? name : ", " + name;
    }
    detail = "byte-identical JSON across --threads 1/2/8 with --seed 7 for: " + checked;
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "flagship degree-36 reproduction", criterion_flagship},
        {2, "permanent determinantal representations", criterion_representations},
        {3, "second-derivative rank certificates", criterion_certificates},
        {4, "Kronecker route agreement and symmetries", criterion_kron_routes},
        {5, "marginal-count sandwich and simplex collapse", criterion_sandwich},
        {6, "signed Latin square census", criterion_latin},
        {7, "plethysm dimension identity", criterion_dimensions},
        {8, "CLI determinism across worker counts", criterion_determinism},
    };

    std::vector<int> failed;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %d: %s - %s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) failed.push_back(c.id);
    }

    std::string failed_list;
    if (failed.empty()) {
        failed_list = "none";
    } else {
        failed_list = "[";
        for (std::size_t i = 0; i < failed.size(); ++i)
            failed_list += (i ? " " : "") + std::to_string(failed[i]);
        failed_list += "]";
    }
    std::printf("criteria failed: %s\n", failed_list.c_str());
    return static_cast<int>(failed.size());
}
