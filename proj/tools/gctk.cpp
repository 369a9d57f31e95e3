#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "gctk/characters.hpp"
#include "gctk/grenet.hpp"
#include "gctk/hessian.hpp"
#include "gctk/kronecker.hpp"
#include "gctk/latin.hpp"
#include "gctk/partition.hpp"
#include "gctk/powersum.hpp"
#include "gctk/serialize.hpp"
#include "gctk/tomography.hpp"

namespace {

using gctk::json;

struct Globals {
    std::string format = "text";
    std::uint64_t seed = 1;
    std::uint32_t threads = 1;
};

void emit(const Globals& g, const json& out, const std::string& text) {
    if (g.format == "json")
        std::cout << out.dump() << "\n";
    else
        std::cout << text << "\n";
}

std::string bound_str(double b) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", b);
    return buf;
}

std::string poly_label(const std::string& kind, std::uint32_t n) {
    return (kind == "per" ? "per_" : "det_") + std::to_string(n);
}

gctk::SparsePoly named_poly(const std::string& kind, std::uint32_t n) {
    if (kind == "per") return gctk::permanent_poly(n);
    if (kind == "det") return gctk::determinant_poly(n);
    throw std::invalid_argument("--poly must be 'per' or 'det'");
}

std::vector<mpq_class> read_point_file(const std::string& path, std::size_t want) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open point file '" + path + "'");
    json j = json::parse(in);
    if (!j.is_array()) throw std::invalid_argument("point file must hold a JSON array");
    std::vector<mpq_class> point;
    point.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_number_integer())
            point.emplace_back(static_cast<long>(e.get<std::int64_t>()));
        else if (e.is_string())
            point.push_back(gctk::rational_from_string(e.get<std::string>()));
        else
            throw std::invalid_argument("point entries must be integers or 'p/q' strings");
    }
    if (point.size() != want)
        throw std::invalid_argument("point file holds " + std::to_string(point.size()) +
                                    " values, expected " + std::to_string(want));
    return point;
}

json point_to_json(const std::vector<mpq_class>& point) {
    json out = json::array();
    for (const auto& q : point) out.push_back(gctk::rational_to_string(q));
    return out;
}

std::string join_text(const gctk::Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.part(i));
    }
    return out.empty() ? "(empty)" : out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gctk - exact computations around the permanent-vs-determinant question:\n"
        "symmetric-group characters, Kronecker and plethysm coefficients,\n"
        "determinantal representations, Hessian rank certificates, discrete\n"
        "tomography bounds, and signed Latin-square census.\n"
        "\n"
        "Exit codes: 0 success, 1 domain error, 2 resource-cap refusal,\n"
        "64 usage error, 70 internal error.\n"
        "\n"
        "Cap overrides via environment: GCTK_MAX_CANDIDATES (obstruct),\n"
        "GCTK_MAX_TOMO_WEIGHT (tomo), GCTK_MAX_LATIN_ORDER (latin),\n"
        "GCTK_MAX_SYM_DET_SIZE (grenet/verify symbolic path)."};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for all randomized checks")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads for parallel scans")
        ->check(CLI::Range(1u, 64u))
        ->capture_default_str();

    // kron
    std::string s_lambda, s_mu, s_nu;
    auto* c_kron = app.add_subcommand("kron", "Kronecker coefficient k(lambda, mu, nu)");
    c_kron->add_option("--lambda", s_lambda, "Partition, comma-separated")->required();
    c_kron->add_option("--mu", s_mu, "Partition, comma-separated")->required();
    c_kron->add_option("--nu", s_nu, "Partition, comma-separated")->required();
    c_kron->callback([&] {
        gctk::TripleQuery q{gctk::parse_partition(s_lambda), gctk::parse_partition(s_mu),
                            gctk::parse_partition(s_nu)};
        gctk::CharacterTable chi;
        const mpz_class k = gctk::kron(q, chi);
        json out{{"lambda", gctk::to_json(q.lambda)},
                 {"mu", gctk::to_json(q.mu)},
                 {"nu", gctk::to_json(q.nu)},
                 {"kron", k.get_str()}};
        emit(g, out, "kron = " + k.get_str());
    });

    // kron-rect
    std::uint32_t kr_n = 0;
    std::string kr_lambda;
    auto* c_krect = app.add_subcommand(
        "kron-rect", "Rectangular Kronecker coefficient k(lambda, n x d, n x d)");
    c_krect->add_option("--n", kr_n, "Number of rectangle rows")->required();
    c_krect->add_option("--lambda", kr_lambda, "Partition, comma-separated")->required();
    c_krect->callback([&] {
        const gctk::Partition lam = gctk::parse_partition(kr_lambda);
        gctk::CharacterTable chi;
        const mpz_class k = gctk::kron_rect(kr_n, lam, chi);
        json out{{"n", kr_n},
                 {"lambda", gctk::to_json(lam)},
                 {"d", lam.size() / kr_n},
                 {"kron_rect", k.get_str()}};
        emit(g, out, "kron_rect = " + k.get_str());
    });

    // pleth
    std::uint32_t pl_n = 0, pl_d = 0, pl_vars = 0;
    std::string pl_lambda;
    auto* c_pleth = app.add_subcommand(
        "pleth", "Multiplicity of V_lambda in Sym^d(Sym^n) (plethysm coefficient)");
    c_pleth->add_option("--n", pl_n, "Inner symmetric power")->required();
    c_pleth->add_option("--d", pl_d, "Outer symmetric power")->required();
    c_pleth->add_option("--lambda", pl_lambda, "Partition of d*n, comma-separated")->required();
    c_pleth->add_option("--vars", pl_vars, "Ambient variable count (default n^2)");
    c_pleth->callback([&] {
        const gctk::Partition lam = gctk::parse_partition(pl_lambda);
        const std::uint32_t vars = pl_vars ? pl_vars : pl_n * pl_n;
        gctk::CharacterTable chi;
        const mpz_class p = gctk::pleth(pl_n, pl_d, lam, vars, chi);
        json out{{"n", pl_n},
                 {"d", pl_d},
                 {"lambda", gctk::to_json(lam)},
                 {"vars", vars},
                 {"pleth", p.get_str()}};
        emit(g, out, "pleth = " + p.get_str());
    });

    // obstruct
    std::uint32_t ob_n = 0, ob_d = 0, ob_m = 0, ob_rows = 0;
    bool ob_strict = false;
    std::uint64_t ob_limit = 100000;
    auto* c_obstruct = app.add_subcommand(
        "obstruct",
        "Scan partitions of d*n for multiplicity obstructions: positive plethysm "
        "multiplicity, vanishing rectangular Kronecker coefficient");
    c_obstruct->add_option("--n", ob_n, "Inner symmetric power")->required();
    c_obstruct->add_option("--d", ob_d, "Outer symmetric power")->required();
    c_obstruct->add_option("--m", ob_m, "Comparison size (m < n)")->required();
    c_obstruct->add_flag("--strict-shape", ob_strict,
                         "Only scan candidates passing the row/first-part shape filter");
    c_obstruct->add_option("--limit", ob_limit, "Candidate cap")
        ->envname("GCTK_MAX_CANDIDATES")
        ->capture_default_str();
    c_obstruct->add_option("--max-rows", ob_rows,
                           "Custom row bound for candidates (default n^2)");
    c_obstruct->callback([&] {
        gctk::ObstructionSearchConfig cfg;
        cfg.enforce_shape = ob_strict;
        cfg.max_rows = ob_rows;
        cfg.candidate_cap = ob_limit;
        cfg.threads = g.threads;
        const gctk::ObstructionScan scan = gctk::obstruction_search(ob_n, ob_d, ob_m, cfg);
        json reports = json::array();
        for (const auto& r : scan.reports) reports.push_back(gctk::to_json(r));
        json out{{"n", ob_n},
                 {"d", ob_d},
                 {"m", ob_m},
                 {"strict_shape", ob_strict},
                 {"candidates", scan.candidates},
                 {"reports", std::move(reports)}};
        std::string text = "candidates " + std::to_string(scan.candidates) + ", obstructions " +
                           std::to_string(scan.reports.size());
        for (const auto& r : scan.reports)
            text += "\nlambda " + join_text(r.lambda) + ": pleth " + r.pleth_value.get_str() +
                    ", kron 0, shape_ok " + (r.shape_ok ? "true" : "false");
        emit(g, out, text);
    });

    // grenet
    std::uint32_t gr_m = 0, gr_trials = 20;
    bool gr_normalize = false;
    std::string gr_verify, gr_out;
    std::uint32_t sym_cap = 16;
    auto* c_grenet = app.add_subcommand(
        "grenet", "Determinantal representation of per_m of size 2^m - 1");
    c_grenet->add_option("--m", gr_m, "Permanent size")->required();
    c_grenet->add_flag("--normalize", gr_normalize, "Rescale first row so det equals per_m");
    c_grenet->add_option("--verify", gr_verify, "Check det against per_m")
        ->check(CLI::IsMember({"symbolic", "modular"}));
    c_grenet->add_option("--trials", gr_trials, "Random points for modular verification")
        ->capture_default_str();
    c_grenet->add_option("--out", gr_out, "Write the matrix JSON to this file");
    c_grenet->add_option("--sym-cap", sym_cap, "Largest size admitted to symbolic expansion")
        ->envname("GCTK_MAX_SYM_DET_SIZE")
        ->capture_default_str();
    c_grenet->callback([&] {
        const gctk::AffineMatrix a = gctk::grenet_matrix(gr_m, gr_normalize);
        json out{{"m", gr_m}, {"size", a.size()}, {"normalized", gr_normalize}};
        std::string text = "size " + std::to_string(a.size());
        if (!gr_verify.empty()) {
            gctk::SparsePoly target = gctk::permanent_poly(gr_m);
            if (!gr_normalize && gr_m % 2 == 0) target = target.negated();
            const auto mode = gr_verify == "symbolic" ? gctk::VerifyMode::symbolic
                                                      : gctk::VerifyMode::modular;
            const gctk::VerifyReport rep =
                gctk::verify_representation(a, target, mode, gr_trials, g.seed, sym_cap);
            out["verify"] = gr_verify;
            out["verified"] = rep.verified;
            out["trials"] = rep.trials;
            out["error_bound"] = rep.error_bound;
            const std::string claim =
                gr_normalize || gr_m % 2 == 1 ? "det == per_" : "det == -per_";
            text += ", " + claim + std::to_string(gr_m) + ": " +
                    (rep.verified ? "true" : "false");
            if (mode == gctk::VerifyMode::modular)
                text += ", trials " + std::to_string(rep.trials) + ", error bound <= " +
                        bound_str(rep.error_bound);
        }
        out["matrix"] = gctk::to_json(a);
        if (!gr_out.empty()) {
            std::ofstream f(gr_out);
            if (!f) throw std::invalid_argument("cannot write '" + gr_out + "'");
            f << gctk::to_json(a).dump() << "\n";
        }
        emit(g, out, text);
    });

    // mr-bound
    std::uint32_t mr_m = 0;
    auto* c_mr = app.add_subcommand(
        "mr-bound",
        "Determinantal-complexity lower bound certificate: a permanent zero whose "
        "Hessian has full rank m^2, giving dc(per_m) >= ceil(m^2 / 2)");
    c_mr->add_option("--m", mr_m, "Permanent size (2..7)")->required();
    c_mr->callback([&] {
        const gctk::MignonRessayreReport rep = gctk::mignon_ressayre_certificate(mr_m);
        json out{{"m", rep.m},
                 {"per_M", rep.permanent_value.get_str()},
                 {"rank_hessian", rep.hessian_rank},
                 {"dc_lower_bound", rep.dc_lower_bound}};
        emit(g, out,
             "per(M) = " + rep.permanent_value.get_str() + ", rank H = " +
                 std::to_string(rep.hessian_rank) + ", dc(per_" + std::to_string(rep.m) +
                 ") >= " + std::to_string(rep.dc_lower_bound));
    });

    // hessian-rank
    std::string hr_poly = "per", hr_point;
    std::uint32_t hr_n = 0;
    auto* c_hr = app.add_subcommand(
        "hessian-rank", "Exact Hessian rank of per_n or det_n at a rational point");
    c_hr->add_option("--poly", hr_poly, "Polynomial family: per or det")
        ->check(CLI::IsMember({"per", "det"}))
        ->capture_default_str();
    c_hr->add_option("--n", hr_n, "Matrix size")->required();
    c_hr->add_option("--point", hr_point,
                     "JSON file: array of n^2 integers or 'p/q' strings, row-major")
        ->required();
    c_hr->callback([&] {
        const gctk::SparsePoly f = named_poly(hr_poly, hr_n);
        const std::uint32_t nvars = hr_n * hr_n;
        const std::vector<mpq_class> point = read_point_file(hr_point, nvars);
        const std::size_t rank = gctk::rank_at(gctk::hessian(f, nvars), point);
        json out{{"poly", hr_poly}, {"n", hr_n}, {"point", point_to_json(point)}, {"rank", rank}};
        emit(g, out,
             "rank H(" + poly_label(hr_poly, hr_n) + ") = " + std::to_string(rank));
    });

    // tomo
    std::string tm_lambda, tm_mu, tm_nu;
    bool tm_with_k = false;
    std::uint32_t tomo_cap = 10;
    auto* c_tomo = app.add_subcommand(
        "tomo", "Discrete-tomography counts t and p sandwiching the Kronecker coefficient");
    c_tomo->add_option("--lambda", tm_lambda, "Partition, comma-separated")->required();
    c_tomo->add_option("--mu", tm_mu, "Partition, comma-separated")->required();
    c_tomo->add_option("--nu", tm_nu, "Partition, comma-separated")->required();
    c_tomo->add_flag("--with-k", tm_with_k, "Also compute the Kronecker coefficient");
    c_tomo->add_option("--max-weight", tomo_cap, "Largest admitted weight")
        ->envname("GCTK_MAX_TOMO_WEIGHT")
        ->capture_default_str();
    c_tomo->callback([&] {
        const gctk::Partition lam = gctk::parse_partition(tm_lambda);
        const gctk::Partition mu = gctk::parse_partition(tm_mu);
        const gctk::Partition nu = gctk::parse_partition(tm_nu);
        const std::uint64_t t = gctk::count_relations_t(lam, mu, nu, tomo_cap);
        const std::uint64_t p = gctk::count_pyramids_p(lam, mu, nu, tomo_cap);
        const bool sl = gctk::is_simplex_like(lam, mu, nu);
        json out{{"lambda", gctk::to_json(lam)},
                 {"mu", gctk::to_json(mu)},
                 {"nu", gctk::to_json(nu)},
                 {"t", t},
                 {"p", p}};
        std::string text = "t = " + std::to_string(t) + ", p = " + std::to_string(p);
        if (tm_with_k) {
            gctk::CharacterTable chi;
            const mpz_class k = gctk::kron({lam, mu, nu}, chi);
            out["k"] = k.get_str();
            text += ", k = " + k.get_str();
        }
        out["simplex_like"] = sl;
        text += std::string(", simplex-like: ") + (sl ? "true" : "false");
        emit(g, out, text);
    });

    // latin
    std::uint32_t lt_n = 0, lt_cap = 5;
    auto* c_latin = app.add_subcommand(
        "latin", "Census of order-n Latin squares by column sign (even - odd difference)");
    c_latin->add_option("--n", lt_n, "Square order")->required();
    c_latin->add_option("--max-order", lt_cap, "Largest admitted order")
        ->envname("GCTK_MAX_LATIN_ORDER")
        ->capture_default_str();
    c_latin->callback([&] {
        const gctk::AlonTarsiReport rep = gctk::alon_tarsi_statistic(lt_n, lt_cap, g.threads);
        json out{{"order", rep.order},
                 {"even", rep.even},
                 {"odd", rep.odd},
                 {"difference", rep.difference}};
        emit(g, out,
             "order " + std::to_string(rep.order) + ": even " + std::to_string(rep.even) +
                 ", odd " + std::to_string(rep.odd) + ", difference " +
                 std::to_string(rep.difference));
    });

    // stretch
    std::uint32_t st_n = 0, st_smax = 0;
    std::string st_lambda;
    auto* c_stretch = app.add_subcommand(
        "stretch",
        "Smallest stretch factor s <= smax with positive rectangular Kronecker "
        "coefficient at s*lambda");
    c_stretch->add_option("--n", st_n, "Rectangle rows")->required();
    c_stretch->add_option("--lambda", st_lambda, "Partition, comma-separated")->required();
    c_stretch->add_option("--smax", st_smax, "Largest stretch factor to probe")->required();
    c_stretch->callback([&] {
        const gctk::Partition lam = gctk::parse_partition(st_lambda);
        gctk::CharacterTable chi;
        const auto witness = gctk::stretch_probe(st_n, lam, st_smax, chi);
        json out{{"n", st_n}, {"lambda", gctk::to_json(lam)}, {"s_max", st_smax}};
        out["witness"] = witness ? json(*witness) : json(nullptr);
        emit(g, out,
             witness ? "witness s = " + std::to_string(*witness)
                     : "no witness for s <= " + std::to_string(st_smax));
    });

    // verify
    std::string vf_matrix, vf_poly = "per", vf_mode = "symbolic";
    std::uint32_t vf_n = 0, vf_trials = 20, vf_sym_cap = 16;
    auto* c_verify = app.add_subcommand(
        "verify", "Check a determinantal representation from a matrix JSON file");
    c_verify->add_option("--matrix", vf_matrix, "Matrix JSON file ({size, entries})")
        ->required();
    c_verify->add_option("--poly", vf_poly, "Target family: per or det")
        ->check(CLI::IsMember({"per", "det"}))
        ->capture_default_str();
    c_verify->add_option("--n", vf_n, "Target size")->required();
    c_verify->add_option("--mode", vf_mode, "Verification mode")
        ->check(CLI::IsMember({"symbolic", "modular"}))
        ->capture_default_str();
    c_verify->add_option("--trials", vf_trials, "Random points for modular verification")
        ->capture_default_str();
    c_verify->add_option("--sym-cap", vf_sym_cap, "Largest size admitted to symbolic expansion")
        ->envname("GCTK_MAX_SYM_DET_SIZE")
        ->capture_default_str();
    c_verify->callback([&] {
        std::ifstream in(vf_matrix);
        if (!in) throw std::invalid_argument("cannot open matrix file '" + vf_matrix + "'");
        const gctk::AffineMatrix a = gctk::affine_matrix_from_json(json::parse(in));
        const gctk::SparsePoly f = named_poly(vf_poly, vf_n);
        const auto mode =
            vf_mode == "symbolic" ? gctk::VerifyMode::symbolic : gctk::VerifyMode::modular;
        const gctk::VerifyReport rep =
            gctk::verify_representation(a, f, mode, vf_trials, g.seed, vf_sym_cap);
        json out{{"poly", vf_poly},      {"n", vf_n},
                 {"mode", vf_mode},      {"verified", rep.verified},
                 {"trials", rep.trials}, {"error_bound", rep.error_bound}};
        std::string text = std::string("det == ") + poly_label(vf_poly, vf_n) + ": " +
                           (rep.verified ? "true" : "false");
        if (mode == gctk::VerifyMode::modular)
            text += ", trials " + std::to_string(rep.trials) + ", error bound <= " +
                    bound_str(rep.error_bound);
        emit(g, out, text);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64;
    } catch (const gctk::resource_cap_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
