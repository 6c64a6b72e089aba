// dglcp: solve discounted games and LCPs by complementary pivoting.
//
// Exit codes: 0 success (including a ray certificate, which is a documented
// outcome, not an error), 1 input or usage error (also budget-exceeded and
// solver-reported failure), 2 internal invariant violation.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dglcp/cottle_dantzig.hpp"
#include "dglcp/experiment.hpp"
#include "dglcp/game.hpp"
#include "dglcp/instances.hpp"
#include "dglcp/io.hpp"
#include "dglcp/lcp.hpp"
#include "dglcp/lemke.hpp"
#include "dglcp/reduction.hpp"

namespace {

using namespace dglcp;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

std::string trace_line(const PivotTrace& trace, int n) {
    std::string line;
    for (const PivotEvent& ev : trace.events) {
        if (!line.empty()) line += ' ';
        line += label_name(ev.entering, n) + ">" + label_name(ev.leaving, n);
    }
    return line.empty() ? "(empty)" : line;
}

std::string join_rvec(const rvec& v) {
    std::string s;
    for (const rational& x : v) {
        if (!s.empty()) s += ' ';
        s += format_rational(x);
    }
    return s;
}

std::string strategy_line(const DiscountedGame& g, const Strategy& s, Player p) {
    std::string line;
    for (int u = 0; u < g.size(); ++u) {
        if (g.owner[u] != p) continue;
        if (!line.empty()) line += ' ';
        line += "v" + std::to_string(u) + "->e" + std::to_string(s.choice[u]);
    }
    return line.empty() ? "(no vertices)" : line;
}

struct SolveOpts {
    std::string file;
    std::string algorithm = "lemke";
    std::string covering = "unit";
    std::string ordering = "identity";
    std::uint64_t seed = 0;
    bool as_json = false;
    bool strict = false;
};

int run_solve(const SolveOpts& o, bool covering_set, bool ordering_set) {
    if (o.algorithm != "lemke" && o.algorithm != "cottle-dantzig")
        throw input_error("--algorithm must be lemke or cottle-dantzig");
    if (o.algorithm == "lemke" && ordering_set)
        throw input_error("--ordering applies to cottle-dantzig only");
    if (o.algorithm == "cottle-dantzig" && covering_set)
        throw input_error("--covering applies to lemke only");

    json in = parse_json_text(read_text_file(o.file), o.file);
    bool is_game = json_looks_like_game(in);
    DiscountedGame game;
    ReductionCertificate cert;
    LCPInstance lcp;
    if (is_game) {
        game = game_from_json(in, o.strict);
        cert = reduce_to_lcp(game);
        lcp = cert.lcp;
    } else {
        lcp = lcp_from_json(in, o.strict);
    }
    int n = lcp.dim();

    json out;
    out["input"] = is_game ? "game" : "lcp";
    out["algorithm"] = o.algorithm;

    Outcome outcome;
    std::optional<LCPSolution> sol;
    std::optional<RayCertificate> ray;
    PivotTrace trace;
    std::string diagnostic;

    if (o.algorithm == "lemke") {
        rvec d;
        if (o.covering == "unit") {
            d = realize_covering(CoveringVector::unit(), n);
            out["covering"] = "unit";
        } else if (o.covering == "random") {
            d = realize_covering(CoveringVector::random(o.seed), n);
            out["covering"] = rvec_to_json(d);
            out["covering_seed"] = o.seed;
        } else {
            d = rvec_from_json(
                parse_json_text(read_text_file(o.covering), o.covering));
            d = realize_covering(CoveringVector::explicit_vec(d), n);
            out["covering"] = rvec_to_json(d);
        }
        LemkeResult res = lemke_solve(lcp, d);
        outcome = res.outcome;
        sol = res.solution;
        ray = res.ray;
        trace = res.trace;
    } else {
        std::vector<int> ord;
        if (o.ordering == "identity") {
            ord = realize_ordering(IndexOrdering::identity(), n);
        } else if (o.ordering == "random") {
            ord = realize_ordering(IndexOrdering::random(o.seed), n);
            out["ordering_seed"] = o.seed;
        } else {
            ord = ordering_from_json(
                parse_json_text(read_text_file(o.ordering), o.ordering));
            require_permutation(ord, n);
        }
        out["ordering"] = ordering_to_json(ord);
        CDResult res = cottle_dantzig_solve(lcp, ord);
        outcome = res.outcome;
        sol = res.solution;
        trace = res.trace;
        diagnostic = res.diagnostic;
    }

    out["outcome"] = outcome_name(outcome);
    out["trace"] = trace_to_json(trace, n);
    if (!diagnostic.empty()) out["diagnostic"] = diagnostic;
    if (sol) {
        out["w"] = rvec_to_json(sol->w);
        out["z"] = rvec_to_json(sol->z);
    }
    if (ray) {
        json r;
        r["entering"] = label_name(ray->entering_label, n);
        r["base_w"] = rvec_to_json(ray->base.w);
        r["base_z"] = rvec_to_json(ray->base.z);
        r["base_z0"] = rational_to_json(ray->base.z0);
        r["dir_w"] = rvec_to_json(ray->w_dir);
        r["dir_z"] = rvec_to_json(ray->z_dir);
        r["dir_z0"] = rational_to_json(ray->z0_dir);
        out["ray"] = r;
    }

    std::optional<LiftedSolution> lifted;
    std::vector<int> ties;
    if (is_game && sol) {
        lifted = lift_solution(cert, *sol);
        ties = strategy_tie_audit(cert, *sol);
        out["values"] = rvec_to_json(lifted->values);
        out["max_strategy"] = lifted->max_strategy.choice;
        out["min_strategy"] = lifted->min_strategy.choice;
        out["ties"] = ties;
    }

    if (o.as_json) {
        std::cout << dump_json(out);
    } else {
        std::cout << "outcome: " << outcome_name(outcome) << "\n";
        std::cout << "pivots: " << trace.pivot_count() << "\n";
        if (o.algorithm == "cottle-dantzig")
            std::cout << "major cycles: " << trace.major_cycles << "\n";
        std::cout << "trace: " << trace_line(trace, n) << "\n";
        if (!diagnostic.empty()) std::cout << "diagnostic: " << diagnostic << "\n";
        if (sol) {
            std::cout << "w: " << join_rvec(sol->w) << "\n";
            std::cout << "z: " << join_rvec(sol->z) << "\n";
        }
        if (ray) {
            std::cout << "ray entering: " << label_name(ray->entering_label, n)
                      << "\n";
            std::cout << "ray base w: " << join_rvec(ray->base.w)
                      << "  z: " << join_rvec(ray->base.z)
                      << "  z0: " << format_rational(ray->base.z0) << "\n";
            std::cout << "ray dir  w: " << join_rvec(ray->w_dir)
                      << "  z: " << join_rvec(ray->z_dir)
                      << "  z0: " << format_rational(ray->z0_dir) << "\n";
        }
        if (lifted) {
            std::cout << "values: " << join_rvec(lifted->values) << "\n";
            std::cout << "max strategy: "
                      << strategy_line(game, lifted->max_strategy, Player::Max)
                      << "\n";
            std::cout << "min strategy: "
                      << strategy_line(game, lifted->min_strategy, Player::Min)
                      << "\n";
            if (ties.empty()) {
                std::cout << "ties: (none)\n";
            } else {
                std::cout << "ties:";
                for (int v : ties) std::cout << " v" << v;
                std::cout << "\n";
            }
        }
    }
    return (outcome == Outcome::solved || outcome == Outcome::ray) ? 0 : 1;
}

struct ReduceOpts {
    std::string file;
    std::string out;
    bool strict = false;
};

int run_reduce(const ReduceOpts& o) {
    json in = parse_json_text(read_text_file(o.file), o.file);
    DiscountedGame game = game_from_json(in, o.strict);
    ReductionCertificate cert = reduce_to_lcp(game);
    emit(dump_json(lcp_to_json(cert.lcp)), o.out);
    return 0;
}

struct GenOpts {
    std::string family;
    int n = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::string ordering_out;
    std::int64_t reward_lo = -10;
    std::int64_t reward_hi = 10;
    std::string discount = "1/2";
};

int run_gen(const GenOpts& o, bool seed_set, bool params_set) {
    if (o.family == "lemke-lower-bound" || o.family == "cd-lower-bound") {
        if (seed_set)
            throw input_error(o.family + " is deterministic; --seed applies to "
                              "random-binary only");
        if (params_set)
            throw input_error("reward/discount flags apply to random-binary only");
    }
    if (o.family == "lemke-lower-bound") {
        emit(dump_json(game_to_json(gen_lemke_lower_bound(o.n))), o.out);
        return 0;
    }
    if (o.family == "cd-lower-bound") {
        if (o.ordering_out.empty())
            throw input_error(
                "cd-lower-bound emits an adversarial ordering; pass "
                "--ordering-out FILE for it");
        CDInstance inst = gen_cd_lower_bound(o.n);
        emit(dump_json(game_to_json(inst.game)), o.out);
        write_text_file(o.ordering_out,
                        dump_json(ordering_to_json(inst.ordering.order)));
        return 0;
    }
    if (o.family == "random-binary") {
        if (!seed_set) throw input_error("random-binary needs --seed");
        RandomGameParams params;
        params.reward_lo = o.reward_lo;
        params.reward_hi = o.reward_hi;
        params.discount = parse_rational(o.discount);
        emit(dump_json(game_to_json(gen_random_binary_game(o.n, o.seed, params))),
             o.out);
        return 0;
    }
    throw input_error("unknown family \"" + o.family +
                      "\" (lemke-lower-bound, cd-lower-bound, random-binary)");
}

struct BenchOpts {
    std::string config;
    std::string out_csv;
    std::string report;
};

int run_bench(const BenchOpts& o) {
    json cj = parse_json_text(read_text_file(o.config), o.config);
    ExperimentConfig cfg = config_from_json(cj);
    ExperimentReport report = run_experiment(cfg);
    write_text_file(o.out_csv, experiment_csv(report));
    if (!o.report.empty())
        write_text_file(o.report, dump_json(report_to_json(report)));

    std::size_t verified = 0;
    for (const SummaryEntry& se : report.summary) verified += se.verified;
    std::cout << "rows: " << report.rows.size() << " (verified " << verified
              << ") -> " << o.out_csv << "\n";
    for (const SummaryEntry& se : report.summary) {
        std::cout << se.family << " n=" << se.n << " " << se.algorithm << "/"
                  << se.variant << ": rows=" << se.rows
                  << " verified=" << se.verified;
        if (se.verified > 0) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.2f", to_double(se.mean_pivots));
            std::cout << " mean=" << buf
                      << " median=" << format_rational(se.median_pivots)
                      << " max=" << se.max_pivots;
        }
        std::cout << "\n";
    }
    for (const CurveFit& cf : report.fits) {
        std::cout << "fit " << cf.family << " " << cf.algorithm << "/"
                  << cf.variant << ": ";
        if (cf.fitted) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "poly_degree=%.4f (rss %.4g), exp_rate=%.4f (rss %.4g)",
                          cf.fit.poly_degree, cf.fit.poly_rss, cf.fit.exp_rate,
                          cf.fit.exp_rss);
            std::cout << buf << "\n";
        } else {
            std::cout << "not fitted (" << cf.note << ")\n";
        }
    }
    return 0;
}

struct VerifyOpts {
    std::string game_file;
    std::string solution_file;
    bool strict = false;
};

int run_verify(const VerifyOpts& o) {
    DiscountedGame game = game_from_json(
        parse_json_text(read_text_file(o.game_file), o.game_file), o.strict);
    LCPSolution sol = solution_from_json(
        parse_json_text(read_text_file(o.solution_file), o.solution_file),
        o.strict);
    ReductionCertificate cert = reduce_to_lcp(game);
    std::vector<std::string> bad = check_solution(cert.lcp, sol);
    if (!bad.empty()) {
        for (const std::string& msg : bad) std::cout << "violation: " << msg << "\n";
        std::cout << "verification failed\n";
        return 1;
    }
    LiftedSolution lifted = lift_solution(cert, sol);
    std::cout << "LCP checks pass; lifted values satisfy Bellman optimality\n";
    std::cout << "values: " << join_rvec(lifted.values) << "\n";
    try {
        Equilibrium eq = brute_force_equilibrium(game);
        if (eq.values != lifted.values)
            throw invariant_error(
                "verified solution disagrees with the brute-force oracle");
        std::cout << "brute-force oracle agrees\n";
    } catch (const input_error& e) {
        std::cout << "oracle skipped: " << e.what() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact complementary-pivoting solvers for discounted games"};
    app.require_subcommand(1);

    SolveOpts so;
    CLI::App* sc_solve = app.add_subcommand(
        "solve", "solve a game or LCP file (detected by content)");
    sc_solve->add_option("file", so.file, "game or LCP JSON file")->required();
    sc_solve->add_option("--algorithm", so.algorithm, "lemke or cottle-dantzig");
    CLI::Option* cov_opt = sc_solve->add_option(
        "--covering", so.covering, "unit, random, or a JSON file with an array");
    CLI::Option* ord_opt = sc_solve->add_option(
        "--ordering", so.ordering,
        "identity, random, or a JSON file with a 1-based permutation");
    sc_solve->add_option("--seed", so.seed, "seed for random covering/ordering");
    sc_solve->add_flag("--json", so.as_json, "machine-readable output");
    sc_solve->add_flag("--strict", so.strict, "reject non-canonical rationals");

    ReduceOpts ro;
    CLI::App* sc_reduce =
        app.add_subcommand("reduce", "reduce a game file to an LCP file");
    sc_reduce->add_option("file", ro.file, "game JSON file")->required();
    sc_reduce->add_option("-o,--out", ro.out, "output path (default stdout)");
    sc_reduce->add_flag("--strict", ro.strict, "reject non-canonical rationals");

    GenOpts go;
    CLI::App* sc_gen = app.add_subcommand("gen", "generate an instance");
    sc_gen
        ->add_option("--family", go.family,
                     "lemke-lower-bound, cd-lower-bound, or random-binary")
        ->required();
    sc_gen->add_option("--n", go.n, "family size parameter")->required();
    CLI::Option* seed_opt =
        sc_gen->add_option("--seed", go.seed, "seed (random-binary)");
    sc_gen->add_option("-o,--out", go.out, "output path (default stdout)");
    sc_gen->add_option("--ordering-out", go.ordering_out,
                       "where cd-lower-bound writes its ordering");
    CLI::Option* lo_opt =
        sc_gen->add_option("--reward-lo", go.reward_lo, "random-binary only");
    CLI::Option* hi_opt =
        sc_gen->add_option("--reward-hi", go.reward_hi, "random-binary only");
    CLI::Option* disc_opt =
        sc_gen->add_option("--discount", go.discount, "random-binary only");

    BenchOpts bo;
    CLI::App* sc_bench =
        app.add_subcommand("bench", "run a pivot-counting experiment");
    sc_bench->add_option("config", bo.config, "experiment config JSON")->required();
    sc_bench->add_option("-o,--out", bo.out_csv, "CSV output path")->required();
    sc_bench->add_option("--report", bo.report, "JSON report path (summary + fits)");

    VerifyOpts vo;
    CLI::App* sc_verify = app.add_subcommand(
        "verify", "check a solution file against a game (oracle check)");
    sc_verify->add_option("game", vo.game_file, "game JSON file")->required();
    sc_verify->add_option("solution", vo.solution_file, "solution JSON file {w, z}")
        ->required();
    sc_verify->add_flag("--strict", vo.strict, "reject non-canonical rationals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*sc_solve)
            return run_solve(so, cov_opt->count() > 0, ord_opt->count() > 0);
        if (*sc_reduce) return run_reduce(ro);
        if (*sc_gen)
            return run_gen(go, seed_opt->count() > 0,
                           lo_opt->count() > 0 || hi_opt->count() > 0 ||
                               disc_opt->count() > 0);
        if (*sc_bench) return run_bench(bo);
        if (*sc_verify) return run_verify(vo);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
