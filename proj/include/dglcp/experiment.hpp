#pragma once

// Seeded pivot-counting experiments over instance families, with growth
// fitting. Everything upstream of fit_growth is exact; the fit itself is
// floating point by design (analysis, not correctness).
//
// Determinism contract. Rows are emitted in a fixed nesting order (families
// in config order, sizes in config order, repetition, variants in config
// order, draw index), and every random draw is seeded by a documented
// folding scheme:
//   cell seed  = mix(mix(mix(global_seed ^ fnv1a(family)) ^ n) ^ rep)
//   draw seed  = mix(mix(cell_seed ^ fnv1a(algorithm + "/" + variant)) ^ draw)
// where mix is one splitmix64 step and fnv1a is 64-bit FNV-1a. The same
// config therefore produces byte-identical CSV and report output on every
// run.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dglcp/cottle_dantzig.hpp"
#include "dglcp/game.hpp"
#include "dglcp/instances.hpp"
#include "dglcp/io.hpp"
#include "dglcp/lcp.hpp"
#include "dglcp/lemke.hpp"
#include "dglcp/reduction.hpp"
#include "dglcp/rng.hpp"

namespace dglcp {

struct FamilyEntry {
    std::string family;  // lemke-lower-bound | cd-lower-bound | random-binary
    std::vector<int> sizes;
    RandomGameParams params;  // random-binary only
};

struct VariantSpec {
    std::string algorithm;  // lemke | cottle-dantzig
    std::string name;       // variant id in the CSV
    CoveringVector covering;
    IndexOrdering ordering;
    bool family_ordering = false;  // use the ordering the generator emits
    int draws = 1;                 // random variants: draws per instance
    std::vector<std::string> families;  // restrict to these; empty = all

    bool applies_to(const std::string& fam) const {
        if (families.empty()) return true;
        for (const std::string& f : families)
            if (f == fam) return true;
        return false;
    }

    bool randomized() const {
        if (algorithm == "lemke")
            return covering.kind == CoveringVector::Kind::random;
        return ordering.kind == IndexOrdering::Kind::random;
    }
};

struct ExperimentConfig {
    std::uint64_t global_seed = 0;
    int repetitions = 1;
    int oracle_cap = 5;  // brute-force oracle on games up to this many vertices
    std::vector<FamilyEntry> families;
    std::vector<VariantSpec> variants;
};

struct ExperimentRow {
    std::string family;
    int n = 0;
    std::uint64_t seed = 0;
    std::string algorithm;
    std::string variant;
    std::size_t pivots = 0;
    std::size_t major_cycles = 0;
    Outcome outcome = Outcome::failed;
};

struct SummaryEntry {
    std::string family, algorithm, variant;
    int n = 0;
    std::size_t rows = 0;      // all rows in the cell
    std::size_t verified = 0;  // solved and re-checked; stats cover these only
    rational mean_pivots, median_pivots;
    std::size_t max_pivots = 0;
};

struct GrowthFit {
    double poly_degree = 0, poly_intercept = 0, poly_rss = 0;
    double exp_rate = 0, exp_intercept = 0, exp_rss = 0;
    std::size_t points = 0;
};

struct CurveFit {
    std::string family, algorithm, variant;
    bool fitted = false;
    std::string note;
    GrowthFit fit;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;
    std::vector<SummaryEntry> summary;
    std::vector<CurveFit> fits;
};

// ---- seed derivation ----

inline std::uint64_t experiment_cell_seed(std::uint64_t global_seed,
                                          const std::string& family, int n,
                                          int rep) {
    std::uint64_t s = mix64(global_seed ^ fnv1a64(family));
    s = mix64(s ^ static_cast<std::uint64_t>(n));
    return mix64(s ^ static_cast<std::uint64_t>(rep));
}

inline std::uint64_t experiment_draw_seed(std::uint64_t cell_seed,
                                          const std::string& algorithm,
                                          const std::string& variant,
                                          int draw) {
    std::uint64_t s = mix64(cell_seed ^ fnv1a64(algorithm + "/" + variant));
    return mix64(s ^ static_cast<std::uint64_t>(draw));
}

// ---- growth fitting ----

// Least-squares fit of log(mean) against log(n) (slope = polynomial degree
// estimate) and against n (slope = exponential rate estimate).
inline GrowthFit fit_growth(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3)
        throw input_error("fit_growth needs at least 3 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].first <= 0) throw input_error("fit_growth: n must be positive");
        if (points[i].second <= 0)
            throw input_error("fit_growth: mean pivot counts must be positive");
        for (std::size_t j = 0; j < i; ++j)
            if (points[j].first == points[i].first)
                throw input_error("fit_growth: duplicate n value");
    }
    auto least_squares = [](const std::vector<double>& xs,
                            const std::vector<double>& ys) {
        double n = static_cast<double>(xs.size()), sx = 0, sy = 0;
        for (double x : xs) sx += x;
        for (double y : ys) sy += y;
        double mx = sx / n, my = sy / n, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxx += (xs[i] - mx) * (xs[i] - mx);
            sxy += (xs[i] - mx) * (ys[i] - my);
        }
        double slope = sxy / sxx;
        double intercept = my - slope * mx;
        double rss = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double r = ys[i] - (intercept + slope * xs[i]);
            rss += r * r;
        }
        return std::tuple<double, double, double>(slope, intercept, rss);
    };
    std::vector<double> logn, nlin, logy;
    for (const auto& [n, y] : points) {
        logn.push_back(std::log(n));
        nlin.push_back(n);
        logy.push_back(std::log(y));
    }
    GrowthFit out;
    out.points = points.size();
    std::tie(out.poly_degree, out.poly_intercept, out.poly_rss) =
        least_squares(logn, logy);
    std::tie(out.exp_rate, out.exp_intercept, out.exp_rss) =
        least_squares(nlin, logy);
    return out;
}

// ---- config parsing ----

namespace detail {

inline void check_keys(const json& j, std::initializer_list<const char*> allowed,
                       const std::string& what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) { ok = true; break; }
        if (!ok) throw input_error(what + ": unknown key \"" + it.key() + "\"");
    }
}

inline FamilyEntry family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("sizes"))
        throw input_error("family entry needs \"family\" and \"sizes\"");
    check_keys(j, {"family", "sizes", "reward_lo", "reward_hi", "discount"},
               "family entry");
    FamilyEntry fe;
    fe.family = j.at("family").get<std::string>();
    if (fe.family != "lemke-lower-bound" && fe.family != "cd-lower-bound" &&
        fe.family != "random-binary")
        throw input_error("unknown family \"" + fe.family + "\"");
    for (const json& s : j.at("sizes")) {
        if (!s.is_number_integer()) throw input_error("sizes must be integers");
        fe.sizes.push_back(s.get<int>());
    }
    if (fe.sizes.empty()) throw input_error("family entry has no sizes");
    bool random = fe.family == "random-binary";
    if (!random && (j.contains("reward_lo") || j.contains("reward_hi") ||
                    j.contains("discount")))
        throw input_error("reward/discount params apply to random-binary only");
    if (j.contains("reward_lo")) fe.params.reward_lo = j.at("reward_lo").get<std::int64_t>();
    if (j.contains("reward_hi")) fe.params.reward_hi = j.at("reward_hi").get<std::int64_t>();
    if (j.contains("discount")) fe.params.discount = rational_from_json(j.at("discount"));
    return fe;
}

inline VariantSpec variant_from_json(const json& j) {
    if (!j.is_object() || !j.contains("algorithm"))
        throw input_error("variant entry needs \"algorithm\"");
    check_keys(j, {"algorithm", "name", "covering", "ordering", "draws", "families"},
               "variant entry");
    VariantSpec v;
    v.algorithm = j.at("algorithm").get<std::string>();
    if (v.algorithm != "lemke" && v.algorithm != "cottle-dantzig")
        throw input_error("unknown algorithm \"" + v.algorithm + "\"");
    if (v.algorithm == "lemke") {
        if (j.contains("ordering"))
            throw input_error("\"ordering\" is a cottle-dantzig option");
        const json& c = j.contains("covering") ? j.at("covering") : json("unit");
        if (c.is_string() && c.get<std::string>() == "unit") {
            v.covering = CoveringVector::unit();
            v.name = "unit";
        } else if (c.is_string() && c.get<std::string>() == "random") {
            v.covering = CoveringVector::random(0);
            v.name = "random";
        } else if (c.is_array()) {
            v.covering = CoveringVector::explicit_vec(rvec_from_json(c));
            v.name = "explicit";
        } else {
            throw input_error("covering must be \"unit\", \"random\", or an array");
        }
    } else {
        if (j.contains("covering"))
            throw input_error("\"covering\" is a lemke option");
        const json& o = j.contains("ordering") ? j.at("ordering") : json("identity");
        if (o.is_string() && o.get<std::string>() == "identity") {
            v.ordering = IndexOrdering::identity();
            v.name = "identity";
        } else if (o.is_string() && o.get<std::string>() == "random") {
            v.ordering = IndexOrdering::random(0);
            v.name = "random";
        } else if (o.is_string() && o.get<std::string>() == "family") {
            v.family_ordering = true;
            v.name = "family";
        } else if (o.is_array()) {
            v.ordering = IndexOrdering::explicit_perm(ordering_from_json(o));
            v.name = "explicit";
        } else {
            throw input_error(
                "ordering must be \"identity\", \"random\", \"family\", or an array");
        }
    }
    if (j.contains("name")) v.name = j.at("name").get<std::string>();
    if (j.contains("draws")) v.draws = j.at("draws").get<int>();
    if (v.draws < 1) throw input_error("draws must be >= 1");
    if (v.draws > 1 && !v.randomized())
        throw input_error("draws > 1 needs a random covering/ordering");
    if (j.contains("families"))
        for (const json& f : j.at("families"))
            v.families.push_back(f.get<std::string>());
    return v;
}

}  // namespace detail

inline ExperimentConfig config_from_json(const json& j) {
    if (!j.is_object()) throw input_error("config must be a JSON object");
    detail::check_keys(
        j, {"global_seed", "repetitions", "oracle_cap", "families", "variants"},
        "config");
    ExperimentConfig cfg;
    if (j.contains("global_seed"))
        cfg.global_seed = j.at("global_seed").get<std::uint64_t>();
    if (j.contains("repetitions"))
        cfg.repetitions = j.at("repetitions").get<int>();
    if (cfg.repetitions < 1) throw input_error("repetitions must be >= 1");
    if (j.contains("oracle_cap")) cfg.oracle_cap = j.at("oracle_cap").get<int>();
    if (!j.contains("families") || !j.at("families").is_array() ||
        j.at("families").empty())
        throw input_error("config needs a nonempty \"families\" array");
    for (const json& f : j.at("families"))
        cfg.families.push_back(detail::family_from_json(f));
    if (!j.contains("variants") || !j.at("variants").is_array() ||
        j.at("variants").empty())
        throw input_error("config needs a nonempty \"variants\" array");
    for (const json& v : j.at("variants"))
        cfg.variants.push_back(detail::variant_from_json(v));
    for (std::size_t i = 0; i < cfg.variants.size(); ++i)
        for (std::size_t k = 0; k < i; ++k)
            if (cfg.variants[i].algorithm == cfg.variants[k].algorithm &&
                cfg.variants[i].name == cfg.variants[k].name)
                throw input_error("duplicate variant id \"" +
                                  cfg.variants[i].algorithm + "/" +
                                  cfg.variants[i].name + "\"");
    // a "family" ordering only exists for cd-lower-bound instances
    for (const VariantSpec& v : cfg.variants) {
        if (!v.family_ordering) continue;
        for (const FamilyEntry& fe : cfg.families)
            if (v.applies_to(fe.family) && fe.family != "cd-lower-bound")
                throw input_error(
                    "variant with \"family\" ordering applies to family \"" +
                    fe.family +
                    "\" which emits none; restrict it with \"families\"");
    }
    return cfg;
}

// ---- the harness ----

namespace detail {

struct PreparedInstance {
    DiscountedGame game;
    ReductionCertificate cert;
    std::optional<std::vector<int>> family_order;
    std::optional<ValueVector> oracle_values;
};

inline std::shared_ptr<PreparedInstance> prepare_instance(
    const FamilyEntry& fe, int n, std::uint64_t cell_seed, int oracle_cap,
    std::map<std::string, std::shared_ptr<PreparedInstance>>& cache) {
    std::string key = fe.family + "/" + std::to_string(n);
    if (fe.family == "random-binary") key += "/" + std::to_string(cell_seed);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto inst = std::make_shared<PreparedInstance>();
    if (fe.family == "lemke-lower-bound") {
        inst->game = gen_lemke_lower_bound(n);
    } else if (fe.family == "cd-lower-bound") {
        CDInstance cd = gen_cd_lower_bound(n);
        inst->game = std::move(cd.game);
        inst->family_order = cd.ordering.order;
    } else {
        inst->game = gen_random_binary_game(n, cell_seed, fe.params);
    }
    inst->cert = reduce_to_lcp(inst->game);
    if (static_cast<int>(inst->game.size()) <= oracle_cap)
        inst->oracle_values = brute_force_equilibrium(inst->game).values;
    cache[key] = inst;
    return inst;
}

}  // namespace detail

inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    ExperimentReport report;
    std::map<std::string, std::shared_ptr<detail::PreparedInstance>> cache;

    // cell key -> pivot counts of verified rows, in canonical order
    std::vector<std::tuple<std::string, std::string, std::string, int>> cell_order;
    std::map<std::tuple<std::string, std::string, std::string, int>,
             std::pair<std::vector<std::size_t>, std::size_t>>
        cells;  // -> (verified pivot counts, total rows)

    for (const FamilyEntry& fe : cfg.families) {
        for (int n : fe.sizes) {
            for (int rep = 0; rep < cfg.repetitions; ++rep) {
                std::uint64_t cseed =
                    experiment_cell_seed(cfg.global_seed, fe.family, n, rep);
                auto inst = detail::prepare_instance(fe, n, cseed,
                                                     cfg.oracle_cap, cache);
                const LCPInstance& lcp = inst->cert.lcp;
                for (const VariantSpec& var : cfg.variants) {
                    if (!var.applies_to(fe.family)) continue;
                    for (int draw = 0; draw < var.draws; ++draw) {
                        std::uint64_t dseed = experiment_draw_seed(
                            cseed, var.algorithm, var.name, draw);
                        ExperimentRow row;
                        row.family = fe.family;
                        row.n = n;
                        row.algorithm = var.algorithm;
                        row.variant = var.name;
                        row.seed = var.randomized()
                                       ? dseed
                                       : (fe.family == "random-binary" ? cseed : 0);

                        std::optional<LCPSolution> sol;
                        if (var.algorithm == "lemke") {
                            CoveringVector cov = var.covering;
                            if (cov.kind == CoveringVector::Kind::random)
                                cov.seed = dseed;
                            LemkeResult res =
                                lemke_solve(lcp, realize_covering(cov, lcp.dim()));
                            row.outcome = res.trace.outcome;
                            row.pivots = res.trace.pivot_count();
                            sol = res.solution;
                        } else {
                            IndexOrdering ord = var.ordering;
                            if (var.family_ordering) {
                                if (!inst->family_order)
                                    throw input_error(
                                        "variant \"family\" ordering needs the "
                                        "cd-lower-bound family");
                                ord = IndexOrdering::explicit_perm(
                                    *inst->family_order);
                            } else if (ord.kind == IndexOrdering::Kind::random) {
                                ord.seed = dseed;
                            }
                            CDResult res = cottle_dantzig_solve(
                                lcp, realize_ordering(ord, lcp.dim()));
                            row.outcome = res.trace.outcome;
                            row.pivots = res.trace.pivot_count();
                            row.major_cycles = res.trace.major_cycles;
                            sol = res.solution;
                        }

                        bool verified = false;
                        if (row.outcome == Outcome::solved && sol) {
                            if (!check_solution(lcp, *sol).empty()) {
                                row.outcome = Outcome::failed;
                            } else {
                                verified = true;
                                if (inst->oracle_values) {
                                    LiftedSolution lifted =
                                        lift_solution(inst->cert, *sol);
                                    if (lifted.values != *inst->oracle_values)
                                        throw invariant_error(
                                            "experiment: solver disagrees with "
                                            "the brute-force oracle on " +
                                            fe.family + " n=" +
                                            std::to_string(n));
                                }
                            }
                        }

                        auto key = std::make_tuple(fe.family, var.algorithm,
                                                   var.name, n);
                        auto cit = cells.find(key);
                        if (cit == cells.end()) {
                            cell_order.push_back(key);
                            cit = cells.emplace(key, std::make_pair(
                                                         std::vector<std::size_t>{},
                                                         std::size_t{0}))
                                      .first;
                        }
                        cit->second.second += 1;
                        if (verified) cit->second.first.push_back(row.pivots);
                        report.rows.push_back(std::move(row));
                    }
                }
            }
        }
    }

    // summaries over verified rows
    for (const auto& key : cell_order) {
        const auto& [counts, total] = cells.at(key);
        SummaryEntry se;
        std::tie(se.family, se.algorithm, se.variant, se.n) = key;
        se.rows = total;
        se.verified = counts.size();
        if (!counts.empty()) {
            std::vector<std::size_t> sorted = counts;
            std::sort(sorted.begin(), sorted.end());
            bigint sum = 0;
            for (std::size_t c : sorted) {
                sum += static_cast<long long>(c);
                if (c > se.max_pivots) se.max_pivots = c;
            }
            se.mean_pivots = rational(sum, bigint(sorted.size()));
            std::size_t m = sorted.size();
            se.median_pivots =
                m % 2 == 1 ? rational(static_cast<long long>(sorted[m / 2]))
                           : rational(bigint(sorted[m / 2 - 1] + sorted[m / 2]),
                                      bigint(2));
        }
        report.summary.push_back(std::move(se));
    }

    // one fit per (family, algorithm, variant) curve, over per-n means
    std::vector<std::tuple<std::string, std::string, std::string>> curve_order;
    std::map<std::tuple<std::string, std::string, std::string>,
             std::vector<std::pair<double, double>>>
        curves;
    for (const SummaryEntry& se : report.summary) {
        auto key = std::make_tuple(se.family, se.algorithm, se.variant);
        if (curves.find(key) == curves.end()) curve_order.push_back(key);
        if (se.verified > 0)
            curves[key].emplace_back(static_cast<double>(se.n),
                                     to_double(se.mean_pivots));
        else
            curves[key];  // keep the curve present even with no usable points
    }
    for (const auto& key : curve_order) {
        CurveFit cf;
        std::tie(cf.family, cf.algorithm, cf.variant) = key;
        try {
            cf.fit = fit_growth(curves.at(key));
            cf.fitted = true;
        } catch (const input_error& e) {
            cf.fitted = false;
            cf.note = e.what();
        }
        report.fits.push_back(std::move(cf));
    }
    return report;
}

// ---- serialization ----

inline std::string experiment_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "family,n,seed,algorithm,variant,pivots,major_cycles,outcome\n";
    for (const ExperimentRow& r : report.rows) {
        out << r.family << ',' << r.n << ',' << r.seed << ',' << r.algorithm
            << ',' << r.variant << ',' << r.pivots << ',' << r.major_cycles
            << ',' << outcome_name(r.outcome) << '\n';
    }
    return out.str();
}

inline json report_to_json(const ExperimentReport& report) {
    json out;
    out["rows"] = report.rows.size();
    json summary = json::array();
    for (const SummaryEntry& se : report.summary) {
        json e;
        e["family"] = se.family;
        e["algorithm"] = se.algorithm;
        e["variant"] = se.variant;
        e["n"] = se.n;
        e["rows"] = se.rows;
        e["verified"] = se.verified;
        if (se.verified > 0) {
            e["mean_pivots"] = rational_to_json(se.mean_pivots);
            e["median_pivots"] = rational_to_json(se.median_pivots);
            e["max_pivots"] = se.max_pivots;
        }
        summary.push_back(e);
    }
    out["summary"] = summary;
    json fits = json::array();
    for (const CurveFit& cf : report.fits) {
        json e;
        e["family"] = cf.family;
        e["algorithm"] = cf.algorithm;
        e["variant"] = cf.variant;
        e["fitted"] = cf.fitted;
        if (cf.fitted) {
            e["points"] = cf.fit.points;
            e["poly_degree"] = cf.fit.poly_degree;
            e["poly_rss"] = cf.fit.poly_rss;
            e["exp_rate"] = cf.fit.exp_rate;
            e["exp_rss"] = cf.fit.exp_rss;
        } else {
            e["note"] = cf.note;
        }
        fits.push_back(e);
    }
    out["fits"] = fits;
    return out;
}

}  // namespace dglcp
