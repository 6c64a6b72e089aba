#pragma once

// File formats. Everything is JSON text; rationals travel as reduced "p/q"
// strings so files are exact and diff-friendly. Input rationals may also be
// bare JSON integers; floats are rejected.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dglcp/cottle_dantzig.hpp"
#include "dglcp/game.hpp"
#include "dglcp/lcp.hpp"
#include "dglcp/lemke.hpp"
#include "dglcp/rational.hpp"

namespace dglcp {

using json = nlohmann::ordered_json;

inline json rational_to_json(const rational& r) { return format_rational(r); }

inline rational rational_from_json(const json& j, bool strict = false) {
    if (j.is_number_integer())
        return rational(j.get<long long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>(), strict);
    throw input_error("expected a rational as a \"p/q\" string, got: " + j.dump());
}

inline json rvec_to_json(const rvec& v) {
    json arr = json::array();
    for (const rational& x : v) arr.push_back(rational_to_json(x));
    return arr;
}

inline rvec rvec_from_json(const json& j, bool strict = false) {
    if (!j.is_array()) throw input_error("expected an array of rationals");
    rvec v;
    v.reserve(j.size());
    for (const json& e : j) v.push_back(rational_from_json(e, strict));
    return v;
}

// ---- games ----

inline json game_to_json(const DiscountedGame& g) {
    json out;
    out["discount"] = rational_to_json(g.discount);
    json verts = json::array();
    for (std::size_t u = 0; u < g.owner.size(); ++u) {
        json v;
        v["owner"] = g.owner[u] == Player::Max ? "max" : "min";
        json edges = json::array();
        for (const Edge& e : g.edges[u]) {
            json je;
            je["to"] = e.to;
            je["reward"] = rational_to_json(e.reward);
            edges.push_back(je);
        }
        v["edges"] = edges;
        verts.push_back(v);
    }
    out["vertices"] = verts;
    return out;
}

inline DiscountedGame game_from_json(const json& j, bool strict = false) {
    if (!j.is_object() || !j.contains("discount") || !j.contains("vertices"))
        throw input_error("game file needs \"discount\" and \"vertices\"");
    DiscountedGame g;
    g.discount = rational_from_json(j.at("discount"), strict);
    const json& verts = j.at("vertices");
    if (!verts.is_array() || verts.empty())
        throw input_error("\"vertices\" must be a nonempty array");
    for (const json& v : verts) {
        if (!v.is_object() || !v.contains("owner") || !v.contains("edges"))
            throw input_error("each vertex needs \"owner\" and \"edges\"");
        std::string owner = v.at("owner").get<std::string>();
        if (owner == "max") g.owner.push_back(Player::Max);
        else if (owner == "min") g.owner.push_back(Player::Min);
        else throw input_error("owner must be \"max\" or \"min\", got \"" + owner + "\"");
        std::vector<Edge> edges;
        for (const json& e : v.at("edges")) {
            if (!e.is_object() || !e.contains("to") || !e.contains("reward"))
                throw input_error("each edge needs \"to\" and \"reward\"");
            if (!e.at("to").is_number_integer())
                throw input_error("edge \"to\" must be an integer");
            edges.push_back(Edge{e.at("to").get<int>(),
                                 rational_from_json(e.at("reward"), strict)});
        }
        g.edges.push_back(std::move(edges));
    }
    require_valid(g);
    return g;
}

// ---- LCPs ----

inline json lcp_to_json(const LCPInstance& lcp) {
    json out;
    json M = json::array();
    for (const rvec& row : lcp.M) M.push_back(rvec_to_json(row));
    out["M"] = M;
    out["q"] = rvec_to_json(lcp.q);
    return out;
}

inline LCPInstance lcp_from_json(const json& j, bool strict = false) {
    if (!j.is_object() || !j.contains("M") || !j.contains("q"))
        throw input_error("LCP file needs \"M\" and \"q\"");
    LCPInstance lcp;
    const json& M = j.at("M");
    if (!M.is_array()) throw input_error("\"M\" must be an array of rows");
    for (const json& row : M) lcp.M.push_back(rvec_from_json(row, strict));
    lcp.q = rvec_from_json(j.at("q"), strict);
    require_well_formed(lcp);
    return lcp;
}

// ---- solutions and traces ----

inline json solution_to_json(const LCPSolution& sol) {
    json out;
    out["w"] = rvec_to_json(sol.w);
    out["z"] = rvec_to_json(sol.z);
    return out;
}

inline LCPSolution solution_from_json(const json& j, bool strict = false) {
    if (!j.is_object() || !j.contains("w") || !j.contains("z"))
        throw input_error("solution file needs \"w\" and \"z\"");
    LCPSolution sol;
    sol.w = rvec_from_json(j.at("w"), strict);
    sol.z = rvec_from_json(j.at("z"), strict);
    return sol;
}

inline json trace_to_json(const PivotTrace& trace, std::size_t n) {
    json out;
    out["outcome"] = outcome_name(trace.outcome);
    out["pivots"] = trace.pivot_count();
    out["major_cycles"] = trace.major_cycles;
    json events = json::array();
    for (const PivotEvent& ev : trace.events) {
        json e;
        e["enter"] = label_name(ev.entering, n);
        e["leave"] = label_name(ev.leaving, n);
        events.push_back(e);
    }
    out["events"] = events;
    return out;
}

// ---- ordering and covering files ----

// On disk orderings are 1-based, matching the math; in memory 0-based.
inline json ordering_to_json(const std::vector<int>& order0) {
    json arr = json::array();
    for (int k : order0) arr.push_back(k + 1);
    return arr;
}

inline std::vector<int> ordering_from_json(const json& j) {
    if (!j.is_array()) throw input_error("ordering file must be a JSON array");
    std::vector<int> order0;
    order0.reserve(j.size());
    for (const json& e : j) {
        if (!e.is_number_integer())
            throw input_error("ordering entries must be integers");
        order0.push_back(e.get<int>() - 1);
    }
    return order0;
}

// ---- parsing and files ----

inline json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(what + ": " + e.what());
    }
}

inline bool json_looks_like_game(const json& j) {
    return j.is_object() && j.contains("vertices");
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write " + path);
    out << content;
    if (!out) throw input_error("write failed on " + path);
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace dglcp
