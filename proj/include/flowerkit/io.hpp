#pragma once

// JSON report builders and the run manifest. Every CLI invocation embeds a manifest so
// a report can be reproduced from the report alone: the subcommand, its parameters, the
// tool version, a digest of file inputs, and the list of files written. Reports carry
// no timestamps and serialize maps in insertion order, so identical invocations produce
// byte-identical output.

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "flowerkit/diversity.hpp"
#include "flowerkit/flower.hpp"
#include "flowerkit/ratlp.hpp"
#include "flowerkit/search.hpp"

namespace flowerkit {

using Json = nlohmann::ordered_json;

/// FNV-1a 64-bit digest, rendered as 16 lowercase hex digits.
inline std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digit = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digit[h & 15];
        h >>= 4;
    }
    return out;
}

/// Reads a whole file; fails with parse_error if it cannot be opened.
inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::parse_error, "cannot write file: " + path);
    out << bytes;
}

inline constexpr const char* tool_version = "0.1.0";

/// Reproducibility record embedded in every report.
struct RunManifest {
    std::string command;               ///< subcommand path, e.g. "verify folklore"
    Json parameters = Json::object();  ///< the effective parameter values
    std::string input_digest = "none"; ///< fnv1a64 of file inputs, "none" without any
    std::vector<std::string> outputs;  ///< files written besides stdout
};

inline Json manifest_json(const RunManifest& m) {
    Json j = Json::object();
    j["command"] = m.command;
    j["parameters"] = m.parameters;
    j["tool_version"] = tool_version;
    j["input_digest"] = m.input_digest;
    j["outputs"] = m.outputs;
    return j;
}

inline std::string rational_text(const Rational& x) { return format_rational(x); }

inline std::string int_text(const Int& x) { return x.str(); }

inline Json vertex_set_json(const VertexSet& s) {
    Json arr = Json::array();
    for (int v : s.vertices()) arr.push_back(v);
    return arr;
}

/// Family echo without the edge list, for reports whose input lives in a file.
inline Json family_header_json(const SetFamily& f) {
    Json j = Json::object();
    j["n"] = f.n();
    j["r"] = f.r();
    j["size"] = f.size();
    return j;
}

inline Json family_json(const SetFamily& f) {
    Json j = Json::object();
    j["n"] = f.n();
    j["r"] = f.r();
    j["size"] = f.size();
    Json edges = Json::array();
    for (const auto& e : f.edges()) edges.push_back(vertex_set_json(e));
    j["edges"] = edges;
    return j;
}

inline Json diversity_report_json(const DiversityReport& rep) {
    Json j = Json::object();
    j["size"] = rep.size;
    j["max_degree"] = rep.max_degree;
    j["argmax_vertex"] = rep.argmax;
    j["C"] = rational_text(rep.C);
    j["value"] = rational_text(rep.value);
    return j;
}

inline Json two_out_of_three_json(const std::optional<TwoOutOfThreeDistance>& d) {
    Json j = Json::object();
    if (!d) {
        j["defined"] = false;
        return j;
    }
    j["defined"] = true;
    j["triple"] = vertex_set_json(d->triple);
    j["additions"] = int_text(d->additions);
    return j;
}

inline Json flower_base_json(const FlowerBase& base) {
    Json j = Json::object();
    j["alpha"] = base.alpha;
    j["size"] = static_cast<long long>(base.members.size());
    Json members = Json::array();
    for (const auto& m : base.members) {
        Json one = Json::object();
        one["set"] = vertex_set_json(m.set);
        one["origin"] = m.origin == FlowerBaseMember::Origin::edge ? "edge" : "core";
        members.push_back(one);
    }
    j["members"] = members;
    return j;
}

inline Json inheritance_json(const InheritanceReport& rep) {
    Json j = Json::object();
    j["sperner"] = rep.sperner;
    j["transversal_members"] = rep.transversal_members;
    j["tau_preserved"] = rep.tau_preserved;
    j["size_bound"] = rep.size_bound;
    j["tau_family"] = rep.tau_family;
    j["tau_base"] = rep.tau_base;
    j["base_size"] = rep.base_size;
    j["size_limit"] = int_text(rep.size_limit);
    j["pass"] = rep.pass;
    return j;
}

inline Json cardinality_bounds_json(const BaseCardinalityBounds& b) {
    Json j = Json::object();
    j["bound3"] = int_text(b.bound3);
    j["bound5"] = int_text(b.bound5);
    return j;
}

inline Json search_result_json(const SearchResult& res) {
    Json j = Json::object();
    j["best_value"] = rational_text(res.best_value);
    j["witness"] = family_json(res.witness);
    j["nodes_explored"] = res.nodes_explored;
    j["exhaustive"] = res.exhaustive;
    if (!res.exhaustive) j["seed"] = res.seed;
    return j;
}

inline Json enumeration_report_json(const EnumerationReport& rep) {
    Json j = Json::object();
    j["count"] = rep.count;
    j["max_edges"] = rep.max_edges;
    j["max_span"] = rep.max_span;
    j["witnesses"] = rep.witnesses;
    return j;
}

inline Json lp_outcome_json(const LpOutcome& out) {
    Json j = Json::object();
    switch (out.status) {
    case LpStatus::optimal: j["status"] = "optimal"; break;
    case LpStatus::infeasible: j["status"] = "infeasible"; break;
    case LpStatus::unbounded: j["status"] = "unbounded"; break;
    }
    if (out.status == LpStatus::optimal) {
        j["value"] = rational_text(out.value);
        Json sol = Json::array();
        for (const auto& x : out.solution) sol.push_back(rational_text(x));
        j["solution"] = sol;
        j["duality_verified"] = out.duality_verified;
    }
    return j;
}

inline Json baby_lemma_report_json(const BabyLemmaReport& rep) {
    Json j = Json::object();
    j["C"] = rational_text(rep.C);
    j["threshold"] = rational_text(rep.threshold);
    j["pass"] = rep.pass;
    j["families_checked"] = static_cast<long long>(rep.families.size());
    Json fams = Json::array();
    for (const auto& fr : rep.families) {
        Json one = Json::object();
        one["family"] = fr.family.to_text();
        one["is_fano"] = fr.is_fano;
        one["optimum"] = rational_text(fr.optimum);
        one["margin"] = rational_text(fr.margin);
        one["pass"] = fr.pass;
        fams.push_back(one);
    }
    j["families"] = fams;
    return j;
}

} // namespace flowerkit
