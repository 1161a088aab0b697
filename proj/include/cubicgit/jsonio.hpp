#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cubicgit/maximal.hpp"
#include "cubicgit/strata.hpp"
#include "cubicgit/verify.hpp"

namespace cubicgit {

using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    Json j;
    in >> j;
    return j;
}

inline std::vector<GoldenRow> load_golden_rows(const std::string& path, int n, int d) {
    Json j = load_json_file(path);
    std::vector<GoldenRow> rows;
    for (const auto& r : j.at("rows")) {
        GoldenRow g;
        g.label = r.at("label").get<std::string>();
        std::vector<long long> lam;
        for (const auto& v : r.at("lambda")) lam.push_back(v.get<long long>());
        g.lambda = OnePS(lam);
        std::vector<Exponent> gens;
        for (const auto& m : r.at("maximal_monomials"))
            gens.push_back(parse_polynomial(m.get<std::string>(), n).support().at(0));
        g.generators = MonomialSet(n, d, gens);
        if (r.contains("invariant")) g.invariant = r.at("invariant").get<std::string>();
        if (r.contains("reduces_to")) g.reduces_to = r.at("reduces_to").get<std::string>();
        rows.push_back(std::move(g));
    }
    return rows;
}

inline Json record_to_json(const MaximalSetRecord& r) {
    Json j;
    if (!r.label.empty()) j["label"] = r.label;
    j["witness"] = r.witness.a;
    Json gens = Json::array();
    for (const auto& m : r.generators.members) gens.push_back(m.str());
    j["maximal_monomials"] = gens;
    Json mem = Json::array();
    for (const auto& m : r.members.members) mem.push_back(m.str());
    j["members"] = mem;
    j["member_count"] = r.members.size();
    j["strict"] = r.strict;
    return j;
}

inline Json checks_to_json(const std::vector<CheckResult>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(j);
    }
    return arr;
}

/// Consistency of the built-in catalog with the shipped data file.
inline std::vector<CheckResult> verify_strata_file(const std::string& path) {
    std::vector<CheckResult> out;
    Json j;
    try {
        j = load_json_file(path);
    } catch (const std::exception& e) {
        out.push_back(check("strata data file readable", false, e.what()));
        return out;
    }
    bool entries_ok = j.at("strata").size() == strata_catalog().size();
    for (const auto& ent : j.at("strata")) {
        try {
            const StratumEntry& e = catalog_entry(ent.at("id").get<std::string>());
            if (ent.at("dim").get<int>() != e.dim) entries_ok = false;
            if (ent.at("stabilizer_dim").get<int>() != e.expected_stabilizer_dim) entries_ok = false;
            if (ent.contains("singular_locus") &&
                ent.at("singular_locus").get<std::string>() != e.singular_locus)
                entries_ok = false;
        } catch (const std::exception&) {
            entries_ok = false;
        }
    }
    out.push_back(check("strata data file matches the built-in catalog", entries_ok));

    auto edges = incidence_edges();
    bool edges_ok = j.at("edges").size() == edges.size();
    for (const auto& ej : j.at("edges")) {
        bool found = false;
        for (const auto& e : edges) {
            if (e.edge.from != ej.at("from").get<std::string>() || e.edge.to != ej.at("to").get<std::string>())
                continue;
            found = true;
            if (e.edge.kind != ej.at("kind").get<std::string>()) edges_ok = false;
            if (e.edge.kind == "limit") {
                std::vector<long long> lam;
                for (const auto& v : ej.at("lambda")) lam.push_back(v.get<long long>());
                if (lam != e.edge.lambda) edges_ok = false;
            }
            if (!e.verified) edges_ok = false;
        }
        if (!found) edges_ok = false;
    }
    out.push_back(check("recorded specialization edges re-verify", edges_ok));
    return out;
}

inline Json graph_to_json() {
    Json j;
    Json nodes = Json::array();
    for (const auto& e : strata_catalog()) {
        Json n;
        n["id"] = e.id;
        n["dim"] = e.dim;
        n["stabilizer_dim"] = e.expected_stabilizer_dim;
        nodes.push_back(n);
    }
    j["nodes"] = nodes;
    Json edges = Json::array();
    for (const auto& e : incidence_edges()) {
        Json ej;
        ej["from"] = e.edge.from;
        ej["to"] = e.edge.to;
        ej["kind"] = e.edge.kind;
        ej["verified"] = e.verified;
        ej["detail"] = e.edge.detail;
        if (!e.edge.lambda.empty()) ej["lambda"] = e.edge.lambda;
        edges.push_back(ej);
    }
    j["edges"] = edges;
    return j;
}

inline std::string graph_to_dot() {
    std::string s = "digraph incidence {\n  rankdir=TB;\n";
    for (const auto& e : strata_catalog())
        s += "  " + e.id + " [label=\"" + e.id + " (dim " + std::to_string(e.dim) + ")\"];\n";
    for (const auto& e : incidence_edges()) {
        s += "  " + e.edge.from + " -> " + e.edge.to + " [label=\"" + e.edge.kind + "\"" +
             (e.verified ? "" : ", color=red") + "];\n";
    }
    s += "}\n";
    return s;
}

}  // namespace cubicgit
