// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fflv/serialize.hpp"

#include <stdexcept>

namespace fflv {

void to_json(nlohmann::json& j, const HPolytope& p) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : p.rows) rows.push_back({{"a", r.coeffs}, {"b", r.rhs}});
    j = {{"dim", p.dim}, {"nonneg", p.implicit_nonneg}, {"rows", rows}};
}

void from_json(const nlohmann::json& j, HPolytope& p) {
    p.dim = j.at("dim").get<int>();
    p.implicit_nonneg = j.at("nonneg").get<bool>();
    p.rows.clear();
    for (const auto& r : j.at("rows")) {
        Inequality row{r.at("a").get<std::vector<int>>(), r.at("b").get<std::int64_t>()};
        if (static_cast<int>(row.coeffs.size()) != p.dim) throw std::invalid_argument("HPolytope json: row length");
        p.rows.push_back(std::move(row));
    }
}

void to_json(nlohmann::json& j, const PointSet& s) { j = {{"dim", s.dim()}, {"points", s.points()}}; }

void from_json(const nlohmann::json& j, PointSet& s) {
    s = PointSet(j.at("dim").get<int>(), j.at("points").get<std::vector<LatticePoint>>());
}

void to_json(nlohmann::json& j, const CrystalGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [src, a, tgt] : g.edge_points()) edges.push_back({{"source", src}, {"color", a}, {"target", tgt}});
    j = {{"n", g.rank()}, {"lambda", g.lambda().coeffs()}, {"vertices", g.vertices()}, {"edges", edges}};
}

void from_json(const nlohmann::json& j, CrystalGraph& g) {
    g = CrystalGraph(j.at("n").get<int>(), Weight(j.at("lambda").get<std::vector<int>>()),
                     j.at("vertices").get<PointSet>());
    for (const auto& e : j.at("edges"))
        g.add_edge(e.at("source").get<LatticePoint>(), e.at("color").get<int>(), e.at("target").get<LatticePoint>());
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
    j = {{"claim", r.claim}, {"params", r.params}, {"pass", r.pass}, {"stats", r.stats}, {"seconds", r.seconds}};
    if (!r.pass) j["witness"] = r.witness;
}

}  // namespace fflv
