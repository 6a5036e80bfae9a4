// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fflv/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fflv/fflv.hpp"

namespace fflv {

namespace {

int mod1(int x, int period) { return ((x - 1) % period + period) % period + 1; }

int sgn(int v) { return (v > 0) - (v < 0); }

}  // namespace

Tiling Tiling::build(const ReducedWord& w) {
    Tiling t(w);
    const int m = w.rank() + 1;
    t.m_ = m;
    t.tile_by_pair_.assign(static_cast<std::size_t>(m) * m, -1);

    std::vector<int> border;
    for (int label = 1; label <= m; ++label) {
        t.edges_.push_back({static_cast<int>(t.edges_.size()), label, {-1, -1}});
        border.push_back(t.edges_.back().id);
    }
    t.borders_.push_back(border);

    auto attach = [&](int edge, int tile) {
        auto& slots = t.edges_[edge].tiles;
        if (slots[0] < 0)
            slots[0] = tile;
        else if (slots[1] < 0)
            slots[1] = tile;
        else
            throw std::logic_error("edge bounds more than two tiles");
    };

    for (const Root& beta : root_enumeration(w)) {
        const int lo = beta.i;
        const int hi = beta.j + 1;
        auto find_label = [&](int label) {
            for (std::size_t q = 0; q < border.size(); ++q)
                if (t.edges_[border[q]].label == label) return static_cast<int>(q);
            throw std::logic_error("border lost label " + std::to_string(label));
        };
        const int q = find_label(lo);
        if (q + 1 >= static_cast<int>(border.size()) || t.edges_[border[q + 1]].label != hi)
            throw std::logic_error("labels " + std::to_string(lo) + " and " + std::to_string(hi) +
                                   " are not adjacent in the current border; enumeration inconsistent");

        Tile tile;
        tile.id = static_cast<int>(t.tiles_.size());
        tile.low = lo;
        tile.high = hi;
        tile.lower_edges = {border[q], border[q + 1]};
        const int up_hi = static_cast<int>(t.edges_.size());
        t.edges_.push_back({up_hi, hi, {-1, -1}});
        const int up_lo = static_cast<int>(t.edges_.size());
        t.edges_.push_back({up_lo, lo, {-1, -1}});
        tile.upper_edges = {up_hi, up_lo};
        for (int e : tile.lower_edges) attach(e, tile.id);
        for (int e : tile.upper_edges) attach(e, tile.id);

        border[q] = up_hi;
        border[q + 1] = up_lo;
        t.borders_.push_back(border);
        t.tile_by_pair_[(lo - 1) * m + (hi - 1)] = tile.id;
        t.tiles_.push_back(tile);
    }
    return t;
}

std::vector<int> Tiling::boundary_cycle() const {
    std::vector<int> cycle = left_boundary();
    cycle.insert(cycle.end(), right_boundary().rbegin(), right_boundary().rend());
    return cycle;
}

int Tiling::tile_with_labels(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > m_ || a == b) throw std::out_of_range("tile_with_labels: bad label pair");
    int id = tile_by_pair_[(a - 1) * m_ + (b - 1)];
    if (id < 0) throw std::out_of_range("tile_with_labels: no tile");
    return id;
}

std::vector<int> Tiling::neighbours(int tile) const {
    std::vector<int> out;
    const Tile& tl = tiles_.at(tile);
    for (const auto& group : {tl.lower_edges, tl.upper_edges})
        for (int e : group)
            for (int other : edges_[e].tiles)
                if (other >= 0 && other != tile) out.push_back(other);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int Tiling::shared_edge(int t1, int t2) const {
    const Tile& a = tiles_.at(t1);
    for (const auto& group : {a.lower_edges, a.upper_edges})
        for (int e : group) {
            const auto& slots = edges_[e].tiles;
            if ((slots[0] == t1 && slots[1] == t2) || (slots[0] == t2 && slots[1] == t1)) return e;
        }
    return -1;
}

int Tiling::opposite_edge(int tile, int edge) const {
    const Tile& tl = tiles_.at(tile);
    if (edge == tl.lower_edges[0]) return tl.upper_edges[1];
    if (edge == tl.lower_edges[1]) return tl.upper_edges[0];
    if (edge == tl.upper_edges[0]) return tl.lower_edges[1];
    if (edge == tl.upper_edges[1]) return tl.lower_edges[0];
    throw std::invalid_argument("opposite_edge: edge not on tile");
}

Strip strip(const Tiling& t, int label) {
    if (label < 1 || label > t.m()) throw std::out_of_range("strip: label outside [1, m]");
    Strip s{label, {}};
    // A tile is attached to the right of the label's current edge, so creation order runs left to right.
    for (const Tile& tile : t.tiles())
        if (tile.has_label(label)) s.tiles.push_back(tile.id);
    if (static_cast<int>(s.tiles.size()) != t.m() - 1)
        throw std::logic_error("strip " + std::to_string(label) + " has wrong length");
    const int first_edge = t.left_boundary()[label - 1];
    const auto& first = t.tile(s.tiles.front()).lower_edges;
    if (first[0] != first_edge && first[1] != first_edge)
        throw std::logic_error("strip " + std::to_string(label) + " does not start at the left boundary");
    for (std::size_t k = 0; k + 1 < s.tiles.size(); ++k) {
        int e = t.shared_edge(s.tiles[k], s.tiles[k + 1]);
        if (e < 0 || t.edge_label(e) != label)
            throw std::logic_error("strip " + std::to_string(label) + " is not chained by its label");
    }
    return s;
}

PeelOrder peel_order(const Tiling& t, int s) {
    const int m = t.m();
    PeelOrder po;
    po.index = mod1(s, 2 * m);
    po.layer.assign(t.tiles().size(), 0);

    const std::vector<int> cycle = t.boundary_cycle();
    std::vector<int> border;
    for (int k = m + po.index + 1; k <= 2 * m + po.index; ++k) border.push_back(cycle[mod1(k, 2 * m) - 1]);
    po.borders.push_back(border);

    std::size_t assigned = 0;
    while (assigned < t.tiles().size()) {
        std::vector<int> pos(t.edges().size(), -1);
        for (std::size_t q = 0; q < border.size(); ++q) pos[border[q]] = static_cast<int>(q);

        std::vector<std::pair<int, int>> peel;  // (border position of the lower of the two edges, tile)
        for (const Tile& tile : t.tiles()) {
            if (po.layer[tile.id] != 0) continue;
            std::vector<int> hits;
            for (const auto& group : {tile.lower_edges, tile.upper_edges})
                for (int e : group)
                    if (pos[e] >= 0) hits.push_back(pos[e]);
            if (hits.size() < 2) continue;
            std::sort(hits.begin(), hits.end());
            if (hits.size() > 2 || hits[1] != hits[0] + 1)
                throw std::logic_error("tile meets the border in non-consecutive edges");
            peel.emplace_back(hits[0], tile.id);
        }
        if (peel.empty())
            throw std::logic_error("peeling stalls at layer " + std::to_string(po.depth + 1) + " for s=" +
                                   std::to_string(po.index));
        ++po.depth;
        for (auto [q, id] : peel) {
            po.layer[id] = po.depth;
            const int x = border[q];
            const int y = border[q + 1];
            border[q] = t.opposite_edge(id, y);
            border[q + 1] = t.opposite_edge(id, x);
            ++assigned;
        }
        po.borders.push_back(border);
    }
    return po;
}

namespace {

void crossing_dfs(const Tiling& t, const PeelOrder& po, int end, std::vector<int>& path,
                  std::vector<std::vector<int>>& out) {
    const int cur = path.back();
    if (cur == end) {
        out.push_back(path);
        return;
    }
    for (int nb : t.neighbours(cur)) {
        if (po.layer[nb] <= po.layer[cur]) continue;
        path.push_back(nb);
        crossing_dfs(t, po, end, path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<DualCrossing> dual_crossings(const Tiling& t, int s) {
    const int m = t.m();
    if (s < 1 || s > m - 1) throw std::out_of_range("dual_crossings: s outside [1, n]");
    const PeelOrder po = peel_order(t, m + s);
    const int start = strip(t, s).tiles.back();
    const int end = strip(t, s + 1).tiles.back();

    std::vector<std::vector<int>> paths;
    std::vector<int> path{start};
    crossing_dfs(t, po, end, path, paths);

    std::vector<DualCrossing> out;
    for (auto& tiles : paths) {
        DualCrossing g;
        g.s = s;
        g.moves.push_back(s);
        for (std::size_t k = 0; k + 1 < tiles.size(); ++k) g.moves.push_back(t.edge_label(t.shared_edge(tiles[k], tiles[k + 1])));
        g.moves.push_back(s + 1);
        for (int label : g.moves)
            if (g.strip_sequence.empty() || g.strip_sequence.back() != label) g.strip_sequence.push_back(label);
        g.tiles = std::move(tiles);
        out.push_back(std::move(g));
    }
    return out;
}

bool is_dual_reineke(const Tiling& t, const DualCrossing& gamma) {
    const int s = gamma.s;
    const auto p = gamma.tiles.size();
    for (std::size_t i = 1; i + 1 < p; ++i) {
        // Tile i is entered through moves[i] and left through moves[i+1].
        const int a = gamma.moves[i];
        if (gamma.moves[i + 1] != a) continue;
        const int b = t.tile(gamma.tiles[i]).other_label(a);
        if (b <= s && !(a > b)) return false;
        if (b >= s + 1 && !(a < b)) return false;
    }
    return true;
}

std::vector<DualCrossing> reineke_filter(const Tiling& t, std::vector<DualCrossing> crossings) {
    std::erase_if(crossings, [&](const DualCrossing& g) { return !is_dual_reineke(t, g); });
    return crossings;
}

int epsilon(const Tile& tile, int s) { return (tile.low <= s && s + 1 <= tile.high) ? 1 : -1; }

std::vector<int> turning_signs(const Tiling& t, const DualCrossing& gamma) {
    std::vector<int> r(t.tiles().size(), 0);
    for (std::size_t i = 0; i < gamma.tiles.size(); ++i) {
        const int in = gamma.moves[i];
        const int out = gamma.moves[i + 1];
        if (in != out) r[gamma.tiles[i]] = sgn(out - in);
    }
    return r;
}

std::vector<int> crossing_functional(const Tiling& t, const DualCrossing& gamma) {
    const int n = t.rank();
    const std::vector<int> r = turning_signs(t, gamma);
    std::vector<int> coeffs(num_positive_roots(n), 0);
    for (int id : gamma.tiles) {
        const Tile& tile = t.tile(id);
        const int idx = root_index(n, tile.root());
        if (epsilon(tile, gamma.s) == 1)
            coeffs[idx] = 1;
        else if (r[id] == 0)
            coeffs[idx] = -1;
    }
    return coeffs;
}

HPolytope lusztig_hrep(const Tiling& t, const Weight& lambda) {
    const int n = t.rank();
    if (lambda.rank() != n) throw std::invalid_argument("lusztig_hrep: weight rank differs from word rank");
    std::map<std::vector<int>, std::int64_t> tightest;
    for (int s = 1; s <= n; ++s)
        for (const DualCrossing& g : reineke_filter(t, dual_crossings(t, s))) {
            std::vector<int> coeffs = crossing_functional(t, g);
            if (std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; })) continue;
            auto [it, fresh] = tightest.emplace(std::move(coeffs), lambda[s]);
            if (!fresh) it->second = std::min<std::int64_t>(it->second, lambda[s]);
        }
    HPolytope p;
    p.dim = num_positive_roots(n);
    p.implicit_nonneg = true;
    for (auto& [coeffs, rhs] : tightest) p.rows.push_back({coeffs, rhs});
    return p;
}

HPolytope lusztig_hrep(const ReducedWord& w, const Weight& lambda) { return lusztig_hrep(Tiling::build(w), lambda); }

LusztigEnumeration lusztig_points(const Tiling& t, const Weight& lambda, int max_escalations) {
    const HPolytope p = lusztig_hrep(t, lambda);
    const auto expected = static_cast<std::size_t>(weyl_dim(lambda));
    LusztigEnumeration out;
    int box = lambda.total();
    for (int attempt = 0;; ++attempt) {
        Enumeration e = enumerate_lattice_points(p, box);
        out.points = std::move(e.points);
        out.box_bound = box;
        out.escalations = attempt;
        out.consistent = out.points.size() == expected && !e.bound_warning();
        if (out.consistent || attempt >= max_escalations) break;
        box = std::max(1, 2 * box);
    }
    return out;
}

LusztigEnumeration lusztig_points(const ReducedWord& w, const Weight& lambda, int max_escalations) {
    return lusztig_points(Tiling::build(w), lambda, max_escalations);
}

bool check_lemma_A(int n, int k, int r) {
    const ReducedWord w = ik_word(n, k);
    const auto roots = positive_roots(n);
    const auto beta = root_enumeration(w);
    const int head = k * (n - k + 1);
    for (int l = 0; l < static_cast<int>(beta.size()); ++l)
        if (beta[l].contains(k) != (l < head)) return false;

    const LusztigEnumeration e = lusztig_points(w, Weight::fundamental(n, k, r));
    if (!e.consistent) return false;
    for (const LatticePoint& x : e.points)
        for (std::size_t c = 0; c < roots.size(); ++c)
            if (!roots[c].contains(k) && x[c] != 0) return false;
    return true;
}

std::string tiling_json(const Tiling& t, int indent) {
    using nlohmann::json;
    const int m = t.m();
    std::vector<PeelOrder> peels;
    for (int s = 1; s <= 2 * m; ++s) peels.push_back(peel_order(t, s));
    std::vector<Strip> strips;
    for (int label = 1; label <= m; ++label) strips.push_back(strip(t, label));

    json j;
    j["n"] = t.rank();
    j["m"] = m;
    j["word"] = std::vector<int>(t.word().letters().begin(), t.word().letters().end());
    json tiles = json::array();
    for (const Tile& tile : t.tiles()) {
        json jt;
        jt["id"] = tile.id;
        jt["labels"] = {tile.low, tile.high};
        jt["root"] = {tile.root().i, tile.root().j};
        json where = json::object();
        for (int label : {tile.low, tile.high}) {
            const auto& ts = strips[label - 1].tiles;
            where[std::to_string(label)] = std::find(ts.begin(), ts.end(), tile.id) - ts.begin() + 1;
        }
        jt["strip_positions"] = where;
        json layers = json::array();
        for (const auto& po : peels) layers.push_back(po.layer[tile.id]);
        jt["peel_layers"] = layers;
        tiles.push_back(jt);
    }
    j["tiles"] = tiles;
    json js = json::array();
    for (const Strip& s : strips) js.push_back(s.tiles);
    j["strips"] = js;
    return j.dump(indent);
}

std::string tiling_svg(const Tiling& t) {
    const int m = t.m();
    struct Vec {
        double x, y;
    };
    std::vector<Vec> gen(m + 1);
    for (int label = 1; label <= m; ++label) {
        const double theta = std::numbers::pi * label / (m + 1);
        gen[label] = {-std::cos(theta) * 60.0, std::sin(theta) * 60.0};
    }
    // Vertex positions of the current border, bottom to top.
    std::vector<Vec> pos(m + 1, {0.0, 0.0});
    for (int q = 1; q <= m; ++q) {
        pos[q] = {pos[q - 1].x + gen[q].x, pos[q - 1].y + gen[q].y};
    }
    const double height = pos[m].y;
    double min_x = 0.0;
    double max_x = 0.0;
    std::vector<int> border_labels(m);
    for (int q = 0; q < m; ++q) border_labels[q] = q + 1;

    std::ostringstream body;
    body.setf(std::ios::fixed);
    body.precision(2);
    for (const Tile& tile : t.tiles()) {
        int q = 0;
        while (border_labels[q] != tile.low) ++q;
        const Vec p0 = pos[q];
        const Vec p1 = pos[q + 1];
        const Vec p2 = pos[q + 2];
        const Vec p3 = {p0.x + gen[tile.high].x, p0.y + gen[tile.high].y};
        pos[q + 1] = p3;
        std::swap(border_labels[q], border_labels[q + 1]);
        for (const Vec& v : {p0, p1, p2, p3}) {
            min_x = std::min(min_x, v.x);
            max_x = std::max(max_x, v.x);
        }
        auto sy = [&](double y) { return height - y; };
        body << "  <polygon points=\"" << p0.x << ',' << sy(p0.y) << ' ' << p1.x << ',' << sy(p1.y) << ' ' << p2.x
             << ',' << sy(p2.y) << ' ' << p3.x << ',' << sy(p3.y)
             << "\" fill=\"#f4f1e8\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
        const double cx = (p0.x + p2.x) / 2.0;
        const double cy = sy((p0.y + p2.y) / 2.0);
        body << "  <text x=\"" << cx << "\" y=\"" << cy
             << "\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">[" << tile.low << ','
             << tile.high << "]</text>\n";
    }
    std::ostringstream svg;
    svg.setf(std::ios::fixed);
    svg.precision(2);
    const double pad = 20.0;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << min_x - pad << ' ' << -pad << ' '
        << (max_x - min_x) + 2 * pad << ' ' << height + 2 * pad << "\">\n";
    svg << "  <title>rhombic tiling for " << t.word().to_string() << "</title>\n";
    svg << body.str() << "</svg>\n";
    return svg.str();
}

}  // namespace fflv
