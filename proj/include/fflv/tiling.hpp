// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Rhombic tilings of the 2m-gon attached to reduced words, and the inequality
// description of Lusztig polytopes read off from dual Reineke crossings.
//
// The tiling is stored combinatorially. Edges carry a label in [1, m]; a
// border is a path of edge ids listed from the bottom vertex v0 upwards.
// The left boundary is the initial border (labels 1..m), the right boundary
// the final one (labels m..1). Boundary edges b_1..b_{2m} run clockwise from
// v0: b_1..b_m up the left side, b_{m+1}..b_{2m} down the right side.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "fflv/polytope.hpp"
#include "fflv/roots.hpp"

namespace fflv {

struct TileEdge {
    int id = 0;
    int label = 0;
    /// Incident tiles; -1 where the edge lies on the polygon boundary.
    std::array<int, 2> tiles{-1, -1};
};

struct Tile {
    int id = 0;
    int low = 0;   // smaller label
    int high = 0;  // larger label
    /// Edges consumed from the border, bottom to top (labels low, high).
    std::array<int, 2> lower_edges{};
    /// Edges created, bottom to top (labels high, low).
    std::array<int, 2> upper_edges{};

    /// Tile [a, b] corresponds to alpha_{a, b-1}.
    Root root() const { return {low, high - 1}; }
    bool has_label(int t) const { return low == t || high == t; }
    int other_label(int t) const { return t == low ? high : low; }
};

class Tiling {
public:
    /// Throws std::logic_error if two labels that must be swapped are not adjacent in the border.
    static Tiling build(const ReducedWord& w);

    int m() const { return m_; }
    int rank() const { return m_ - 1; }
    const ReducedWord& word() const { return word_; }
    const std::vector<Tile>& tiles() const { return tiles_; }
    const std::vector<TileEdge>& edges() const { return edges_; }
    const Tile& tile(int id) const { return tiles_.at(id); }
    int edge_label(int edge) const { return edges_.at(edge).label; }

    /// B^(0) .. B^(N), the borders before and after each tile was attached.
    const std::vector<std::vector<int>>& construction_borders() const { return borders_; }
    const std::vector<int>& left_boundary() const { return borders_.front(); }
    const std::vector<int>& right_boundary() const { return borders_.back(); }

    /// b_1 .. b_{2m}
    std::vector<int> boundary_cycle() const;

    /// Tile with labels {a, b}; throws std::out_of_range if there is none.
    int tile_with_labels(int a, int b) const;
    /// Tiles sharing an edge with `tile`, sorted.
    std::vector<int> neighbours(int tile) const;
    /// Edge shared by two tiles, or -1.
    int shared_edge(int t1, int t2) const;
    /// The edge of `tile` parallel to `edge`.
    int opposite_edge(int tile, int edge) const;

private:
    explicit Tiling(ReducedWord w) : word_(std::move(w)) {}

    int m_ = 0;
    ReducedWord word_;
    std::vector<Tile> tiles_;
    std::vector<TileEdge> edges_;
    std::vector<std::vector<int>> borders_;
    std::vector<int> tile_by_pair_;  // (a-1)*m + (b-1) -> tile id
};

/// Tiles carrying label t, ordered from the left boundary.
struct Strip {
    int label = 0;
    std::vector<int> tiles;
};

/// Throws std::logic_error if consecutive tiles do not share a t-labelled edge.
Strip strip(const Tiling& t, int label);

struct PeelOrder {
    int index = 0;                             // s, reduced into [1, 2m]
    std::vector<int> layer;                    // by tile id, 1-based
    int depth = 0;                             // number of layers
    std::vector<std::vector<int>> borders;     // B_1, B_2, ..., last one after all tiles are peeled
};

/// Layers of the partial order preceq_s, peeling from the border b_{m+s+1} .. b_{2m+s}.
/// Throws std::logic_error if peeling stalls.
PeelOrder peel_order(const Tiling& t, int s);

struct DualCrossing {
    int s = 0;
    std::vector<int> tiles;
    /// Label of the edge crossed between consecutive tiles, with s prepended and s+1 appended.
    std::vector<int> moves;
    std::vector<int> strip_sequence;
};

/// All (m+s)-ascending neighbour sequences from the last tile of strip s to the last tile of strip s+1.
std::vector<DualCrossing> dual_crossings(const Tiling& t, int s);

bool is_dual_reineke(const Tiling& t, const DualCrossing& gamma);
std::vector<DualCrossing> reineke_filter(const Tiling& t, std::vector<DualCrossing> crossings);

/// +1 if T = [a, b] with a <= s < s+1 <= b, else -1.
int epsilon(const Tile& tile, int s);

/// r(gamma) by tile id: sgn(s_{i+1} - s_i) on the turning tile [s_i, s_{i+1}], 0 elsewhere.
std::vector<int> turning_signs(const Tiling& t, const DualCrossing& gamma);

/// Coefficients of s(gamma) in canonical root order.
std::vector<int> crossing_functional(const Tiling& t, const DualCrossing& gamma);

/// x >= 0 and s(gamma)(x) <= lambda_s for every dual Reineke s-crossing, s in [1, n].
HPolytope lusztig_hrep(const ReducedWord& w, const Weight& lambda);
HPolytope lusztig_hrep(const Tiling& t, const Weight& lambda);

struct LusztigEnumeration {
    PointSet points;
    int box_bound = 0;
    int escalations = 0;
    /// Count equals the Weyl dimension and no coordinate is pinned at an uncapped bound.
    bool consistent = false;
};

/// Lattice points of the Lusztig polytope. Starts from box sum(lambda) and doubles the box
/// while the count disagrees with weyl_dim or the bound warning fires (at most max_escalations times).
LusztigEnumeration lusztig_points(const Tiling& t, const Weight& lambda, int max_escalations = 3);
LusztigEnumeration lusztig_points(const ReducedWord& w, const Weight& lambda, int max_escalations = 3);

/// Every lattice point of the Lusztig polytope for (ik_word(n,k), r varpi_k) vanishes on roots
/// alpha_{i,j} with k outside [i, j]; those roots are exactly the enumeration entries past k(n-k+1).
bool check_lemma_A(int n, int k, int r);

/// JSON description: tiles with label pairs, strip membership and peel layers.
std::string tiling_json(const Tiling& t, int indent = 2);

/// Drawing of the tiling with generators on the upper half circle.
std::string tiling_svg(const Tiling& t);

}  // namespace fflv
