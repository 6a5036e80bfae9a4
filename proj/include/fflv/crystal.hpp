// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Coloured graphs on FFLV lattice points. Edges of colour a model a lowering
// operator f_a and always drop the content vector by e_a - e_{a+1}.
//
// A tensor-word crystal built by the signature rule serves as the reference
// object; graphs are judged by local axioms and by isomorphism with it.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fflv/polytope.hpp"
#include "fflv/roots.hpp"

namespace fflv {

/// Vertex indices refer to the sorted vertex PointSet of the owning graph.
struct CrystalEdge {
    int source = 0;
    int color = 1;
    int target = 0;

    auto operator<=>(const CrystalEdge&) const = default;
};

class CrystalGraph {
public:
    CrystalGraph() = default;
    /// Throws std::invalid_argument if vertex dimensions differ from the number of positive roots.
    CrystalGraph(int n, Weight lambda, PointSet vertices);

    int rank() const { return n_; }
    const Weight& lambda() const { return lambda_; }
    const PointSet& vertices() const { return vertices_; }
    const std::set<CrystalEdge>& edges() const { return edges_; }
    std::size_t num_edges() const { return edges_.size(); }

    /// Throws std::invalid_argument for unknown endpoints, a bad colour, or a weight mismatch.
    void add_edge(const LatticePoint& source, int color, const LatticePoint& target);
    void add_edge(int source, int color, int target);
    bool remove_edge(const CrystalEdge& e);

    std::vector<int> successors(int v, int color) const;
    std::vector<int> predecessors(int v, int color) const;

    /// Edges as (source point, colour, target point), sorted.
    std::vector<std::tuple<LatticePoint, int, LatticePoint>> edge_points() const;

    bool operator==(const CrystalGraph& other) const {
        return n_ == other.n_ && lambda_ == other.lambda_ && vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    Weight lambda_;
    PointSet vertices_;
    std::vector<std::vector<int>> weights_;  // content vector by vertex
    std::set<CrystalEdge> edges_;
};

enum class MoveKind {
    diagonal,  // +delta_{k,k}, colour a = k
    row,       // -delta_{a+1,j} + delta_{a,j}, colour a < k <= j
    column,    // -delta_{i,a-1} + delta_{i,a}, colour a > k >= i
};

struct CandidateEdge {
    LatticePoint source;
    int color = 1;
    int k = 1;
    MoveKind kind = MoveKind::diagonal;
    /// j for row moves, i for column moves, k for the diagonal move.
    int index = 1;
    LatticePoint target;
};

/// Feasible moves of f_{a,k} at x for every colour a and word index k.
/// Throws std::invalid_argument if x is not a lattice point of FFLV_n(lambda).
std::vector<CandidateEdge> candidate_edges(int n, const Weight& lambda, const LatticePoint& x);

/// Union of all candidate edges; several edges of one colour may leave a vertex.
CrystalGraph pb_graph(int n, const Weight& lambda);

/// Connected component of the highest word in the tensor power of the standard crystal.
class WordCrystal {
public:
    using Word = std::vector<int>;

    WordCrystal(int n, const Weight& lambda);

    int rank() const { return n_; }
    std::size_t size() const { return words_.size(); }
    /// Words in breadth-first order from the highest word (index 0).
    const std::vector<Word>& words() const { return words_; }
    /// Index of f_a(w) / e_a(w), or -1.
    int f(int color, int w) const { return f_[color - 1][w]; }
    int e(int color, int w) const { return e_[color - 1][w]; }
    /// Letter counts in Z^{n+1}.
    std::vector<int> weight(int w) const;
    int index_of(const Word& w) const;

    static bool lower(Word& w, int color);
    static bool raise(Word& w, int color);

private:
    int n_;
    std::vector<Word> words_;
    std::map<Word, int> index_;
    std::vector<std::vector<int>> f_;
    std::vector<std::vector<int>> e_;
};

WordCrystal word_oracle(int n, const Weight& lambda);

struct AxiomViolation {
    std::string axiom;
    LatticePoint witness;
    int color = 0;
    int other_color = 0;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Partial bijectivity, string acyclicity, weight compatibility, distant-colour commutation
/// and adjacent-colour string axioms. Stops collecting after max_violations entries.
AxiomReport check_local_axioms(const CrystalGraph& g, std::size_t max_violations = 16);
/// The same checks on the word crystal; witnesses are words.
AxiomReport check_local_axioms(const WordCrystal& c, std::size_t max_violations = 16);

struct IsoReport {
    bool iso = false;
    std::string detail;
    LatticePoint witness;

    explicit operator bool() const { return iso; }
};

/// Simultaneous traversal from the source of g and the highest word of word_oracle(lambda).
IsoReport check_oracle_iso(const CrystalGraph& g, const Weight& lambda);
IsoReport check_oracle_iso(const CrystalGraph& g, const WordCrystal& oracle);

/// sl_3 families on FFLV_2(a varpi_1 + b varpi_2); coordinates (x_{1,1}, x_{1,2}, x_{2,2}).
/// Throw std::logic_error if the path families fail to partition a colour.
CrystalGraph sl3_bgt(int a, int b);
CrystalGraph sl3_blt(int a, int b);

/// Lattice points of FFLV_2(a varpi_1 + b varpi_2) with x_{1,1} = x_{2,2}.
PointSet critical_points(int a, int b);

enum class SearchMode { greedy, exhaustive };

struct SearchResult {
    /// Graphs isomorphic to the reference crystal, sorted by edge set.
    std::vector<CrystalGraph> graphs;
    /// Greedy mode: the selected graph, valid or not.
    CrystalGraph greedy;
    bool greedy_valid = false;
    std::string greedy_failure;
    std::uint64_t nodes = 0;
    bool incomplete = false;
};

/// sigma lists the fundamental weights from most to least preferred (a permutation of [1, n]).
/// Throws std::invalid_argument if sigma is not a permutation.
SearchResult conjecture_search(int n, const Weight& lambda, const std::vector<int>& sigma, SearchMode mode,
                               std::uint64_t node_budget = 10'000'000);

/// Every graph built from f_{a,k} moves with k fixed that is isomorphic to the reference crystal.
SearchResult fixed_k_crystals(int n, const Weight& lambda, int k, std::uint64_t node_budget = 10'000'000);

/// Graphviz digraph; colour 1 red, 2 blue, 3 green, then cycling.
std::string crystal_dot(const CrystalGraph& g, const std::string& name = "crystal");

}  // namespace fflv
