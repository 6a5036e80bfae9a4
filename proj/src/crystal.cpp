// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fflv/crystal.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fflv/fflv.hpp"

namespace fflv {

namespace {

std::string point_label(const LatticePoint& x) {
    std::string s;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(x[k]);
    }
    return s;
}

// <wt, alpha_a^vee> for a content vector.
int pairing(const std::vector<int>& wt, int a) { return wt[a - 1] - wt[a]; }

std::vector<CandidateEdge> candidates_in(int n, const PointSet& inside, const LatticePoint& x) {
    std::vector<CandidateEdge> out;
    auto emit = [&](int a, int k, MoveKind kind, int index, LatticePoint y) {
        if (inside.contains(y)) out.push_back({x, a, k, kind, index, std::move(y)});
    };
    for (int a = 1; a <= n; ++a)
        for (int k = 1; k <= n; ++k) {
            if (a == k) {
                LatticePoint y = x;
                ++y[root_index(n, {k, k})];
                emit(a, k, MoveKind::diagonal, k, std::move(y));
            } else if (a < k) {
                for (int j = k; j <= n; ++j) {
                    const int from = root_index(n, {a + 1, j});
                    if (x[from] < 1) continue;
                    LatticePoint y = x;
                    --y[from];
                    ++y[root_index(n, {a, j})];
                    emit(a, k, MoveKind::row, j, std::move(y));
                }
            } else {
                for (int i = 1; i <= k; ++i) {
                    const int from = root_index(n, {i, a - 1});
                    if (x[from] < 1) continue;
                    LatticePoint y = x;
                    --y[from];
                    ++y[root_index(n, {i, a})];
                    emit(a, k, MoveKind::column, i, std::move(y));
                }
            }
        }
    return out;
}

// Unique successor/predecessor tables; -2 marks a vertex with several edges of that colour.
struct Arrows {
    std::vector<std::vector<int>> f, e;
};

Arrows arrows_of(const CrystalGraph& g) {
    const int n = g.rank();
    const int nv = static_cast<int>(g.vertices().size());
    Arrows ar{std::vector<std::vector<int>>(n, std::vector<int>(nv, -1)),
              std::vector<std::vector<int>>(n, std::vector<int>(nv, -1))};
    for (const CrystalEdge& ed : g.edges()) {
        int& out = ar.f[ed.color - 1][ed.source];
        out = out == -1 ? ed.target : -2;
        int& in = ar.e[ed.color - 1][ed.target];
        in = in == -1 ? ed.source : -2;
    }
    return ar;
}

}  // namespace

CrystalGraph::CrystalGraph(int n, Weight lambda, PointSet vertices)
    : n_(n), lambda_(std::move(lambda)), vertices_(std::move(vertices)) {
    if (lambda_.rank() != n) throw std::invalid_argument("CrystalGraph: weight rank differs from n");
    if (!vertices_.empty() && vertices_.dim() != num_positive_roots(n))
        throw std::invalid_argument("CrystalGraph: vertex dimension differs from the number of positive roots");
    weights_.reserve(vertices_.size());
    for (const auto& x : vertices_) weights_.push_back(weight_of_point(lambda_, x));
}

void CrystalGraph::add_edge(const LatticePoint& source, int color, const LatticePoint& target) {
    const int s = vertices_.index_of(source);
    const int t = vertices_.index_of(target);
    if (s < 0 || t < 0) throw std::invalid_argument("add_edge: endpoint is not a vertex");
    add_edge(s, color, t);
}

void CrystalGraph::add_edge(int source, int color, int target) {
    if (color < 1 || color > n_) throw std::invalid_argument("add_edge: colour outside [1, n]");
    const int nv = static_cast<int>(vertices_.size());
    if (source < 0 || source >= nv || target < 0 || target >= nv)
        throw std::invalid_argument("add_edge: vertex index out of range");
    std::vector<int> expect = weights_[source];
    --expect[color - 1];
    ++expect[color];
    if (expect != weights_[target])
        throw std::invalid_argument("add_edge: " + point_label(vertices_[source]) + " -> " +
                                    point_label(vertices_[target]) + " does not drop the weight by alpha_" +
                                    std::to_string(color));
    edges_.insert({source, color, target});
}

bool CrystalGraph::remove_edge(const CrystalEdge& e) { return edges_.erase(e) > 0; }

std::vector<int> CrystalGraph::successors(int v, int color) const {
    std::vector<int> out;
    for (auto it = edges_.lower_bound({v, color, 0}); it != edges_.end() && it->source == v && it->color == color; ++it)
        out.push_back(it->target);
    return out;
}

std::vector<int> CrystalGraph::predecessors(int v, int color) const {
    std::vector<int> out;
    for (const auto& e : edges_)
        if (e.target == v && e.color == color) out.push_back(e.source);
    return out;
}

std::vector<std::tuple<LatticePoint, int, LatticePoint>> CrystalGraph::edge_points() const {
    std::vector<std::tuple<LatticePoint, int, LatticePoint>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(vertices_[e.source], e.color, vertices_[e.target]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CandidateEdge> candidate_edges(int n, const Weight& lambda, const LatticePoint& x) {
    if (!contains(fflv_hrep(n, lambda), x))
        throw std::invalid_argument("candidate_edges: " + point_label(x) + " is not in the FFLV polytope");
    return candidates_in(n, fflv_points(lambda), x);
}

CrystalGraph pb_graph(int n, const Weight& lambda) {
    CrystalGraph g(n, lambda, fflv_points(lambda));
    for (const auto& x : g.vertices())
        for (const auto& c : candidates_in(n, g.vertices(), x)) g.add_edge(c.source, c.color, c.target);
    return g;
}

// ---------------------------------------------------------------------------
// Word crystal

bool WordCrystal::lower(Word& w, int color) {
    // Unmatched '+' positions form a suffix of the reduced signature; act on the leftmost.
    std::vector<int> plus;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p] == color)
            plus.push_back(static_cast<int>(p));
        else if (w[p] == color + 1 && !plus.empty())
            plus.pop_back();
    }
    // After cancellation every remaining '-' precedes every remaining '+'.
    if (plus.empty()) return false;
    w[plus.front()] = color + 1;
    return true;
}

bool WordCrystal::raise(Word& w, int color) {
    std::vector<int> plus;
    int rightmost_minus = -1;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (w[p] == color)
            plus.push_back(static_cast<int>(p));
        else if (w[p] == color + 1) {
            if (!plus.empty())
                plus.pop_back();
            else
                rightmost_minus = static_cast<int>(p);
        }
    }
    if (rightmost_minus < 0) return false;
    w[rightmost_minus] = color;
    return true;
}

WordCrystal::WordCrystal(int n, const Weight& lambda) : n_(n) {
    if (lambda.rank() != n) throw std::invalid_argument("WordCrystal: weight rank differs from n");
    Word top;
    for (int k = n; k >= 1; --k)
        for (int c = 0; c < lambda[k]; ++c)
            for (int letter = 1; letter <= k; ++letter) top.push_back(letter);

    words_.push_back(top);
    index_.emplace(top, 0);
    f_.assign(n, {});
    for (std::size_t w = 0; w < words_.size(); ++w)
        for (int a = 1; a <= n; ++a) {
            Word next = words_[w];
            int target = -1;
            if (lower(next, a)) {
                auto [it, fresh] = index_.emplace(next, static_cast<int>(words_.size()));
                if (fresh) words_.push_back(next);
                target = it->second;
            }
            f_[a - 1].push_back(target);
        }

    e_.assign(n, std::vector<int>(words_.size(), -1));
    for (int a = 1; a <= n; ++a)
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word prev = words_[w];
            if (!raise(prev, a)) continue;
            const int p = index_of(prev);
            if (p < 0 || f_[a - 1][p] != static_cast<int>(w))
                throw std::logic_error("WordCrystal: raising and lowering disagree");
            e_[a - 1][w] = p;
        }
}

std::vector<int> WordCrystal::weight(int w) const {
    std::vector<int> wt(n_ + 1, 0);
    for (int letter : words_.at(w)) ++wt[letter - 1];
    return wt;
}

int WordCrystal::index_of(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
}

WordCrystal word_oracle(int n, const Weight& lambda) { return WordCrystal(n, lambda); }

// ---------------------------------------------------------------------------
// Local axioms

namespace {

// Shared by graphs on lattice points and the word crystal: arrow tables, content weights, witness labels.
AxiomReport local_axioms(int n, const Arrows& ar, const std::vector<std::vector<int>>& wt,
                         const std::function<LatticePoint(int)>& label, std::size_t max_violations) {
    AxiomReport rep;
    const int nv = static_cast<int>(wt.size());
    auto report = [&](std::string axiom, int v, int a, int b, std::string detail) {
        if (rep.violations.size() < max_violations)
            rep.violations.push_back({std::move(axiom), label(v), a, b, std::move(detail)});
    };

    bool bijective = true;
    for (int a = 1; a <= n; ++a)
        for (int v = 0; v < nv; ++v) {
            if (ar.f[a - 1][v] == -2) report("partial-bijection", v, a, 0, "several outgoing edges"), bijective = false;
            if (ar.e[a - 1][v] == -2) report("partial-bijection", v, a, 0, "several incoming edges"), bijective = false;
        }
    if (!bijective) return rep;

    // String statistics; a walk longer than nv means a monochromatic cycle.
    std::vector<std::vector<int>> eps(n, std::vector<int>(nv, 0)), phi(n, std::vector<int>(nv, 0));
    for (int a = 1; a <= n; ++a)
        for (int v = 0; v < nv; ++v) {
            int d = 0;
            for (int u = ar.e[a - 1][v]; u >= 0 && d <= nv; u = ar.e[a - 1][u]) ++d;
            int h = 0;
            for (int u = ar.f[a - 1][v]; u >= 0 && h <= nv; u = ar.f[a - 1][u]) ++h;
            if (d > nv || h > nv) {
                report("acyclic", v, a, 0, "monochromatic cycle");
                return rep;
            }
            eps[a - 1][v] = d;
            phi[a - 1][v] = h;
        }

    for (int a = 1; a <= n; ++a)
        for (int v = 0; v < nv; ++v) {
            const int lhs = phi[a - 1][v] - eps[a - 1][v];
            if (lhs != pairing(wt[v], a))
                report("weight", v, a, 0,
                       "phi - eps = " + std::to_string(lhs) + " but <wt, alpha^vee> = " +
                           std::to_string(pairing(wt[v], a)));
        }

    auto E = [&](int a, int v) { return v < 0 ? -1 : ar.e[a - 1][v]; };
    auto F = [&](int a, int v) { return v < 0 ? -1 : ar.f[a - 1][v]; };

    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (a == b) continue;
            const bool distant = std::abs(a - b) >= 2;
            for (int v = 0; v < nv; ++v) {
                for (int dir = 0; dir < 2; ++dir) {
                    // dir 0: raising operators with (eps, phi); dir 1: lowering with (phi, eps).
                    auto op = [&](int c, int u) { return dir == 0 ? E(c, u) : F(c, u); };
                    const auto& near = dir == 0 ? eps : phi;
                    const auto& far = dir == 0 ? phi : eps;
                    const char* name = dir == 0 ? "e" : "f";
                    const int y = op(a, v);
                    if (y < 0) continue;
                    const int dn = near[b - 1][y] - near[b - 1][v];
                    const int df = far[b - 1][y] - far[b - 1][v];
                    if (distant) {
                        if (dn != 0 || df != 0)
                            report("distant-strings", v, a, b, std::string(name) + "_a changes the b-string");
                        const int z = op(b, v);
                        if (z >= 0 && op(b, y) != op(a, z))
                            report("distant-commute", v, a, b, std::string(name) + "_a and " + name + "_b do not commute");
                        continue;
                    }
                    if (!((dn == 1 && df == 0) || (dn == 0 && df == -1)))
                        report("adjacent-strings", v, a, b,
                               std::string(name) + "_a changes the b-string by (" + std::to_string(dn) + "," +
                                   std::to_string(df) + ")");
                    if (b < a) continue;  // the two-sided conditions are symmetric in (a, b)
                    const int z = op(b, v);
                    if (z < 0) continue;
                    const int dn2 = near[a - 1][z] - near[a - 1][v];
                    if (dn == 0 && dn2 == 0) {
                        const int l = op(a, z), r = op(b, y);
                        if (l < 0 || l != r)
                            report("adjacent-commute", v, a, b, std::string(name) + "_a " + name + "_b != " + name + "_b " + name + "_a");
                    } else if (dn == 1 && dn2 == 1) {
                        const int l = op(a, op(b, op(b, op(a, v))));
                        const int r = op(b, op(a, op(a, op(b, v))));
                        if (l < 0 || l != r)
                            report("adjacent-braid", v, a, b, "degree-four relation fails for " + std::string(name));
                    }
                }
            }
        }
    return rep;
}

}  // namespace

AxiomReport check_local_axioms(const CrystalGraph& g, std::size_t max_violations) {
    std::vector<std::vector<int>> wt;
    for (const auto& x : g.vertices()) wt.push_back(weight_of_point(g.lambda(), x));
    return local_axioms(g.rank(), arrows_of(g), wt, [&](int v) { return g.vertices()[v]; }, max_violations);
}

AxiomReport check_local_axioms(const WordCrystal& c, std::size_t max_violations) {
    const int nv = static_cast<int>(c.size());
    Arrows ar{std::vector<std::vector<int>>(c.rank(), std::vector<int>(nv)),
              std::vector<std::vector<int>>(c.rank(), std::vector<int>(nv))};
    std::vector<std::vector<int>> wt;
    for (int w = 0; w < nv; ++w) {
        wt.push_back(c.weight(w));
        for (int a = 1; a <= c.rank(); ++a) {
            ar.f[a - 1][w] = c.f(a, w);
            ar.e[a - 1][w] = c.e(a, w);
        }
    }
    return local_axioms(c.rank(), ar, wt, [&](int w) { return c.words()[w]; }, max_violations);
}

// ---------------------------------------------------------------------------
// Oracle isomorphism

IsoReport check_oracle_iso(const CrystalGraph& g, const Weight& lambda) {
    return check_oracle_iso(g, word_oracle(g.rank(), lambda));
}

IsoReport check_oracle_iso(const CrystalGraph& g, const WordCrystal& oracle) {
    IsoReport rep;
    const int n = g.rank();
    const int nv = static_cast<int>(g.vertices().size());
    if (static_cast<std::size_t>(nv) != oracle.size()) {
        rep.detail = "vertex count " + std::to_string(nv) + " differs from oracle size " + std::to_string(oracle.size());
        return rep;
    }
    const int source = g.vertices().index_of(LatticePoint(g.vertices().dim(), 0));
    if (source < 0) {
        rep.detail = "no highest-weight vertex";
        return rep;
    }
    Arrows ar = arrows_of(g);
    std::vector<int> to_word(nv, -1), to_vertex(oracle.size(), -1);
    std::deque<int> queue;
    auto fail = [&](int v, std::string why) {
        rep.iso = false;
        rep.detail = std::move(why);
        rep.witness = g.vertices()[v];
        return rep;
    };
    auto pair = [&](int v, int w) {
        if (to_word[v] == -1 && to_vertex[w] == -1) {
            to_word[v] = w;
            to_vertex[w] = v;
            queue.push_back(v);
            return true;
        }
        return to_word[v] == w && to_vertex[w] == v;
    };
    pair(source, 0);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        const int w = to_word[v];
        for (int a = 1; a <= n; ++a) {
            const int gv[2] = {ar.f[a - 1][v], ar.e[a - 1][v]};
            const int ow[2] = {oracle.f(a, w), oracle.e(a, w)};
            for (int d = 0; d < 2; ++d) {
                const char* op = d == 0 ? "f_" : "e_";
                if (gv[d] == -2) return fail(v, std::string("several ") + op + std::to_string(a) + " edges");
                if ((gv[d] < 0) != (ow[d] < 0))
                    return fail(v, std::string(op) + std::to_string(a) + (gv[d] < 0 ? " missing" : " unexpected"));
                if (gv[d] >= 0 && !pair(gv[d], ow[d]))
                    return fail(v, std::string(op) + std::to_string(a) + " target conflicts with the pairing");
            }
        }
    }
    for (int v = 0; v < nv; ++v)
        if (to_word[v] < 0) return fail(v, "vertex unreachable from the source");
    rep.iso = true;
    return rep;
}

// ---------------------------------------------------------------------------
// sl_3 families

namespace {

using V3 = std::array<int, 3>;
constexpr V3 E1{1, 0, 0}, E12{0, 1, 0}, E2{0, 0, 1};
constexpr V3 LOWER_E2{0, 1, -1};  // -e2 + e12
constexpr V3 LOWER_E1{-1, 1, 0};  // -e1 + e12

struct PathSpec {
    V3 start;
    std::vector<V3> moves;
};

void repeat(std::vector<V3>& moves, V3 step, int count) {
    for (int c = 0; c < count; ++c) moves.push_back(step);
}

V3 add(V3 p, V3 q, int t = 1) { return {p[0] + t * q[0], p[1] + t * q[1], p[2] + t * q[2]}; }

// Lays out the base paths and their translations by t * shift (t >= 1), keeping edges inside.
void lay_family(CrystalGraph& g, int color, const std::vector<PathSpec>& base, V3 shift, int reach,
                std::vector<int>& out_used, std::vector<int>& in_used) {
    const PointSet& pts = g.vertices();
    for (int t = 0; t <= reach; ++t)
        for (const auto& path : base) {
            V3 p = add(path.start, shift, t);
            for (const V3& step : path.moves) {
                V3 q = add(p, step);
                const int s = pts.index_of(std::vector<int>(p.begin(), p.end()));
                const int d = pts.index_of(std::vector<int>(q.begin(), q.end()));
                if (s >= 0 && d >= 0) {
                    if (out_used[s] || in_used[d])
                        throw std::logic_error("sl3 family: colour " + std::to_string(color) +
                                               " paths overlap at " + point_label(pts[s]));
                    out_used[s] = in_used[d] = 1;
                    g.add_edge(s, color, d);
                }
                p = q;
            }
        }
}

CrystalGraph sl3_empty(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("sl3: a and b must be nonnegative");
    Weight lambda({a, b});
    return CrystalGraph(2, lambda, fflv_points(lambda));
}

}  // namespace

CrystalGraph sl3_bgt(int a, int b) {
    CrystalGraph g = sl3_empty(a, b);
    const int reach = 2 * (a + b) + 2;
    const std::size_t nv = g.vertices().size();

    std::vector<PathSpec> one, two;
    for (int mu = 0; mu <= b; ++mu) {
        PathSpec p{{0, 0, mu}, {}};
        repeat(p.moves, E1, a);
        repeat(p.moves, LOWER_E2, mu);
        one.push_back(p);
    }
    for (int mu = 0; mu <= a; ++mu) {
        PathSpec p{{mu, 0, 0}, {}};
        repeat(p.moves, LOWER_E1, mu);
        repeat(p.moves, E2, reach);
        two.push_back(p);
    }
    for (int j = 1; j <= b; ++j) {
        PathSpec p{{a, j, 0}, {}};
        repeat(p.moves, LOWER_E1, a);
        repeat(p.moves, E2, reach);
        two.push_back(p);
    }
    std::vector<int> out1(nv), in1(nv), out2(nv), in2(nv);
    lay_family(g, 1, one, {-1, 1, 0}, reach, out1, in1);
    lay_family(g, 2, two, {1, 0, 1}, reach, out2, in2);
    return g;
}

CrystalGraph sl3_blt(int a, int b) {
    CrystalGraph g = sl3_empty(a, b);
    const int reach = 2 * (a + b) + 2;
    const std::size_t nv = g.vertices().size();

    std::vector<PathSpec> one, two;
    for (int mu = 0; mu <= b; ++mu) {
        PathSpec p{{0, 0, mu}, {}};
        repeat(p.moves, LOWER_E2, mu);
        repeat(p.moves, E1, a);
        one.push_back(p);
    }
    for (int j = 1; j <= a + b; ++j) {
        PathSpec p{{0, j, b}, {}};
        repeat(p.moves, LOWER_E2, b);
        repeat(p.moves, E1, a);
        one.push_back(p);
    }
    for (int mu = 0; mu <= a; ++mu) {
        PathSpec p{{mu, 0, 0}, {}};
        repeat(p.moves, E2, b);
        repeat(p.moves, LOWER_E1, mu);
        two.push_back(p);
    }
    std::vector<int> out1(nv), in1(nv), out2(nv), in2(nv);
    lay_family(g, 1, one, {1, 0, 1}, reach, out1, in1);
    lay_family(g, 2, two, {0, 1, -1}, reach, out2, in2);
    return g;
}

PointSet critical_points(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("critical_points: a and b must be nonnegative");
    std::vector<LatticePoint> out;
    for (const auto& x : fflv_points(Weight({a, b})))
        if (x[0] == x[2]) out.push_back(x);
    return PointSet(3, std::move(out));
}

// ---------------------------------------------------------------------------
// Conjecture search

namespace {

// For each vertex and colour, candidate targets in preference order, with duplicates removed.
std::vector<std::vector<std::vector<int>>> ranked_candidates(const CrystalGraph& g, const std::vector<int>& rank,
                                                             int only_k = 0) {
    const int n = g.rank();
    const auto& pts = g.vertices();
    std::vector<std::vector<std::vector<int>>> out(pts.size(), std::vector<std::vector<int>>(n));
    for (std::size_t v = 0; v < pts.size(); ++v) {
        auto cands = candidates_in(n, pts, pts[v]);
        std::stable_sort(cands.begin(), cands.end(), [&](const CandidateEdge& x, const CandidateEdge& y) {
            return std::tie(rank[x.k], x.index) < std::tie(rank[y.k], y.index);
        });
        for (const auto& c : cands) {
            if (only_k != 0 && c.k != only_k) continue;
            auto& list = out[v][c.color - 1];
            const int t = pts.index_of(c.target);
            if (std::find(list.begin(), list.end(), t) == list.end()) list.push_back(t);
        }
    }
    return out;
}

class Exhaustive {
public:
    Exhaustive(const CrystalGraph& blank, const WordCrystal& oracle,
               std::vector<std::vector<std::vector<int>>> cands, std::uint64_t budget)
        : blank_(blank), oracle_(oracle), cands_(std::move(cands)), budget_(budget) {
        const auto nw = oracle_.size();
        parent_.assign(nw, -1);
        parent_color_.assign(nw, 0);
        for (std::size_t w = 0; w < nw; ++w)
            for (int a = 1; a <= blank_.rank(); ++a) {
                const int c = oracle_.f(a, static_cast<int>(w));
                if (c >= 0 && parent_[c] < 0 && c != 0) {
                    parent_[c] = static_cast<int>(w);
                    parent_color_[c] = a;
                }
            }
        for (std::size_t w = 0; w < nw; ++w) oracle_wt_.push_back(oracle_.weight(static_cast<int>(w)));
        for (const auto& x : blank_.vertices()) vertex_wt_.push_back(weight_of_point(blank_.lambda(), x));
        to_vertex_.assign(nw, -1);
        used_.assign(blank_.vertices().size(), 0);
    }

    void run(SearchResult& out) {
        const int source = blank_.vertices().index_of(LatticePoint(blank_.vertices().dim(), 0));
        if (source < 0 || blank_.vertices().size() != oracle_.size()) return;
        to_vertex_[0] = source;
        used_[source] = 1;
        descend(1, out);
        out.nodes = nodes_;
        out.incomplete = exhausted_;
    }

private:
    bool allowed(int v, int a, int t) const {
        const auto& list = cands_[v][a - 1];
        return std::find(list.begin(), list.end(), t) != list.end();
    }

    void descend(std::size_t w, SearchResult& out) {
        if (exhausted_) return;
        if (w == oracle_.size()) {
            CrystalGraph g = blank_;
            for (std::size_t u = 0; u < oracle_.size(); ++u)
                for (int a = 1; a <= g.rank(); ++a) {
                    const int c = oracle_.f(a, static_cast<int>(u));
                    if (c >= 0) g.add_edge(to_vertex_[u], a, to_vertex_[c]);
                }
            out.graphs.push_back(std::move(g));
            return;
        }
        const int iw = static_cast<int>(w);
        const int from = to_vertex_[parent_[w]];
        for (int t : cands_[from][parent_color_[w] - 1]) {
            if (used_[t] || vertex_wt_[t] != oracle_wt_[w]) continue;
            if (++nodes_ > budget_) {
                exhausted_ = true;
                return;
            }
            bool ok = true;
            for (int a = 1; a <= blank_.rank() && ok; ++a) {
                const int up = oracle_.e(a, iw);
                if (up >= 0 && up < iw && !allowed(to_vertex_[up], a, t)) ok = false;
                const int down = oracle_.f(a, iw);
                if (down >= 0 && down < iw && !allowed(t, a, to_vertex_[down])) ok = false;
            }
            if (!ok) continue;
            to_vertex_[w] = t;
            used_[t] = 1;
            descend(w + 1, out);
            used_[t] = 0;
            to_vertex_[w] = -1;
            if (exhausted_) return;
        }
    }

    const CrystalGraph& blank_;
    const WordCrystal& oracle_;
    std::vector<std::vector<std::vector<int>>> cands_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<int> parent_, parent_color_, to_vertex_;
    std::vector<char> used_;
    std::vector<std::vector<int>> oracle_wt_, vertex_wt_;
};

// String-by-string greedy choice: tops in decreasing <wt, alpha^vee>, each string grown to its forced length.
CrystalGraph greedy_graph(const CrystalGraph& blank, const std::vector<std::vector<std::vector<int>>>& cands,
                          std::string& failure) {
    CrystalGraph g = blank;
    const int n = g.rank();
    const int nv = static_cast<int>(g.vertices().size());
    std::vector<std::vector<int>> wt(nv);
    for (int v = 0; v < nv; ++v) wt[v] = weight_of_point(g.lambda(), g.vertices()[v]);
    for (int a = 1; a <= n; ++a) {
        std::vector<int> order(nv);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return pairing(wt[x], a) > pairing(wt[y], a); });
        std::vector<char> claimed(nv, 0);
        for (int v : order) {
            if (claimed[v]) continue;
            claimed[v] = 1;
            const int length = pairing(wt[v], a);
            if (length < 0 && failure.empty())
                failure = "colour " + std::to_string(a) + ": string top " + point_label(g.vertices()[v]) +
                          " has negative weight pairing";
            int cur = v;
            for (int step = 0; step < length; ++step) {
                int next = -1;
                for (int t : cands[cur][a - 1])
                    if (!claimed[t]) {
                        next = t;
                        break;
                    }
                if (next < 0) {
                    if (failure.empty())
                        failure = "colour " + std::to_string(a) + ": string from " + point_label(g.vertices()[v]) +
                                  " ends early at " + point_label(g.vertices()[cur]);
                    break;
                }
                claimed[next] = 1;
                g.add_edge(cur, a, next);
                cur = next;
            }
        }
    }
    return g;
}

}  // namespace

SearchResult conjecture_search(int n, const Weight& lambda, const std::vector<int>& sigma, SearchMode mode,
                               std::uint64_t node_budget) {
    std::vector<int> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 1);
    if (sorted != identity) throw std::invalid_argument("conjecture_search: sigma is not a permutation of [1, n]");
    std::vector<int> rank(n + 1, 0);
    for (int p = 0; p < n; ++p) rank[sigma[p]] = p;

    SearchResult result;
    CrystalGraph blank(n, lambda, fflv_points(lambda));
    const WordCrystal oracle(n, lambda);
    auto cands = ranked_candidates(blank, rank);

    if (mode == SearchMode::greedy) {
        result.greedy = greedy_graph(blank, cands, result.greedy_failure);
        if (result.greedy_failure.empty()) {
            IsoReport iso = check_oracle_iso(result.greedy, oracle);
            if (!iso) result.greedy_failure = "not isomorphic to the reference crystal: " + iso.detail;
        }
        result.greedy_valid = result.greedy_failure.empty();
        if (result.greedy_valid) result.graphs.push_back(result.greedy);
        return result;
    }

    Exhaustive(blank, oracle, std::move(cands), node_budget).run(result);
    std::sort(result.graphs.begin(), result.graphs.end(),
              [](const CrystalGraph& x, const CrystalGraph& y) { return x.edges() < y.edges(); });
    result.graphs.erase(std::unique(result.graphs.begin(), result.graphs.end()), result.graphs.end());
    return result;
}

SearchResult fixed_k_crystals(int n, const Weight& lambda, int k, std::uint64_t node_budget) {
    if (k < 1 || k > n) throw std::out_of_range("fixed_k_crystals: k outside [1, n]");
    std::vector<int> rank(n + 1, 0);
    SearchResult result;
    CrystalGraph blank(n, lambda, fflv_points(lambda));
    const WordCrystal oracle(n, lambda);
    Exhaustive(blank, oracle, ranked_candidates(blank, rank, k), node_budget).run(result);
    std::sort(result.graphs.begin(), result.graphs.end(),
              [](const CrystalGraph& x, const CrystalGraph& y) { return x.edges() < y.edges(); });
    return result;
}

std::string crystal_dot(const CrystalGraph& g, const std::string& name) {
    static const char* palette[] = {"red", "blue", "green"};
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    os << "  node [shape=plaintext];\n";
    for (const auto& x : g.vertices()) os << "  \"" << point_label(x) << "\";\n";
    for (const auto& [s, a, t] : g.edge_points())
        os << "  \"" << point_label(s) << "\" -> \"" << point_label(t) << "\" [color=" << palette[(a - 1) % 3]
           << ", label=\"" << a << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace fflv
