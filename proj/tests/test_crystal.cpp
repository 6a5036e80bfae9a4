#include <doctest.h>

#include <stdexcept>

#include <set>

#include "fflv/crystal.hpp"
#include "fflv/fflv.hpp"

using namespace fflv;

namespace {

using Edge = std::tuple<LatticePoint, int, LatticePoint>;

std::set<Edge> edge_set(const CrystalGraph& g) {
    auto v = g.edge_points();
    return {v.begin(), v.end()};
}

LatticePoint P(int a, int b, int c) { return {a, b, c}; }

}  // namespace

TEST_SUITE("crystal") {
    TEST_CASE("candidate edges") {
        const Weight l({1, 1});
        std::set<LatticePoint> colour1;
        for (const auto& c : candidate_edges(2, l, P(0, 0, 1)))
            if (c.color == 1) colour1.insert(c.target);
        CHECK(colour1 == std::set<LatticePoint>{P(1, 0, 1), P(0, 1, 0)});

        for (int a = 1; a <= 3; ++a) {
            int count = 0;
            for (const auto& c : candidate_edges(3, Weight({1, 1, 1}), LatticePoint(6, 0)))
                if (c.color == a) {
                    CHECK(c.k == a);
                    CHECK(c.kind == MoveKind::diagonal);
                    ++count;
                }
            CHECK(count == 1);
        }
        CHECK_THROWS_AS(candidate_edges(2, l, P(2, 0, 0)), std::invalid_argument);

        // Every move drops the content by e_a - e_{a+1}.
        const Weight big({2, 1, 1});
        for (const auto& x : fflv_points(big))
            for (const auto& c : candidate_edges(3, big, x)) {
                auto before = weight_of_point(big, c.source);
                auto after = weight_of_point(big, c.target);
                --before[c.color - 1];
                ++before[c.color];
                CHECK(before == after);
            }
    }

    TEST_CASE("PB graph") {
        const CrystalGraph pb = pb_graph(2, Weight({1, 1}));
        CHECK(pb.vertices().size() == 8);
        CHECK(pb.vertices() == fflv_points(Weight({1, 1})));
        const int v = pb.vertices().index_of(P(0, 0, 1));
        CHECK(pb.successors(v, 1).size() == 2);
        const CrystalGraph zero = pb_graph(3, Weight::zero(3));
        CHECK(zero.vertices().size() == 1);
        CHECK(zero.num_edges() == 0);
    }

    TEST_CASE("word crystal") {
        CHECK(word_oracle(2, Weight({1, 1})).size() == 8);
        CHECK(word_oracle(2, Weight({2, 2})).size() == 27);
        const WordCrystal std3 = word_oracle(3, Weight::fundamental(3, 1));
        REQUIRE(std3.size() == 4);
        for (int w = 0; w < 4; ++w) {
            CHECK(std3.words()[w] == std::vector<int>{w + 1});
            for (int a = 1; a <= 3; ++a) CHECK(std3.f(a, w) == (a == w + 1 ? w + 1 : -1));
        }
        for (int n = 1; n <= 3; ++n)
            for (int total = 0; total <= 4; ++total) {
                std::vector<int> c(n, 0);
                c[0] = total / 2;
                c[n - 1] += total - total / 2;
                const Weight l(c);
                const WordCrystal wc = word_oracle(n, l);
                CHECK(static_cast<std::int64_t>(wc.size()) == weyl_dim(l));
                if (total <= 3) CHECK(check_local_axioms(wc).ok());
            }
        WordCrystal::Word w{1, 2, 1};
        CHECK(WordCrystal::lower(w, 1));
        CHECK(w == std::vector<int>{1, 2, 2});
        CHECK(WordCrystal::raise(w, 1));
        CHECK(w == std::vector<int>{1, 2, 1});
        CHECK_FALSE(WordCrystal::raise(w, 1));
    }

    TEST_CASE("sl3 families: figure edge lists") {
        const std::set<Edge> gt = {
            {P(0, 0, 0), 1, P(1, 0, 0)}, {P(0, 0, 1), 1, P(1, 0, 1)}, {P(1, 0, 1), 1, P(1, 1, 0)},
            {P(0, 1, 1), 1, P(0, 2, 0)}, {P(0, 0, 0), 2, P(0, 0, 1)}, {P(1, 0, 0), 2, P(0, 1, 0)},
            {P(0, 1, 0), 2, P(0, 1, 1)}, {P(1, 1, 0), 2, P(0, 2, 0)}};
        const std::set<Edge> lt = {
            {P(0, 0, 0), 1, P(1, 0, 0)}, {P(0, 0, 1), 1, P(0, 1, 0)}, {P(0, 1, 0), 1, P(1, 1, 0)},
            {P(0, 1, 1), 1, P(0, 2, 0)}, {P(0, 0, 0), 2, P(0, 0, 1)}, {P(1, 0, 0), 2, P(1, 0, 1)},
            {P(1, 0, 1), 2, P(0, 1, 1)}, {P(1, 1, 0), 2, P(0, 2, 0)}};
        CHECK(edge_set(sl3_bgt(1, 1)) == gt);
        CHECK(edge_set(sl3_blt(1, 1)) == lt);
    }

    TEST_CASE("sl3 families: larger figures") {
        const auto g = edge_set(sl3_bgt(3, 4));
        for (const Edge& e : std::vector<Edge>{{P(0, 0, 1), 1, P(1, 0, 1)},
                                               {P(1, 0, 1), 1, P(2, 0, 1)},
                                               {P(2, 0, 1), 1, P(3, 0, 1)},
                                               {P(3, 0, 1), 1, P(3, 1, 0)}})
            CHECK(g.count(e) == 1);
        const auto l = edge_set(sl3_blt(3, 4));
        for (const Edge& e : std::vector<Edge>{{P(3, 0, 4), 2, P(2, 1, 4)},
                                               {P(2, 1, 4), 2, P(1, 2, 4)},
                                               {P(1, 2, 4), 2, P(0, 3, 4)}})
            CHECK(l.count(e) == 1);
    }

    TEST_CASE("sl3 families are crystals") {
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b) {
                const CrystalGraph gt = sl3_bgt(a, b);
                const CrystalGraph lt = sl3_blt(a, b);
                CHECK(gt.vertices() == lt.vertices());
                CHECK(gt.edges() != lt.edges());
                CHECK(check_local_axioms(gt).ok());
                CHECK(check_local_axioms(lt).ok());
                CHECK(check_oracle_iso(gt, gt.lambda()).iso);
                CHECK(check_oracle_iso(lt, lt.lambda()).iso);
                // Unique source 0 and unique sink.
                std::vector<int> in(gt.vertices().size()), out(gt.vertices().size());
                for (const auto& e : gt.edges()) ++out[e.source], ++in[e.target];
                int sources = 0, sinks = 0;
                for (std::size_t v = 0; v < in.size(); ++v) sources += in[v] == 0, sinks += out[v] == 0;
                CHECK(sources == 1);
                CHECK(sinks == 1);
                CHECK(in[gt.vertices().index_of(LatticePoint(3, 0))] == 0);
            }
    }

    TEST_CASE("mutations are caught") {
        CrystalGraph g = sl3_bgt(1, 1);
        const int s = g.vertices().index_of(P(0, 0, 1));
        const int t = g.vertices().index_of(P(1, 0, 1));
        REQUIRE(g.remove_edge({s, 1, t}));
        const AxiomReport rep = check_local_axioms(g);
        REQUIRE_FALSE(rep.ok());
        bool weight_hit = false;
        for (const auto& v : rep.violations) weight_hit |= v.axiom == "weight";
        CHECK(weight_hit);
        CHECK_FALSE(rep.violations.front().witness.empty());
        CHECK_FALSE(check_oracle_iso(g, g.lambda()).iso);

        // Swap the targets of two colour-2 edges whose targets have equal weight.
        CrystalGraph h = sl3_bgt(2, 1);
        std::vector<CrystalEdge> twos;
        for (const auto& e : h.edges())
            if (e.color == 2) twos.push_back(e);
        bool swapped = false;
        for (std::size_t i = 0; i < twos.size() && !swapped; ++i)
            for (std::size_t j = i + 1; j < twos.size() && !swapped; ++j) {
                const auto& x = twos[i];
                const auto& y = twos[j];
                if (x.target == y.target) continue;
                if (weight_of_point(h.lambda(), h.vertices()[x.target]) != weight_of_point(h.lambda(), h.vertices()[y.target]))
                    continue;
                h.remove_edge(x);
                h.remove_edge(y);
                h.add_edge(x.source, 2, y.target);
                h.add_edge(y.source, 2, x.target);
                swapped = true;
            }
        REQUIRE(swapped);
        CHECK_FALSE(check_oracle_iso(h, h.lambda()).iso);

        CHECK_THROWS_AS(g.add_edge(P(0, 0, 0), 1, P(0, 0, 1)), std::invalid_argument);
    }

    TEST_CASE("critical points") {
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b) CHECK(critical_points(a, b).size() == static_cast<std::size_t>((a + 1) * (b + 1)));
        CHECK(critical_points(1, 1) == PointSet(3, {{0, 0, 0}, {1, 0, 1}, {0, 1, 0}, {0, 2, 0}}));
        CHECK(critical_points(0, 0) == PointSet::singleton({0, 0, 0}));
    }

    TEST_CASE("conjecture search") {
        const auto one = conjecture_search(1, Weight({3}), {1}, SearchMode::exhaustive);
        CHECK(one.graphs.size() == 1);
        CHECK_FALSE(one.incomplete);

        const auto r = conjecture_search(2, Weight({1, 1}), {1, 2}, SearchMode::exhaustive);
        CHECK(std::find(r.graphs.begin(), r.graphs.end(), sl3_bgt(1, 1)) != r.graphs.end());
        CHECK(std::find(r.graphs.begin(), r.graphs.end(), sl3_blt(1, 1)) != r.graphs.end());
        for (const auto& g : r.graphs) CHECK(check_local_axioms(g).ok());

        const auto g12 = conjecture_search(2, Weight({2, 2}), {1, 2}, SearchMode::greedy);
        const auto g21 = conjecture_search(2, Weight({2, 2}), {2, 1}, SearchMode::greedy);
        CHECK(g12.greedy_valid);
        CHECK(g21.greedy_valid);
        CHECK(g12.greedy == sl3_bgt(2, 2));
        CHECK(g21.greedy == sl3_blt(2, 2));

        const auto tiny = conjecture_search(2, Weight({2, 2}), {1, 2}, SearchMode::exhaustive, 5);
        CHECK(tiny.incomplete);
        CHECK_THROWS_AS(conjecture_search(2, Weight({1, 1}), {1, 1}, SearchMode::greedy), std::invalid_argument);
    }

    TEST_CASE("fixed word index recovers the fundamental crystals") {
        for (int n = 1; n <= 3; ++n)
            for (int k = 1; k <= n; ++k)
                for (int r = 1; r <= 2; ++r) {
                    const auto res = fixed_k_crystals(n, Weight::fundamental(n, k, r), k);
                    CHECK(res.graphs.size() == 1);
                }
    }

    TEST_CASE("dot export") {
        const std::string dot = crystal_dot(sl3_bgt(1, 1), "B");
        CHECK(std::count(dot.begin(), dot.end(), '>') == 8);
        CHECK(dot.find("color=red") != std::string::npos);
        CHECK(dot.find("color=blue") != std::string::npos);
    }
}
