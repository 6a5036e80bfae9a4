// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fflv/crystal.hpp"
#include "fflv/fflv.hpp"
#include "fflv/tiling.hpp"
#include "fflv/verify.hpp"

using namespace fflv;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void fail(const std::string& why) {
        if (pass) note = why;
        pass = false;
    }
};

std::int64_t binomial(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<SweepCase> main_cases() {
    std::vector<SweepCase> cases;
    for (auto [n, t] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 2}})
        for (const Weight& l : dominant_weights(n, t)) cases.push_back({"main", n, l.coeffs(), 0, 0, ""});
    return cases;
}

Outcome criterion1() {
    Outcome o;
    const auto reports = run_sweep(main_cases());
    for (const auto& r : reports)
        if (!r.pass) o.fail(r.key() + ": " + r.witness);
    o.note = o.pass ? std::to_string(reports.size()) + " weights" : o.note;
    return o;
}

Outcome criterion2() {
    Outcome o;
    int cases = 0;
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k)
            for (int r = 1; r <= 3; ++r) {
                const auto rep = verify_fundamental(n, k, r);
                ++cases;
                if (!rep.pass) o.fail(rep.key() + ": " + rep.witness);
                if (r == 1 && rep.stats["fflv"].get<std::int64_t>() != binomial(n + 1, k))
                    o.fail(rep.key() + ": cardinality differs from the binomial coefficient");
            }
    if (o.pass) o.note = std::to_string(cases) + " cases";
    return o;
}

Outcome criterion3() {
    Outcome o;
    for (const auto& c : main_cases()) {
        const Weight l(c.lambda);
        const auto count = static_cast<std::int64_t>(fflv_points(l).size());
        if (count != weyl_dim(l)) o.fail("n=" + std::to_string(c.n) + " lambda=" + l.to_string());
    }
    if (fflv_points(Weight({1, 1})).size() != 8) o.fail("(1,1) does not give 8");
    if (fflv_points(Weight({2, 2})).size() != 27) o.fail("(2,2) does not give 27");
    if (o.pass) o.note = "spot values 8 and 27";
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (int n = 2; n <= 3; ++n)
        for (const Weight& l : dominant_weights(n, 2)) {
            const auto rep = verify_gks_sanity(n, l);
            if (!rep.pass) o.fail(rep.key() + ": " + rep.witness);
        }
    if (o.pass) o.note = "2 + 16 words";
    return o;
}

Outcome criterion5() {
    Outcome o;
    int words = 0;
    auto check = [&](const ReducedWord& w) {
        ++words;
        const auto rep = verify_tiling(w);
        if (!rep.pass) o.fail(w.to_string() + ": " + rep.witness);
    };
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : all_reduced_words(n)) check(w);
    std::mt19937_64 rng(20240601);
    for (int n = 4; n <= 5; ++n)
        for (int trial = 0; trial < 1000; ++trial) check(random_reduced_word(n, rng));
    if (o.pass) o.note = std::to_string(words) + " words";
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto d = verify_dyck_correspondence(n, k);
            if (!d.pass) o.fail(d.key() + ": " + d.witness);
            const Tiling t = Tiling::build(ik_word(n, k));
            const auto all = dual_crossings(t, k);
            if (reineke_filter(t, all).size() != all.size()) o.fail("Reineke filter removes a crossing at " + d.key());
            const auto c = verify_crossings(n, k);
            if (!c.pass) o.fail(c.key() + ": " + c.witness);
            for (int r = 1; r <= 2; ++r)
                if (!check_lemma_A(n, k, r))
                    o.fail("vanishing fails at n=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" + std::to_string(r));
        }
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (const char* fam : {"gt", "lt"}) {
                const auto rep = verify_sl3(a, b, fam);
                if (!rep.pass) o.fail(rep.key() + ": " + rep.witness);
            }
    using E = std::tuple<LatticePoint, int, LatticePoint>;
    auto listed = [](std::initializer_list<std::array<int, 7>> rows) {
        std::vector<E> out;
        for (const auto& r : rows) out.emplace_back(LatticePoint{r[0], r[1], r[2]}, r[3], LatticePoint{r[4], r[5], r[6]});
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto gt = listed({{0, 0, 0, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 0, 1}, {1, 0, 1, 1, 1, 1, 0}, {0, 1, 1, 1, 0, 2, 0},
                            {0, 0, 0, 2, 0, 0, 1}, {1, 0, 0, 2, 0, 1, 0}, {0, 1, 0, 2, 0, 1, 1}, {1, 1, 0, 2, 0, 2, 0}});
    const auto lt = listed({{0, 0, 0, 1, 1, 0, 0}, {0, 0, 1, 1, 0, 1, 0}, {0, 1, 0, 1, 1, 1, 0}, {0, 1, 1, 1, 0, 2, 0},
                            {0, 0, 0, 2, 0, 0, 1}, {1, 0, 0, 2, 1, 0, 1}, {1, 0, 1, 2, 0, 1, 1}, {1, 1, 0, 2, 0, 2, 0}});
    if (sl3_bgt(1, 1).edge_points() != gt) o.fail("B^>(1,1) edge list differs from the figure");
    if (sl3_blt(1, 1).edge_points() != lt) o.fail("B^<(1,1) edge list differs from the figure");
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            if (critical_points(a, b).size() != static_cast<std::size_t>((a + 1) * (b + 1)))
                o.fail("critical point count at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::ostringstream note;
    for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
        const auto r = conjecture_search(2, Weight({a, b}), {1, 2}, SearchMode::exhaustive);
        const bool has_gt = std::find(r.graphs.begin(), r.graphs.end(), sl3_bgt(a, b)) != r.graphs.end();
        const bool has_lt = std::find(r.graphs.begin(), r.graphs.end(), sl3_blt(a, b)) != r.graphs.end();
        if (r.incomplete) o.fail("search budget exhausted");
        if (!has_gt || !has_lt) o.fail("a family is missing from the search result");
        for (const auto& g : r.graphs)
            if (!check_local_axioms(g).ok()) o.fail("a returned graph violates the local axioms");
        note << "(" << a << "," << b << "): " << r.graphs.size() << " graphs, " << r.nodes << " nodes; ";
    }
    if (o.pass) o.note = note.str() + "conjectured count 2";
    return o;
}

Outcome criterion9() {
    Outcome o;
    const Weight l({1, 1});
    std::vector<PointSet> summands = {lusztig_points(ik_word(2, 1), Weight::fundamental(2, 1)).points,
                                      lusztig_points(ik_word(2, 2), Weight::fundamental(2, 2)).points};
    summands[1].insert({1, 1, 0});
    const auto bad = verify_main_with(2, l, summands);
    if (bad.pass || bad.witness.empty()) o.fail("corrupted summand not detected");

    CrystalGraph g = sl3_bgt(1, 1);
    g.remove_edge(*g.edges().begin());
    const auto ax = check_local_axioms(g);
    if (ax.ok() || ax.violations.front().witness.empty()) o.fail("deleted edge not detected");
    if (o.pass) o.note = "witnesses: [" + bad.witness + "] and [" + ax.violations.front().axiom + "]";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"Minkowski decomposition sweep", criterion1},
        {"fundamental cases", criterion2},
        {"dimension counts", criterion3},
        {"Lusztig counts for all reduced words", criterion4},
        {"tiling invariants", criterion5},
        {"geometric proof pipeline", criterion6},
        {"sl3 crystals", criterion7},
        {"conjecture explorer", criterion8},
        {"negative-path meta-tests", criterion9},
    };
    int failed = 0;
    int idx = 0;
    for (const auto& [name, run] : criteria) {
        ++idx;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d (%s) [%.2fs]%s%s\n", o.pass ? "PASS" : "FAIL", idx, name, secs,
                    o.note.empty() ? "" : ": ", o.note.c_str());
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
