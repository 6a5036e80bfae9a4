// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fflv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <set>
#include <stdexcept>
#include <thread>

#include "fflv/crystal.hpp"
#include "fflv/fflv.hpp"
#include "fflv/tiling.hpp"

namespace fflv {

namespace {

using Clock = std::chrono::steady_clock;

std::string point_str(const LatticePoint& x) {
    std::string s = "(";
    for (std::size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + std::to_string(x[k]);
    return s + ")";
}

std::string row_str(int n, const Inequality& row) {
    const auto roots = positive_roots(n);
    std::string s;
    for (std::size_t c = 0; c < row.coeffs.size(); ++c) {
        const int v = row.coeffs[c];
        if (v == 0) continue;
        s += (v > 0 ? (s.empty() ? "" : " + ") : (s.empty() ? "-" : " - "));
        if (std::abs(v) != 1) s += std::to_string(std::abs(v)) + "*";
        s += "x" + to_string(roots[c]).substr(1);
    }
    return (s.empty() ? "0" : s) + " <= " + std::to_string(row.rhs);
}

// Times `body`, which fills the report.
VerificationReport timed(std::string claim, nlohmann::json params, const std::function<void(VerificationReport&)>& body) {
    VerificationReport rep;
    rep.claim = std::move(claim);
    rep.params = std::move(params);
    const auto t0 = Clock::now();
    body(rep);
    rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!rep.pass && rep.witness.empty()) rep.witness = "unspecified failure";
    return rep;
}

// First point of a missing from b, as a witness string, or "".
std::string first_missing(const PointSet& a, const PointSet& b, const char* what) {
    PointSet d = a.difference(b);
    return d.empty() ? std::string() : std::string(what) + " " + point_str(d[0]);
}

std::set<std::vector<int>> saturated_paths(int n, int k) {
    std::set<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> walk = [&](int i, int j) {
        cur.push_back(root_index(n, {i, j}));
        if (i == k && j == n) {
            std::vector<int> s = cur;
            std::sort(s.begin(), s.end());
            out.insert(s);
        }
        if (i < k) walk(i + 1, j);
        if (j < n) walk(i, j + 1);
        cur.pop_back();
    };
    walk(1, k);
    return out;
}

bool all_labels_once(const Tiling& t, const std::vector<int>& border) {
    std::vector<int> seen(t.m() + 1, 0);
    for (int e : border) ++seen[t.edge_label(e)];
    return static_cast<int>(border.size()) == t.m() &&
           std::all_of(seen.begin() + 1, seen.end(), [](int c) { return c == 1; });
}

}  // namespace

VerificationReport verify_fundamental(int n, int k, int r) {
    return timed("fundamental", {{"n", n}, {"k", k}, {"r", r}}, [&](VerificationReport& rep) {
        const Weight lambda = Weight::fundamental(n, k, r);
        const PointSet fflv = fflv_points(lambda);
        const LusztigEnumeration lus = lusztig_points(ik_word(n, k), lambda);
        rep.stats = {{"fflv", fflv.size()}, {"lusztig", lus.points.size()}, {"box", lus.box_bound}};
        if (!lus.consistent) {
            rep.witness = "Lusztig enumeration inconsistent at box " + std::to_string(lus.box_bound);
            return;
        }
        rep.witness = first_missing(fflv, lus.points, "FFLV point outside Lusztig:");
        if (rep.witness.empty()) rep.witness = first_missing(lus.points, fflv, "Lusztig point outside FFLV:");
        if (rep.witness.empty() && r == 1) {
            std::vector<LatticePoint> pts;
            for (auto& fp : fundamental_points(n, k)) pts.push_back(fp.point);
            const PointSet expl(num_positive_roots(n), pts);
            rep.stats["explicit"] = expl.size();
            if (expl.size() != pts.size())
                rep.witness = "explicit points are not distinct";
            else {
                rep.witness = first_missing(expl, fflv, "explicit point outside FFLV:");
                if (rep.witness.empty()) rep.witness = first_missing(fflv, expl, "FFLV point not explicit:");
            }
        }
        rep.pass = rep.witness.empty();
    });
}

VerificationReport verify_main(int n, const Weight& lambda) {
    std::vector<PointSet> summands;
    for (int k = 1; k <= n; ++k)
        if (lambda[k] > 0) summands.push_back(lusztig_points(ik_word(n, k), Weight::fundamental(n, k, lambda[k])).points);
    return verify_main_with(n, lambda, summands);
}

VerificationReport verify_main_with(int n, const Weight& lambda, const std::vector<PointSet>& summands) {
    return timed("main", {{"n", n}, {"lambda", lambda.coeffs()}}, [&](VerificationReport& rep) {
        const int dim = num_positive_roots(n);
        PointSet sigma = PointSet::singleton(LatticePoint(dim, 0));
        for (const auto& s : summands) sigma = sumset(sigma, s);
        const HPolytope h = fflv_hrep(n, lambda);
        const PointSet f = fflv_points(lambda);
        rep.stats = {{"sumset", sigma.size()}, {"fflv", f.size()}, {"weyl_dim", weyl_dim(lambda)}};

        // (ii) every sumset point satisfies the FFLV rows.
        for (const auto& x : sigma) {
            if (std::any_of(x.begin(), x.end(), [](int v) { return v < 0; })) {
                rep.witness = "sumset point " + point_str(x) + " has a negative coordinate";
                return;
            }
            for (const auto& row : h.rows)
                if (checked_dot(row.coeffs, x) > row.rhs) {
                    rep.witness = "sumset point " + point_str(x) + " violates " + row_str(n, row);
                    return;
                }
        }
        // (iii) FFLV lattice points lie in the sumset; (i) then follows from (ii) for lattice points.
        rep.witness = first_missing(f, sigma, "FFLV point missing from sumset:");
        if (rep.witness.empty()) rep.witness = first_missing(sigma, f, "sumset point outside FFLV:");
        rep.pass = rep.witness.empty();
    });
}

VerificationReport verify_gks_sanity(int n, const Weight& lambda) {
    return timed("gks", {{"n", n}, {"lambda", lambda.coeffs()}}, [&](VerificationReport& rep) {
        const auto expect = weyl_dim(lambda);
        const auto words = all_reduced_words(n);
        rep.stats = {{"words", words.size()}, {"weyl_dim", expect}};
        for (const auto& w : words) {
            const auto e = lusztig_points(w, lambda);
            if (static_cast<std::int64_t>(e.points.size()) != expect || !e.consistent) {
                rep.witness = "word " + w.to_string() + " gives " + std::to_string(e.points.size()) + " points";
                return;
            }
        }
        rep.pass = true;
    });
}

VerificationReport verify_dyck_correspondence(int n, int k) {
    return timed("dyck", {{"n", n}, {"k", k}}, [&](VerificationReport& rep) {
        const auto roots = positive_roots(n);
        const Tiling t = Tiling::build(ik_word(n, k));
        const auto crossings = reineke_filter(t, dual_crossings(t, k));
        const auto paths = saturated_paths(n, k);

        std::set<std::vector<int>> supports;
        for (const auto& g : crossings) {
            const auto f = crossing_functional(t, g);
            std::vector<int> s;
            for (std::size_t c = 0; c < f.size(); ++c) {
                if (!roots[c].contains(k) || f[c] == 0) continue;
                if (f[c] != 1) {
                    rep.witness = "rectangle coefficient " + std::to_string(f[c]) + " on " + to_string(roots[c]);
                    return;
                }
                s.push_back(static_cast<int>(c));
            }
            supports.insert(s);
        }

        std::set<std::vector<int>> maximal;
        for (const auto& s : supports) {
            const bool covered = std::any_of(paths.begin(), paths.end(), [&](const std::vector<int>& p) {
                return std::includes(p.begin(), p.end(), s.begin(), s.end());
            });
            if (!covered) {
                std::string w = "support {";
                for (int c : s) w += to_string(roots[c]) + " ";
                rep.witness = w + "} lies on no saturated Dyck path";
                return;
            }
            const bool dominated = std::any_of(supports.begin(), supports.end(), [&](const std::vector<int>& o) {
                return o != s && std::includes(o.begin(), o.end(), s.begin(), s.end());
            });
            if (!dominated) maximal.insert(s);
        }
        rep.stats = {{"crossings", crossings.size()}, {"supports", supports.size()},
                     {"maximal", maximal.size()}, {"saturated_paths", paths.size()}};
        for (const auto& p : paths)
            if (!maximal.count(p)) {
                std::string w = "saturated path {";
                for (int c : p) w += to_string(roots[c]) + " ";
                rep.witness = w + "} is not a maximal support";
                return;
            }
        if (maximal.size() != paths.size()) {
            rep.witness = "extra maximal support";
            return;
        }
        rep.pass = true;
    });
}

VerificationReport verify_crossings(int n, int k) {
    return timed("crossings", {{"n", n}, {"k", k}}, [&](VerificationReport& rep) {
        const Tiling t = Tiling::build(ik_word(n, k));
        const auto all = dual_crossings(t, k);
        const auto kept = reineke_filter(t, all);
        rep.stats = {{"crossings", all.size()}, {"reineke", kept.size()}};
        if (kept.size() != all.size()) {
            for (const auto& g : all)
                if (!is_dual_reineke(t, g)) {
                    std::string seq;
                    for (int v : g.strip_sequence) seq += std::to_string(v);
                    rep.witness = "crossing with strip sequence " + seq + " fails the Reineke condition";
                    return;
                }
        }
        const DualCrossing* comb = nullptr;
        for (const auto& g : all)
            if (g.strip_sequence == std::vector<int>{k, k + 1}) comb = &g;
        if (!comb) {
            rep.witness = "no dual comb";
            return;
        }
        const auto f = crossing_functional(t, *comb);
        for (int id : comb->tiles) {
            const Tile& tile = t.tile(id);
            if (f[root_index(n, tile.root())] != epsilon(tile, k)) {
                rep.witness = "comb coefficient on " + to_string(tile.root()) + " differs from epsilon";
                return;
            }
        }
        for (const auto& g : all)
            for (int id : g.tiles) {
                const Tile& tile = t.tile(id);
                if (!tile.root().contains(k) && !tile.has_label(k) && !tile.has_label(k + 1)) {
                    rep.witness = "crossing visits " + to_string(tile.root()) + " outside the rectangle and the comb";
                    return;
                }
            }
        rep.pass = true;
    });
}

VerificationReport verify_lemma_A(int n, int k, int r) {
    return timed("lemma_a", {{"n", n}, {"k", k}, {"r", r}}, [&](VerificationReport& rep) {
        rep.pass = check_lemma_A(n, k, r);
        if (!rep.pass) rep.witness = "a lattice point is nonzero off the rectangle, or the enumeration splits differently";
    });
}

VerificationReport verify_tiling(const ReducedWord& w) {
    return timed("tiling", {{"n", w.rank()}, {"word", w.to_string()}}, [&](VerificationReport& rep) {
        const Tiling t = Tiling::build(w);
        const int m = t.m();
        const int big_n = num_positive_roots(w.rank());
        if (static_cast<int>(t.tiles().size()) != big_n) {
            rep.witness = std::to_string(t.tiles().size()) + " tiles";
            return;
        }
        std::set<std::pair<int, int>> pairs;
        for (const Tile& tile : t.tiles()) pairs.insert({tile.low, tile.high});
        if (static_cast<int>(pairs.size()) != big_n) {
            rep.witness = "repeated label pair";
            return;
        }
        for (const auto& b : t.construction_borders())
            if (!all_labels_once(t, b)) {
                rep.witness = "construction border without one edge per label";
                return;
            }
        for (int s = 1; s <= 2 * m; ++s) {
            PeelOrder po;
            try {
                po = peel_order(t, s);
            } catch (const std::logic_error& e) {
                rep.witness = "peeling stalls for s = " + std::to_string(s);
                return;
            }
            for (const auto& b : po.borders)
                if (!all_labels_once(t, b)) {
                    rep.witness = "peel border for s = " + std::to_string(s) + " without one edge per label";
                    return;
                }
        }
        rep.pass = true;
    });
}

VerificationReport verify_sl3(int a, int b, const std::string& family) {
    return timed("sl3", {{"a", a}, {"b", b}, {"family", family}}, [&](VerificationReport& rep) {
        if (family != "gt" && family != "lt") throw std::invalid_argument("verify_sl3: family must be gt or lt");
        const CrystalGraph g = family == "gt" ? sl3_bgt(a, b) : sl3_blt(a, b);
        rep.stats = {{"vertices", g.vertices().size()}, {"edges", g.num_edges()}};
        const AxiomReport ax = check_local_axioms(g);
        if (!ax.ok()) {
            const auto& v = ax.violations.front();
            rep.witness = v.axiom + " at " + point_str(v.witness) + ": " + v.detail;
            return;
        }
        const IsoReport iso = check_oracle_iso(g, g.lambda());
        if (!iso) {
            rep.witness = iso.detail + " at " + point_str(iso.witness);
            return;
        }
        rep.pass = true;
    });
}

std::vector<Weight> dominant_weights(int n, int total) {
    std::vector<Weight> out;
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(0, total);
    return out;
}

std::vector<SweepCase> parse_sweep(const nlohmann::json& config) {
    static const std::set<std::string> kinds = {"main", "fundamental", "gks", "dyck", "crossings", "lemma_a", "sl3"};
    if (!config.is_object() || !config.contains("cases") || !config["cases"].is_array())
        throw std::invalid_argument("sweep config: expected an object with a \"cases\" array");
    std::vector<SweepCase> out;
    try {
        for (const auto& c : config["cases"]) {
            SweepCase base;
            base.kind = c.at("kind").get<std::string>();
            if (!kinds.count(base.kind)) throw std::invalid_argument("sweep config: unknown kind " + base.kind);
            base.n = c.value("n", 0);
            base.k = c.value("k", 0);
            base.r = c.value("r", 0);
            base.family = c.value("family", std::string());
            if (c.contains("lambda")) base.lambda = c["lambda"].get<std::vector<int>>();
            if (base.kind == "sl3") {
                base.lambda = c.at("lambda").get<std::vector<int>>();
                if (base.lambda.size() != 2) throw std::invalid_argument("sweep config: sl3 lambda needs two entries");
                out.push_back(base);
                continue;
            }
            if (base.n < 1) throw std::invalid_argument("sweep config: n must be >= 1");
            if (c.contains("max_total")) {
                const int total = c["max_total"].get<int>();
                for (const Weight& w : dominant_weights(base.n, total)) {
                    SweepCase x = base;
                    x.lambda = w.coeffs();
                    out.push_back(x);
                }
            } else if (c.contains("all_k")) {
                const int rmax = c["all_k"].get<int>();
                for (int k = 1; k <= base.n; ++k)
                    for (int r = 1; r <= std::max(1, rmax); ++r) {
                        SweepCase x = base;
                        x.k = k;
                        x.r = r;
                        out.push_back(x);
                        if (base.kind == "dyck" || base.kind == "crossings") break;
                    }
            } else {
                if (base.lambda.empty() && (base.kind == "main" || base.kind == "gks"))
                    throw std::invalid_argument("sweep config: " + base.kind + " needs lambda or max_total");
                base.lambda.resize(base.n, 0);
                out.push_back(base);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("sweep config: ") + e.what());
    }
    return out;
}

VerificationReport run_case(const SweepCase& c) {
    auto weight = [&] {
        std::vector<int> l = c.lambda;
        l.resize(c.n, 0);
        return Weight(l);
    };
    if (c.kind == "main") return verify_main(c.n, weight());
    if (c.kind == "gks") return verify_gks_sanity(c.n, weight());
    if (c.kind == "fundamental") return verify_fundamental(c.n, c.k, c.r);
    if (c.kind == "dyck") return verify_dyck_correspondence(c.n, c.k);
    if (c.kind == "crossings") return verify_crossings(c.n, c.k);
    if (c.kind == "lemma_a") return verify_lemma_A(c.n, c.k, c.r);
    if (c.kind == "sl3") return verify_sl3(c.lambda[0], c.lambda[1], c.family.empty() ? "gt" : c.family);
    throw std::invalid_argument("run_case: unknown kind " + c.kind);
}

std::vector<VerificationReport> run_sweep(const std::vector<SweepCase>& cases, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<VerificationReport> out(cases.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, cases.size()); ++t)
        workers.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) out[i] = run_case(cases[i]);
        }));
    for (auto& w : workers) w.get();
    std::stable_sort(out.begin(), out.end(),
                     [](const VerificationReport& a, const VerificationReport& b) { return a.key() < b.key(); });
    return out;
}

}  // namespace fflv
