// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
//
// fflv: command-line front end.
//
//   fflv word --n 3 --ik 2
//   fflv verify main --n 2 --lambda 1,1
//   fflv crystal sl3 --gt --a 1 --b 1 --format dot
//
// Exit status: 0 success, 1 a verification failed, 2 usage or input error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "fflv/crystal.hpp"
#include "fflv/fflv.hpp"
#include "fflv/serialize.hpp"
#include "fflv/tiling.hpp"
#include "fflv/verify.hpp"

using namespace fflv;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
        }
    }
    return out;
}

Weight parse_lambda(int n, const std::string& text) {
    std::vector<int> c = parse_list(text, "lambda");
    if (static_cast<int>(c.size()) > n) throw UsageError("lambda has more than n entries");
    c.resize(n, 0);
    for (int v : c)
        if (v < 0) throw UsageError("lambda entries must be nonnegative");
    return Weight(c);
}

struct WordSpec {
    int ik = 0;
    bool lexmin = false;
    bool lexmax = false;
    std::string letters;

    void attach(CLI::App* cmd) {
        auto* g = cmd->add_option_group("word", "reduced word of w0 (default --lexmin)");
        g->add_option("--ik", ik, "the word i^k");
        g->add_flag("--lexmin", lexmin, "lexicographically smallest word");
        g->add_flag("--lexmax", lexmax, "lexicographically largest word");
        g->add_option("--word", letters, "explicit letters, comma separated");
        g->require_option(0, 1);
    }

    ReducedWord resolve(int n) const {
        if (ik != 0) {
            if (ik < 1 || ik > n) throw UsageError("--ik must lie in [1, n]");
            return ik_word(n, ik);
        }
        if (lexmax) return lexmax_word(n);
        if (!letters.empty()) {
            try {
                return ReducedWord::from_letters(n, parse_list(letters, "word"));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        return lexmin_word(n);
    }
};

std::string point_text(const LatticePoint& x) {
    std::string s = "(";
    for (std::size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + std::to_string(x[k]);
    return s + ")";
}

std::string points_text(const PointSet& s) {
    std::string out;
    for (const auto& x : s) out += point_text(x) + "\n";
    return out;
}

std::string hrep_text(int n, const HPolytope& p) {
    const auto roots = positive_roots(n);
    std::string out;
    for (const auto& row : p.rows) {
        std::string lhs;
        for (std::size_t c = 0; c < row.coeffs.size(); ++c) {
            const int v = row.coeffs[c];
            if (v == 0) continue;
            lhs += v > 0 ? (lhs.empty() ? "" : " + ") : (lhs.empty() ? "-" : " - ");
            if (std::abs(v) != 1) lhs += std::to_string(std::abs(v)) + "*";
            lhs += "x" + to_string(roots[c]).substr(1);
        }
        out += lhs + " <= " + std::to_string(row.rhs) + "\n";
    }
    return out;
}

class Output {
public:
    explicit Output(const std::string& path) : path_(path) {}
    void write(const std::string& text) const {
        if (path_.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path_, std::ios::binary);
        if (!f) throw UsageError("cannot open " + path_);
        f << text;
    }

private:
    const std::string& path_;
};

int report_exit(const std::vector<VerificationReport>& reports, const Output& out) {
    out.write(json(reports).dump(2) + "\n");
    int failed = 0;
    for (const auto& r : reports) {
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.key();
        if (!r.pass) std::cerr << "  witness: " << r.witness, ++failed;
        std::cerr << "\n";
    }
    std::cerr << reports.size() - failed << "/" << reports.size() << " passed\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FFLV and Lusztig polytopes, rhombic tilings and crystal graphs of type A"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    app.add_option("--out", out_path, "write the result to FILE instead of stdout");
    const Output out(out_path);

    int n = 2;
    std::string lambda_text;
    std::string format = "text";
    int box = -1;
    std::function<int()> action;

    auto add_n = [&](CLI::App* c) { c->add_option("--n", n, "rank")->required()->check(CLI::Range(1, 12)); };
    auto add_lambda = [&](CLI::App* c) { c->add_option("--lambda", lambda_text, "coefficients lambda_1,...,lambda_n"); };

    // roots
    auto* roots_cmd = app.add_subcommand("roots", "positive roots in canonical order");
    add_n(roots_cmd);
    roots_cmd->callback([&] {
        action = [&] {
            std::string s;
            int idx = 0;
            for (const Root& r : positive_roots(n)) s += std::to_string(idx++) + " " + to_string(r) + "\n";
            out.write(s);
            return 0;
        };
    });

    // word
    WordSpec word_spec;
    bool show_roots = false;
    auto* word_cmd = app.add_subcommand("word", "reduced words of w0");
    add_n(word_cmd);
    word_spec.attach(word_cmd);
    word_cmd->add_flag("--roots", show_roots, "also print the induced root enumeration");
    word_cmd->callback([&] {
        action = [&] {
            const ReducedWord w = word_spec.resolve(n);
            std::string s = w.to_string() + "\n";
            if (show_roots)
                for (const Root& r : root_enumeration(w)) s += to_string(r) + "\n";
            out.write(s);
            return 0;
        };
    });

    // fflv
    bool want_points = false;
    auto* fflv_cmd = app.add_subcommand("fflv", "FFLV polytope: inequalities or lattice points");
    add_n(fflv_cmd);
    add_lambda(fflv_cmd);
    fflv_cmd->add_flag("--points", want_points, "list lattice points");
    fflv_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    fflv_cmd->add_option("--box", box, "override the coordinate bound");
    fflv_cmd->callback([&] {
        action = [&] {
            const Weight lambda = parse_lambda(n, lambda_text);
            const HPolytope h = fflv_hrep(n, lambda);
            if (!want_points) {
                out.write(format == "json" ? json(h).dump(2) + "\n" : hrep_text(n, h));
                return 0;
            }
            const PointSet pts = lattice_points(h, box >= 0 ? box : fflv_box_bound(lambda));
            out.write(format == "json" ? json(pts).dump() + "\n" : points_text(pts));
            return 0;
        };
    });

    // tiling
    auto* tiling_cmd = app.add_subcommand("tiling", "rhombic tiling of a reduced word");
    add_n(tiling_cmd);
    WordSpec tiling_word;
    tiling_word.attach(tiling_cmd);
    std::string tiling_format = "json";
    tiling_cmd->add_option("--format", tiling_format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
    tiling_cmd->callback([&] {
        action = [&] {
            const Tiling t = Tiling::build(tiling_word.resolve(n));
            out.write(tiling_format == "svg" ? tiling_svg(t) : tiling_json(t) + "\n");
            return 0;
        };
    });

    // lusztig
    auto* lus_cmd = app.add_subcommand("lusztig", "Lusztig polytope of a reduced word");
    add_n(lus_cmd);
    add_lambda(lus_cmd);
    WordSpec lus_word;
    lus_word.attach(lus_cmd);
    lus_cmd->add_flag("--points", want_points, "list lattice points");
    lus_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    lus_cmd->add_option("--box", box, "fixed coordinate bound instead of adaptive enumeration");
    lus_cmd->callback([&] {
        action = [&] {
            const Weight lambda = parse_lambda(n, lambda_text);
            const ReducedWord w = lus_word.resolve(n);
            const HPolytope h = lusztig_hrep(w, lambda);
            if (!want_points) {
                out.write(format == "json" ? json(h).dump(2) + "\n" : hrep_text(n, h));
                return 0;
            }
            PointSet pts;
            if (box >= 0) {
                pts = lattice_points(h, box);
            } else {
                const LusztigEnumeration e = lusztig_points(w, lambda);
                if (!e.consistent)
                    std::cerr << "warning: enumeration did not settle (box " << e.box_bound << ")\n";
                pts = e.points;
            }
            out.write(format == "json" ? json(pts).dump() + "\n" : points_text(pts));
            return 0;
        };
    });

    // crystal
    auto* crystal_cmd = app.add_subcommand("crystal", "crystal graphs on FFLV lattice points");
    crystal_cmd->require_subcommand(1);
    std::string crystal_format = "dot";
    int sl3_a = 1, sl3_b = 1;
    bool gt = false, lt = false;
    auto* sl3_cmd = crystal_cmd->add_subcommand("sl3", "the families B^>(a,b) and B^<(a,b)");
    auto* fam = sl3_cmd->add_option_group("family");
    fam->add_flag("--gt", gt, "B^>(a,b)");
    fam->add_flag("--lt", lt, "B^<(a,b)");
    fam->require_option(1);
    sl3_cmd->add_option("--a", sl3_a, "coefficient of varpi_1")->check(CLI::NonNegativeNumber);
    sl3_cmd->add_option("--b", sl3_b, "coefficient of varpi_2")->check(CLI::NonNegativeNumber);
    sl3_cmd->add_option("--format", crystal_format, "dot, json or text")->check(CLI::IsMember({"dot", "json", "text"}));
    auto emit_graph = [&](const CrystalGraph& g, const std::string& name) {
        if (crystal_format == "dot") return out.write(crystal_dot(g, name));
        if (crystal_format == "json") return out.write(json(g).dump(2) + "\n");
        std::string s;
        for (const auto& [src, a, tgt] : g.edge_points())
            s += point_text(src) + " -" + std::to_string(a) + "-> " + point_text(tgt) + "\n";
        out.write(s);
    };
    sl3_cmd->callback([&] {
        action = [&] {
            emit_graph(gt ? sl3_bgt(sl3_a, sl3_b) : sl3_blt(sl3_a, sl3_b), gt ? "B_gt" : "B_lt");
            return 0;
        };
    });
    auto* pb_cmd = crystal_cmd->add_subcommand("pb", "graph of all candidate edges");
    add_n(pb_cmd);
    add_lambda(pb_cmd);
    pb_cmd->add_option("--format", crystal_format, "dot, json or text")->check(CLI::IsMember({"dot", "json", "text"}));
    pb_cmd->callback([&] {
        action = [&] {
            emit_graph(pb_graph(n, parse_lambda(n, lambda_text)), "PB");
            return 0;
        };
    });
    auto* oracle_cmd = crystal_cmd->add_subcommand("oracle", "reference crystal of words");
    add_n(oracle_cmd);
    add_lambda(oracle_cmd);
    oracle_cmd->callback([&] {
        action = [&] {
            const WordCrystal wc = word_oracle(n, parse_lambda(n, lambda_text));
            std::string s = "size " + std::to_string(wc.size()) + "\n";
            for (std::size_t w = 0; w < wc.size(); ++w) {
                for (int letter : wc.words()[w]) s += std::to_string(letter);
                for (int a = 1; a <= n; ++a)
                    if (wc.f(a, static_cast<int>(w)) >= 0) s += " f" + std::to_string(a) + "->" + std::to_string(wc.f(a, static_cast<int>(w)));
                s += "\n";
            }
            out.write(s);
            return 0;
        };
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verification pipelines; JSON report on stdout, summary on stderr");
    verify_cmd->require_subcommand(1);
    int vk = 1, vr = 1;
    unsigned threads = 0;
    std::string config_path;
    auto run_one = [&](const SweepCase& c) { return [&, c] { return report_exit({run_case(c)}, out); }; };
    auto* v_main = verify_cmd->add_subcommand("main", "Minkowski sum of fundamental summands against FFLV");
    add_n(v_main);
    add_lambda(v_main);
    v_main->callback([&] { action = [&] { return run_one({"main", n, parse_lambda(n, lambda_text).coeffs(), 0, 0, ""})(); }; });
    auto* v_gks = verify_cmd->add_subcommand("gks", "Lusztig counts for every reduced word");
    add_n(v_gks);
    add_lambda(v_gks);
    v_gks->callback([&] { action = [&] { return run_one({"gks", n, parse_lambda(n, lambda_text).coeffs(), 0, 0, ""})(); }; });
    for (const char* kind : {"fundamental", "lemma-a"}) {
        auto* v = verify_cmd->add_subcommand(kind, kind == std::string("fundamental") ? "FFLV(r varpi_k) against Lusztig(i^k)"
                                                                                       : "vanishing off the rectangle");
        add_n(v);
        v->add_option("--k", vk)->required();
        v->add_option("--r", vr)->check(CLI::PositiveNumber);
        const std::string k = kind == std::string("lemma-a") ? "lemma_a" : kind;
        v->callback([&, k] {
            if (vk < 1 || vk > n) throw CLI::ValidationError("--k", "must lie in [1, n]");
            action = [&, k] { return run_one({k, n, {}, vk, vr, ""})(); };
        });
    }
    for (const char* kind : {"dyck", "crossings"}) {
        auto* v = verify_cmd->add_subcommand(kind, kind == std::string("dyck") ? "crossing supports against Dyck paths"
                                                                                : "dual crossings of i^k");
        add_n(v);
        v->add_option("--k", vk)->required();
        const std::string k = kind;
        v->callback([&, k] {
            if (vk < 1 || vk > n) throw CLI::ValidationError("--k", "must lie in [1, n]");
            action = [&, k] { return run_one({k, n, {}, vk, 0, ""})(); };
        });
    }
    auto* v_sweep = verify_cmd->add_subcommand("sweep", "run a declarative case matrix");
    v_sweep->add_option("--config", config_path, "sweep JSON file")->required()->check(CLI::ExistingFile);
    v_sweep->add_option("--threads", threads, "worker threads (0 = hardware)");
    v_sweep->callback([&] {
        action = [&] {
            std::ifstream f(config_path);
            json cfg;
            try {
                cfg = json::parse(f);
            } catch (const json::exception& e) {
                throw UsageError(std::string("cannot parse config: ") + e.what());
            }
            std::vector<SweepCase> cases;
            try {
                cases = parse_sweep(cfg);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            return report_exit(run_sweep(cases, threads), out);
        };
    });

    // conjecture
    auto* conj_cmd = app.add_subcommand("conjecture", "search for crystal structures selected by an ordering");
    add_n(conj_cmd);
    add_lambda(conj_cmd);
    std::string sigma_text, mode = "exhaustive";
    std::uint64_t budget = 10'000'000;
    conj_cmd->add_option("--sigma", sigma_text, "fundamental weights from most to least preferred (default 1..n)");
    conj_cmd->add_option("--mode", mode, "greedy or exhaustive")->check(CLI::IsMember({"greedy", "exhaustive"}));
    conj_cmd->add_option("--budget", budget, "node budget for exhaustive search");
    conj_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    conj_cmd->callback([&] {
        action = [&] {
            const Weight lambda = parse_lambda(n, lambda_text);
            std::vector<int> sigma = parse_list(sigma_text, "sigma");
            if (sigma.empty())
                for (int k = 1; k <= n; ++k) sigma.push_back(k);
            SearchResult r;
            try {
                r = conjecture_search(n, lambda, sigma, mode == "greedy" ? SearchMode::greedy : SearchMode::exhaustive,
                                      budget);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (format == "json") {
                json j = {{"n", n}, {"lambda", lambda.coeffs()}, {"sigma", sigma}, {"mode", mode},
                          {"count", r.graphs.size()}, {"nodes", r.nodes}, {"incomplete", r.incomplete},
                          {"graphs", r.graphs}};
                if (mode == "greedy") j["greedy"] = {{"valid", r.greedy_valid}, {"failure", r.greedy_failure}};
                out.write(j.dump(2) + "\n");
            } else {
                std::string s = "valid graphs: " + std::to_string(r.graphs.size()) + "\nnodes: " + std::to_string(r.nodes) +
                                (r.incomplete ? "\nincomplete: budget exhausted\n" : "\n");
                if (mode == "greedy")
                    s += r.greedy_valid ? "greedy: valid\n" : "greedy: invalid (" + r.greedy_failure + ")\n";
                const bool sl3 = n == 2;
                for (const auto& g : r.graphs) {
                    std::string tag;
                    if (sl3 && g == sl3_bgt(lambda[1], lambda[2])) tag = " (B^>)";
                    if (sl3 && g == sl3_blt(lambda[1], lambda[2])) tag = " (B^<)";
                    s += "graph with " + std::to_string(g.num_edges()) + " edges" + tag + "\n";
                }
                out.write(s);
            }
            return r.incomplete ? 1 : 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action ? action() : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
