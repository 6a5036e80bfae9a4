// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks. Each returns a report; a failing report always names a
// concrete witness (a point, a row, a word or a vertex).
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fflv/polytope.hpp"
#include "fflv/roots.hpp"

namespace fflv {

struct VerificationReport {
    std::string claim;
    nlohmann::json params = nlohmann::json::object();
    bool pass = false;
    /// Empty on success.
    std::string witness;
    nlohmann::json stats = nlohmann::json::object();
    double seconds = 0.0;

    /// claim plus parameters; used to order sweep output.
    std::string key() const { return claim + " " + params.dump(); }
};

/// FFLV(r varpi_k) and the Lusztig polytope of ik_word(n, k) have the same lattice points;
/// for r = 1 they are the explicit fundamental points.
VerificationReport verify_fundamental(int n, int k, int r);

/// Iterated sumset of the fundamental summands against FFLV(lambda).
VerificationReport verify_main(int n, const Weight& lambda);
/// Same, with caller-supplied summand point sets (one per k with lambda_k > 0, increasing k).
VerificationReport verify_main_with(int n, const Weight& lambda, const std::vector<PointSet>& summands);

/// Lusztig lattice counts equal the Weyl dimension for every reduced word of rank n.
VerificationReport verify_gks_sanity(int n, const Weight& lambda);

/// After dropping coordinates outside the rectangle {alpha_{i,j} : i <= k <= j}, the inclusion-maximal
/// crossing supports for (ik_word(n, k), s = k) are exactly the saturated Dyck paths of the rectangle,
/// and every support is contained in one of them.
VerificationReport verify_dyck_correspondence(int n, int k);

/// For ik_word(n, k) and s = k: every dual crossing lies in the rectangle and the comb, the Reineke
/// filter removes nothing, and the comb row carries epsilon_k on each comb tile.
VerificationReport verify_crossings(int n, int k);

/// Vanishing off the rectangle for lattice points of (ik_word(n, k), r varpi_k).
VerificationReport verify_lemma_A(int n, int k, int r);

/// Tile count, label pairs, borders and peeling for all s in [1, 2m].
VerificationReport verify_tiling(const ReducedWord& w);

/// Local axioms and oracle isomorphism for an sl_3 family ("gt" or "lt").
VerificationReport verify_sl3(int a, int b, const std::string& family);

struct SweepCase {
    std::string kind;  // main, fundamental, gks, dyck, crossings, lemma_a, sl3
    int n = 0;
    std::vector<int> lambda;
    int k = 0;
    int r = 0;
    std::string family;
};

/// Reads {"cases": [...]} where each entry is either a single case or a generator
/// {"kind": ..., "n": ..., "max_total": t} expanding to every dominant lambda with sum <= t.
/// Throws std::invalid_argument on malformed input.
std::vector<SweepCase> parse_sweep(const nlohmann::json& config);

VerificationReport run_case(const SweepCase& c);

/// Runs cases concurrently; the result is sorted by report key.
std::vector<VerificationReport> run_sweep(const std::vector<SweepCase>& cases, unsigned threads = 0);

/// Every dominant weight of rank n with coefficient sum <= total, in lexicographic order.
std::vector<Weight> dominant_weights(int n, int total);

}  // namespace fflv
