// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
//
// FFLV polytopes of type A: Dyck paths, the inequality description, explicit
// lattice points for fundamental weights, and the Weyl dimension formula.
#pragma once

#include <cstdint>
#include <vector>

#include "fflv/polytope.hpp"
#include "fflv/roots.hpp"

namespace fflv {

/// Chain of positive roots from alpha_i to alpha_j; each step raises one index by one.
struct DyckPath {
    int start = 1;
    int end = 1;
    std::vector<Root> roots;

    bool operator==(const DyckPath&) const = default;
};

/// Checks the endpoint and step conditions.
bool is_dyck_path(int n, const DyckPath& p);

/// All Dyck paths of A_n grouped by (start, end) in lexicographic order.
std::vector<DyckPath> dyck_paths(int n);

/// One row per Dyck path: sum over the path <= lambda_i + ... + lambda_j, plus x >= 0.
HPolytope fflv_hrep(int n, const Weight& lambda);

/// sum_s lambda_s; every coordinate of FFLV_n(lambda) is bounded by it.
int fflv_box_bound(const Weight& lambda);

/// lattice_points(fflv_hrep(n, lambda), fflv_box_bound(lambda))
PointSet fflv_points(const Weight& lambda);

struct FundamentalPoint {
    std::vector<int> subset;  // j_1 < ... < j_k in [1, n+1]
    LatticePoint point;
};

/// The points p_{j_1,...,j_k}, one per k-subset of [n+1], in lexicographic subset order.
std::vector<FundamentalPoint> fundamental_points(int n, int k);

/// Dimension of V(lambda); exact.
std::int64_t weyl_dim(const Weight& lambda);

}  // namespace fflv
