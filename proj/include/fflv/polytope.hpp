// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact integer H-polytopes and finite lattice point sets.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fflv/roots.hpp"

namespace fflv {

/// coeffs . x <= rhs
struct Inequality {
    std::vector<int> coeffs;
    std::int64_t rhs = 0;

    bool operator==(const Inequality&) const = default;
};

struct HPolytope {
    int dim = 0;
    /// When set, x >= 0 is part of the description.
    bool implicit_nonneg = true;
    std::vector<Inequality> rows;

    bool operator==(const HPolytope&) const = default;
};

/// Exact membership test. Throws std::invalid_argument on a dimension mismatch.
bool contains(const HPolytope& p, std::span<const int> x);

/// Dot product with overflow detection (throws std::overflow_error).
std::int64_t checked_dot(std::span<const int> a, std::span<const int> x);

/// Duplicate-free set of equal-length integer vectors, kept sorted.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(int dim) : dim_(dim) {}
    /// Sorts and deduplicates. Throws std::invalid_argument on ragged input.
    PointSet(int dim, std::vector<LatticePoint> points);

    static PointSet singleton(LatticePoint p);

    int dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    bool contains(std::span<const int> x) const;
    /// Index of x in sorted order, or -1.
    int index_of(std::span<const int> x) const;

    const LatticePoint& operator[](std::size_t k) const { return points_[k]; }
    const std::vector<LatticePoint>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    void insert(LatticePoint p);

    /// Points of *this missing from other.
    PointSet difference(const PointSet& other) const;
    bool is_subset_of(const PointSet& other) const;

    bool operator==(const PointSet&) const = default;

private:
    int dim_ = 0;
    std::vector<LatticePoint> points_;
};

struct Enumeration {
    PointSet points;
    int box_bound = 0;
    /// Coordinates that reach box_bound in some point without any single row capping them there.
    std::vector<int> uncapped_at_bound;

    bool bound_warning() const { return !uncapped_at_bound.empty(); }
};

/// Integer points of p inside [0, box_bound]^dim, by depth-first assignment with interval propagation.
Enumeration enumerate_lattice_points(const HPolytope& p, int box_bound);

/// enumerate_lattice_points(p, box_bound).points
PointSet lattice_points(const HPolytope& p, int box_bound);

/// {a + b : a in A, b in B}
PointSet sumset(const PointSet& a, const PointSet& b);

/// max_{a in A} d . a. Throws std::invalid_argument on an empty set.
std::int64_t support(const PointSet& a, std::span<const int> direction);

}  // namespace fflv
