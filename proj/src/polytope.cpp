// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fflv/polytope.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fflv {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in polytope arithmetic");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in polytope arithmetic");
    return r;
}

class Enumerator {
public:
    Enumerator(const HPolytope& p, int box) : p_(p), box_(box), x_(p.dim, 0), partial_(p.rows.size(), 0) {
        const auto rows = p.rows.size();
        const auto dim = static_cast<std::size_t>(p.dim);
        // min_rest_[r][c] = min over x in [0,box]^{c..dim-1} of sum_{c' >= c} a_{rc'} x_{c'}
        min_rest_.assign(rows, std::vector<std::int64_t>(dim + 1, 0));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = dim; c-- > 0;) {
                std::int64_t a = p.rows[r].coeffs[c];
                min_rest_[r][c] = checked_add(min_rest_[r][c + 1], a < 0 ? checked_mul(a, box) : 0);
            }
        touching_.resize(dim);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                if (p.rows[r].coeffs[c] != 0) touching_[c].push_back(r);
    }

    std::vector<LatticePoint> run() {
        if (box_ >= 0 && feasible(0)) descend(0);
        return std::move(found_);
    }

private:
    bool feasible(std::size_t depth) const {
        for (std::size_t r = 0; r < p_.rows.size(); ++r)
            if (partial_[r] + min_rest_[r][depth] > p_.rows[r].rhs) return false;
        return true;
    }

    void descend(std::size_t c) {
        if (c == x_.size()) {
            if (contains(p_, x_)) found_.push_back(x_);
            return;
        }
        std::int64_t lo = 0;
        std::int64_t hi = box_;
        for (std::size_t r : touching_[c]) {
            const std::int64_t a = p_.rows[r].coeffs[c];
            const std::int64_t slack = p_.rows[r].rhs - partial_[r] - min_rest_[r][c + 1];
            if (a > 0)
                hi = std::min(hi, floor_div(slack, a));
            else
                lo = std::max(lo, ceil_div(slack, a));
        }
        for (std::int64_t v = lo; v <= hi; ++v) {
            x_[c] = static_cast<int>(v);
            for (std::size_t r : touching_[c]) partial_[r] += p_.rows[r].coeffs[c] * v;
            if (feasible(c + 1)) descend(c + 1);
            for (std::size_t r : touching_[c]) partial_[r] -= p_.rows[r].coeffs[c] * v;
        }
        x_[c] = 0;
    }

    const HPolytope& p_;
    std::int64_t box_;
    LatticePoint x_;
    std::vector<std::int64_t> partial_;
    std::vector<std::vector<std::int64_t>> min_rest_;
    std::vector<std::vector<std::size_t>> touching_;
    std::vector<LatticePoint> found_;
};

// A row caps coordinate c at `bound` if, together with x >= 0, it alone forces x_c <= bound.
bool row_caps(const HPolytope& p, const Inequality& row, int c, int bound) {
    if (!p.implicit_nonneg || row.coeffs[c] <= 0) return false;
    for (int v : row.coeffs)
        if (v < 0) return false;
    return floor_div(row.rhs, row.coeffs[c]) <= bound;
}

}  // namespace

std::int64_t checked_dot(std::span<const int> a, std::span<const int> x) {
    if (a.size() != x.size()) throw std::invalid_argument("checked_dot: dimension mismatch");
    std::int64_t s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s = checked_add(s, checked_mul(a[k], x[k]));
    return s;
}

bool contains(const HPolytope& p, std::span<const int> x) {
    if (static_cast<int>(x.size()) != p.dim)
        throw std::invalid_argument("contains: point of dimension " + std::to_string(x.size()) +
                                    " tested against polytope of dimension " + std::to_string(p.dim));
    if (p.implicit_nonneg && std::any_of(x.begin(), x.end(), [](int v) { return v < 0; })) return false;
    for (const auto& row : p.rows)
        if (checked_dot(row.coeffs, x) > row.rhs) return false;
    return true;
}

PointSet::PointSet(int dim, std::vector<LatticePoint> points) : dim_(dim), points_(std::move(points)) {
    for (const auto& p : points_)
        if (static_cast<int>(p.size()) != dim_) throw std::invalid_argument("PointSet: ragged point");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet PointSet::singleton(LatticePoint p) {
    const int d = static_cast<int>(p.size());
    return PointSet(d, {std::move(p)});
}

bool PointSet::contains(std::span<const int> x) const { return index_of(x) >= 0; }

int PointSet::index_of(std::span<const int> x) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), x, [](const LatticePoint& a, std::span<const int> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    if (it == points_.end() || !std::equal(it->begin(), it->end(), x.begin(), x.end())) return -1;
    return static_cast<int>(it - points_.begin());
}

void PointSet::insert(LatticePoint p) {
    if (static_cast<int>(p.size()) != dim_) throw std::invalid_argument("PointSet::insert: dimension mismatch");
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) points_.insert(it, std::move(p));
}

PointSet PointSet::difference(const PointSet& other) const {
    PointSet out(dim_);
    std::set_difference(points_.begin(), points_.end(), other.points_.begin(), other.points_.end(),
                        std::back_inserter(out.points_));
    return out;
}

bool PointSet::is_subset_of(const PointSet& other) const {
    return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

Enumeration enumerate_lattice_points(const HPolytope& p, int box_bound) {
    for (const auto& row : p.rows)
        if (static_cast<int>(row.coeffs.size()) != p.dim)
            throw std::invalid_argument("enumerate_lattice_points: row dimension mismatch");
    Enumeration result;
    result.box_bound = box_bound;
    result.points = PointSet(p.dim, Enumerator(p, box_bound).run());

    for (int c = 0; c < p.dim; ++c) {
        bool reached = std::any_of(result.points.begin(), result.points.end(),
                                   [&](const LatticePoint& x) { return x[c] == box_bound; });
        if (!reached) continue;
        bool capped = std::any_of(p.rows.begin(), p.rows.end(),
                                  [&](const Inequality& row) { return row_caps(p, row, c, box_bound); });
        if (!capped) result.uncapped_at_bound.push_back(c);
    }
    return result;
}

PointSet lattice_points(const HPolytope& p, int box_bound) { return enumerate_lattice_points(p, box_bound).points; }

PointSet sumset(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("sumset: dimension mismatch");
    std::vector<LatticePoint> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) {
            LatticePoint z(x.size());
            for (std::size_t k = 0; k < x.size(); ++k) z[k] = x[k] + y[k];
            out.push_back(std::move(z));
        }
    return PointSet(a.dim(), std::move(out));
}

std::int64_t support(const PointSet& a, std::span<const int> direction) {
    if (a.empty()) throw std::invalid_argument("support: empty point set");
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (const auto& x : a) best = std::max(best, checked_dot(direction, x));
    return best;
}

}  // namespace fflv
