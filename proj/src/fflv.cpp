// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fflv/fflv.hpp"

#include <numeric>
#include <stdexcept>

namespace fflv {

namespace {

void extend(int n, DyckPath& current, std::vector<DyckPath>& out) {
    const Root last = current.roots.back();
    if (last.is_simple()) {
        current.end = last.i;
        out.push_back(current);
    }
    const Root moves[] = {{last.i + 1, last.j}, {last.i, last.j + 1}};
    for (const Root& next : moves) {
        if (next.i > next.j || next.j > n) continue;
        current.roots.push_back(next);
        extend(n, current, out);
        current.roots.pop_back();
    }
}

void subsets_rec(int m, int k, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = from; v <= m; ++v) {
        cur.push_back(v);
        subsets_rec(m, k, v + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

bool is_dyck_path(int n, const DyckPath& p) {
    if (p.roots.empty()) return false;
    const Root& first = p.roots.front();
    const Root& last = p.roots.back();
    if (!first.is_simple() || !last.is_simple() || first.i != p.start || last.i != p.end) return false;
    for (const Root& r : p.roots)
        if (r.i < 1 || r.i > r.j || r.j > n) return false;
    for (std::size_t k = 0; k + 1 < p.roots.size(); ++k) {
        const Root& a = p.roots[k];
        const Root& b = p.roots[k + 1];
        bool step = (b.i == a.i + 1 && b.j == a.j) || (b.i == a.i && b.j == a.j + 1);
        if (!step) return false;
    }
    return true;
}

std::vector<DyckPath> dyck_paths(int n) {
    if (n < 1) throw std::invalid_argument("dyck_paths: rank must be >= 1");
    std::vector<DyckPath> out;
    for (int i = 1; i <= n; ++i) {
        DyckPath current{i, i, {{i, i}}};
        std::vector<DyckPath> from_i;
        extend(n, current, from_i);
        // DFS emits by discovery order; regroup by endpoint.
        std::stable_sort(from_i.begin(), from_i.end(),
                         [](const DyckPath& a, const DyckPath& b) { return a.end < b.end; });
        out.insert(out.end(), from_i.begin(), from_i.end());
    }
    return out;
}

HPolytope fflv_hrep(int n, const Weight& lambda) {
    if (lambda.rank() != n) throw std::invalid_argument("fflv_hrep: weight rank differs from n");
    HPolytope p;
    p.dim = num_positive_roots(n);
    p.implicit_nonneg = true;
    for (const DyckPath& path : dyck_paths(n)) {
        Inequality row;
        row.coeffs.assign(p.dim, 0);
        for (const Root& r : path.roots) row.coeffs[root_index(n, r)] = 1;
        row.rhs = lambda.partial_sum(path.start, path.end);
        p.rows.push_back(std::move(row));
    }
    return p;
}

int fflv_box_bound(const Weight& lambda) { return lambda.total(); }

PointSet fflv_points(const Weight& lambda) {
    return lattice_points(fflv_hrep(lambda.rank(), lambda), fflv_box_bound(lambda));
}

std::vector<FundamentalPoint> fundamental_points(int n, int k) {
    if (k < 1 || k > n) throw std::out_of_range("fundamental_points: k outside [1, n]");
    const int m = n + 1;
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    subsets_rec(m, k, 1, cur, subsets);

    std::vector<FundamentalPoint> out;
    for (auto& js : subsets) {
        // s = #{j <= k}; p_1 < ... < p_{k-s} enumerate [k] minus the j's.
        int s = 0;
        while (s < k && js[s] <= k) ++s;
        std::vector<int> ps;
        for (int v = 1, idx = 0; v <= k; ++v) {
            if (idx < s && js[idx] == v) {
                ++idx;
                continue;
            }
            ps.push_back(v);
        }
        LatticePoint x(num_positive_roots(n), 0);
        for (int r = 1; r <= k - s; ++r) {
            // (p_r, j_{k-r+1} - 1)
            Root root{ps[r - 1], js[k - r] - 1};
            x[root_index(n, root)] = 1;
        }
        out.push_back({std::move(js), std::move(x)});
    }
    return out;
}

std::int64_t weyl_dim(const Weight& lambda) {
    const std::vector<int> mu = lambda.content();
    const int m = static_cast<int>(mu.size());
    std::int64_t num = 1;
    std::int64_t den = 1;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            std::int64_t a = mu[i - 1] - mu[j - 1] + (j - i);
            std::int64_t b = j - i;
            std::int64_t g = std::gcd(a, b);
            a /= g;
            b /= g;
            std::int64_t g1 = std::gcd(a, den);
            std::int64_t g2 = std::gcd(num, b);
            if (__builtin_mul_overflow(num / g2, a / g1, &num) ||
                __builtin_mul_overflow(den / g1, b / g2, &den))
                throw std::overflow_error("weyl_dim overflow");
        }
    if (num % den != 0) throw std::logic_error("weyl_dim: non-integral product");
    return num / den;
}

}  // namespace fflv
