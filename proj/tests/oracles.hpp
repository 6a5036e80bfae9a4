// Independent reference computations used only by the tests.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fflv/polytope.hpp"

namespace oracle {

// Integer points of p by scanning the whole box.
inline std::vector<std::vector<int>> brute_force(const fflv::HPolytope& p, int box) {
    std::vector<std::vector<int>> out;
    std::vector<int> x(p.dim, p.implicit_nonneg ? 0 : -box);
    const int lo = p.implicit_nonneg ? 0 : -box;
    while (true) {
        if (fflv::contains(p, x)) out.push_back(x);
        int c = 0;
        while (c < p.dim && x[c] == box) x[c++] = lo;
        if (c == p.dim) break;
        ++x[c];
    }
    return out;
}

// Gelfand-Tsetlin patterns with top row mu: dim V(lambda) for content mu.
inline std::int64_t gt_patterns(const std::vector<int>& top) {
    if (top.size() <= 1) return 1;
    std::int64_t total = 0;
    std::vector<int> row(top.size() - 1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == row.size()) {
            total += gt_patterns(row);
            return;
        }
        for (int v = top[i + 1]; v <= top[i]; ++v) {
            row[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return total;
}

// Monotone chains from alpha_{i,i} to alpha_{j,j} raising one index at a time.
inline std::int64_t dyck_count(int i, int j) {
    std::vector<std::vector<std::int64_t>> ways(j + 2, std::vector<std::int64_t>(j + 2, 0));
    ways[i][i] = 1;
    for (int a = i; a <= j; ++a)
        for (int b = a; b <= j; ++b) {
            if (a == i && b == i) continue;
            std::int64_t w = 0;
            if (a - 1 >= i && a - 1 <= b) w += ways[a - 1][b];
            if (b - 1 >= a) w += ways[a][b - 1];
            ways[a][b] = w;
        }
    return ways[j][j];
}

inline std::int64_t binomial(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle
