// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Type A_n root-system bookkeeping: positive roots, reduced words of the
// longest permutation, root enumerations and dominant weights.
//
// Coordinates on the positive roots always use the canonical frame: roots
// alpha_{i,j} sorted lexicographically by (i, j). Word-induced enumerations
// are converted explicitly with to_word_frame / from_word_frame.
#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace fflv {

/// Integer vector indexed by the positive roots in canonical order.
using LatticePoint = std::vector<int>;

/// alpha_{i,j} = alpha_i + ... + alpha_j, 1 <= i <= j <= n.
struct Root {
    int i = 1;
    int j = 1;

    int height() const { return j - i + 1; }
    bool is_simple() const { return i == j; }
    bool contains(int k) const { return i <= k && k <= j; }

    auto operator<=>(const Root&) const = default;
};

std::string to_string(const Root& r);

int num_positive_roots(int n);

/// All positive roots in canonical (lexicographic) order.
std::vector<Root> positive_roots(int n);

/// Position of r in positive_roots(n). Throws std::out_of_range for invalid roots.
int root_index(int n, Root r);

/// Sequence of simple-reflection indices s_{i_1} ... s_{i_N}.
class ReducedWord {
public:
    /// Throws std::invalid_argument unless the letters form a reduced word of w0.
    static ReducedWord from_letters(int n, std::vector<int> letters);

    int rank() const { return n_; }
    std::size_t size() const { return letters_.size(); }
    std::span<const int> letters() const { return letters_; }
    int operator[](std::size_t k) const { return letters_[k]; }

    std::string to_string() const;

    bool operator==(const ReducedWord&) const = default;

private:
    ReducedWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {}

    int n_;
    std::vector<int> letters_;
};

/// True iff `letters` has length N and multiplies out to w0 without a length drop.
bool is_reduced(int n, std::span<const int> letters);

ReducedWord lexmin_word(int n);
ReducedWord lexmax_word(int n);

/// The word w_{k,n} * S_{n-(k-1)+[k-1]} * S_{[n-k]}. Throws std::out_of_range if k is not in [1, n].
ReducedWord ik_word(int n, int k);

/// Every reduced word of w0 in lexicographic order (16 for n = 3, 768 for n = 4).
std::vector<ReducedWord> all_reduced_words(int n);

/// A reduced word built by appending a uniformly chosen length-increasing letter at each step.
ReducedWord random_reduced_word(int n, std::mt19937_64& rng);

/// beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}) for k = 1..N.
std::vector<Root> root_enumeration(const ReducedWord& w);

/// Reorders canonical coordinates into the enumeration induced by w, and back.
LatticePoint to_word_frame(const ReducedWord& w, std::span<const int> canonical);
LatticePoint from_word_frame(const ReducedWord& w, std::span<const int> in_word_order);

/// a >_oplex b: at the first differing coordinate from the left, a has the smaller entry.
/// Returns greater when a >_oplex b. Throws std::invalid_argument on a length mismatch.
std::strong_ordering cmp_oplex(std::span<const int> a, std::span<const int> b);

/// Same as cmp_oplex but scanning from the right.
std::strong_ordering cmp_roplex(std::span<const int> a, std::span<const int> b);

/// Dominant integral weight lambda = sum_k lambda_k varpi_k.
class Weight {
public:
    Weight() = default;
    /// Throws std::invalid_argument on negative coefficients.
    explicit Weight(std::vector<int> coeffs);

    static Weight zero(int n) { return Weight(std::vector<int>(n, 0)); }
    /// r * varpi_k in rank n.
    static Weight fundamental(int n, int k, int r = 1);

    int rank() const { return static_cast<int>(coeffs_.size()); }
    /// lambda_k, 1-based.
    int operator[](int k) const { return coeffs_.at(k - 1); }
    const std::vector<int>& coeffs() const { return coeffs_; }

    /// lambda_i + ... + lambda_j.
    int partial_sum(int i, int j) const;
    int total() const;
    bool is_zero() const { return total() == 0; }
    /// All lambda_k >= 1.
    bool is_regular() const;

    /// mu in Z^{n+1} with mu_i = lambda_i + ... + lambda_n and mu_{n+1} = 0.
    std::vector<int> content() const;

    std::string to_string() const;

    Weight operator+(const Weight& other) const;
    bool operator==(const Weight&) const = default;

private:
    std::vector<int> coeffs_;
};

/// mu - sum_{i<=j} x_{i,j} (e_i - e_{j+1}) in Z^{n+1}.
std::vector<int> weight_of_point(const Weight& lambda, std::span<const int> x);

}  // namespace fflv
