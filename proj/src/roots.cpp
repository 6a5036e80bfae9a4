// Copyright (c) fflv-lusztig contributors.
// SPDX-License-Identifier: Apache-2.0
#include "fflv/roots.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fflv {

namespace {

std::string join(std::span<const int> xs, const char* sep) {
    std::ostringstream out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) out << sep;
        out << xs[k];
    }
    return out.str();
}

void require_rank(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1, got " + std::to_string(n));
}

void reduced_words_rec(int n, std::vector<int>& perm, std::vector<int>& prefix, int remaining,
                       std::vector<ReducedWord>& out) {
    if (remaining == 0) {
        out.push_back(ReducedWord::from_letters(n, prefix));
        return;
    }
    for (int i = 1; i <= n; ++i) {
        if (perm[i - 1] > perm[i]) continue;
        std::swap(perm[i - 1], perm[i]);
        prefix.push_back(i);
        reduced_words_rec(n, perm, prefix, remaining - 1, out);
        prefix.pop_back();
        std::swap(perm[i - 1], perm[i]);
    }
}

}  // namespace

std::string to_string(const Root& r) {
    return "a" + std::to_string(r.i) + "," + std::to_string(r.j);
}

int num_positive_roots(int n) { return n * (n + 1) / 2; }

std::vector<Root> positive_roots(int n) {
    require_rank(n);
    std::vector<Root> roots;
    roots.reserve(num_positive_roots(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) roots.push_back({i, j});
    return roots;
}

int root_index(int n, Root r) {
    if (r.i < 1 || r.i > r.j || r.j > n)
        throw std::out_of_range("not a positive root of A_" + std::to_string(n) + ": " + to_string(r));
    // Rows i' < i contribute n - i' + 1 roots each.
    int before = (r.i - 1) * n - (r.i - 1) * (r.i - 2) / 2;
    return before + (r.j - r.i);
}

bool is_reduced(int n, std::span<const int> letters) {
    if (n < 1 || static_cast<int>(letters.size()) != num_positive_roots(n)) return false;
    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 1);
    for (int letter : letters) {
        if (letter < 1 || letter > n) return false;
        // Right multiplication by s_i raises the length iff positions i, i+1 are not inverted.
        if (perm[letter - 1] > perm[letter]) return false;
        std::swap(perm[letter - 1], perm[letter]);
    }
    return true;
}

ReducedWord ReducedWord::from_letters(int n, std::vector<int> letters) {
    require_rank(n);
    if (!is_reduced(n, letters))
        throw std::invalid_argument("not a reduced word of w0 in rank " + std::to_string(n) + ": (" +
                                    join(letters, ",") + ")");
    return ReducedWord(n, std::move(letters));
}

std::string ReducedWord::to_string() const { return "(" + join(letters_, ",") + ")"; }

ReducedWord lexmin_word(int n) {
    require_rank(n);
    std::vector<int> w;
    for (int j = 1; j <= n; ++j)
        for (int i = j; i >= 1; --i) w.push_back(i);
    return ReducedWord::from_letters(n, std::move(w));
}

ReducedWord lexmax_word(int n) {
    require_rank(n);
    std::vector<int> w;
    for (int j = n; j >= 1; --j)
        for (int i = j; i <= n; ++i) w.push_back(i);
    return ReducedWord::from_letters(n, std::move(w));
}

ReducedWord ik_word(int n, int k) {
    require_rank(n);
    if (k < 1 || k > n)
        throw std::out_of_range("ik_word: k=" + std::to_string(k) + " outside [1," + std::to_string(n) + "]");
    std::vector<int> w;
    // w_{k,n} = (s_k ... s_1)(s_{k+1} ... s_2) ... (s_n ... s_{n-k+1})
    for (int c = 0; c <= n - k; ++c)
        for (int i = k + c; i >= 1 + c; --i) w.push_back(i);
    // S_{n-(k-1)+[k-1]} = (s_n ... s_{n-k+2}) ... (s_n s_{n-1}) s_n
    for (int len = k - 1; len >= 1; --len)
        for (int i = n; i >= n - len + 1; --i) w.push_back(i);
    // S_{[n-k]} = (s_1 ... s_{n-k}) ... (s_1 s_2) s_1
    for (int len = n - k; len >= 1; --len)
        for (int i = 1; i <= len; ++i) w.push_back(i);
    return ReducedWord::from_letters(n, std::move(w));
}

std::vector<ReducedWord> all_reduced_words(int n) {
    require_rank(n);
    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> prefix;
    std::vector<ReducedWord> out;
    reduced_words_rec(n, perm, prefix, num_positive_roots(n), out);
    return out;
}

ReducedWord random_reduced_word(int n, std::mt19937_64& rng) {
    require_rank(n);
    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> w;
    std::vector<int> ascents;
    for (int step = 0; step < num_positive_roots(n); ++step) {
        ascents.clear();
        for (int i = 1; i <= n; ++i)
            if (perm[i - 1] < perm[i]) ascents.push_back(i);
        std::uniform_int_distribution<std::size_t> pick(0, ascents.size() - 1);
        int i = ascents[pick(rng)];
        std::swap(perm[i - 1], perm[i]);
        w.push_back(i);
    }
    return ReducedWord::from_letters(n, std::move(w));
}

std::vector<Root> root_enumeration(const ReducedWord& w) {
    const int n = w.rank();
    // perm[p-1] = u(p) for the prefix product u = s_{i_1} ... s_{i_{k-1}}.
    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Root> beta;
    beta.reserve(w.size());
    for (int letter : w.letters()) {
        // u(alpha_i) = e_{u(i)} - e_{u(i+1)}, positive because the word is reduced.
        int lo = perm[letter - 1];
        int hi = perm[letter];
        if (lo > hi) throw std::logic_error("root_enumeration: word is not reduced");
        beta.push_back({lo, hi - 1});
        std::swap(perm[letter - 1], perm[letter]);
    }
    return beta;
}

LatticePoint to_word_frame(const ReducedWord& w, std::span<const int> canonical) {
    const int n = w.rank();
    if (static_cast<int>(canonical.size()) != num_positive_roots(n))
        throw std::invalid_argument("to_word_frame: dimension mismatch");
    LatticePoint out;
    out.reserve(canonical.size());
    for (const Root& r : root_enumeration(w)) out.push_back(canonical[root_index(n, r)]);
    return out;
}

LatticePoint from_word_frame(const ReducedWord& w, std::span<const int> in_word_order) {
    const int n = w.rank();
    if (static_cast<int>(in_word_order.size()) != num_positive_roots(n))
        throw std::invalid_argument("from_word_frame: dimension mismatch");
    LatticePoint out(in_word_order.size(), 0);
    auto beta = root_enumeration(w);
    for (std::size_t k = 0; k < beta.size(); ++k) out[root_index(n, beta[k])] = in_word_order[k];
    return out;
}

std::strong_ordering cmp_oplex(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) throw std::invalid_argument("cmp_oplex: length mismatch");
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k]) return a[k] < b[k] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_roplex(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) throw std::invalid_argument("cmp_roplex: length mismatch");
    for (std::size_t k = a.size(); k-- > 0;) {
        if (a[k] != b[k]) return a[k] < b[k] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

Weight::Weight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
    for (int c : coeffs_)
        if (c < 0) throw std::invalid_argument("weight coefficients must be nonnegative");
}

Weight Weight::fundamental(int n, int k, int r) {
    require_rank(n);
    if (k < 1 || k > n) throw std::out_of_range("fundamental weight index out of range");
    std::vector<int> c(n, 0);
    c[k - 1] = r;
    return Weight(std::move(c));
}

int Weight::partial_sum(int i, int j) const {
    if (i < 1 || j > rank() || i > j + 1) throw std::out_of_range("Weight::partial_sum");
    int s = 0;
    for (int k = i; k <= j; ++k) s += coeffs_[k - 1];
    return s;
}

int Weight::total() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

bool Weight::is_regular() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 1; });
}

std::vector<int> Weight::content() const {
    const int n = rank();
    std::vector<int> mu(n + 1, 0);
    for (int i = n; i >= 1; --i) mu[i - 1] = mu[i] + coeffs_[i - 1];
    return mu;
}

std::string Weight::to_string() const { return "(" + join(coeffs_, ",") + ")"; }

Weight Weight::operator+(const Weight& other) const {
    if (rank() != other.rank()) throw std::invalid_argument("Weight::operator+: rank mismatch");
    std::vector<int> c(coeffs_);
    for (int k = 0; k < rank(); ++k) c[k] += other.coeffs_[k];
    return Weight(std::move(c));
}

std::vector<int> weight_of_point(const Weight& lambda, std::span<const int> x) {
    const int n = lambda.rank();
    if (static_cast<int>(x.size()) != num_positive_roots(n))
        throw std::invalid_argument("weight_of_point: dimension mismatch");
    std::vector<int> wt = lambda.content();
    int idx = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j, ++idx) {
            wt[i - 1] -= x[idx];
            wt[j] += x[idx];
        }
    return wt;
}

}  // namespace fflv
