#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fflv/roots.hpp"

using namespace fflv;

namespace {

// Apply letters to the identity one-line permutation and compare against w0.
bool multiplies_to_w0(int n, const std::vector<int>& letters) {
    std::vector<int> p(n + 1);
    for (int i = 0; i <= n; ++i) p[i] = i + 1;
    for (int s : letters) std::swap(p[s - 1], p[s]);
    for (int i = 0; i <= n; ++i)
        if (p[i] != n + 1 - i) return false;
    return static_cast<int>(letters.size()) == n * (n + 1) / 2;
}

}  // namespace

TEST_SUITE("roots") {
    TEST_CASE("positive roots in canonical order") {
        CHECK(positive_roots(1) == std::vector<Root>{{1, 1}});
        CHECK(positive_roots(2) == std::vector<Root>{{1, 1}, {1, 2}, {2, 2}});
        CHECK(positive_roots(5).size() == 15);
        for (int n = 1; n <= 6; ++n) {
            const auto roots = positive_roots(n);
            CHECK(std::is_sorted(roots.begin(), roots.end()));
            for (int idx = 0; idx < static_cast<int>(roots.size()); ++idx) CHECK(root_index(n, roots[idx]) == idx);
        }
        CHECK_THROWS_AS(root_index(3, {2, 1}), std::out_of_range);
        CHECK(to_string(Root{1, 2}) == "a1,2");
    }

    TEST_CASE("reducedness") {
        CHECK(is_reduced(2, std::vector<int>{1, 2, 1}));
        CHECK_FALSE(is_reduced(2, std::vector<int>{1, 1, 2}));
        CHECK_FALSE(is_reduced(2, std::vector<int>{1, 2}));
        CHECK_THROWS_AS(ReducedWord::from_letters(2, {1, 1, 2}), std::invalid_argument);
        CHECK_THROWS_AS(ReducedWord::from_letters(2, {1, 3, 1}), std::invalid_argument);
    }

    TEST_CASE("named words") {
        CHECK(lexmin_word(3).to_string() == "(1,2,1,3,2,1)");
        CHECK(lexmax_word(3).to_string() == "(3,2,3,1,2,3)");
        CHECK(lexmin_word(1).to_string() == "(1)");
        CHECK(ik_word(3, 1).to_string() == "(1,2,3,1,2,1)");
        CHECK(ik_word(3, 2).to_string() == "(2,1,3,2,3,1)");
        CHECK(ik_word(3, 3).to_string() == "(3,2,1,3,2,3)");
        CHECK_THROWS_AS(ik_word(3, 0), std::out_of_range);
        CHECK_THROWS_AS(ik_word(3, 4), std::out_of_range);
        for (int n = 1; n <= 7; ++n)
            for (int k = 1; k <= n; ++k) {
                const auto w = ik_word(n, k);
                CHECK(multiplies_to_w0(n, {w.letters().begin(), w.letters().end()}));
            }
    }

    TEST_CASE("all reduced words: counts and validity") {
        // Number of reduced words of the longest element of S_{n+1}: 1, 2, 16, 768.
        const std::size_t expect[] = {0, 1, 2, 16, 768};
        for (int n = 1; n <= 4; ++n) {
            const auto words = all_reduced_words(n);
            CHECK(words.size() == expect[n]);
            std::set<std::vector<int>> distinct;
            for (const auto& w : words) {
                std::vector<int> l(w.letters().begin(), w.letters().end());
                CHECK(multiplies_to_w0(n, l));
                distinct.insert(l);
            }
            CHECK(distinct.size() == words.size());
            CHECK(words.front() == lexmin_word(n));
            CHECK(words.back() == lexmax_word(n));
        }
    }

    TEST_CASE("random reduced words are reduced") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + trial % 6;
            const auto w = random_reduced_word(n, rng);
            CHECK(multiplies_to_w0(n, {w.letters().begin(), w.letters().end()}));
        }
    }

    TEST_CASE("root enumeration") {
        CHECK(root_enumeration(lexmin_word(2)) == std::vector<Root>{{1, 1}, {1, 2}, {2, 2}});
        const auto b = root_enumeration(ik_word(3, 2));
        CHECK(std::vector<Root>(b.begin(), b.begin() + 4) == std::vector<Root>{{2, 2}, {1, 2}, {2, 3}, {1, 3}});
        for (int n = 1; n <= 5; ++n)
            for (int k = 1; k <= n; ++k) {
                const auto beta = root_enumeration(ik_word(n, k));
                const int head = k * (n - k + 1);
                for (int l = head; l < static_cast<int>(beta.size()); ++l) CHECK_FALSE(beta[l].contains(k));
            }
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            const auto w = random_reduced_word(4, rng);
            auto beta = root_enumeration(w);
            std::sort(beta.begin(), beta.end());
            CHECK(beta == positive_roots(4));
            LatticePoint x(10);
            std::iota(x.begin(), x.end(), 3);
            CHECK(from_word_frame(w, to_word_frame(w, x)) == x);
        }
    }

    TEST_CASE("orderings") {
        const std::vector<int> a{0, 1, 0}, b{0, 0, 1}, z{0, 0, 0}, e{1, 0, 0};
        CHECK(cmp_roplex(a, b) == std::strong_ordering::greater);
        CHECK(cmp_roplex(b, a) == std::strong_ordering::less);
        CHECK(cmp_oplex(a, a) == std::strong_ordering::equal);
        CHECK(cmp_oplex(z, e) == std::strong_ordering::greater);
        CHECK_THROWS_AS(cmp_oplex(a, std::vector<int>{1}), std::invalid_argument);

        // Total order properties on random vectors.
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<int> d(0, 2);
        std::vector<std::vector<int>> pts(40, std::vector<int>(4));
        for (auto& p : pts)
            for (int& v : p) v = d(rng);
        for (const auto& x : pts)
            for (const auto& y : pts) {
                CHECK((cmp_oplex(x, y) == 0) == (x == y));
                CHECK((cmp_oplex(x, y) > 0) == (cmp_oplex(y, x) < 0));
                CHECK((cmp_roplex(x, y) > 0) == (cmp_roplex(y, x) < 0));
                for (const auto& z2 : pts)
                    if (cmp_oplex(x, y) > 0 && cmp_oplex(y, z2) > 0) CHECK(cmp_oplex(x, z2) > 0);
            }
    }

    TEST_CASE("weights") {
        const Weight l({1, 1});
        CHECK(l.content() == std::vector<int>{2, 1, 0});
        CHECK(weight_of_point(l, std::vector<int>{0, 0, 0}) == std::vector<int>{2, 1, 0});
        CHECK(weight_of_point(l, std::vector<int>{1, 0, 0}) == std::vector<int>{1, 2, 0});
        CHECK(l.partial_sum(1, 2) == 2);
        CHECK(l.is_regular());
        CHECK_FALSE(Weight({1, 0}).is_regular());
        CHECK(Weight::fundamental(3, 2, 4) == Weight({0, 4, 0}));
        CHECK_THROWS_AS(Weight({1, -1}), std::invalid_argument);
        CHECK((Weight({1, 0}) + Weight({0, 2})) == Weight({1, 2}));
    }
}
