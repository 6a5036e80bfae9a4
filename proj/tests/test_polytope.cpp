#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "fflv/fflv.hpp"
#include "fflv/polytope.hpp"
#include "oracles.hpp"

using namespace fflv;

namespace {

HPolytope random_polytope(std::mt19937_64& rng, int dim) {
    std::uniform_int_distribution<int> coeff(-1, 2), rhs(0, 4), nrows(1, 4);
    HPolytope p;
    p.dim = dim;
    const int rows = nrows(rng);
    for (int r = 0; r < rows; ++r) {
        Inequality row;
        for (int c = 0; c < dim; ++c) row.coeffs.push_back(coeff(rng));
        row.rhs = rhs(rng);
        p.rows.push_back(row);
    }
    return p;
}

}  // namespace

TEST_SUITE("polytope") {
    TEST_CASE("membership") {
        const HPolytope h = fflv_hrep(2, Weight({1, 1}));
        CHECK_FALSE(contains(h, std::vector<int>{1, 0, 2}));
        CHECK(contains(h, std::vector<int>{1, 0, 1}));
        CHECK(contains(h, std::vector<int>{0, 0, 0}));
        CHECK_FALSE(contains(h, std::vector<int>{-1, 0, 0}));
        CHECK_THROWS_AS(contains(h, std::vector<int>{0, 0}), std::invalid_argument);
    }

    TEST_CASE("overflow is detected") {
        // Each product fits in 64 bits; the sum of three does not.
        const std::vector<int> big(3, 2'100'000'000);
        HPolytope p{3, true, {{big, 0}}};
        CHECK_NOTHROW(checked_dot(std::vector<int>{big[0], big[1]}, std::vector<int>{big[0], big[1]}));
        CHECK_THROWS_AS(checked_dot(p.rows[0].coeffs, big), std::overflow_error);
        CHECK_THROWS_AS(contains(p, big), std::overflow_error);
    }

    TEST_CASE("enumeration agrees with a brute-force scan") {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 300; ++trial) {
            const int dim = 1 + trial % 4;
            const HPolytope p = random_polytope(rng, dim);
            const int box = 3;
            const PointSet fast = lattice_points(p, box);
            const PointSet slow(dim, oracle::brute_force(p, box));
            CHECK(fast == slow);
        }
    }

    TEST_CASE("known point sets") {
        const PointSet f11 = lattice_points(fflv_hrep(2, Weight({1, 1})), 2);
        CHECK(f11 == PointSet(3, {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}, {0, 2, 0}}));
        CHECK(lattice_points(fflv_hrep(2, Weight({2, 2})), 4).size() == 27);
        HPolytope zero{2, true, {{{1, 1}, 0}}};
        CHECK(lattice_points(zero, 5) == PointSet::singleton({0, 0}));
    }

    TEST_CASE("row order does not matter") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            HPolytope p = random_polytope(rng, 3);
            const PointSet before = lattice_points(p, 3);
            std::shuffle(p.rows.begin(), p.rows.end(), rng);
            CHECK(lattice_points(p, 3) == before);
        }
    }

    TEST_CASE("bound warning") {
        // x_1 - x_2 <= 0 with x_2 <= 5: x_1 reaches the box 2 without a capping row.
        HPolytope p{2, true, {{{1, -1}, 0}, {{0, 1}, 5}}};
        const Enumeration e = enumerate_lattice_points(p, 2);
        CHECK(e.bound_warning());
        const Enumeration ok = enumerate_lattice_points(fflv_hrep(2, Weight({1, 1})), 2);
        CHECK_FALSE(ok.bound_warning());
    }

    TEST_CASE("sumset") {
        const PointSet a = fflv_points(Weight({1, 0}));
        const PointSet b = fflv_points(Weight({0, 1}));
        CHECK(sumset(a, b) == fflv_points(Weight({1, 1})));
        CHECK(sumset(a, PointSet::singleton({0, 0, 0})) == a);
        CHECK(sumset(PointSet::singleton({1, 2}), PointSet::singleton({3, 4})).size() == 1);
        CHECK_THROWS_AS(sumset(a, PointSet::singleton({0})), std::invalid_argument);
    }

    TEST_CASE("sumset commutes and support is additive") {
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<int> v(-3, 3);
        const PointSet a = fflv_points(Weight({2, 1}));
        const PointSet b = fflv_points(Weight({0, 2}));
        const PointSet ab = sumset(a, b);
        CHECK(ab == sumset(b, a));
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> d{v(rng), v(rng), v(rng)};
            CHECK(support(ab, d) == support(a, d) + support(b, d));
        }
        CHECK(support(PointSet::singleton({0, 0, 0}), std::vector<int>{4, -1, 2}) == 0);
        CHECK(support(fflv_points(Weight({1, 1})), std::vector<int>{1, 1, 1}) == 2);
        CHECK_THROWS_AS(support(PointSet(3), std::vector<int>{1, 1, 1}), std::invalid_argument);
    }

    TEST_CASE("point set operations") {
        PointSet s(2, {{1, 1}, {0, 0}, {1, 1}});
        CHECK(s.size() == 2);
        CHECK(s.index_of(std::vector<int>{1, 1}) == 1);
        CHECK(s.index_of(std::vector<int>{2, 1}) == -1);
        s.insert({0, 1});
        CHECK(s.size() == 3);
        CHECK(PointSet(2, {{0, 0}}).is_subset_of(s));
        CHECK(s.difference(PointSet(2, {{0, 0}})).size() == 2);
        CHECK_THROWS_AS(PointSet(2, {{0}}), std::invalid_argument);
    }
}
