#include <doctest.h>

#include <stdexcept>

#include "fflv/crystal.hpp"
#include "fflv/fflv.hpp"
#include "fflv/serialize.hpp"
#include "fflv/tiling.hpp"

using namespace fflv;
using nlohmann::json;

TEST_SUITE("serialize") {
    TEST_CASE("round trips") {
        const HPolytope h = lusztig_hrep(lexmax_word(3), Weight({1, 2, 0}));
        CHECK(json(h).get<HPolytope>() == h);
        CHECK(json::parse(json(h).dump()).get<HPolytope>() == h);

        const PointSet p = fflv_points(Weight({2, 1}));
        CHECK(json(p).get<PointSet>() == p);
        CHECK(json(PointSet(4)).get<PointSet>() == PointSet(4));

        for (const CrystalGraph& g : {sl3_bgt(2, 1), sl3_blt(1, 3), pb_graph(3, Weight({1, 0, 1}))}) {
            const std::string text = json(g).dump();
            const CrystalGraph back = json::parse(text).get<CrystalGraph>();
            CHECK(back == g);
            CHECK(json(back).dump() == text);
        }
    }

    TEST_CASE("canonical output") {
        CHECK(json(sl3_bgt(2, 2)).dump() == json(sl3_bgt(2, 2)).dump());
        CHECK(json(fflv_hrep(3, Weight({1, 1, 1}))).dump() == json(fflv_hrep(3, Weight({1, 1, 1}))).dump());
    }

    TEST_CASE("malformed input") {
        CHECK_THROWS(json({{"dim", 2}}).get<HPolytope>());
        CHECK_THROWS(json({{"dim", 2}, {"nonneg", true}, {"rows", {{{"a", {1}}, {"b", 0}}}}}).get<HPolytope>());
        json bad = json(sl3_bgt(1, 1));
        bad["edges"][0]["color"] = 2;
        CHECK_THROWS(bad.get<CrystalGraph>());
    }
}
