#include <gtest/gtest.h>

#include "support.hpp"

using namespace orientals;
using namespace testing_support;

TEST(Json, ZMorphismRoundTrip) {
    Rng rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        auto x = random_zmorphism(rng, uniform(rng, 0, 4), uniform(rng, 0, 4));
        auto j = to_json(x);
        ASSERT_EQ(zmorphism_from_json(Json::parse(j.dump())), x);
    }
    auto j = to_json(parse_zmorphism("(0,1) - (1,1)", 2));
    EXPECT_EQ(j.dump(), R"({"m":1,"n":2,"terms":[{"coef":1,"map":[0,1]},{"coef":-1,"map":[1,1]}]})");
}

TEST(Json, ZMorphismErrors) {
    EXPECT_THROW(zmorphism_from_json(Json::parse(R"({"m":1,"n":2})")), ParseError);
    EXPECT_THROW(zmorphism_from_json(Json::parse(R"({"m":1,"n":2,"terms":[{"map":[1,0],"coef":1}]})")), ParseError);
    EXPECT_THROW(zmorphism_from_json(Json::parse(R"({"m":1,"n":2,"terms":[{"map":[0,1,2],"coef":1}]})")), ParseError);
    EXPECT_THROW(zmorphism_from_json(Json::parse(R"({"m":"1","n":2,"terms":[]})")), ParseError);
}

TEST(Json, CellsRoundTrip) {
    for (int n = 0; n <= 2; ++n)
        for (const auto& c : enumerate_nu(n)) ASSERT_EQ(double_seq_from_json(Json::parse(to_json(c).dump())), c);
    auto bad = Json::parse(R"({"n":1,"pairs":[{"neg":[{"basis":[0],"coef":1}],"pos":[{"basis":[0],"coef":2}]}]})");
    EXPECT_THROW(double_seq_from_json(bad), InvalidInputError);
    auto misplaced = Json::parse(R"({"n":1,"pairs":[{"neg":[{"basis":[0,1],"coef":1}],"pos":[]}]})");
    EXPECT_THROW(double_seq_from_json(misplaced), ParseError);
}

TEST(Json, ChainMapsRoundTrip) {
    Rng rng(62);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = random_zmorphism(rng, uniform(rng, 0, 3), uniform(rng, 0, 3));
        auto phi = to_chain_map(x);
        auto j = to_json(phi);
        ASSERT_EQ(from_chain_map(chain_map_from_json(Json::parse(j.dump()))), x);
    }
    auto j = to_json(to_chain_map(parse_zmorphism("(0,1)", 1)));
    EXPECT_TRUE(j["images"].contains("[0,1]"));
}

TEST(Json, ExpressionsRoundTrip) {
    Rng rng(63);
    for (int trial = 0; trial < 200; ++trial) {
        int n = uniform(rng, 0, 3);
        auto e = random_oriental_expr(rng, uniform(rng, 0, 3), n);
        ASSERT_EQ(filler_expr_from_json(Json::parse(to_json(e).dump()), n), e);
    }
    EXPECT_THROW(filler_expr_from_json(Json::parse(R"({"op":"twist"})"), 2), ParseError);
}
