#include <gtest/gtest.h>

#include "frobsesh/catalog.hpp"
#include "frobsesh/io.hpp"

using namespace frobsesh;

namespace {

const char* kP2 = R"({
  "dim": 2,
  "rays": [[1,0],[0,1],[-1,-1]],
  "max_cones": [[0,1],[0,2],[1,2]],
  "divisor": [0,0,1],
  "p": 2
})";

TEST(ParseInput, MinimalP2) {
    const InputSpec spec = parse_input(kP2);
    EXPECT_EQ(spec.dim, 2);
    ASSERT_EQ(spec.rays.size(), 3u);
    EXPECT_EQ(spec.rays[2], (LatticeVector{-1, -1}));
    EXPECT_EQ(spec.max_cones.size(), 3u);
    EXPECT_EQ(spec.divisor, (std::vector<Int>{0, 0, 1}));
    EXPECT_EQ(spec.p, 2u);
    EXPECT_FALSE(spec.cone.has_value());
    EXPECT_FALSE(spec.m_max.has_value());
}

TEST(ParseInput, OptionalFields) {
    const std::string text = R"({
      "dim": 1, "rays": [[1],[-1]], "max_cones": [[0],[1]], "divisor": [0,3],
      "p": 5, "cone": 1, "m_max": 40, "e_cap": 3, "seed": 11
    })";
    const InputSpec spec = parse_input(text);
    EXPECT_EQ(spec.cone, 1);
    EXPECT_EQ(*spec.m_max, 40);
    EXPECT_EQ(spec.e_cap, 3);
    EXPECT_EQ(spec.seed, 11u);
}

TEST(ParseInput, MalformedJsonIsParseError) {
    EXPECT_THROW(parse_input("{ not json"), ParseError);
    EXPECT_THROW(parse_input(""), ParseError);
}

TEST(ParseInput, NonObjectIsSchemaError) {
    EXPECT_THROW(parse_input("[1,2,3]"), SchemaError);
}

TEST(ParseInput, MissingFieldIsSchemaError) {
    EXPECT_THROW(parse_input(R"({"dim": 2})"), SchemaError);
}

TEST(ParseInput, CompositePRejected) {
    const std::string text = R"({
      "dim": 2, "rays": [[1,0],[0,1],[-1,-1]],
      "max_cones": [[0,1],[0,2],[1,2]], "divisor": [0,0,1], "p": 4
    })";
    try {
        parse_input(text);
        FAIL() << "expected SchemaError";
    } catch (const SchemaError& ex) {
        EXPECT_NE(std::string(ex.what()).find("p must be prime"), std::string::npos);
    }
}

TEST(ParseInput, DivisorLengthMismatch) {
    const std::string text = R"({
      "dim": 2, "rays": [[1,0],[0,1],[-1,-1]],
      "max_cones": [[0,1],[0,2],[1,2]], "divisor": [0,0], "p": 2
    })";
    EXPECT_THROW(parse_input(text), SchemaError);
}

TEST(ParseInput, ConeIndexOutOfRange) {
    const std::string text = R"({
      "dim": 2, "rays": [[1,0],[0,1],[-1,-1]],
      "max_cones": [[0,1],[0,2],[1,2]], "divisor": [0,0,1], "p": 2, "cone": 3
    })";
    EXPECT_THROW(parse_input(text), SchemaError);
}

TEST(ParseInput, IncompleteFanIsFanInvalid) {
    const std::string text = R"({
      "dim": 2, "rays": [[1,0],[0,1],[-1,-1]],
      "max_cones": [[0,1],[0,2]], "divisor": [0,0,1], "p": 2
    })";
    EXPECT_THROW(parse_input(text), FanInvalid);
}

TEST(ParseInput, NonPrimitiveRayIsFanInvalid) {
    const std::string text = R"({
      "dim": 2, "rays": [[2,0],[0,1],[-2,-1]],
      "max_cones": [[0,1],[0,2],[1,2]], "divisor": [0,0,1], "p": 2
    })";
    EXPECT_THROW(parse_input(text), FanInvalid);
}

TEST(ParseInput, BridgeBuildsWorkingDivisor) {
    const InputSpec spec = parse_input(kP2);
    const Fan fan = fan_of(spec);
    const ToricDivisor d = divisor_of(spec, fan);
    EXPECT_TRUE(is_ample(d));
    EXPECT_EQ(polytope_of(d).vertices.size(), 3u);
}

TEST(EmitInput, RoundTripsEveryCatalogFan) {
    for (const CatalogEntry& entry : standard_catalog()) {
        InputSpec spec;
        spec.dim = entry.fan.dim;
        spec.rays = entry.fan.rays;
        spec.max_cones = entry.fan.max_cones;
        spec.divisor = std::vector<Int>(entry.fan.rays.size(), Int(1));
        spec.p = 3;
        spec.m_max = Int(17);
        spec.seed = 9;
        EXPECT_EQ(parse_input(emit_input(spec)), spec) << entry.name;
    }
}

TEST(EmitInput, OmitsAbsentOptionals) {
    const InputSpec spec = parse_input(kP2);
    const std::string text = emit_input(spec);
    EXPECT_EQ(text.find("m_max"), std::string::npos);
    EXPECT_EQ(text.find("seed"), std::string::npos);
    EXPECT_EQ(parse_input(text), spec);
}

} // namespace
