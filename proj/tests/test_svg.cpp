#include <gtest/gtest.h>

#include "frobsesh/catalog.hpp"
#include "frobsesh/svg.hpp"

using namespace frobsesh;

namespace {

TEST(RenderSvg, HexagonChartZero) {
    const Fan hex = hexagon_fan();
    const ToricDivisor d = hexagon_divisor(hex);
    const std::string svg = render_svg(d, 0);
    EXPECT_NE(svg.find("<svg xmlns"), std::string::npos);
    EXPECT_NE(svg.find("eps=1  epsF=1"), std::string::npos);
    // hexagon outline: six corners
    const std::size_t poly = svg.find("<polygon");
    ASSERT_NE(poly, std::string::npos);
    const std::string points = svg.substr(poly, svg.find('\n', poly) - poly);
    EXPECT_EQ(std::count(points.begin(), points.end(), ','), 6);
    // both inscribed bodies drawn dashed
    EXPECT_NE(svg.find("stroke-dasharray=\"10,7\""), std::string::npos);
    EXPECT_NE(svg.find("stroke-dasharray=\"4,6\""), std::string::npos);
}

TEST(RenderSvg, ByteStable) {
    const Fan p2 = projective_space(2);
    const ToricDivisor d = projective_o(p2, 2);
    EXPECT_EQ(render_svg(d, 0), render_svg(d, 0));
}

TEST(RenderSvg, SeparatesConstantsOnP2) {
    const Fan p2 = projective_space(2);
    const ToricDivisor d = projective_o(p2, 2);
    const std::string svg = render_svg(d, 0);
    EXPECT_NE(svg.find("eps=2  epsF=1"), std::string::npos);
}

TEST(RenderSvg, RejectsThreefolds) {
    const Fan p3 = projective_space(3);
    const ToricDivisor d = projective_o(p3, 1);
    EXPECT_THROW(render_svg(d, 0), DimensionUnsupported);
}

TEST(RenderSvg, FixedScaleMovesWithPolytopeSize) {
    const Fan p2 = projective_space(2);
    const std::string one = render_svg(projective_o(p2, 1), 0);
    const std::string three = render_svg(projective_o(p2, 3), 0);
    const auto width_of = [](const std::string& svg) {
        const std::size_t at = svg.find("width=\"") + 7;
        return std::stoll(svg.substr(at, svg.find('"', at) - at));
    };
    // 90 px per lattice unit: widths differ by exactly 2 units
    EXPECT_EQ(width_of(three) - width_of(one), 180);
}

} // namespace
