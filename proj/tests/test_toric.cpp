#include <algorithm>

#include <gtest/gtest.h>

#include "frobsesh/catalog.hpp"
#include "frobsesh/toric.hpp"

using namespace frobsesh;

namespace {

RationalVector rat_point(std::initializer_list<int> coords) {
    RationalVector v;
    for (int c : coords) v.push_back(Rat(c));
    return v;
}

bool has_vertex(const LatticePolytopeH& p, const RationalVector& v) {
    return std::find(p.vertices.begin(), p.vertices.end(), v) != p.vertices.end();
}

} // namespace

TEST(ValidateFan, P2SmoothComplete) {
    const Fan fan = projective_space(2);
    const FanDiagnostics diag = validate_fan(fan);
    EXPECT_TRUE(diag.smooth);
    EXPECT_TRUE(diag.complete);
    EXPECT_TRUE(diag.offending.empty());
}

TEST(ValidateFan, MissingConeBreaksCompleteness) {
    Fan fan = projective_space(2);
    fan.max_cones.pop_back();
    const FanDiagnostics diag = validate_fan(fan);
    EXPECT_TRUE(diag.smooth);
    EXPECT_FALSE(diag.complete);
}

TEST(ValidateFan, WeightedP112NotSmooth) {
    Fan fan;
    fan.dim = 2;
    fan.rays = {{1, 0}, {0, 1}, {-1, -2}};
    fan.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    const FanDiagnostics diag = validate_fan(fan);
    EXPECT_FALSE(diag.smooth);
    EXPECT_TRUE(diag.complete);
}

TEST(ValidateFan, MalformedInputsThrow) {
    Fan bad_ray;
    bad_ray.dim = 2;
    bad_ray.rays = {{2, 0}, {0, 1}, {-1, -1}};
    bad_ray.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    EXPECT_THROW(validate_fan(bad_ray), MalformedFan);

    Fan bad_index = projective_space(2);
    bad_index.max_cones[0] = {0, 7};
    EXPECT_THROW(validate_fan(bad_index), MalformedFan);
}

TEST(ValidateFan, DuplicateConeBreaksCompleteness) {
    Fan fan = projective_space(2);
    fan.max_cones.push_back(fan.max_cones.front());
    EXPECT_FALSE(validate_fan(fan).complete);
}

TEST(ValidateFan, WholeCatalogIsSmoothComplete) {
    for (const auto& entry : standard_catalog()) {
        const FanDiagnostics diag = validate_fan(entry.fan);
        EXPECT_TRUE(diag.ok()) << entry.name;
    }
}

TEST(PolytopeOf, P2UnitSimplex) {
    const Fan fan = projective_space(2);
    const LatticePolytopeH p = polytope_of(projective_o(fan, 1));
    ASSERT_EQ(p.vertices.size(), 3u);
    EXPECT_TRUE(has_vertex(p, rat_point({0, 0})));
    EXPECT_TRUE(has_vertex(p, rat_point({1, 0})));
    EXPECT_TRUE(has_vertex(p, rat_point({0, 1})));
}

TEST(PolytopeOf, P1Segment) {
    const Fan fan = projective_space(1);
    const LatticePolytopeH p = polytope_of(make_divisor(fan, {0, 1}));
    ASSERT_EQ(p.vertices.size(), 2u);
    EXPECT_TRUE(has_vertex(p, rat_point({0})));
    EXPECT_TRUE(has_vertex(p, rat_point({1})));
}

TEST(PolytopeOf, HexagonVertices) {
    const Fan fan = hexagon_fan();
    const LatticePolytopeH p = polytope_of(hexagon_divisor(fan));
    ASSERT_EQ(p.vertices.size(), 6u);
    for (auto v : {rat_point({0, 0}), rat_point({1, 0}), rat_point({2, 1}), rat_point({2, 2}),
                   rat_point({1, 2}), rat_point({0, 1})})
        EXPECT_TRUE(has_vertex(p, v));
}

TEST(PolytopeOf, AmpleVertexCountMatchesConeCount) {
    const Fan hex = hexagon_fan();
    EXPECT_EQ(polytope_of(hexagon_divisor(hex)).vertices.size(), hex.max_cones.size());
    const Fan f2 = hirzebruch(2);
    EXPECT_EQ(polytope_of(make_divisor(f2, {0, 0, 1, 1})).vertices.size(), f2.max_cones.size());
}

TEST(PolytopeOf, ScalingScalesVertices) {
    const Fan fan = hexagon_fan();
    const ToricDivisor d = hexagon_divisor(fan);
    const LatticePolytopeH p1 = polytope_of(d);
    for (Int m = 2; m <= 4; ++m) {
        const LatticePolytopeH pm = polytope_of(divisor_combine(d, d, m, 0));
        ASSERT_EQ(pm.vertices.size(), p1.vertices.size());
        for (const auto& v : p1.vertices) {
            RationalVector mv(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) mv[i] = Rat(m) * v[i];
            EXPECT_TRUE(std::find(pm.vertices.begin(), pm.vertices.end(), mv) != pm.vertices.end());
        }
    }
}

TEST(ChartAt, P2AlreadyNormalized) {
    const Fan fan = projective_space(2);
    auto [chart, cp] = chart_at(projective_o(fan, 1), 0);
    EXPECT_EQ(chart.vertex, rat_point({0, 0}));
    EXPECT_EQ(chart.to_local, SquareIntMatrix::identity(2));
    ASSERT_EQ(cp.inequalities.size(), 3u);
    EXPECT_EQ(cp.inequalities[0].normal, rat_point({1, 0}));
    EXPECT_EQ(cp.inequalities[0].bound, Rat(0));
    EXPECT_EQ(cp.inequalities[1].normal, rat_point({0, 1}));
    EXPECT_EQ(cp.inequalities[1].bound, Rat(0));
    EXPECT_EQ(cp.inequalities[2].normal, rat_point({-1, -1}));
    EXPECT_EQ(cp.inequalities[2].bound, Rat(-1));
}

TEST(ChartAt, HexagonOppositeVertexIsReflection) {
    // The hexagon is preserved by u -> (2,2) - u, so the chart at the cone of
    // vertex (2,2) must produce the same inequality set as the chart at (0,0).
    const Fan fan = hexagon_fan();
    const ToricDivisor d = hexagon_divisor(fan);
    auto [chart_origin, cp_origin] = chart_at(d, 0);
    ASSERT_EQ(chart_origin.vertex, rat_point({0, 0}));
    int opposite = -1;
    for (int c = 0; c < fan.num_cones(); ++c)
        if (vertex_candidate(d, c) == rat_point({2, 2})) opposite = c;
    ASSERT_GE(opposite, 0);
    auto [chart_far, cp_far] = chart_at(d, opposite);

    auto key = [](const ChartedPolytope& cp) {
        std::vector<std::pair<RationalVector, Rat>> k;
        for (const auto& ineq : cp.inequalities) k.emplace_back(ineq.normal, ineq.bound);
        std::sort(k.begin(), k.end());
        return k;
    };
    EXPECT_EQ(key(cp_origin), key(cp_far));
}

TEST(ChartAt, P1xP1Box) {
    const Fan fan = product_projective(1, 1);
    const ToricDivisor d = product_o(fan, 1, 1, 1, 2);
    int quadrant = -1;
    for (int c = 0; c < fan.num_cones(); ++c)
        if (vertex_candidate(d, c) == rat_point({0, 0})) quadrant = c;
    ASSERT_GE(quadrant, 0);
    auto [chart, cp] = chart_at(d, quadrant);
    ASSERT_EQ(cp.inequalities.size(), 4u);
    // Beyond the coordinate facets: u1 <= 1 and u2 <= 2 in some order.
    std::vector<std::pair<RationalVector, Rat>> rest = {
        {cp.inequalities[2].normal, cp.inequalities[2].bound},
        {cp.inequalities[3].normal, cp.inequalities[3].bound}};
    std::sort(rest.begin(), rest.end());
    EXPECT_EQ(rest[0], (std::pair<RationalVector, Rat>{rat_point({-1, 0}), Rat(-1)}));
    EXPECT_EQ(rest[1], (std::pair<RationalVector, Rat>{rat_point({0, -1}), Rat(-2)}));
}

TEST(ChartAt, LatticePointBijection) {
    const Fan fan = hexagon_fan();
    const ToricDivisor d = hexagon_divisor(fan);
    const LatticePolytopeH p = polytope_of(d);
    for (int c = 0; c < fan.num_cones(); ++c) {
        auto [chart, cp] = chart_at(d, c);
        for (Int x = -1; x <= 3; ++x)
            for (Int y = -1; y <= 3; ++y) {
                const LatticeVector u{x, y};
                const RationalVector local = to_local_coords(chart, u);
                EXPECT_EQ(polytope_contains(p, u), charted_contains(cp, local));
            }
    }
}

TEST(ChartAt, NonNefDivisorThrows) {
    const Fan fan = projective_space(2);
    EXPECT_THROW(chart_at(projective_o(fan, -1), 0), NotAVertex);
}

TEST(DivisorCombine, IdentityAndAdditivity) {
    const Fan fan = product_projective(1, 1);
    const ToricDivisor d10 = product_o(fan, 1, 1, 1, 0);
    const ToricDivisor d01 = product_o(fan, 1, 1, 0, 1);
    EXPECT_EQ(divisor_combine(d10, d10, 1, 0).coeffs, d10.coeffs);
    EXPECT_EQ(divisor_combine(d10, d01, 1, 1).coeffs, product_o(fan, 1, 1, 1, 1).coeffs);
}

TEST(DivisorCombine, FanMismatchThrows) {
    const Fan a = projective_space(2);
    const Fan b = hexagon_fan();
    EXPECT_THROW(divisor_combine(projective_o(a, 1), hexagon_divisor(b), 1, 1), FanMismatch);
}

TEST(Positivity, StandardVerdicts) {
    const Fan p2 = projective_space(2);
    EXPECT_TRUE(is_ample(projective_o(p2, 1)));
    EXPECT_TRUE(is_nef(projective_o(p2, 1)));

    const ToricDivisor trivial = make_divisor(p2, {0, 0, 0});
    EXPECT_TRUE(is_nef(trivial));
    EXPECT_FALSE(is_ample(trivial));

    const Fan hex = hexagon_fan();
    EXPECT_TRUE(is_ample(hexagon_divisor(hex)));
    EXPECT_TRUE(is_ample(make_divisor(hex, {1, 1, 1, 1, 1, 1})));

    EXPECT_FALSE(is_nef(projective_o(p2, -1)));

    // Fiber class on a Hirzebruch surface: nef but not ample.
    const Fan f1 = hirzebruch(1);
    EXPECT_TRUE(is_nef(make_divisor(f1, {0, 0, 1, 0})));
    EXPECT_FALSE(is_ample(make_divisor(f1, {0, 0, 1, 0})));
}

TEST(GloballyGenerated, AdjointDegreesOnP1) {
    const Fan p1 = projective_space(1);
    EXPECT_TRUE(is_globally_generated(projective_o(p1, 1)));
    // K + O(2) has degree 0: globally generated.
    EXPECT_TRUE(is_globally_generated(adjoint_divisor(projective_o(p1, 2))));
    // K + O(1) has degree -1: not.
    EXPECT_FALSE(is_globally_generated(adjoint_divisor(projective_o(p1, 1))));
}

TEST(Adjoint, AnticanonicalHexagonIsBoundary) {
    const Fan hex = hexagon_fan();
    const ToricDivisor minus_k = make_divisor(hex, {1, 1, 1, 1, 1, 1});
    const ToricDivisor adj = adjoint_divisor(minus_k);
    for (const Int& a : adj.coeffs) EXPECT_EQ(a, 0);
    const LatticePolytopeH p = polytope_of(adj);
    ASSERT_EQ(p.vertices.size(), 1u);
    EXPECT_EQ(p.vertices[0], rat_point({0, 0}));
    EXPECT_TRUE(is_globally_generated(adj));
}

TEST(Adjoint, FujitaBoundaryOnProjectiveSpace) {
    for (int n = 1; n <= 4; ++n) {
        const Fan pn = projective_space(n);
        EXPECT_TRUE(is_globally_generated(adjoint_divisor(projective_o(pn, n + 1)))) << n;
    }
    // O(3) on P^2: adjoint class is O(0), single-point polytope.
    const Fan p2 = projective_space(2);
    const LatticePolytopeH p = polytope_of(adjoint_divisor(projective_o(p2, 3)));
    EXPECT_EQ(p.vertices.size(), 1u);
}

TEST(Positivity, ImplicationChainOnCatalog) {
    // ample => nef => globally generated, exercised over simple divisors.
    for (const auto& entry : standard_catalog()) {
        std::vector<Int> ones(entry.fan.rays.size(), Int(1));
        const ToricDivisor d = make_divisor(entry.fan, ones);
        if (is_ample(d)) EXPECT_TRUE(is_nef(d)) << entry.name;
        if (is_nef(d)) EXPECT_TRUE(is_globally_generated(d)) << entry.name;
    }
}

TEST(Relabeling, UnimodularBasisChangePreservesVerdicts) {
    // Apply u -> B u to all rays of the hexagon fan and permute the ray order.
    const Fan hex = hexagon_fan();
    const SquareIntMatrix B{{1, 1}, {0, 1}};
    const std::vector<int> perm = {3, 5, 0, 2, 4, 1};
    Fan twisted;
    twisted.dim = 2;
    twisted.rays.resize(6);
    std::vector<int> where(6);
    for (int i = 0; i < 6; ++i) where[static_cast<std::size_t>(perm[i])] = i;
    for (int i = 0; i < 6; ++i)
        twisted.rays[static_cast<std::size_t>(where[i])] =
            mat_vec(B, hex.rays[static_cast<std::size_t>(i)]);
    for (const auto& cone : hex.max_cones)
        twisted.max_cones.push_back({where[static_cast<std::size_t>(cone[0])],
                                     where[static_cast<std::size_t>(cone[1])]});
    EXPECT_TRUE(validate_fan(twisted).ok());

    std::vector<Int> coeffs(6);
    const ToricDivisor d = hexagon_divisor(hex);
    for (int i = 0; i < 6; ++i) coeffs[static_cast<std::size_t>(where[i])] = d.coeffs[static_cast<std::size_t>(i)];
    const ToricDivisor td = make_divisor(twisted, coeffs);
    EXPECT_TRUE(is_ample(td));
    EXPECT_TRUE(is_globally_generated(td));
    EXPECT_EQ(polytope_of(td).vertices.size(), 6u);
}
