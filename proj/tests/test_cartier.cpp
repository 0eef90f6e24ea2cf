#include <random>

#include <gtest/gtest.h>

#include "frobsesh/cartier.hpp"

using namespace frobsesh;

namespace {

MonomialForm random_form(std::uint64_t p, int n, int max_terms, std::mt19937_64& rng) {
    MonomialForm f = make_form(p);
    const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        LatticeVector a(static_cast<std::size_t>(n));
        for (auto& c : a) c = Int(rng() % 7);
        form_add_term(f, a, 1 + rng() % (p - 1));
    }
    return f;
}

} // namespace

TEST(Trace, CharTwoDimOneRules) {
    EXPECT_EQ(trace(form_monomial(2, {1})), form_monomial(2, {0})); // y dy -> dy
    EXPECT_TRUE(trace(form_monomial(2, {0})).terms.empty());        // dy -> 0
    EXPECT_EQ(trace(form_monomial(2, {3})), form_monomial(2, {1})); // y^3 dy -> y dy
}

TEST(Trace, TopSocleTermMapsToDy) {
    for (std::uint64_t p : {2u, 3u, 5u})
        for (int n = 1; n <= 3; ++n) {
            const LatticeVector socle(static_cast<std::size_t>(n), Int(p - 1));
            const LatticeVector zero(static_cast<std::size_t>(n), Int(0));
            EXPECT_EQ(trace(form_monomial(p, socle)), form_monomial(p, zero));
        }
}

TEST(Trace, KernelExactlyOffResidueTerms) {
    const std::uint64_t p = 3;
    for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j) {
            const MonomialForm t = trace(form_monomial(p, {i, j}));
            const bool in_class = i % 3 == 2 && j % 3 == 2;
            EXPECT_EQ(t.terms.empty(), !in_class) << i << "," << j;
        }
}

TEST(Trace, PLinearityOnRandomForms) {
    std::mt19937_64 rng(20260819);
    for (std::uint64_t p : {2u, 3u, 5u})
        for (int n = 1; n <= 2; ++n)
            for (int trial = 0; trial < 100; ++trial) {
                const MonomialForm f = random_form(p, n, 5, rng);
                const MonomialForm eta = random_form(p, n, 5, rng);
                const MonomialForm lhs = trace(form_mul(form_pow(f, static_cast<unsigned>(p)), eta));
                const MonomialForm rhs = form_mul(f, trace(eta));
                EXPECT_EQ(lhs, rhs);
            }
}

TEST(TraceIterate, MatchesSpotValues) {
    // p = 2, e = 2: y^3 dy -> dy, y^11 dy -> y^2 dy.
    EXPECT_EQ(trace_iterate(form_monomial(2, {3}), 2), form_monomial(2, {0}));
    EXPECT_EQ(trace_iterate(form_monomial(2, {11}), 2), form_monomial(2, {2}));
    EXPECT_EQ(trace_iterate(form_monomial(2, {3}), 1), trace(form_monomial(2, {3})));
}

TEST(TraceIterate, Composition) {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {2u, 3u})
        for (int trial = 0; trial < 50; ++trial) {
            MonomialForm f = random_form(p, 2, 4, rng);
            // Push exponents up so deep iterates still have survivors sometimes.
            MonomialForm big = make_form(p);
            for (const auto& [a, c] : f.terms) {
                LatticeVector scaled(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) scaled[i] = a[i] * 9 + Int(rng() % 4);
                form_add_term(big, scaled, c);
            }
            EXPECT_EQ(trace_iterate(big, 3), trace_iterate(trace_iterate(big, 2), 1));
            EXPECT_EQ(trace_iterate(big, 3), trace_iterate(trace_iterate(big, 1), 2));
        }
}

TEST(TraceIterate, SurjectivityWitness) {
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {2u, 3u, 5u})
        for (int e = 1; e <= 2; ++e)
            for (int trial = 0; trial < 40; ++trial) {
                const int n = 1 + static_cast<int>(rng() % 2);
                LatticeVector a(static_cast<std::size_t>(n));
                for (auto& c : a) c = Int(rng() % 5);
                const Int pe = pow_int(Int(p), static_cast<unsigned>(e));
                LatticeVector w(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) w[i] = pe * a[i] + (pe - 1);
                EXPECT_EQ(trace_iterate(form_monomial(p, w), e), form_monomial(p, a));
            }
}

TEST(TraceIdealCheck, PrincipalIdealCharTwo) {
    EXPECT_TRUE(trace_ideal_check({{1}}, 1, 2, 12)); // J = (y)
}

TEST(TraceIdealCheck, UnitIdeal) {
    EXPECT_TRUE(trace_ideal_check({{0}}, 1, 2, 8));
    EXPECT_TRUE(trace_ideal_check({{0, 0}}, 1, 3, 8));
}

TEST(TraceIdealCheck, TwoGeneratorsCharThree) {
    EXPECT_TRUE(trace_ideal_check({{1, 0}, {0, 2}}, 1, 3, 12)); // J = (y1, y2^2)
}

TEST(TraceIdealCheck, CapTooSmallWhenNoWitnessFits) {
    // J = (y^5), p = 5, e = 2: the smallest witness has degree 25*5 + 24 = 149.
    EXPECT_THROW(trace_ideal_check({{5}}, 2, 5, 20), CapTooSmall);
}

TEST(FormStr, Rendering) {
    EXPECT_EQ(form_str(form_monomial(2, {3})), "y^3 dy");
    EXPECT_EQ(form_str(form_monomial(2, {0})), "1 dy");
    EXPECT_EQ(form_str(make_form(3)), "0");
    EXPECT_EQ(form_str(form_monomial(5, {1, 2}, 3)), "3*y1*y2^2 dy");
}

TEST(Forms, ArithmeticBasics) {
    MonomialForm f = form_monomial(3, {1});
    form_add_term(f, {1}, 2); // 1 + 2 = 0 mod 3: term drops out
    EXPECT_TRUE(f.terms.empty());
    const MonomialForm y = form_monomial(3, {1});
    const MonomialForm y2 = form_mul(y, y);
    EXPECT_EQ(y2, form_monomial(3, {2}));
    EXPECT_EQ(form_pow(y, 4), form_monomial(3, {4}));
    EXPECT_THROW(form_monomial(3, {-1}), Error);
    EXPECT_THROW(make_form(9), InvalidPrime);
}
