#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobsesh/errors.hpp"
#include "frobsesh/numeric.hpp"
#include "frobsesh/toric.hpp"

namespace frobsesh {

/// Facet index into ChartedPolytope::inequalities plus the corner of the
/// inscribed body (simplex vertex e_i, or cube vertex in {0,1}^n) that meets
/// the facet first as the body scales.
struct FacetWitness {
    int facet = -1;
    LatticeVector corner;
};

struct SeshadriReport {
    Rat epsilon;
    Rat epsilon_frobenius;
    FacetWitness binding_facet_classical;
    FacetWitness binding_facet_frobenius;
};

namespace detail {

// Largest r with r*B contained in cp, where B has vertex set {corners}:
// for each facet <w,y> >= c the binding corner minimizes <w, corner>, and the
// facet caps r at c / min_corner<w,corner> when that minimum is negative.
// Facets with nonnegative minimum never bind; c = 0 with a negative minimum
// forces r = 0 (chart of a nef, non-ample divisor).
template <typename CornerValue>
std::pair<Rat, FacetWitness> scale_body(const ChartedPolytope& cp, CornerValue corner_value) {
    bool bounded = false;
    Rat best = 0;
    FacetWitness witness;
    for (std::size_t f = 0; f < cp.inequalities.size(); ++f) {
        const auto& ineq = cp.inequalities[f];
        if (ineq.bound > 0) throw NotNormalized("charted polytope does not contain the origin");
        auto [denom, corner] = corner_value(ineq.normal);
        if (denom >= 0) continue;
        const Rat r = ineq.bound / denom;
        if (!bounded || r < best) {
            bounded = true;
            best = r;
            witness.facet = static_cast<int>(f);
            witness.corner = std::move(corner);
        }
    }
    if (!bounded) throw UnboundedPolytope("no facet bounds the inscribed body");
    return {best, witness};
}

inline std::pair<Rat, LatticeVector> simplex_corner(const RationalVector& w) {
    // min over simplex vertices e_i of <w, e_i> = min coordinate, if negative.
    Rat denom = 0;
    int arg = -1;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] < denom) {
            denom = w[i];
            arg = static_cast<int>(i);
        }
    LatticeVector corner(w.size(), Int(0));
    if (arg >= 0) corner[static_cast<std::size_t>(arg)] = 1;
    return {denom, corner};
}

inline std::pair<Rat, LatticeVector> cube_corner(const RationalVector& w) {
    // min over cube vertices c in {0,1}^n of <w, c>: pick 1 where w_i < 0.
    Rat denom = 0;
    LatticeVector corner(w.size(), Int(0));
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] < 0) {
            denom += w[i];
            corner[i] = 1;
        }
    return {denom, corner};
}

} // namespace detail

/// epsilon = max{r : r*Q_n in cp}, Q_n the standard simplex.
inline Rat classical_seshadri(const ChartedPolytope& cp) {
    return detail::scale_body(cp, detail::simplex_corner).first;
}

/// epsilon_F = max{r : r*C_n in cp}, C_n the unit cube.
inline Rat frobenius_seshadri(const ChartedPolytope& cp) {
    return detail::scale_body(cp, detail::cube_corner).first;
}

inline SeshadriReport seshadri_report(const ChartedPolytope& cp) {
    auto [eps, wc] = detail::scale_body(cp, detail::simplex_corner);
    auto [epsf, wf] = detail::scale_body(cp, detail::cube_corner);
    return SeshadriReport{eps, epsf, std::move(wc), std::move(wf)};
}

/// s(L^m; x) = m * epsilon, an integer for charts of ample divisors.
inline Int classical_jet_number(const ChartedPolytope& cp, const Int& m) {
    if (m < 1) throw Error("jet number needs m >= 1");
    const Rat t = Rat(m) * classical_seshadri(cp);
    const Int s = floor_rat(t);
    if (Rat(s) != t) throw Error("m * epsilon is not an integer: " + rat_str(t));
    return s;
}

/// s_F(L^m; x) = largest e >= 0 with p^e - 1 <= m * epsilon_F.
inline int frobenius_jet_number_from(const Rat& eps_f, const Int& m, std::uint64_t p) {
    require_prime(p);
    if (m < 1) throw Error("jet number needs m >= 1");
    const Rat budget = Rat(m) * eps_f;
    int e = 0;
    Int power = p; // p^{e+1}
    while (Rat(power - 1) <= budget) {
        ++e;
        power *= p;
    }
    return e;
}

inline int frobenius_jet_number(const ChartedPolytope& cp, const Int& m, std::uint64_t p) {
    return frobenius_jet_number_from(frobenius_seshadri(cp), m, p);
}

struct JetTableRow {
    Int m;
    Int s_classical;
    int e_frobenius = 0;
    Rat ratio; // (p^e - 1) / m
};

/// Rows m = 1..m_max of the supremum diagnostic; ratio 0 when e = 0.
inline std::vector<JetTableRow> ratio_sequence(const ChartedPolytope& cp, std::uint64_t p,
                                               const Int& m_max) {
    const Rat eps = classical_seshadri(cp);
    const Rat eps_f = frobenius_seshadri(cp);
    std::vector<JetTableRow> rows;
    for (Int m = 1; m <= m_max; ++m) {
        JetTableRow row;
        row.m = m;
        const Rat t = Rat(m) * eps;
        row.s_classical = floor_rat(t);
        row.e_frobenius = frobenius_jet_number_from(eps_f, m, p);
        row.ratio = Rat(pow_int(Int(p), static_cast<unsigned>(row.e_frobenius)) - 1) / Rat(m);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Rows at m_e = n(p^e - 1) - 1, the subsequence along which the ratio can
/// fail to converge to epsilon_F (it tends to 1/(np) on the simplex family).
inline std::vector<JetTableRow> subsequence_rows(const ChartedPolytope& cp, std::uint64_t p,
                                                 int e_max) {
    const Rat eps = classical_seshadri(cp);
    const Rat eps_f = frobenius_seshadri(cp);
    const int n = cp.dim;
    std::vector<JetTableRow> rows;
    for (int e = 1; e <= e_max; ++e) {
        const Int m = Int(n) * (pow_int(Int(p), static_cast<unsigned>(e)) - 1) - 1;
        if (m < 1) continue;
        JetTableRow row;
        row.m = m;
        row.s_classical = floor_rat(Rat(m) * eps);
        row.e_frobenius = frobenius_jet_number_from(eps_f, m, p);
        row.ratio = Rat(pow_int(Int(p), static_cast<unsigned>(row.e_frobenius)) - 1) / Rat(m);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// d_r = (p^{r e} - 1)/(p^e - 1) = 1 + p^e + ... + p^{(r-1)e}.
inline Int frobenius_scaling_factor(std::uint64_t p, int e, int r) {
    Int d = 0;
    Int term = 1;
    const Int pe = pow_int(Int(p), static_cast<unsigned>(e));
    for (int i = 0; i < r; ++i) {
        d += term;
        term *= pe;
    }
    return d;
}

/// Scaling law: with m the least witness of jet number e_base, verify
/// s_F at m*d_r is >= r*e_base for r = 1..r_max.
inline bool scaling_check(const ChartedPolytope& cp, std::uint64_t p, int e_base, int r_max) {
    if (e_base < 1) throw NoWitness("scaling check needs e_base >= 1");
    const Rat eps_f = frobenius_seshadri(cp);
    if (eps_f <= 0) throw NoWitness("epsilon_F = 0: no m attains a positive jet number");
    // Least m with m*eps_F >= p^{e_base} - 1; no smaller m can reach e_base.
    const Int target = pow_int(Int(p), static_cast<unsigned>(e_base)) - 1;
    const Int m = ceil_rat(Rat(target) / eps_f);
    const Int m_least = m < 1 ? Int(1) : m;
    if (frobenius_jet_number_from(eps_f, m_least, p) != e_base)
        throw NoWitness("no m attains jet number exactly " + std::to_string(e_base));
    for (int r = 1; r <= r_max; ++r) {
        const Int d_r = frobenius_scaling_factor(p, e_base, r);
        if (frobenius_jet_number_from(eps_f, m_least * d_r, p) < r * e_base) return false;
    }
    return true;
}

} // namespace frobsesh
