#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frobsesh/errors.hpp"
#include "frobsesh/lattice.hpp"
#include "frobsesh/numeric.hpp"

namespace frobsesh {

/// Complete simplicial fan in N = Z^n given by primitive rays and maximal cones
/// (index sets of size n). Smoothness means every maximal cone is unimodular.
struct Fan {
    int dim = 0;
    std::vector<LatticeVector> rays;
    std::vector<std::vector<int>> max_cones;

    int num_rays() const { return static_cast<int>(rays.size()); }
    int num_cones() const { return static_cast<int>(max_cones.size()); }
};

inline bool operator==(const Fan& a, const Fan& b) {
    return a.dim == b.dim && a.rays == b.rays && a.max_cones == b.max_cones;
}

/// Torus-invariant divisor D = sum a_i D_i on fan->rays.
struct ToricDivisor {
    const Fan* fan = nullptr;
    std::vector<Int> coeffs;
};

struct FanDiagnostics {
    bool smooth = true;
    bool complete = true;
    std::vector<std::string> offending;

    bool ok() const { return smooth && complete; }
};

/// Ray matrix of one maximal cone: row i is the cone's i-th ray.
inline SquareIntMatrix cone_matrix(const Fan& fan, int cone_index) {
    const auto& cone = fan.max_cones[static_cast<std::size_t>(cone_index)];
    std::vector<LatticeVector> rows;
    rows.reserve(cone.size());
    for (int r : cone) rows.push_back(fan.rays[static_cast<std::size_t>(r)]);
    return SquareIntMatrix::from_rows(rows);
}

/// Structural checks: throws MalformedFan on shape violations, reports
/// smoothness (all cone dets = +/-1) and completeness (every ridge of a
/// maximal cone shared by exactly two maximal cones) as diagnostics.
inline FanDiagnostics validate_fan(const Fan& fan) {
    if (fan.dim < 1) throw MalformedFan("fan dimension must be >= 1");
    if (fan.rays.empty()) throw MalformedFan("fan has no rays");
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        const auto& ray = fan.rays[i];
        if (static_cast<int>(ray.size()) != fan.dim)
            throw MalformedFan("ray " + std::to_string(i) + " has wrong dimension");
        if (content(ray) != 1)
            throw MalformedFan("ray " + std::to_string(i) + " is not primitive");
    }
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
        const auto& cone = fan.max_cones[c];
        if (static_cast<int>(cone.size()) != fan.dim)
            throw MalformedFan("cone " + std::to_string(c) + " does not have dim rays");
        for (int r : cone)
            if (r < 0 || r >= fan.num_rays())
                throw MalformedFan("cone " + std::to_string(c) + " ray index out of range");
        std::vector<int> sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw MalformedFan("cone " + std::to_string(c) + " repeats a ray");
    }

    FanDiagnostics diag;
    for (int c = 0; c < fan.num_cones(); ++c) {
        const Int d = det(cone_matrix(fan, c));
        if (d != 1 && d != -1) {
            diag.smooth = false;
            diag.offending.push_back("cone " + std::to_string(c) + " has det " + int_str(d));
        }
    }
    // Ridge pairing. A ridge is a maximal cone minus one ray, as a sorted key.
    std::map<std::vector<int>, int> ridge_count;
    for (const auto& cone : fan.max_cones) {
        std::vector<int> sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t drop = 0; drop < sorted.size(); ++drop) {
            std::vector<int> ridge = sorted;
            ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(drop));
            ++ridge_count[ridge];
        }
    }
    for (const auto& [ridge, count] : ridge_count) {
        if (count == 2) continue;
        diag.complete = false;
        std::string key;
        for (int r : ridge) key += (key.empty() ? "" : ",") + std::to_string(r);
        diag.offending.push_back("ridge {" + key + "} lies in " + std::to_string(count) +
                                 " maximal cones");
    }
    // Two cones sharing all dim rays would also break ridge pairing, but the
    // duplicate is worth naming directly.
    std::map<std::vector<int>, int> cone_count;
    for (const auto& cone : fan.max_cones) {
        std::vector<int> sorted = cone;
        std::sort(sorted.begin(), sorted.end());
        if (++cone_count[sorted] == 2) {
            diag.complete = false;
            diag.offending.push_back("duplicate maximal cone");
        }
    }
    return diag;
}

inline void require_valid(const Fan& fan) {
    const FanDiagnostics diag = validate_fan(fan);
    if (diag.ok()) return;
    std::string msg = "fan is not smooth+complete:";
    for (const auto& item : diag.offending) msg += " " + item + ";";
    throw FanInvalid(msg);
}

inline ToricDivisor make_divisor(const Fan& fan, std::vector<Int> coeffs) {
    if (static_cast<int>(coeffs.size()) != fan.num_rays())
        throw FanMismatch("divisor has " + std::to_string(coeffs.size()) + " coefficients for " +
                          std::to_string(fan.num_rays()) + " rays");
    return ToricDivisor{&fan, std::move(coeffs)};
}

/// s1*d1 + s2*d2 on a common fan.
inline ToricDivisor divisor_combine(const ToricDivisor& d1, const ToricDivisor& d2, const Int& s1,
                                    const Int& s2) {
    if (!(d1.fan == d2.fan || *d1.fan == *d2.fan)) throw FanMismatch("divisors live on different fans");
    ToricDivisor out{d1.fan, {}};
    out.coeffs.resize(d1.coeffs.size());
    for (std::size_t i = 0; i < d1.coeffs.size(); ++i)
        out.coeffs[i] = s1 * d1.coeffs[i] + s2 * d2.coeffs[i];
    return out;
}

/// K_X + D with K_X = -sum D_i: coefficients a_i - 1.
inline ToricDivisor adjoint_divisor(const ToricDivisor& d) {
    ToricDivisor out{d.fan, d.coeffs};
    for (auto& a : out.coeffs) a -= 1;
    return out;
}

/// H-representation of P_D: one inequality <u, normal> >= -bound per ray,
/// plus the vertex set computed from the maximal cones.
struct LatticePolytopeH {
    struct Inequality {
        LatticeVector normal;
        Int bound; // meaning <u, normal> >= -bound
    };
    std::vector<Inequality> inequalities;
    std::vector<RationalVector> vertices;
};

inline bool polytope_contains(const LatticePolytopeH& p, const RationalVector& u) {
    for (const auto& ineq : p.inequalities)
        if (dot(u, ineq.normal) < -Rat(ineq.bound)) return false;
    return true;
}

inline bool polytope_contains(const LatticePolytopeH& p, const LatticeVector& u) {
    for (const auto& ineq : p.inequalities)
        if (dot(u, ineq.normal) < -ineq.bound) return false;
    return true;
}

/// Candidate vertex u_sigma of P_D at a maximal cone: the unique solution of
/// the cone's tight system <u, v_i> = -a_i. Integral on a smooth fan.
inline RationalVector vertex_candidate(const ToricDivisor& d, int cone_index) {
    const Fan& fan = *d.fan;
    const auto& cone = fan.max_cones[static_cast<std::size_t>(cone_index)];
    RationalVector rhs(cone.size());
    for (std::size_t i = 0; i < cone.size(); ++i)
        rhs[i] = -Rat(d.coeffs[static_cast<std::size_t>(cone[i])]);
    return solve_exact(cone_matrix(fan, cone_index), rhs);
}

inline LatticePolytopeH polytope_of(const ToricDivisor& d) {
    const Fan& fan = *d.fan;
    LatticePolytopeH p;
    p.inequalities.reserve(fan.rays.size());
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        p.inequalities.push_back({fan.rays[i], d.coeffs[i]});
    for (int c = 0; c < fan.num_cones(); ++c) {
        RationalVector u = vertex_candidate(d, c);
        if (!polytope_contains(p, u)) continue;
        if (std::find(p.vertices.begin(), p.vertices.end(), u) == p.vertices.end())
            p.vertices.push_back(std::move(u));
    }
    return p;
}

/// Is u_sigma a point of P_D for every maximal cone sigma?
inline bool is_nef(const ToricDivisor& d) {
    LatticePolytopeH p = polytope_of(d);
    for (int c = 0; c < d.fan->num_cones(); ++c)
        if (!polytope_contains(p, vertex_candidate(d, c))) return false;
    return true;
}

/// Nef, with every non-cone inequality strict at u_sigma (distinct vertices).
inline bool is_ample(const ToricDivisor& d) {
    const Fan& fan = *d.fan;
    for (int c = 0; c < fan.num_cones(); ++c) {
        const RationalVector u = vertex_candidate(d, c);
        const auto& cone = fan.max_cones[static_cast<std::size_t>(c)];
        for (int r = 0; r < fan.num_rays(); ++r) {
            const Rat lhs = dot(u, fan.rays[static_cast<std::size_t>(r)]);
            const Rat rhs = -Rat(d.coeffs[static_cast<std::size_t>(r)]);
            const bool in_cone = std::find(cone.begin(), cone.end(), r) != cone.end();
            if (in_cone ? (lhs != rhs) : (lhs <= rhs)) return false;
        }
    }
    return true;
}

/// Globally generated at sigma: u_sigma is a lattice point of P_D.
inline bool is_gg_at(const ToricDivisor& d, int cone_index) {
    const RationalVector u = vertex_candidate(d, cone_index);
    for (const Rat& c : u)
        if (!is_integer(c)) return false;
    LatticePolytopeH p = polytope_of(d);
    return polytope_contains(p, u);
}

inline bool is_globally_generated(const ToricDivisor& d) {
    for (int c = 0; c < d.fan->num_cones(); ++c)
        if (!is_gg_at(d, c)) return false;
    return true;
}

/// Unimodular chart map at a torus-fixed point: local exponent of chi^u is
/// to_local * (u - vertex), landing in Z_+^n for u in P_D near the vertex.
struct VertexChart {
    int cone_index = -1;
    RationalVector vertex;
    SquareIntMatrix to_local;
};

/// P_D in the chart: <w, y> >= c per facet, coordinate facets (e_i, 0) first.
/// Origin is the chart's vertex, so every c <= 0.
struct ChartedPolytope {
    struct Inequality {
        RationalVector normal;
        Rat bound; // meaning <normal, y> >= bound
    };
    int dim = 0;
    std::vector<Inequality> inequalities;
};

inline bool charted_contains(const ChartedPolytope& cp, const RationalVector& y) {
    for (const auto& ineq : cp.inequalities)
        if (dot(ineq.normal, y) < ineq.bound) return false;
    return true;
}

/// Chart of P_D at the fixed point of one maximal cone. The n tight facets
/// become coordinate facets; remaining inequalities transform by
/// w = (V^T)^{-1} v, c = -a_v - <u_sigma, v> with V the cone's ray matrix.
inline std::pair<VertexChart, ChartedPolytope> chart_at(const ToricDivisor& d, int cone_index) {
    const Fan& fan = *d.fan;
    const int n = fan.dim;
    const SquareIntMatrix V = cone_matrix(fan, cone_index);
    const RationalVector u_sigma = vertex_candidate(d, cone_index);
    const SquareIntMatrix W = invert_unimodular(V).transposed(); // (V^T)^{-1}

    const auto& cone = fan.max_cones[static_cast<std::size_t>(cone_index)];
    ChartedPolytope cp;
    cp.dim = n;
    std::vector<int> order(cone.begin(), cone.end());
    for (int r = 0; r < fan.num_rays(); ++r)
        if (std::find(cone.begin(), cone.end(), r) == cone.end()) order.push_back(r);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const int r = order[k];
        const LatticeVector& v = fan.rays[static_cast<std::size_t>(r)];
        const LatticeVector w = mat_vec(W, v);
        const Rat c = -Rat(d.coeffs[static_cast<std::size_t>(r)]) - dot(u_sigma, v);
        if (c > 0)
            throw NotAVertex("cone " + std::to_string(cone_index) +
                             ": tight-system solution violates the inequality of ray " +
                             std::to_string(r));
        ChartedPolytope::Inequality ineq;
        ineq.normal.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ineq.normal[static_cast<std::size_t>(i)] = Rat(w[static_cast<std::size_t>(i)]);
        ineq.bound = c;
        if (static_cast<int>(k) < n) {
            // Cone ray k must land on the k-th coordinate facet.
            for (int i = 0; i < n; ++i)
                if (ineq.normal[static_cast<std::size_t>(i)] != (i == static_cast<int>(k) ? 1 : 0))
                    throw Error("chart transform did not normalize a tight facet");
            if (ineq.bound != 0) throw Error("tight facet has nonzero charted bound");
        }
        cp.inequalities.push_back(std::move(ineq));
    }
    VertexChart chart{cone_index, u_sigma, V};
    return {std::move(chart), std::move(cp)};
}

/// Local exponent map of the chart (exact bijection on lattice points).
inline RationalVector to_local_coords(const VertexChart& chart, const LatticeVector& u) {
    RationalVector diff(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) diff[i] = Rat(u[i]) - chart.vertex[i];
    return mat_vec(chart.to_local, diff);
}

} // namespace frobsesh
