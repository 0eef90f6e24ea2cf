#pragma once

#include <string>
#include <vector>

#include "frobsesh/toric.hpp"

namespace frobsesh {

/// P^n: rays e_1..e_n and -(e_1+...+e_n); maximal cones drop one ray each.
inline Fan projective_space(int n) {
    Fan fan;
    fan.dim = n;
    for (int i = 0; i < n; ++i) {
        LatticeVector e(static_cast<std::size_t>(n), Int(0));
        e[static_cast<std::size_t>(i)] = 1;
        fan.rays.push_back(std::move(e));
    }
    fan.rays.push_back(LatticeVector(static_cast<std::size_t>(n), Int(-1)));
    // Cone 0 is the positive orthant (drop the last ray): the standard chart.
    for (int drop = n; drop >= 0; --drop) {
        std::vector<int> cone;
        for (int r = 0; r <= n; ++r)
            if (r != drop) cone.push_back(r);
        fan.max_cones.push_back(std::move(cone));
    }
    return fan;
}

/// O(a) on P^n: coefficient a on the ray -(e_1+...+e_n), zero elsewhere.
inline ToricDivisor projective_o(const Fan& pn, const Int& a) {
    std::vector<Int> coeffs(pn.rays.size(), Int(0));
    coeffs.back() = a;
    return make_divisor(pn, std::move(coeffs));
}

/// P^a x P^b as the product fan.
inline Fan product_projective(int a, int b) {
    Fan fan;
    fan.dim = a + b;
    auto block_ray = [&](int offset, int block_dim, int which) {
        LatticeVector v(static_cast<std::size_t>(a + b), Int(0));
        if (which < block_dim)
            v[static_cast<std::size_t>(offset + which)] = 1;
        else
            for (int i = 0; i < block_dim; ++i) v[static_cast<std::size_t>(offset + i)] = -1;
        return v;
    };
    for (int i = 0; i <= a; ++i) fan.rays.push_back(block_ray(0, a, i));
    for (int j = 0; j <= b; ++j) fan.rays.push_back(block_ray(a, b, j));
    // Cone 0 is the product of positive orthants: the standard chart.
    for (int drop1 = a; drop1 >= 0; --drop1)
        for (int drop2 = b; drop2 >= 0; --drop2) {
            std::vector<int> cone;
            for (int r = 0; r <= a; ++r)
                if (r != drop1) cone.push_back(r);
            for (int r = 0; r <= b; ++r)
                if (r != drop2) cone.push_back(a + 1 + r);
            fan.max_cones.push_back(std::move(cone));
        }
    return fan;
}

/// O(c, d) on P^a x P^b.
inline ToricDivisor product_o(const Fan& pab, int a, int b, const Int& c, const Int& d) {
    std::vector<Int> coeffs(pab.rays.size(), Int(0));
    coeffs[static_cast<std::size_t>(a)] = c;
    coeffs[static_cast<std::size_t>(a + 1 + b)] = d;
    return make_divisor(pab, std::move(coeffs));
}

/// Hirzebruch surface F_a: rays (1,0),(0,1),(-1,a),(0,-1).
inline Fan hirzebruch(int a) {
    Fan fan;
    fan.dim = 2;
    fan.rays = {{1, 0}, {0, 1}, {-1, Int(a)}, {0, -1}};
    fan.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return fan;
}

/// Blowup of P^2 at k <= 3 torus-fixed points (iterated corner subdivision).
inline Fan blowup_p2(int k) {
    Fan fan;
    fan.dim = 2;
    fan.rays = {{1, 0}, {0, 1}, {-1, -1}};
    fan.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    auto subdivide = [&fan](int c, LatticeVector ray) {
        const std::vector<int> cone = fan.max_cones[static_cast<std::size_t>(c)];
        const int new_ray = fan.num_rays();
        fan.rays.push_back(std::move(ray));
        fan.max_cones.erase(fan.max_cones.begin() + c);
        fan.max_cones.push_back({cone[0], new_ray});
        fan.max_cones.push_back({new_ray, cone[1]});
    };
    if (k >= 1) subdivide(0, {1, 1});   // cone(e1, e2)
    if (k >= 2) subdivide(0, {-1, 0});  // cone(e2, -e1-e2)
    if (k >= 3) subdivide(0, {0, -1});  // cone(-e1-e2, e1)
    return fan;
}

/// The del Pezzo Bl_3 P^2 fan in the hexagon basis:
/// rays (1,0),(0,1),(-1,1),(-1,0),(0,-1),(1,-1), consecutive cones.
inline Fan hexagon_fan() {
    Fan fan;
    fan.dim = 2;
    fan.rays = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    for (int i = 0; i < 6; ++i) fan.max_cones.push_back({i, (i + 1) % 6});
    return fan;
}

/// The anticanonical hexagon divisor normalized to sit at the origin:
/// P has vertices (0,0),(1,0),(2,1),(2,2),(1,2),(0,1).
inline ToricDivisor hexagon_divisor(const Fan& hex) {
    return make_divisor(hex, {0, 0, 1, 2, 2, 1});
}

/// P(O + O(a)) over P^2: base rays lifted flat, fiber rays (0,0,+-1),
/// with the twist a on the lifted third base ray.
inline Fan p1_bundle_over_p2(int a) {
    Fan fan;
    fan.dim = 3;
    fan.rays = {{1, 0, 0}, {0, 1, 0}, {-1, -1, Int(a)}, {0, 0, 1}, {0, 0, -1}};
    fan.max_cones = {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {0, 1, 4}, {1, 2, 4}, {2, 0, 4}};
    return fan;
}

struct CatalogEntry {
    std::string name;
    Fan fan;
};

/// The fixed scan corpus. Every fan is smooth and complete.
inline std::vector<CatalogEntry> standard_catalog() {
    std::vector<CatalogEntry> cat;
    cat.push_back({"P1", projective_space(1)});
    cat.push_back({"P2", projective_space(2)});
    cat.push_back({"P3", projective_space(3)});
    cat.push_back({"P4", projective_space(4)});
    cat.push_back({"P1xP1", product_projective(1, 1)});
    cat.push_back({"P1xP2", product_projective(1, 2)});
    for (int a = 0; a <= 4; ++a) cat.push_back({"F" + std::to_string(a), hirzebruch(a)});
    for (int k = 1; k <= 3; ++k) cat.push_back({"Bl" + std::to_string(k) + "P2", blowup_p2(k)});
    cat.push_back({"Hexagon", hexagon_fan()});
    for (int a = 0; a <= 2; ++a)
        cat.push_back({"P1bundleP2tw" + std::to_string(a), p1_bundle_over_p2(a)});
    return cat;
}

} // namespace frobsesh
