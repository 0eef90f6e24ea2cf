#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frobsesh/errors.hpp"
#include "frobsesh/lattice.hpp"
#include "frobsesh/numeric.hpp"

namespace frobsesh {

/// Element of omega = F_p[y_1..y_n] dy as exponent -> nonzero coefficient.
struct MonomialForm {
    std::uint64_t p = 2;
    std::map<LatticeVector, std::uint64_t> terms;
};

inline MonomialForm make_form(std::uint64_t p) {
    require_prime(p);
    return MonomialForm{p, {}};
}

/// Adds c * y^a dy, dropping the term if the sum vanishes mod p.
inline void form_add_term(MonomialForm& f, const LatticeVector& a, std::uint64_t c) {
    for (const Int& coord : a)
        if (coord < 0) throw Error("monomial form exponents must be nonnegative");
    const std::uint64_t v = (f.terms.count(a) ? f.terms[a] + c : c) % f.p;
    if (v == 0)
        f.terms.erase(a);
    else
        f.terms[a] = v;
}

inline MonomialForm form_monomial(std::uint64_t p, const LatticeVector& a, std::uint64_t c = 1) {
    MonomialForm f = make_form(p);
    form_add_term(f, a, c);
    return f;
}

inline MonomialForm form_mul(const MonomialForm& f, const MonomialForm& g) {
    if (f.p != g.p) throw Error("forms live over different primes");
    MonomialForm out = make_form(f.p);
    for (const auto& [a, ca] : f.terms)
        for (const auto& [b, cb] : g.terms) {
            LatticeVector sum(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
            form_add_term(out, sum, ca * cb % f.p);
        }
    return out;
}

inline MonomialForm form_pow(const MonomialForm& f, unsigned e) {
    MonomialForm out = make_form(f.p);
    if (f.terms.empty() && e > 0) return out;
    const std::size_t n = f.terms.empty() ? 0 : f.terms.begin()->first.size();
    form_add_term(out, LatticeVector(n, Int(0)), 1);
    for (unsigned i = 0; i < e; ++i) out = form_mul(out, f);
    return out;
}

inline bool operator==(const MonomialForm& a, const MonomialForm& b) {
    return a.p == b.p && a.terms == b.terms;
}

/// T(y^i dy) = y^{(i - (p-1))/p} dy when every i_j = p-1 (mod p), else 0.
/// Coefficients lie in the prime field, where Frobenius is the identity.
inline MonomialForm trace(const MonomialForm& f) {
    const std::uint64_t p = f.p;
    MonomialForm out = make_form(p);
    for (const auto& [i, c] : f.terms) {
        bool survives = true;
        LatticeVector j(i.size());
        for (std::size_t k = 0; k < i.size(); ++k) {
            const Int shifted = i[k] - Int(p - 1);
            if (shifted % Int(p) != 0) {
                survives = false;
                break;
            }
            j[k] = shifted / Int(p);
        }
        if (survives) form_add_term(out, j, c);
    }
    return out;
}

namespace detail {

// Direct rule for T^e: digit extraction with p^e in place of p.
inline MonomialForm trace_direct(const MonomialForm& f, int e) {
    const std::uint64_t p = f.p;
    const Int pe = pow_int(Int(p), static_cast<unsigned>(e));
    MonomialForm out = make_form(p);
    for (const auto& [i, c] : f.terms) {
        bool survives = true;
        LatticeVector j(i.size());
        for (std::size_t k = 0; k < i.size(); ++k) {
            const Int shifted = i[k] - (pe - 1);
            if (shifted % pe != 0) {
                survives = false;
                break;
            }
            j[k] = shifted / pe;
        }
        if (survives) form_add_term(out, j, c);
    }
    return out;
}

} // namespace detail

/// e-fold composition of the trace; verified against the direct p^e rule.
inline MonomialForm trace_iterate(const MonomialForm& f, int e) {
    if (e < 1) throw Error("trace_iterate needs e >= 1");
    MonomialForm composed = f;
    for (int i = 0; i < e; ++i) composed = trace(composed);
    const MonomialForm direct = detail::trace_direct(f, e);
    if (!(composed == direct)) throw Error("trace iterate disagrees with the p^e digit rule");
    return composed;
}

namespace detail {

// Visit all a in Z_+^n with |a| <= cap, lex order.
template <typename Visit>
void walk_simplex(int n, long long cap, Visit visit) {
    LatticeVector a(static_cast<std::size_t>(n), Int(0));
    long long used = 0;
    while (true) {
        visit(a);
        // Next point: increment the last coordinate that has budget.
        std::size_t j = a.size();
        bool advanced = false;
        while (j > 0) {
            --j;
            if (used < cap) {
                ++a[j];
                ++used;
                advanced = true;
                break;
            }
            used -= a[j].convert_to<long long>();
            a[j] = 0;
        }
        if (!advanced) return;
    }
}

inline bool divides(const LatticeVector& g, const LatticeVector& a) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (a[i] < g[i]) return false;
    return true;
}

} // namespace detail

/// Checks T^e(J^[p^e] omega) = J omega on the degree <= cap truncation:
/// (a) every monomial of J^[p^e] lands in J omega or dies, and (b) every
/// monomial of J omega whose canonical witness fits the cap is hit.
inline bool trace_ideal_check(const std::vector<LatticeVector>& generators, int e,
                              std::uint64_t p, long long degree_cap) {
    require_prime(p);
    if (e < 1) throw Error("trace_ideal_check needs e >= 1");
    if (generators.empty()) throw Error("trace_ideal_check needs at least one generator");
    const std::size_t n = generators[0].size();
    for (const auto& g : generators) {
        if (g.size() != n) throw Error("ideal generators have mixed dimensions");
        for (const Int& c : g)
            if (c < 0) throw Error("ideal generators must have nonnegative exponents");
    }
    const Int pe = pow_int(Int(p), static_cast<unsigned>(e));
    std::vector<LatticeVector> bracket_gens; // p^e-th powers of the generators
    for (const auto& g : generators) {
        LatticeVector gp(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) gp[i] = g[i] * pe;
        bracket_gens.push_back(std::move(gp));
    }
    auto in_ideal = [](const std::vector<LatticeVector>& gens, const LatticeVector& a) {
        for (const auto& g : gens)
            if (detail::divides(g, a)) return true;
        return false;
    };

    bool ok = true;
    long long witnesses_checked = 0;
    detail::walk_simplex(static_cast<int>(n), degree_cap, [&](const LatticeVector& a) {
        // (a) containment leg.
        if (in_ideal(bracket_gens, a)) {
            const MonomialForm t = trace_iterate(form_monomial(p, a), e);
            for (const auto& [b, c] : t.terms)
                if (!in_ideal(generators, b)) ok = false;
        }
        // (b) surjectivity leg: target a in J omega, witness p^e*a + (p^e-1)*1.
        if (in_ideal(generators, a)) {
            LatticeVector w(a.size());
            Int degree = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                w[i] = pe * a[i] + (pe - 1);
                degree += w[i];
            }
            if (degree <= degree_cap) {
                ++witnesses_checked;
                if (!in_ideal(bracket_gens, w)) ok = false;
                const MonomialForm t = trace_iterate(form_monomial(p, w), e);
                if (!(t == form_monomial(p, a))) ok = false;
            }
        }
    });
    if (witnesses_checked == 0)
        throw CapTooSmall("no surjectivity witness fits under degree cap " +
                          std::to_string(degree_cap));
    return ok;
}

/// "y^3 dy"-style rendering; variables are y in one variable, y1..yn above.
inline std::string form_str(const MonomialForm& f) {
    if (f.terms.empty()) return "0";
    std::string out;
    for (const auto& [a, c] : f.terms) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += a.size() == 1 ? "y" : "y" + std::to_string(i + 1);
            if (a[i] != 1) mono += "^" + int_str(a[i]);
        }
        if (c != 1 || mono.empty()) {
            out += std::to_string(c);
            if (!mono.empty()) out += "*";
        }
        out += mono;
    }
    return out + " dy";
}

} // namespace frobsesh
