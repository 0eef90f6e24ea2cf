#pragma once

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "frobsesh/errors.hpp"
#include "frobsesh/numeric.hpp"
#include "frobsesh/seshadri.hpp"
#include "frobsesh/toric.hpp"

namespace frobsesh {

/// Lattice-point budget for section enumeration; FROBSESH_SECTION_CAP overrides.
inline long long section_cap() {
    if (const char* env = std::getenv("FROBSESH_SECTION_CAP")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) return v;
    }
    return 1'000'000;
}

/// Above this many estimated sections (or quotient exponents) a single-point
/// separation test switches from the explicit matrix to the equivalent
/// polytope-membership scan; below it, both run and must agree.
inline constexpr long long kMembershipAuditThreshold = 50'000;

/// Monomial basis of H^0(X, O(mD)): all lattice points of m*P_D, lex order.
struct SectionBasis {
    ToricDivisor divisor;
    Int m;
    std::vector<LatticeVector> points;
};

enum class QuotientKind {
    frobenius,        // m_x^[p^e]: exponents with every a_i <= p^e - 1
    classical,        // m_x^{l+1}: exponents with sum a_i <= l
    frobenius_square, // (m_x^2)^[p^e]: at most one a_i >= p^e, that one <= 2p^e - 1
};

inline std::string quotient_kind_name(QuotientKind kind) {
    switch (kind) {
        case QuotientKind::frobenius: return "frobenius";
        case QuotientKind::classical: return "classical";
        case QuotientKind::frobenius_square: return "frobenius-square";
    }
    return "?";
}

namespace detail {

// Shared odometer: visit every integer point of [lo, hi] in lex order.
// visit returns false to abort the walk.
template <typename Visit>
void walk_box(const std::vector<Int>& lo, const std::vector<Int>& hi, Visit visit) {
    const std::size_t n = lo.size();
    for (std::size_t i = 0; i < n; ++i)
        if (lo[i] > hi[i]) return;
    LatticeVector u = lo;
    while (true) {
        if (!visit(u)) return;
        std::size_t j = n;
        while (j > 0) {
            --j;
            if (u[j] < hi[j]) {
                ++u[j];
                for (std::size_t k = j + 1; k < n; ++k) u[k] = lo[k];
                break;
            }
            if (j == 0) return;
        }
    }
}

template <typename Visit>
void walk_box_i64(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                  Visit visit) {
    const std::size_t n = lo.size();
    for (std::size_t i = 0; i < n; ++i)
        if (lo[i] > hi[i]) return;
    std::vector<std::int64_t> u = lo;
    while (true) {
        if (!visit(u)) return;
        std::size_t j = n;
        while (j > 0) {
            --j;
            if (u[j] < hi[j]) {
                ++u[j];
                for (std::size_t k = j + 1; k < n; ++k) u[k] = lo[k];
                break;
            }
            if (j == 0) return;
        }
    }
}

inline bool fits_i64(const Int& v) {
    static const Int lim = Int(1) << 56;
    return v > -lim && v < lim;
}

// Linear constraints <normal, u> >= bound with int64 storage, plus a proof
// that every dot product over the box stays far from int64 overflow.
struct I64System {
    std::vector<std::vector<std::int64_t>> normals;
    std::vector<std::int64_t> bounds;
    std::vector<std::int64_t> lo, hi;
    bool usable = false;
};

inline I64System narrow_system(const std::vector<std::pair<LatticeVector, Int>>& ineqs,
                               const std::vector<Int>& lo, const std::vector<Int>& hi) {
    I64System sys;
    for (const Int& v : lo)
        if (!fits_i64(v)) return sys;
    for (const Int& v : hi)
        if (!fits_i64(v)) return sys;
    for (const auto& [normal, bound] : ineqs) {
        if (!fits_i64(bound)) return sys;
        for (const Int& c : normal)
            if (!fits_i64(c)) return sys;
    }
    const Int safe = Int(1) << 60;
    for (const auto& [normal, bound] : ineqs) {
        Int reach = bound < 0 ? Int(-bound) : bound;
        for (std::size_t i = 0; i < normal.size(); ++i) {
            const Int la = lo[i] < 0 ? Int(-lo[i]) : lo[i];
            const Int ha = hi[i] < 0 ? Int(-hi[i]) : hi[i];
            const Int na = normal[i] < 0 ? Int(-normal[i]) : normal[i];
            reach += na * (la > ha ? la : ha);
        }
        if (reach >= safe) return sys;
    }
    for (const auto& [normal, bound] : ineqs) {
        std::vector<std::int64_t> row;
        for (const Int& c : normal) row.push_back(c.convert_to<std::int64_t>());
        sys.normals.push_back(std::move(row));
        sys.bounds.push_back(bound.convert_to<std::int64_t>());
    }
    for (const Int& v : lo) sys.lo.push_back(v.convert_to<std::int64_t>());
    for (const Int& v : hi) sys.hi.push_back(v.convert_to<std::int64_t>());
    sys.usable = true;
    return sys;
}

inline bool satisfies_i64(const I64System& sys, const std::vector<std::int64_t>& u) {
    for (std::size_t k = 0; k < sys.normals.size(); ++k) {
        std::int64_t dot = 0;
        const auto& row = sys.normals[k];
        for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * u[i];
        if (dot < sys.bounds[k]) return false;
    }
    return true;
}

} // namespace detail

/// H-rep inequalities of m*P_D as integer data, one per ray.
inline std::vector<std::pair<LatticeVector, Int>> scaled_inequalities(const ToricDivisor& d,
                                                                      const Int& m) {
    std::vector<std::pair<LatticeVector, Int>> ineqs;
    const Fan& fan = *d.fan;
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
        ineqs.emplace_back(fan.rays[i], -m * d.coeffs[i]); // <u, v_i> >= -m a_i
    return ineqs;
}

/// Bounding box of m*P_D from its vertices. Throws UnboundedPolytope when the
/// divisor is not nef (no torus-fixed vertex survives the inequality filter).
inline std::pair<std::vector<Int>, std::vector<Int>> section_box(const ToricDivisor& d,
                                                                 const Int& m) {
    const ToricDivisor md = divisor_combine(d, d, m, 0);
    const LatticePolytopeH pm = polytope_of(md);
    if (pm.vertices.empty())
        throw UnboundedPolytope("divisor is not nef: section polytope has no fixed-point vertex");
    const int n = d.fan->dim;
    std::vector<Int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rat mn = pm.vertices[0][static_cast<std::size_t>(i)];
        Rat mx = mn;
        for (const auto& v : pm.vertices) {
            mn = std::min(mn, v[static_cast<std::size_t>(i)]);
            mx = std::max(mx, v[static_cast<std::size_t>(i)]);
        }
        lo[static_cast<std::size_t>(i)] = ceil_rat(mn);
        hi[static_cast<std::size_t>(i)] = floor_rat(mx);
    }
    return {std::move(lo), std::move(hi)};
}

/// Product of box side lengths: an upper bound for the section count.
inline Int section_count_estimate(const ToricDivisor& d, const Int& m) {
    auto [lo, hi] = section_box(d, m);
    Int vol = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (hi[i] < lo[i]) return 0;
        vol *= hi[i] - lo[i] + 1;
    }
    return vol;
}

/// All lattice points of m*P_D in lex order (bounding box + inequality filter).
inline SectionBasis enumerate_sections(const ToricDivisor& d, const Int& m,
                                       long long cap = section_cap()) {
    auto [lo, hi] = section_box(d, m);
    const auto ineqs = scaled_inequalities(d, m);
    SectionBasis basis{d, m, {}};
    const detail::I64System sys = detail::narrow_system(ineqs, lo, hi);
    long long count = 0;
    if (sys.usable) {
        detail::walk_box_i64(sys.lo, sys.hi, [&](const std::vector<std::int64_t>& u) {
            if (!detail::satisfies_i64(sys, u)) return true;
            if (++count > cap) throw SizeLimit("section count exceeds cap " + std::to_string(cap));
            LatticeVector point(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) point[i] = u[i];
            basis.points.push_back(std::move(point));
            return true;
        });
    } else {
        detail::walk_box(lo, hi, [&](const LatticeVector& u) {
            for (const auto& [normal, bound] : ineqs)
                if (dot(u, normal) < bound) return true;
            if (++count > cap) throw SizeLimit("section count exceeds cap " + std::to_string(cap));
            basis.points.push_back(u);
            return true;
        });
    }
    return basis;
}

/// Integral chart data of m*D at a fixed point: local exponent of chi^u is
/// to_local*(u - vertex); the inequalities carve m*P_D in local coordinates.
struct LocalChart {
    int cone_index = -1;
    SquareIntMatrix to_local;
    LatticeVector vertex;
    std::vector<std::pair<LatticeVector, Int>> ineqs; // <w, y> >= c, coordinate rows first
};

inline LocalChart local_chart(const ToricDivisor& d, const Int& m, int cone_index) {
    const ToricDivisor md = divisor_combine(d, d, m, 0);
    auto [chart, cp] = chart_at(md, cone_index);
    LocalChart lc;
    lc.cone_index = cone_index;
    lc.to_local = chart.to_local;
    lc.vertex.resize(chart.vertex.size());
    for (std::size_t i = 0; i < chart.vertex.size(); ++i) {
        if (!is_integer(chart.vertex[i]))
            throw Error("fixed-point vertex is not integral on a smooth fan");
        lc.vertex[i] = rat_num(chart.vertex[i]);
    }
    for (const auto& ineq : cp.inequalities) {
        LatticeVector w(ineq.normal.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!is_integer(ineq.normal[i])) throw Error("charted normal is not integral");
            w[i] = rat_num(ineq.normal[i]);
        }
        if (!is_integer(ineq.bound)) throw Error("charted bound is not integral");
        lc.ineqs.emplace_back(std::move(w), rat_num(ineq.bound));
    }
    return lc;
}

inline LatticeVector local_exponent(const LocalChart& lc, const LatticeVector& u) {
    LatticeVector diff(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - lc.vertex[i];
    return mat_vec(lc.to_local, diff);
}

/// Per-coordinate exponent ceiling of a quotient basis, and its filter.
inline Int quotient_box_side(QuotientKind kind, int e_or_ell, std::uint64_t p) {
    const Int pe = kind == QuotientKind::classical
                       ? Int(e_or_ell)
                       : pow_int(Int(p), static_cast<unsigned>(e_or_ell));
    switch (kind) {
        case QuotientKind::frobenius: return pe - 1;
        case QuotientKind::classical: return pe; // sum <= l implies each a_i <= l
        case QuotientKind::frobenius_square: return 2 * pe - 1;
    }
    return 0;
}

inline bool quotient_accepts(QuotientKind kind, int e_or_ell, std::uint64_t p,
                             const LatticeVector& a) {
    switch (kind) {
        case QuotientKind::frobenius: {
            const Int lim = pow_int(Int(p), static_cast<unsigned>(e_or_ell)) - 1;
            for (const Int& c : a)
                if (c > lim) return false;
            return true;
        }
        case QuotientKind::classical: {
            Int total = 0;
            for (const Int& c : a) total += c;
            return total <= e_or_ell;
        }
        case QuotientKind::frobenius_square: {
            const Int pe = pow_int(Int(p), static_cast<unsigned>(e_or_ell));
            int big = 0;
            for (const Int& c : a) {
                if (c >= 2 * pe) return false;
                if (c >= pe) ++big;
            }
            return big <= 1;
        }
    }
    return false;
}

/// Monomial basis of the local quotient ring, lex order on exponents.
inline std::vector<LatticeVector> quotient_exponents(QuotientKind kind, int n, int e_or_ell,
                                                     std::uint64_t p) {
    require_prime(p);
    if (e_or_ell < 0) throw Error("quotient parameter must be >= 0");
    const std::vector<Int> lo(static_cast<std::size_t>(n), Int(0));
    const std::vector<Int> hi(static_cast<std::size_t>(n), quotient_box_side(kind, e_or_ell, p));
    std::vector<LatticeVector> out;
    detail::walk_box(lo, hi, [&](const LatticeVector& a) {
        if (quotient_accepts(kind, e_or_ell, p, a)) out.push_back(a);
        return true;
    });
    return out;
}

/// dim of the quotient, without enumeration.
inline Int quotient_dimension(QuotientKind kind, int n, int e_or_ell, std::uint64_t p) {
    switch (kind) {
        case QuotientKind::frobenius:
            return pow_int(pow_int(Int(p), static_cast<unsigned>(e_or_ell)),
                           static_cast<unsigned>(n));
        case QuotientKind::classical: {
            // C(l + n, n)
            Int num = 1, den = 1;
            for (int i = 1; i <= n; ++i) {
                num *= e_or_ell + i;
                den *= i;
            }
            return num / den;
        }
        case QuotientKind::frobenius_square: {
            const Int pen = pow_int(pow_int(Int(p), static_cast<unsigned>(e_or_ell)),
                                    static_cast<unsigned>(n));
            return (Int(n) + 1) * pen;
        }
    }
    return 0;
}

/// Sparse 0/1 restriction matrix from sections of m*D to the direct sum of
/// local quotients at the fixed points of Z. Row/column order is frozen:
/// rows are Z-blocks of lex-ordered exponents, columns lex-ordered sections.
struct RestrictionMatrix {
    std::uint64_t p = 0;
    Int m;
    int e_or_ell = 0;
    QuotientKind kind = QuotientKind::frobenius;
    std::vector<int> points; // cone indices Z
    long long rows = 0;
    long long cols = 0;
    std::vector<std::pair<long long, long long>> entries; // (row, col), value 1
};

inline RestrictionMatrix restriction_matrix(const ToricDivisor& d, const Int& m,
                                            const std::vector<int>& Z, QuotientKind kind,
                                            int e_or_ell, std::uint64_t p,
                                            long long cap = section_cap()) {
    require_prime(p);
    const SectionBasis basis = enumerate_sections(d, m, cap);
    const int n = d.fan->dim;

    RestrictionMatrix mat;
    mat.p = p;
    mat.m = m;
    mat.e_or_ell = e_or_ell;
    mat.kind = kind;
    mat.points = Z;
    mat.cols = static_cast<long long>(basis.points.size());

    std::vector<LocalChart> charts;
    std::vector<std::map<LatticeVector, long long>> row_of;
    long long offset = 0;
    for (int z : Z) {
        charts.push_back(local_chart(d, m, z));
        const auto exps = quotient_exponents(kind, n, e_or_ell, p);
        std::map<LatticeVector, long long> index;
        for (std::size_t i = 0; i < exps.size(); ++i)
            index[exps[i]] = offset + static_cast<long long>(i);
        offset += static_cast<long long>(exps.size());
        row_of.push_back(std::move(index));
    }
    mat.rows = offset;

    for (std::size_t j = 0; j < basis.points.size(); ++j)
        for (std::size_t zi = 0; zi < charts.size(); ++zi) {
            const LatticeVector a = local_exponent(charts[zi], basis.points[j]);
            const auto it = row_of[zi].find(a);
            if (it != row_of[zi].end())
                mat.entries.emplace_back(it->second, static_cast<long long>(j));
        }
    return mat;
}

/// `p m e |Z| rows cols` header, then one `row col 1` line per entry.
inline void dump_matrix(const RestrictionMatrix& mat, std::ostream& os) {
    os << mat.p << ' ' << int_str(mat.m) << ' ' << mat.e_or_ell << ' ' << mat.points.size() << ' '
       << mat.rows << ' ' << mat.cols << '\n';
    for (const auto& [row, col] : mat.entries) os << row << ' ' << col << " 1\n";
}

namespace detail {

inline std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t out = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) out = out * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return out;
}

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

// Sparse elimination on the transpose: each column of the matrix becomes a
// sparse row keyed by its leading row index. Fill-in stays near the per-column
// support (<= |Z| nonzeros) for restriction matrices.
inline long long sparse_rank_mod_p(const RestrictionMatrix& mat) {
    using SparseVec = std::map<long long, std::uint64_t>;
    const std::uint64_t p = mat.p;
    std::vector<SparseVec> columns(static_cast<std::size_t>(mat.cols));
    for (const auto& [row, col] : mat.entries) {
        auto& c = columns[static_cast<std::size_t>(col)];
        c[row] = (c.count(row) ? (c[row] + 1) % p : 1);
    }
    std::map<long long, SparseVec> pivots; // leading row -> normalized vector
    long long rank = 0;
    for (auto& vec : columns) {
        for (auto it = vec.begin(); it != vec.end();) {
            if (it->second % p == 0)
                it = vec.erase(it);
            else
                ++it;
        }
        while (!vec.empty()) {
            const long long lead = vec.begin()->first;
            const auto pivot_it = pivots.find(lead);
            if (pivot_it == pivots.end()) {
                const std::uint64_t inv = mod_inverse(vec.begin()->second, p);
                for (auto& [r, v] : vec) v = v * inv % p;
                pivots.emplace(lead, std::move(vec));
                ++rank;
                vec.clear();
                break;
            }
            const std::uint64_t factor = vec.begin()->second;
            for (const auto& [r, v] : pivot_it->second) {
                const std::uint64_t sub = factor * v % p;
                auto it = vec.find(r);
                const std::uint64_t cur = it == vec.end() ? 0 : it->second;
                const std::uint64_t next = (cur + p - sub) % p;
                if (next == 0) {
                    if (it != vec.end()) vec.erase(it);
                } else if (it == vec.end()) {
                    vec.emplace(r, next);
                } else {
                    it->second = next;
                }
            }
        }
    }
    return rank;
}

inline long long dense_rank_mod_p(const RestrictionMatrix& mat) {
    const std::uint64_t p = mat.p;
    const auto rows = static_cast<std::size_t>(mat.rows);
    const auto cols = static_cast<std::size_t>(mat.cols);
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols, 0));
    for (const auto& [row, col] : mat.entries) {
        auto& cell = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        cell = (cell + 1) % p;
    }
    long long rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[pivot_row]);
        const std::uint64_t inv = mod_inverse(a[pivot_row][col], p);
        for (std::size_t j = col; j < cols; ++j) a[pivot_row][j] = a[pivot_row][j] * inv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a[r][col] == 0) continue;
            const std::uint64_t f = a[r][col];
            for (std::size_t j = col; j < cols; ++j)
                a[r][j] = (a[r][j] + (p - f) * a[pivot_row][j]) % p;
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

} // namespace detail

/// Exact rank over F_p: dense elimination below 512 columns, sparse above.
inline long long rank_mod_p(const RestrictionMatrix& mat) {
    if (mat.rows == 0 || mat.cols == 0) return 0;
    if (mat.cols < 512 && mat.rows <= (1 << 20) / (mat.cols ? mat.cols : 1))
        return detail::dense_rank_mod_p(mat);
    return detail::sparse_rank_mod_p(mat);
}

/// Exact rank over Q of the same 0/1 matrix (characteristic-sensitivity probe).
inline long long rank_over_q(const RestrictionMatrix& mat) {
    using SparseVec = std::map<long long, Rat>;
    std::vector<SparseVec> columns(static_cast<std::size_t>(mat.cols));
    for (const auto& [row, col] : mat.entries) columns[static_cast<std::size_t>(col)][row] += 1;
    std::map<long long, SparseVec> pivots;
    long long rank = 0;
    for (auto& vec : columns) {
        for (auto it = vec.begin(); it != vec.end();)
            it = it->second == 0 ? vec.erase(it) : std::next(it);
        while (!vec.empty()) {
            const long long lead = vec.begin()->first;
            const auto pivot_it = pivots.find(lead);
            if (pivot_it == pivots.end()) {
                const Rat inv = Rat(1) / vec.begin()->second;
                for (auto& [r, v] : vec) v *= inv;
                pivots.emplace(lead, std::move(vec));
                ++rank;
                vec.clear();
                break;
            }
            const Rat factor = vec.begin()->second;
            for (const auto& [r, v] : pivot_it->second) {
                auto it = vec.find(r);
                if (it == vec.end()) {
                    Rat next = -factor * v;
                    if (next != 0) vec.emplace(r, std::move(next));
                } else {
                    it->second -= factor * v;
                    if (it->second == 0) vec.erase(it);
                }
            }
        }
    }
    return rank;
}

/// Outcome of one brute-force separation test.
struct JetInstanceResult {
    Int m;
    int e_or_ell = 0;
    std::uint64_t p = 0;
    QuotientKind kind = QuotientKind::frobenius;
    std::vector<int> points;
    long long rows = 0;
    long long cols = 0; // 0 when the membership path skipped enumeration
    long long rank = 0;
    bool surjective = false;
    bool via_membership = false;
};

namespace detail {

// Single fixed point: the matrix is a partial permutation, so its rank equals
// the number of quotient exponents that lie in the charted m*P_D. Walks the
// quotient box without materializing exponents or sections.
inline long long membership_rank(const ToricDivisor& d, const Int& m, int cone,
                                 QuotientKind kind, int e_or_ell, std::uint64_t p) {
    const LocalChart lc = local_chart(d, m, cone);
    const int n = d.fan->dim;
    const std::vector<Int> lo(static_cast<std::size_t>(n), Int(0));
    const std::vector<Int> hi(static_cast<std::size_t>(n), quotient_box_side(kind, e_or_ell, p));
    long long hits = 0;

    const I64System sys = narrow_system(lc.ineqs, lo, hi);
    if (sys.usable) {
        // Kind filter in int64 as well; bounds already proven narrow.
        const std::int64_t pe =
            kind == QuotientKind::classical
                ? e_or_ell
                : pow_int(Int(p), static_cast<unsigned>(e_or_ell)).convert_to<std::int64_t>();
        walk_box_i64(sys.lo, sys.hi, [&](const std::vector<std::int64_t>& a) {
            bool ok = true;
            if (kind == QuotientKind::classical) {
                std::int64_t total = 0;
                for (const auto c : a) total += c;
                ok = total <= pe;
            } else if (kind == QuotientKind::frobenius_square) {
                int big = 0;
                for (const auto c : a)
                    if (c >= pe) ++big;
                ok = big <= 1;
            }
            if (ok && satisfies_i64(sys, a)) ++hits;
            return true;
        });
        return hits;
    }
    walk_box(lo, hi, [&](const LatticeVector& a) {
        if (!quotient_accepts(kind, e_or_ell, p, a)) return true;
        for (const auto& [w, c] : lc.ineqs)
            if (dot(a, w) < c) return true;
        ++hits;
        return true;
    });
    return hits;
}

} // namespace detail

/// Does H^0(O(mD)) surject onto the chosen quotients at the fixed points Z?
/// Single-point instances above the audit threshold run the equivalent
/// membership scan; smaller ones build the matrix and cross-check both.
inline JetInstanceResult separates(const ToricDivisor& d, const Int& m, const std::vector<int>& Z,
                                   QuotientKind kind, int e_or_ell, std::uint64_t p,
                                   long long cap = section_cap()) {
    require_prime(p);
    if (m < 1) throw Error("separation test needs m >= 1");
    if (Z.empty()) throw Error("separation test needs at least one fixed point");
    const int n = d.fan->dim;

    JetInstanceResult res;
    res.m = m;
    res.e_or_ell = e_or_ell;
    res.p = p;
    res.kind = kind;
    res.points = Z;

    const Int qdim_one = quotient_dimension(kind, n, e_or_ell, p);
    const Int qdim_total = qdim_one * Int(Z.size());
    if (qdim_total > (Int(1) << 40)) throw SizeLimit("quotient dimension out of reach");
    res.rows = qdim_total.convert_to<long long>();

    if (Z.size() == 1) {
        const Int estimate = section_count_estimate(d, m);
        const bool oversized =
            estimate > kMembershipAuditThreshold || qdim_one > kMembershipAuditThreshold;
        const long long hits = detail::membership_rank(d, m, Z[0], kind, e_or_ell, p);
        if (oversized) {
            res.rank = hits;
            res.cols = 0;
            res.via_membership = true;
            res.surjective = res.rank == res.rows;
            return res;
        }
        const RestrictionMatrix mat = restriction_matrix(d, m, Z, kind, e_or_ell, p, cap);
        res.cols = mat.cols;
        res.rank = rank_mod_p(mat);
        if (res.rank != hits)
            throw Error("matrix rank disagrees with membership count at a single fixed point");
        res.surjective = res.rank == res.rows;
        return res;
    }

    const RestrictionMatrix mat = restriction_matrix(d, m, Z, kind, e_or_ell, p, cap);
    res.cols = mat.cols;
    res.rank = rank_mod_p(mat);
    res.surjective = res.rank == res.rows;
    return res;
}

/// Largest e in 1..e_cap with Frobenius-e separation at one fixed point; 0 if
/// none. Separation at e+1 implies it at e, so the scan stops at first failure.
inline int oracle_frobenius_jet_number(const ToricDivisor& d, const Int& m, int cone,
                                       std::uint64_t p, int e_cap,
                                       long long cap = section_cap()) {
    int best = 0;
    for (int e = 1; e <= e_cap; ++e) {
        if (!separates(d, m, {cone}, QuotientKind::frobenius, e, p, cap).surjective) break;
        best = e;
    }
    return best;
}

/// Largest l in 0..l_cap with classical l-jet separation at one fixed point;
/// -1 if even l = 0 fails (no section is nonzero at x).
inline int oracle_classical_jet_number(const ToricDivisor& d, const Int& m, int cone,
                                       std::uint64_t p, int l_cap,
                                       long long cap = section_cap()) {
    int best = -1;
    for (int l = 0; l <= l_cap; ++l) {
        if (!separates(d, m, {cone}, QuotientKind::classical, l, p, cap).surjective) break;
        best = l;
    }
    return best;
}

/// Separation against (m_x^2)^[p^e] (tangent-vector leg of the adjoint checks).
inline JetInstanceResult two_jet_separates(const ToricDivisor& d, const Int& m, int cone, int e,
                                           std::uint64_t p, long long cap = section_cap()) {
    return separates(d, m, {cone}, QuotientKind::frobenius_square, e, p, cap);
}

} // namespace frobsesh
