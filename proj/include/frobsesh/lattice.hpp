#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "frobsesh/errors.hpp"
#include "frobsesh/numeric.hpp"

namespace frobsesh {

/// Point of the lattice N or M (= Z^n). Dimension is fixed per computation.
using LatticeVector = std::vector<Int>;

/// Point of M_R with exact rational coordinates.
using RationalVector = std::vector<Rat>;

/// Dense n-by-n integer matrix, row-major.
class SquareIntMatrix {
  public:
    SquareIntMatrix() = default;

    explicit SquareIntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Int(0)) {}

    SquareIntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
        n_ = static_cast<int>(rows.size());
        a_.reserve(static_cast<std::size_t>(n_) * n_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n_)
                throw Error("matrix initializer is not square");
            for (const auto& v : row) a_.push_back(v);
        }
    }

    static SquareIntMatrix identity(int n) {
        SquareIntMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static SquareIntMatrix from_rows(const std::vector<LatticeVector>& rows) {
        SquareIntMatrix m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.n_; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.n_)
                throw Error("row length does not match matrix size");
            for (int j = 0; j < m.n_; ++j)
                m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    int size() const { return n_; }

    Int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Int& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    LatticeVector row(int i) const {
        LatticeVector r(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) r[static_cast<std::size_t>(j)] = (*this)(i, j);
        return r;
    }

    SquareIntMatrix transposed() const {
        SquareIntMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const SquareIntMatrix& a, const SquareIntMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    friend SquareIntMatrix operator*(const SquareIntMatrix& a, const SquareIntMatrix& b) {
        if (a.n_ != b.n_) throw Error("matrix size mismatch in product");
        SquareIntMatrix c(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const Int& aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

  private:
    int n_ = 0;
    std::vector<Int> a_;
};

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const RationalVector& a, const LatticeVector& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

inline Rat dot(const RationalVector& a, const RationalVector& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// m * v for an integer vector.
inline LatticeVector mat_vec(const SquareIntMatrix& m, const LatticeVector& v) {
    const int n = m.size();
    LatticeVector r(static_cast<std::size_t>(n), Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

inline RationalVector mat_vec(const SquareIntMatrix& m, const RationalVector& v) {
    const int n = m.size();
    RationalVector r(static_cast<std::size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r[static_cast<std::size_t>(i)] += Rat(m(i, j)) * v[static_cast<std::size_t>(j)];
    return r;
}

/// gcd of all coordinates, nonnegative; 0 for the zero vector.
inline Int content(const LatticeVector& v) {
    Int g = 0;
    for (const Int& c : v) g = boost::multiprecision::gcd(g, c);
    return g;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(const SquareIntMatrix& m) {
    const int n = m.size();
    if (n == 0) throw Error("determinant of empty matrix");
    SquareIntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (w(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w(k, j), w(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                w(i, j) = t / prev; // exact division, Bareiss invariant
            }
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

/// Unique exact solution of m*x = rhs. Throws SingularMatrix when det(m) = 0.
inline RationalVector solve_exact(const SquareIntMatrix& m, const RationalVector& rhs) {
    const int n = m.size();
    if (static_cast<int>(rhs.size()) != n) throw Error("rhs length does not match matrix size");
    // Rational Gauss-Jordan on the augmented system.
    std::vector<RationalVector> aug(static_cast<std::size_t>(n),
                                    RationalVector(static_cast<std::size_t>(n) + 1, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = Rat(m(i, j));
        aug[i][static_cast<std::size_t>(n)] = rhs[static_cast<std::size_t>(i)];
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (aug[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularMatrix("matrix is singular");
        std::swap(aug[static_cast<std::size_t>(col)], aug[static_cast<std::size_t>(pivot)]);
        const Rat inv = Rat(1) / aug[col][col];
        for (int j = col; j <= n; ++j) aug[col][j] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            const Rat f = aug[r][col];
            for (int j = col; j <= n; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    RationalVector x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = aug[i][static_cast<std::size_t>(n)];
    return x;
}

inline RationalVector solve_exact(const SquareIntMatrix& m, const LatticeVector& rhs) {
    RationalVector q(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) q[i] = Rat(rhs[i]);
    return solve_exact(m, q);
}

/// Integer inverse of a matrix with |det| = 1. Throws NotUnimodular otherwise.
inline SquareIntMatrix invert_unimodular(const SquareIntMatrix& m) {
    const int n = m.size();
    const Int d = det(m);
    if (d != 1 && d != -1)
        throw NotUnimodular("matrix determinant is " + int_str(d) + ", not +/-1");
    SquareIntMatrix inv(n);
    for (int col = 0; col < n; ++col) {
        RationalVector e(static_cast<std::size_t>(n), Rat(0));
        e[static_cast<std::size_t>(col)] = 1;
        const RationalVector x = solve_exact(m, e);
        for (int i = 0; i < n; ++i) {
            const Rat& xi = x[static_cast<std::size_t>(i)];
            if (!is_integer(xi)) throw Error("unimodular inverse produced a non-integer entry");
            inv(i, col) = rat_num(xi);
        }
    }
    return inv;
}

} // namespace frobsesh
