#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nssd {

using BigInt = boost::multiprecision::cpp_int;

/// Square matrix over an exact integer type. Everything in this module is
/// exact: no floating point, divisions only where they are provably integral.
template <class Int>
class SquareMatrix {
public:
    SquareMatrix() : dim_(0) {}
    explicit SquareMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {
        if (dim < 0) throw std::invalid_argument("SquareMatrix: negative dimension");
    }

    template <class T>
    static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        SquareMatrix m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.dim_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.dim_)
                throw std::invalid_argument("SquareMatrix: input is not square");
            for (int j = 0; j < m.dim_; ++j) m.at(i, j) = Int(rows[i][j]);
        }
        return m;
    }

    int dim() const { return dim_; }
    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

    void swap_rows(int i, int j) {
        for (int c = 0; c < dim_; ++c) std::swap(at(i, c), at(j, c));
    }

    /// Principal submatrix with row/column `drop` removed.
    SquareMatrix without(int drop) const {
        SquareMatrix m(dim_ - 1);
        for (int i = 0, r = 0; i < dim_; ++i) {
            if (i == drop) continue;
            for (int j = 0, c = 0; j < dim_; ++j) {
                if (j == drop) continue;
                m.at(r, c++) = at(i, j);
            }
            ++r;
        }
        return m;
    }

private:
    int dim_;
    std::vector<Int> a_;
};

using IntMatrix = SquareMatrix<BigInt>;

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Intermediate entries are minors of the input, so with an arbitrary-precision
/// Int there is no overflow; with int64 the caller must bound the minors
/// (0/1 matrices up to 16x16 stay below 2^63 including the update products).
template <class Int>
Int determinant(SquareMatrix<Int> m) {
    const int n = m.dim();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return Int(0);
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = Int(0);
        }
        prev = m.at(k, k);
    }
    Int d = m.at(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

/// Exact rank over the rationals: fraction-free elimination, searching the
/// whole remaining block for a pivot (column swaps only reorder variables).
template <class Int>
int rank(SquareMatrix<Int> m) {
    const int n = m.dim();
    Int prev(1);
    int r = 0;
    for (int k = 0; k < n; ++k) {
        int pi = -1, pj = -1;
        for (int i = k; i < n && pi < 0; ++i)
            for (int j = k; j < n; ++j)
                if (m.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != k) m.swap_rows(k, pi);
        if (pj != k)
            for (int i = 0; i < n; ++i) std::swap(m.at(i, k), m.at(i, pj));
        ++r;
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = Int(0);
        }
        prev = m.at(k, k);
    }
    return r;
}

/// Multiplicity of the eigenvalue 0 = dim - rank (exact).
template <class Int>
int nullity(const SquareMatrix<Int>& m) {
    return m.dim() - rank(m);
}

/// Determinant of m with row i and column i removed. Requires dim >= 2.
template <class Int>
Int principal_minor(const SquareMatrix<Int>& m, int i) {
    if (m.dim() < 2) throw std::invalid_argument("principal_minor: dimension must be >= 2");
    if (i < 0 || i >= m.dim()) throw std::out_of_range("principal_minor: index out of range");
    return determinant(m.without(i));
}

/// Integer polynomial, coefficients lowest degree first; the zero polynomial
/// has an empty coefficient list.
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) { normalize(); }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_sub(const IntPolynomial& p, const IntPolynomial& q);
BigInt eval_at_zero(const IntPolynomial& p);

/// Multiplicity of the root 0: index of the first non-zero coefficient
/// (0 for the zero polynomial).
int trailing_zero_count(const IntPolynomial& p);

/// Characteristic polynomial det(lambda I - M) by the Faddeev-LeVerrier
/// recurrence; all divisions are exact for integer input.
IntPolynomial char_poly(const IntMatrix& m);

}  // namespace nssd
