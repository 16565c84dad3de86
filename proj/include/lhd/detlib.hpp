#pragma once

/**
 * @file detlib.hpp
 * @brief Determinants: classical, lambda-deformed (sum over alternating sign
 *        matrices), the lambda-Vandermonde product, and Pfaffians.
 *
 * Everything is generic over the entry ring R (rationals, rational functions
 * in q, Laurent polynomials, ...) with the deformation parameter lambda drawn
 * from a coefficient field K that acts on R via scale().
 */

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lhd/alt_matrix.hpp"
#include "lhd/parallel.hpp"
#include "lhd/ring.hpp"

namespace lhd {

template <class R>
struct Matrix {
    int n = 0;
    std::vector<R> a;

    Matrix() = default;
    explicit Matrix(int side) : n(side) {
        if (side <= 0) throw std::invalid_argument("Matrix: side must be positive");
        a.assign(static_cast<std::size_t>(side) * side, Ring<R>::zero());
    }

    static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
        Matrix m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.n; ++i) {
            if (static_cast<int>(rows[i].size()) != m.n)
                throw std::invalid_argument("Matrix: rows must form a square matrix");
            for (int j = 0; j < m.n; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    R& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const R& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

namespace detail {

template <class R>
R det_cofactor(const Matrix<R>& m, std::vector<int>& cols, int row) {
    if (cols.size() == 1) return m.at(row, cols[0]);
    R acc = Ring<R>::zero();
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int col = cols[k];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        R minor = det_cofactor(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
        R term = m.at(row, col) * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace detail

/// Classical determinant.  Cofactor expansion for small sizes; fraction-free
/// (Bareiss) elimination with row pivoting above that, which needs only exact
/// divisions and so stays inside integral domains.
template <class R>
R det_classical(Matrix<R> m) {
    if (m.n == 0) throw std::invalid_argument("det_classical: empty matrix");
    if (m.n <= 5) {
        std::vector<int> cols(m.n);
        for (int j = 0; j < m.n; ++j) cols[j] = j;
        return detail::det_cofactor(m, cols, 0);
    }
    const R zero = Ring<R>::zero();
    R prev = Ring<R>::one();
    bool negate = false;
    for (int k = 0; k + 1 < m.n; ++k) {
        if (m.at(k, k) == zero) {
            int pivot = -1;
            for (int i = k + 1; i < m.n; ++i)
                if (!(m.at(i, k) == zero)) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return zero;
            for (int j = 0; j < m.n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            negate = !negate;
        }
        for (int i = k + 1; i < m.n; ++i)
            for (int j = k + 1; j < m.n; ++j)
                m.at(i, j) = Ring<R>::divide(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    R det = m.at(m.n - 1, m.n - 1);
    return negate ? zero - det : det;
}

namespace detail {

/// The monomial A^X = prod a_ij^{x_ij} for an alternating sign matrix X.
/// Entries sitting under a -1 must be invertible; a zero there is reported
/// with the offending matrix and position.
template <class R>
R asm_monomial(const Matrix<R>& m, const Asm& x) {
    const R zero = Ring<R>::zero();
    R num = Ring<R>::one();
    R den = Ring<R>::one();
    bool has_den = false;
    for (int i = 0; i < x.side(); ++i)
        for (int j = 0; j < x.side(); ++j) {
            int e = x.entry(i, j);
            if (e == 1) {
                num = num * m.at(i, j);
            } else if (e == -1) {
                if (m.at(i, j) == zero) {
                    std::ostringstream msg;
                    msg << "det_lambda: entry a(" << (i + 1) << "," << (j + 1)
                        << ") is zero but appears with exponent -1 in " << x.to_string();
                    throw std::domain_error(msg.str());
                }
                den = den * m.at(i, j);
                has_den = true;
            }
        }
    return has_den ? Ring<R>::divide(num, den) : num;
}

}  // namespace detail

/// Lambda-determinant: sum over Alt_n of (-lambda)^{i(X)} (1-lambda^{-1})^{n(X)} A^X.
/// At lambda = 1 every matrix with a negative entry gets weight zero and the
/// sum collapses to the classical determinant; those terms are skipped before
/// A^X is formed, so zero entries under a -1 are harmless there.
template <class R, class K>
R det_lambda(const Matrix<R>& m, const K& lambda, Exec exec = Exec::parallel) {
    if (m.n == 0) throw std::invalid_argument("det_lambda: empty matrix");
    if (m.n > kAsmEnumerationCeiling)
        throw std::invalid_argument("det_lambda: side exceeds the Alt_n enumeration ceiling (" +
                                    std::to_string(kAsmEnumerationCeiling) + ")");
    const K kzero = Ring<K>::zero();
    const K kone = Ring<K>::one();
    if (lambda == kzero)
        throw std::domain_error("det_lambda: lambda must be nonzero (weights involve lambda^{-1})");

    const std::vector<Asm> alts = asm_enumerate(m.n);
    struct Stats {
        int inv;
        int neg;
    };
    std::vector<Stats> stats(alts.size());
    int max_inv = 0;
    int max_neg = 0;
    for (std::size_t t = 0; t < alts.size(); ++t) {
        stats[t] = {static_cast<int>(alts[t].inversion_number()),
                    static_cast<int>(alts[t].negative_count())};
        max_inv = std::max(max_inv, stats[t].inv);
        max_neg = std::max(max_neg, stats[t].neg);
    }

    const K neg_lambda = kzero - lambda;
    const K one_minus_inv = kone - Ring<K>::divide(kone, lambda);
    std::vector<K> pow_a(static_cast<std::size_t>(max_inv) + 1, kone);
    std::vector<K> pow_b(static_cast<std::size_t>(max_neg) + 1, kone);
    for (int i = 1; i <= max_inv; ++i) pow_a[i] = pow_a[i - 1] * neg_lambda;
    for (int i = 1; i <= max_neg; ++i) pow_b[i] = pow_b[i - 1] * one_minus_inv;

    return sum_terms<R>(
        static_cast<std::int64_t>(alts.size()), exec, Ring<R>::zero(), [&](std::int64_t t) -> R {
            const K w = pow_a[stats[t].inv] * pow_b[stats[t].neg];
            if (w == kzero) return Ring<R>::zero();
            return scale(detail::asm_monomial(m, alts[t]), w);
        });
}

/// prod_{1 <= i < j <= n} (x_j - lambda * x_i), the closed form the
/// lambda-determinant of the power matrix (x_i^{j-1}) factors into.
template <class R, class K>
R lambda_vandermonde_product(const std::vector<R>& xs, const K& lambda) {
    R acc = Ring<R>::one();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) acc = acc * (xs[j] - scale(xs[i], lambda));
    return acc;
}

/// The matrix (x_i^{j-1}), rows indexed by the points.
template <class R>
Matrix<R> power_matrix(const std::vector<R>& xs) {
    Matrix<R> m(static_cast<int>(xs.size()));
    for (int i = 0; i < m.n; ++i) {
        R p = Ring<R>::one();
        for (int j = 0; j < m.n; ++j) {
            m.at(i, j) = p;
            p = p * xs[i];
        }
    }
    return m;
}

namespace detail {

template <class R>
R pfaffian_rec(const Matrix<R>& m, std::vector<int>& idx) {
    if (idx.empty()) return Ring<R>::one();
    const int i0 = idx[0];
    R acc = Ring<R>::zero();
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const int jk = idx[k];
        std::vector<int> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t t = 1; t < idx.size(); ++t)
            if (t != k) rest.push_back(idx[t]);
        R term = m.at(i0, jk) * pfaffian_rec(m, rest);
        acc = (k % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace detail

/// Pfaffian of an antisymmetric matrix of even side, by expansion along the
/// first row.  Pf(A)^2 = det(A).  Throws on odd side or if A is not
/// antisymmetric.
template <class R>
R pfaffian(const Matrix<R>& m) {
    if (m.n % 2 != 0) throw std::invalid_argument("pfaffian: side must be even");
    const R zero = Ring<R>::zero();
    for (int i = 0; i < m.n; ++i) {
        if (!(m.at(i, i) == zero)) throw std::invalid_argument("pfaffian: diagonal must vanish");
        for (int j = i + 1; j < m.n; ++j)
            if (!(m.at(i, j) + m.at(j, i) == zero))
                throw std::invalid_argument("pfaffian: matrix is not antisymmetric");
    }
    std::vector<int> idx(m.n);
    for (int i = 0; i < m.n; ++i) idx[i] = i;
    return detail::pfaffian_rec(m, idx);
}

}  // namespace lhd
