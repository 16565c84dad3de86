#pragma once

/**
 * @file qpoly.hpp
 * @brief Dense univariate polynomials in q with exact rational coefficients.
 *
 * Invariant: the coefficient vector is empty (zero polynomial) or its last
 * entry is nonzero.  gcd() returns the primitive integer gcd with positive
 * leading coefficient, computed by a pseudo-remainder sequence that strips
 * content at every step.
 */

#include <string>
#include <utility>
#include <vector>

#include "lhd/bigrational.hpp"

namespace lhd {

class QPoly {
public:
    QPoly() = default;
    QPoly(const BigRational& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    QPoly(long c) : QPoly(BigRational(c)) {}
    explicit QPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPoly monomial(const BigRational& c, int deg);
    /// The indeterminate q.
    static QPoly generator() { return monomial(BigRational(1), 1); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of q^i (zero beyond the degree).
    const BigRational& coeff(int i) const;
    const BigRational& lc() const;

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    QPoly scaled(const BigRational& c) const;
    QPoly pow(unsigned e) const;

    /// Euclidean division over Q; throws on zero divisor.
    static std::pair<QPoly, QPoly> divrem(const QPoly& a, const QPoly& b);
    /// Exact quotient; throws if the remainder is nonzero.
    static QPoly div_exact(const QPoly& a, const QPoly& b);
    static QPoly gcd(const QPoly& a, const QPoly& b);

    BigRational eval(const BigRational& x) const;

    /// Scales to integer coefficients with content 1; sign follows the leading
    /// coefficient unless joint scaling is wanted (see RationalFunction).
    std::vector<BigInt> primitive_int_coeffs() const;

    const std::vector<BigRational>& coeffs() const { return coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<BigRational> coeffs_;  // coeffs_[i] multiplies q^i
};

}  // namespace lhd
