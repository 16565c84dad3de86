#pragma once

/**
 * @file rational_function.hpp
 * @brief The coefficient field Q(q): reduced ratios of rational-coefficient
 *        polynomials in one indeterminate q.
 *
 * Invariants: den != 0, gcd(num, den) = 1 over Q[q], den monic.  Equality is
 * plain component comparison of the canonical form.  The same field houses
 * the deformation parameter (lambda = q) and the Macdonald parameter via
 * t = q^m, so negative powers of q are ordinary field elements.
 */

#include <string>

#include "lhd/qpoly.hpp"

namespace lhd {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(BigRational(1)) {}
    RationalFunction(const BigRational& c) : num_(c), den_(BigRational(1)) {}
    RationalFunction(long c) : RationalFunction(BigRational(c)) {}
    RationalFunction(const QPoly& p) : num_(p), den_(BigRational(1)) {}
    RationalFunction(const QPoly& num, const QPoly& den) : num_(num), den_(den) { reduce(); }

    /// The indeterminate q itself.
    static RationalFunction q() { return RationalFunction(QPoly::generator()); }
    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction one() { return RationalFunction(BigRational(1)); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction inverse() const;
    /// Integer power; negative exponents go through the inverse.
    RationalFunction pow(long e) const;

    /// Exact evaluation at q = q0.  Throws on a pole; removable singularities
    /// are already gone because the stored form is reduced.
    BigRational specialize(const BigRational& q0) const;

    /// Canonical string: expanded integer-coefficient numerator/denominator,
    /// descending degree, e.g. "(-q^3 + 1)/(q + 1)".  A denominator of one is
    /// omitted; a constant value prints like a plain rational.
    std::string to_string() const;

    /// Parses +,-,*,/,^,(),integers and the symbol q (implicit '*' allowed).
    static RationalFunction parse(const std::string& text);

private:
    void reduce();
    QPoly num_;
    QPoly den_;
};

/// (q^a; q)_n = prod_{i=0}^{n-1} (1 - q^{a+i});  a may be negative.
RationalFunction qpochhammer(long a_power, unsigned n);

/// [n]_q! = prod_{i=1}^{n} (1 + q + ... + q^{i-1}), the cancelled polynomial
/// form of (q;q)_n / (1-q)^n; evaluates to n! at q = 1.
RationalFunction lambda_factorial(unsigned n);

}  // namespace lhd
