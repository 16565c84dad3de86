#pragma once

/**
 * @file bigrational.hpp
 * @brief Exact arbitrary-precision rational numbers.
 *
 * Thin value wrapper over GMP's mpq_class that keeps every value
 * canonical: gcd(|num|, den) = 1 and den > 0 at all times (mpq_class
 * itself only canonicalizes on demand).  Zero is uniquely 0/1.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lhd {

using BigInt = mpz_class;

inline BigInt big_factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(static_cast<signed long>(n)) {}
    BigRational(const BigInt& n) : v_(n) {}
    BigRational(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("BigRational: zero denominator");
        v_.canonicalize();
    }
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    /// Parses "a/b" or "a" (base 10).
    static BigRational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw std::domain_error("BigRational: zero denominator in '" + s + "'");
        q.canonicalize();
        BigRational r;
        r.v_ = q;
        return r;
    }

    const BigInt num() const { return v_.get_num(); }
    const BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const { return wrap(-v_); }
    BigRational operator+(const BigRational& o) const { return wrap(v_ + o.v_); }
    BigRational operator-(const BigRational& o) const { return wrap(v_ - o.v_); }
    BigRational operator*(const BigRational& o) const { return wrap(v_ * o.v_); }
    BigRational operator/(const BigRational& o) const {
        if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
        return wrap(v_ / o.v_);
    }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

    bool operator==(const BigRational& o) const { return v_ == o.v_; }
    bool operator!=(const BigRational& o) const { return v_ != o.v_; }
    bool operator<(const BigRational& o) const { return v_ < o.v_; }
    bool operator<=(const BigRational& o) const { return v_ <= o.v_; }
    bool operator>(const BigRational& o) const { return v_ > o.v_; }
    bool operator>=(const BigRational& o) const { return v_ >= o.v_; }

    BigRational abs() const { return wrap(::abs(v_)); }

    std::string to_string() const { return v_.get_str(); }

private:
    static BigRational wrap(const mpq_class& q) {
        BigRational r;
        r.v_ = q;
        return r;
    }
    mpq_class v_;
};

}  // namespace lhd
