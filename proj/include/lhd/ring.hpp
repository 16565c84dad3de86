#pragma once

/**
 * @file ring.hpp
 * @brief Uniform access to the coefficient rings the determinant and
 *        hyperdeterminant kernels are generic over.
 *
 * Ring<R> provides zero/one/from_int and exact division; scale(r, c) applies
 * a scalar from the coefficient field (for a field acting on itself it is
 * plain multiplication).  Division must be exact; rings for which a quotient
 * does not exist throw std::domain_error.
 */

#include "lhd/bigrational.hpp"
#include "lhd/rational_function.hpp"

namespace lhd {

template <class R>
struct Ring;

template <>
struct Ring<BigRational> {
    static BigRational zero() { return BigRational(); }
    static BigRational one() { return BigRational(1); }
    static BigRational from_int(long v) { return BigRational(v); }
    static BigRational divide(const BigRational& a, const BigRational& b) { return a / b; }
};

template <>
struct Ring<RationalFunction> {
    static RationalFunction zero() { return RationalFunction::zero(); }
    static RationalFunction one() { return RationalFunction::one(); }
    static RationalFunction from_int(long v) { return RationalFunction(BigRational(v)); }
    static RationalFunction divide(const RationalFunction& a, const RationalFunction& b) {
        return a / b;
    }
};

inline BigRational scale(const BigRational& r, const BigRational& c) { return r * c; }
inline RationalFunction scale(const RationalFunction& r, const RationalFunction& c) { return r * c; }

/// prod_{i=1}^{n} (1 + x + ... + x^{i-1}) evaluated at an arbitrary field
/// element; the q-factorial that appears as the hyperdeterminant prefactor.
template <class K>
K lambda_factorial_at(unsigned n, const K& x) {
    K acc = Ring<K>::one();
    K bracket = Ring<K>::zero();
    K xpow = Ring<K>::one();
    for (unsigned i = 1; i <= n; ++i) {
        bracket = bracket + xpow;  // 1 + x + ... + x^{i-1}
        acc = acc * bracket;
        xpow = xpow * x;
    }
    return acc;
}

}  // namespace lhd
