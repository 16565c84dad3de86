#pragma once

/**
 * @file symfun.hpp
 * @brief Homogeneous symmetric functions as partition-indexed coefficient
 *        maps over RationalFunction, in the power-sum (p) or monomial (m)
 *        basis, with exact basis conversion.
 *
 * Homogeneity is enforced: all stored partitions share one weight, the
 * degree.  The zero function has no terms and degree -1.
 */

#include <map>
#include <string>

#include "lhd/partition.hpp"
#include "lhd/rational_function.hpp"
#include "lhd/ring.hpp"

namespace lhd {

enum class SymBasis { power, monomial };

class SymFun {
public:
    using CoeffMap = std::map<Partition, RationalFunction>;

    /// Zero, in the power basis.
    SymFun() = default;

    static SymFun zero(SymBasis b = SymBasis::power) { return SymFun(b, {}); }
    static SymFun one(SymBasis b = SymBasis::power);
    static SymFun constant(const RationalFunction& c, SymBasis b = SymBasis::power);

    /// The basis element itself: p_lambda or m_lambda.
    static SymFun basis_element(SymBasis b, const Partition& lambda);

    /// Builds from a coefficient map, dropping zeros; throws on mixed weights.
    SymFun(SymBasis b, CoeffMap coeffs);

    SymBasis basis() const { return basis_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;  // -1 when zero
    const CoeffMap& coefficients() const { return coeffs_; }
    RationalFunction coefficient(const Partition& lambda) const;

    SymFun to_basis(SymBasis target) const;

    /// Mixed-basis operands are converted to the left operand's basis.
    /// Adding nonzero functions of different degrees throws std::domain_error.
    SymFun operator+(const SymFun& o) const;
    SymFun operator-(const SymFun& o) const;

    /// Product, computed in the p basis (partition concatenation); the result
    /// is always returned in the p basis.
    SymFun operator*(const SymFun& o) const;

    SymFun scaled(const RationalFunction& c) const;

    /// Exact equality as symmetric functions (compared in the p basis).
    bool operator==(const SymFun& o) const;
    bool operator!=(const SymFun& o) const { return !(*this == o); }

    /// Coefficient-wise specialization of q; throws on a pole.
    std::map<Partition, BigRational> specialize_q(const BigRational& q0) const;

    /// "(c1)*p[2,1] + (c2)*p[1,1,1]"; constant terms render as "(c)*1".
    std::string to_string() const;

private:
    SymBasis basis_ = SymBasis::power;
    CoeffMap coeffs_;

    void add_term(const Partition& lambda, const RationalFunction& c);
    static SymFun convert(const SymFun& f, SymBasis target);
};

template <>
struct Ring<SymFun> {
    static SymFun zero() { return SymFun::zero(); }
    static SymFun one() { return SymFun::one(); }
    static SymFun from_int(long v) { return SymFun::constant(RationalFunction(BigRational(v))); }
    /// Division is defined only by nonzero constants (all the determinant
    /// code paths over SymFun are division-free).
    static SymFun divide(const SymFun& a, const SymFun& b);
};

inline SymFun scale(const SymFun& f, const RationalFunction& c) { return f.scaled(c); }

/// p_lambda as a SymFun (power basis).
SymFun power_sum(const Partition& lambda);

/// The complete homogeneous function h_r = sum over lambda of z_lambda^{-1}
/// p_lambda (Newton's identity in closed form); h_0 = 1, h_{r<0} = 0.
SymFun complete_homogeneous(int r);

/// Jacobi-Trudi determinant s_lambda = det(h_{lambda_i - i + j}): the Schur
/// oracle used to pin down the t=q degeneration of the Macdonald engine.
SymFun schur_jacobi_trudi(const Partition& lambda);

/// Macdonald inner product at t = q^m, extended bilinearly from
/// <p_lambda, p_lambda> = z_lambda * prod_i (1-q^{lambda_i})/(1-q^{m*lambda_i}).
/// Throws std::domain_error when both sides are nonzero of different degrees.
RationalFunction scalar_product_qt(const SymFun& f, const SymFun& g, int m);

}  // namespace lhd
