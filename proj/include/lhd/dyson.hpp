#pragma once

/**
 * @file dyson.hpp
 * @brief The q-Dyson side of the rectangular Macdonald identity: expand the
 *        finite Laurent product F, truncate the generating product G, and
 *        extract the coefficient of z_1^k ... z_s^k from F*G.
 *
 * F = prod_{1<=i<j<=s} (z_i z_j^{-1}; q)_m (q z_i^{-1} z_j; q)_m is a genuine
 * Laurent polynomial; G = prod_i sum_{j>=0} g_j(q, q^m) z_i^j is an infinite
 * product, but only finitely many of its monomials can complete an F monomial
 * to z_1^k ... z_s^k.  Every exponent of F lies in [-m(s-1), m(s-1)], so the
 * G factor for z_i is never consulted past degree k + m(s-1); that bound is
 * g_truncation_bound and makes the extraction finite.
 *
 * The extracted coefficient equals (q;q)_{sm} / (q;q)_m^s * Q_{(k^s)}(q, q^m),
 * which is what makes this module an oracle for the hyperdeterminant identity:
 * it reaches the same rectangular Macdonald function through an entirely
 * different computation.
 */

#include <cstdint>

#include "lhd/laurent.hpp"
#include "lhd/macdonald.hpp"
#include "lhd/parallel.hpp"
#include "lhd/rational_function.hpp"
#include "lhd/symfun.hpp"

namespace lhd {

/// Laurent polynomials in z_1..z_s with rational-function coefficients.
using ZPoly = LaurentPoly<RationalFunction>;

/// Like ZPoly but with symmetric-function coefficients (the truncated G).
using SymCoeffPoly = LaurentPoly<SymFun>;

/// Minimal per-variable truncation degree of G that makes the coefficient of
/// z_1^k ... z_s^k in F*G exact: F exponents reach down to -m(s-1).
constexpr int g_truncation_bound(int k, int s, int m) { return k + m * (s - 1); }

/// Fully expanded F (Eq. above).  s = 1 gives the empty product, 1.
ZPoly expand_F(int s, int m, std::int64_t budget = kDefaultTermBudget);

/// prod_{i=1}^s (1 + g_1 z_i + ... + g_dmax z_i^dmax) with one-row Macdonald
/// coefficients drawn from the engine.
SymCoeffPoly truncated_G(int s, int m, int dmax, MacdonaldEngine& engine);

/// Coefficient of z_1^k ... z_s^k in F*G, computed term by term against the
/// complementary G monomials without materializing the product.
SymFun dyson_coefficient(int k, int s, int m, MacdonaldEngine& engine,
                         Exec exec = Exec::parallel,
                         std::int64_t budget = kDefaultTermBudget);

}  // namespace lhd
