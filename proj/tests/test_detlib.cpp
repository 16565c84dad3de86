#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "lhd/detlib.hpp"
#include "lhd/laurent.hpp"
#include "lhd/rational_function.hpp"

using lhd::Asm;
using lhd::BigRational;
using lhd::det_classical;
using lhd::det_lambda;
using lhd::Exec;
using lhd::lambda_vandermonde_product;
using lhd::LaurentPoly;
using lhd::Matrix;
using lhd::pfaffian;
using lhd::power_matrix;
using lhd::RationalFunction;

namespace {

using QMat = Matrix<BigRational>;
using LPoly = LaurentPoly<BigRational>;
using SymPoly = LaurentPoly<RationalFunction>;

QMat rational_matrix(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<BigRational>> conv;
    for (const auto& r : rows) {
        conv.emplace_back();
        for (long v : r) conv.back().emplace_back(v);
    }
    return QMat::from_rows(conv);
}

// Entries are nonzero so every ASM monomial A^X is defined for any lambda.
QMat random_matrix(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    QMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v = 0;
            while (v == 0) v = num(rng);
            m.at(i, j) = BigRational(v, den(rng));
        }
    return m;
}

// Leibniz sum over all n! permutations: an oracle independent of both the
// cofactor and the Bareiss code paths.
BigRational det_leibniz(const QMat& m) {
    std::vector<int> p(m.n);
    for (int i = 0; i < m.n; ++i) p[i] = i;
    BigRational acc;
    do {
        int sign = 1;
        for (int i = 0; i < m.n; ++i)
            for (int j = i + 1; j < m.n; ++j)
                if (p[i] > p[j]) sign = -sign;
        BigRational term(sign);
        for (int i = 0; i < m.n; ++i) term = term * m.at(i, p[i]);
        acc = acc + term;
    } while (std::next_permutation(p.begin(), p.end()));
    return acc;
}

}  // namespace

TEST_CASE("classical determinant") {
    CHECK(det_classical(rational_matrix({{1, 2}, {3, 4}})) == BigRational(-2));
    CHECK(det_classical(rational_matrix({{5}})) == BigRational(5));

    // Vandermonde at x = (2, 3, 5): (3-2)(5-2)(5-3) = 6.
    std::vector<BigRational> xs = {BigRational(2), BigRational(3), BigRational(5)};
    CHECK(det_classical(power_matrix(xs)) == BigRational(6));

    std::mt19937 rng(20240817);
    for (int n : {4, 6, 7}) {
        QMat m = random_matrix(n, rng);
        CHECK(det_classical(m) == det_leibniz(m));
    }

    // Bareiss path with a forced row swap and a singular input.
    QMat sw = rational_matrix({{0, 1, 0, 0, 0, 0},
                               {1, 0, 0, 0, 0, 0},
                               {0, 0, 1, 0, 0, 2},
                               {0, 0, 0, 1, 0, 0},
                               {0, 0, 3, 0, 1, 0},
                               {0, 0, 0, 0, 0, 1}});
    CHECK(det_classical(sw) == det_leibniz(sw));
    QMat sing = random_matrix(6, rng);
    for (int j = 0; j < 6; ++j) sing.at(5, j) = sing.at(0, j) + sing.at(1, j);
    CHECK(det_classical(sing) == BigRational(0));
}

TEST_CASE("lambda determinant: 2x2 closed form and lambda = 1 collapse") {
    // det_lambda [[a,b],[c,d]] = ad - lambda * bc, checked symbolically with
    // lambda = q and a, b, c, d as Laurent variables.
    Matrix<SymPoly> m(2);
    m.at(0, 0) = SymPoly::variable(0);
    m.at(0, 1) = SymPoly::variable(1);
    m.at(1, 0) = SymPoly::variable(2);
    m.at(1, 1) = SymPoly::variable(3);
    const RationalFunction q = RationalFunction::q();
    SymPoly want = SymPoly::variable(0) * SymPoly::variable(3) -
                   (SymPoly::variable(1) * SymPoly::variable(2)).scaled(q);
    CHECK(det_lambda(m, q, Exec::serial) == want);

    std::mt19937 rng(987654);
    for (int n : {2, 3, 4}) {
        QMat a = random_matrix(n, rng);
        CHECK(det_lambda(a, BigRational(1)) == det_classical(a));
    }

    // At lambda = 1 matrices with negative entries get weight zero, so a zero
    // at a position some ASM inverts must not raise a division error.
    QMat hole = rational_matrix({{1, 1, 1}, {1, 0, 1}, {1, 1, 1}});
    CHECK(det_lambda(hole, BigRational(1)) == det_classical(hole));
    CHECK(det_lambda(hole, BigRational(1)) == BigRational(0));

    // det_{-1} [[a,b],[c,d]] = ad + bc.
    CHECK(det_lambda(rational_matrix({{2, 3}, {5, 7}}), BigRational(-1)) == BigRational(29));
}

TEST_CASE("lambda determinant: generic 3x3 term inventory") {
    // Over Laurent variables a11..a33 with lambda = q the seven ASM terms are
    // visible one monomial at a time.  The non-permutation term carries
    // a22^{-1} and coefficient q^2 - q.
    Matrix<SymPoly> m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = SymPoly::variable(3 * i + j);
    const RationalFunction q = RationalFunction::q();
    SymPoly d = det_lambda(m, q, Exec::serial);
    CHECK(d.term_count() == 7);

    const RationalFunction one = RationalFunction::one();
    // Identity permutation: coefficient 1 on a11 a22 a33.
    CHECK(d.coefficient({1, 0, 0, 0, 1, 0, 0, 0, 1}) == one);
    // Transposition (1 2), inversion number 1: coefficient -q on a12 a21 a33.
    CHECK(d.coefficient({0, 1, 0, 1, 0, 0, 0, 0, 1}) == RationalFunction::zero() - q);
    // Cycle (1 2 3), inversion number 2: coefficient q^2 on a12 a23 a31.
    CHECK(d.coefficient({0, 1, 0, 0, 0, 1, 1, 0, 0}) == q * q);
    // Reversal, inversion number 3: coefficient -q^3 on a13 a22 a31.
    CHECK(d.coefficient({0, 0, 1, 0, 1, 0, 1, 0, 0}) == RationalFunction::zero() - q * q * q);
    // The unique non-permutation ASM: a12 a21 a23 a32 / a22, coefficient
    // (-q)^2 (1 - q^{-1}) = q^2 - q.
    CHECK(d.coefficient({0, 1, 0, 1, -1, 1, 0, 1, 0}) == q * q - q);

    // Specializing q -> 1 drops the seventh term and the rest sign out to the
    // classical determinant.
    QMat a = rational_matrix({{2, 3, 5}, {7, 11, 13}, {17, 19, 23}});
    CHECK(det_lambda(a, BigRational(1)) == det_classical(a));
}

TEST_CASE("lambda Vandermonde factorization") {
    const RationalFunction q = RationalFunction::q();
    for (int n = 1; n <= 4; ++n) {
        std::vector<SymPoly> xs;
        for (int i = 0; i < n; ++i) xs.push_back(SymPoly::variable(i));
        CHECK(det_lambda(power_matrix(xs), q, Exec::serial) ==
              lambda_vandermonde_product(xs, q));
    }
    // The x1 x2 x3 coefficient of the n = 3 product is q^2 - q.
    std::vector<SymPoly> xs3 = {SymPoly::variable(0), SymPoly::variable(1), SymPoly::variable(2)};
    CHECK(lambda_vandermonde_product(xs3, q).coefficient({1, 1, 1}) == q * q - q);

    // Numeric spot checks at n = 5 with rational points and rational lambda.
    std::vector<BigRational> pts;
    for (long v : {2, 3, 5, 7, 11}) pts.emplace_back(v);
    const BigRational lam(4, 3);
    CHECK(det_lambda(power_matrix(pts), lam) == lambda_vandermonde_product(pts, lam));
}

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937 rng(777);
    const BigRational lam(5, 3);
    for (int n : {3, 4, 5}) {
        QMat m = random_matrix(n, rng);
        CHECK(det_lambda(m, lam, Exec::serial) == det_lambda(m, lam, Exec::parallel));
    }
}

TEST_CASE("lambda determinant error paths") {
    QMat a = rational_matrix({{1, 2}, {3, 4}});
    CHECK_THROWS_AS(det_lambda(a, BigRational(0)), std::domain_error);

    // Zero entry raised to -1 by the n = 3 non-permutation ASM.
    QMat hole = rational_matrix({{1, 1, 1}, {1, 0, 1}, {1, 1, 1}});
    CHECK_THROWS_WITH_AS(det_lambda(hole, BigRational(2)),
                         "det_lambda: entry a(2,2) is zero but appears with exponent -1 in "
                         "[[0,1,0],[1,-1,1],[0,1,0]]",
                         std::domain_error);

    QMat big(8);
    for (int i = 0; i < 8; ++i) big.at(i, i) = BigRational(1);
    CHECK_THROWS_AS(det_lambda(big, BigRational(2)), std::invalid_argument);
}

TEST_CASE("pfaffian") {
    // Pf [[0,a],[-a,0]] = a.
    Matrix<LPoly> m2(2);
    m2.at(0, 1) = LPoly::variable(0);
    m2.at(1, 0) = LPoly::zero() - LPoly::variable(0);
    CHECK(pfaffian(m2) == LPoly::variable(0));

    // Pf of the generic 4x4 antisymmetric matrix: af - be + cd.
    const auto v = [](int i) { return LPoly::variable(i); };
    Matrix<LPoly> m4(4);
    const LPoly a = v(0), b = v(1), c = v(2), d = v(3), e = v(4), f = v(5);
    auto put = [&](int i, int j, const LPoly& x) {
        m4.at(i, j) = x;
        m4.at(j, i) = LPoly::zero() - x;
    };
    put(0, 1, a);
    put(0, 2, b);
    put(0, 3, c);
    put(1, 2, d);
    put(1, 3, e);
    put(2, 3, f);
    CHECK(pfaffian(m4) == a * f - b * e + c * d);

    // Pf(A)^2 = det(A) on random rational antisymmetric matrices.
    std::mt19937 rng(13579);
    std::uniform_int_distribution<int> num(-9, 9);
    for (int n : {2, 4, 6}) {
        QMat m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                m.at(i, j) = BigRational(num(rng), 1 + (i + j) % 3);
                m.at(j, i) = BigRational(0) - m.at(i, j);
            }
        BigRational pf = pfaffian(m);
        CHECK(pf * pf == det_classical(m));
    }

    CHECK_THROWS_AS(pfaffian(rational_matrix({{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(pfaffian(rational_matrix({{0, 1}, {1, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(pfaffian(rational_matrix({{1, 1}, {-1, 0}})), std::invalid_argument);
}
