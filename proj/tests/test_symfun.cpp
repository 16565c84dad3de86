#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "lhd/macdonald.hpp"
#include "lhd/partition.hpp"
#include "lhd/symfun.hpp"

using lhd::BigRational;
using lhd::complete_homogeneous;
using lhd::MacdonaldEngine;
using lhd::Partition;
using lhd::partitions_of;
using lhd::power_sum;
using lhd::qpochhammer;
using lhd::RationalFunction;
using lhd::scalar_product_qt;
using lhd::schur_jacobi_trudi;
using lhd::SymBasis;
using lhd::SymFun;

namespace {

Partition part(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

const RationalFunction kOne = RationalFunction::one();
const RationalFunction kZero = RationalFunction::zero();

}  // namespace

TEST_CASE("partition statistics") {
    CHECK(part({1, 1}).z() == 2);
    CHECK(part({1, 1}).conjugate() == part({2}));
    CHECK(part({2, 1}).z() == 2);
    CHECK(part({3, 1}).conjugate() == part({2, 1, 1}));
    CHECK(part({4, 2, 1}).z() == 8);
    CHECK(Partition().z() == 1);
    CHECK(Partition().weight() == 0);

    // Arms and legs on (2,1): top-left cell sees one cell right, one below.
    Partition p21 = part({2, 1});
    CHECK(p21.arm(0, 0) == 1);
    CHECK(p21.leg(0, 0) == 1);
    CHECK(p21.arm(0, 1) == 0);
    CHECK(p21.leg(0, 1) == 0);
    CHECK(p21.arm(1, 0) == 0);
    CHECK(p21.leg(1, 0) == 0);
    CHECK_THROWS_AS(p21.arm(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(p21.leg(2, 0), std::invalid_argument);

    // Conjugation is an involution.
    for (const Partition& lam : partitions_of(6)) CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("dominance and the refining total order") {
    CHECK(part({2}).dominates(part({1, 1})));
    CHECK_FALSE(part({1, 1}).dominates(part({2})));
    CHECK(part({2, 1}).dominates(part({2, 1})));
    CHECK_FALSE(part({3, 1, 1, 1}).dominates(part({2, 2, 2})));
    CHECK_FALSE(part({2, 2, 2}).dominates(part({3, 1, 1, 1})));
    CHECK_THROWS_AS(part({2}).dominates(part({1})), std::invalid_argument);

    const auto weight4 = partitions_of(4);
    REQUIRE(weight4.size() == 5);
    CHECK(weight4[0] == part({1, 1, 1, 1}));
    CHECK(weight4[1] == part({2, 1, 1}));
    CHECK(weight4[2] == part({2, 2}));
    CHECK(weight4[3] == part({3, 1}));
    CHECK(weight4[4] == part({4}));

    // Strict dominance implies strictly later in operator<.
    for (const Partition& a : partitions_of(6))
        for (const Partition& b : partitions_of(6))
            if (a.dominates(b) && !(a == b)) CHECK(b < a);

    CHECK(partitions_of(6).size() == 11);
    CHECK(partitions_of(8).size() == 22);
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0] == Partition());
}

TEST_CASE("partition parsing and rendering") {
    CHECK(Partition::parse("[2,1]") == part({2, 1}));
    CHECK(Partition::parse("2,1") == part({2, 1}));
    CHECK(Partition::parse("1,2") == part({2, 1}));  // sorted decreasingly
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse("[]") == Partition());
    CHECK(part({2, 1}).to_string() == "[2,1]");
    CHECK(Partition().to_string() == "[]");
    CHECK_THROWS_AS(Partition::parse("[2,x]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("0,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{-1}), std::invalid_argument);
}

TEST_CASE("basis conversion") {
    const SymFun p1 = power_sum(part({1}));
    CHECK(p1.to_basis(SymBasis::monomial) == SymFun::basis_element(SymBasis::monomial, part({1})));
    CHECK(power_sum(part({2})).to_basis(SymBasis::monomial) ==
          SymFun::basis_element(SymBasis::monomial, part({2})));

    // p1^2 = m_2 + 2 m_{1,1}.
    SymFun p1sq = p1 * p1;
    CHECK(p1sq == power_sum(part({1, 1})));
    SymFun in_m = p1sq.to_basis(SymBasis::monomial);
    CHECK(in_m.coefficient(part({2})) == kOne);
    CHECK(in_m.coefficient(part({1, 1})) == RationalFunction(2));

    // p_{2,1} = m_3 + m_{2,1}.
    SymFun p21m = power_sum(part({2, 1})).to_basis(SymBasis::monomial);
    CHECK(p21m.coefficient(part({3})) == kOne);
    CHECK(p21m.coefficient(part({2, 1})) == kOne);
    CHECK(p21m.coefficient(part({1, 1, 1})) == kZero);

    // Round trip on a dense degree-4 element with q-dependent coefficients.
    const RationalFunction q = RationalFunction::q();
    SymFun::CoeffMap coeffs;
    long k = 1;
    for (const Partition& lam : partitions_of(4)) coeffs.emplace(lam, q * RationalFunction(k++) + kOne);
    SymFun f(SymBasis::power, coeffs);
    CHECK(f.to_basis(SymBasis::monomial).to_basis(SymBasis::power) == f);
    SymFun g(SymBasis::monomial, coeffs);
    CHECK(g.to_basis(SymBasis::power).to_basis(SymBasis::monomial) == g);

    // Mixed-basis equality goes through conversion.
    CHECK(p1sq == in_m);
}

TEST_CASE("arithmetic and homogeneity") {
    const SymFun h1 = complete_homogeneous(1);
    const SymFun h2 = complete_homogeneous(2);
    const SymFun e2 = SymFun::basis_element(SymBasis::monomial, part({1, 1}));

    CHECK(h1 * SymFun::one() == h1);
    CHECK(h1 * h1 == h2 + e2);
    CHECK((h2 - h2).is_zero());
    CHECK(h2.degree() == 2);
    CHECK(SymFun::zero().degree() == -1);
    CHECK(h2.scaled(kZero).is_zero());

    CHECK_THROWS_AS(h1 + h2, std::domain_error);
    SymFun::CoeffMap bad;
    bad.emplace(part({1}), kOne);
    bad.emplace(part({2}), kOne);
    CHECK_THROWS_AS(SymFun(SymBasis::power, bad), std::domain_error);

    // Division: constants only.
    CHECK(lhd::Ring<SymFun>::divide(h2, SymFun::constant(RationalFunction(2))) ==
          h2.scaled(RationalFunction(BigRational(1, 2))));
    CHECK_THROWS_AS(lhd::Ring<SymFun>::divide(h2, h1), std::domain_error);
    CHECK_THROWS_AS(lhd::Ring<SymFun>::divide(h2, SymFun::zero()), std::domain_error);
}

TEST_CASE("scalar product at t = q^m") {
    const SymFun p1 = power_sum(part({1}));
    const SymFun p2 = power_sum(part({2}));
    const SymFun p11 = power_sum(part({1, 1}));

    // <p1, p1> = (1-q)/(1-q^m).
    for (int m : {1, 2, 3})
        CHECK(scalar_product_qt(p1, p1, m) == qpochhammer(1, 1) / qpochhammer(m, 1));
    CHECK(scalar_product_qt(p2, p11, 2) == kZero);
    CHECK(scalar_product_qt(p2, p2, 1) == RationalFunction(2));
    // m=1 restores the Hall inner product <p_lam, p_lam> = z_lam.
    for (const Partition& lam : partitions_of(4)) {
        SymFun p = power_sum(lam);
        CHECK(scalar_product_qt(p, p, 1) == RationalFunction(BigRational(lam.z())));
    }
    CHECK_THROWS_AS(scalar_product_qt(p1, p2, 1), std::domain_error);
    CHECK(scalar_product_qt(SymFun::zero(), p1, 2) == kZero);
}

TEST_CASE("Jacobi-Trudi Schur oracle") {
    const RationalFunction third(BigRational(1, 3));
    CHECK(schur_jacobi_trudi(part({1})) == power_sum(part({1})));
    CHECK(schur_jacobi_trudi(part({2})) == complete_homogeneous(2));
    CHECK(schur_jacobi_trudi(Partition()) == SymFun::one());

    // s_{1,1} = e2 = (p_{1,1} - p_2)/2.
    SymFun s11 = schur_jacobi_trudi(part({1, 1}));
    CHECK(s11.coefficient(part({1, 1})) == RationalFunction(BigRational(1, 2)));
    CHECK(s11.coefficient(part({2})) == kZero - RationalFunction(BigRational(1, 2)));

    // s_{2,1} = (p_{1,1,1} - p_3)/3.
    SymFun s21 = schur_jacobi_trudi(part({2, 1}));
    CHECK(s21.coefficient(part({1, 1, 1})) == third);
    CHECK(s21.coefficient(part({3})) == kZero - third);
    CHECK(s21.coefficient(part({2, 1})) == kZero);

    // Degree-preserving and symmetric in the defining rectangle:
    // s_{2,2} from the 2x2 determinant h2^2 - h3 h1.
    SymFun s22 = schur_jacobi_trudi(part({2, 2}));
    CHECK(s22 == complete_homogeneous(2) * complete_homogeneous(2) -
                     complete_homogeneous(3) * complete_homogeneous(1));
}

TEST_CASE("Macdonald P: base cases and triangularity") {
    MacdonaldEngine eng;
    for (int m : {1, 2, 3}) {
        CHECK(eng.P(part({1}), m) == power_sum(part({1})));
        CHECK(eng.P(part({1, 1}), m) ==
              SymFun::basis_element(SymBasis::monomial, part({1, 1})).to_basis(SymBasis::power));
    }
    // Monic on m_lambda; support dominated by lambda.
    for (int d = 1; d <= 5; ++d)
        for (const Partition& lam : partitions_of(d)) {
            SymFun p = eng.P(lam, 2).to_basis(SymBasis::monomial);
            CHECK(p.coefficient(lam) == kOne);
            for (const auto& [mu, c] : p.coefficients()) CHECK(lam.dominates(mu));
        }
    CHECK_THROWS_AS(eng.P(part({9}), 2), std::invalid_argument);
    CHECK_THROWS_AS(eng.P(part({1}), 0), std::invalid_argument);
}

TEST_CASE("Macdonald orthogonality and the closed-form normalizer") {
    MacdonaldEngine eng;
    for (int m : {1, 2, 3})
        for (int d = 1; d <= 5; ++d) {
            const auto parts = partitions_of(d);
            for (size_t i = 0; i < parts.size(); ++i) {
                for (size_t j = i + 1; j < parts.size(); ++j)
                    CHECK(scalar_product_qt(eng.P(parts[i], m), eng.P(parts[j], m), m) == kZero);
                // b_lambda from arms and legs inverts the Gram-Schmidt norm.
                CHECK(MacdonaldEngine::b_lambda(parts[i], m) * eng.norm(parts[i], m) == kOne);
                CHECK(scalar_product_qt(eng.P(parts[i], m), eng.Q(parts[i], m), m) == kOne);
            }
        }

    CHECK(MacdonaldEngine::b_lambda(part({1}), 2) == qpochhammer(2, 1) / qpochhammer(1, 1));
    CHECK(MacdonaldEngine::b_lambda(part({1, 1}), 2) ==
          RationalFunction::parse("((1-q^4)(1-q^2))/((1-q^3)(1-q))"));
    for (int d = 1; d <= 4; ++d)
        for (const Partition& lam : partitions_of(d))
            CHECK(MacdonaldEngine::b_lambda(lam, 1) == kOne);
}

TEST_CASE("t=q degeneration recovers Schur functions") {
    MacdonaldEngine eng;
    for (int d = 1; d <= 4; ++d)
        for (const Partition& lam : partitions_of(d))
            CHECK(eng.P(lam, 1) == schur_jacobi_trudi(lam));
    // And Q = P at m = 1 (b = 1), so Q matches the oracle through weight 5.
    for (const Partition& lam : partitions_of(5)) CHECK(eng.Q(lam, 1) == schur_jacobi_trudi(lam));
}

TEST_CASE("one-row functions") {
    MacdonaldEngine eng;
    CHECK(eng.one_row_g(-2, 2).is_zero());
    CHECK(eng.one_row_g(0, 2) == SymFun::one());
    for (int m : {1, 2, 3}) {
        CHECK(eng.one_row_g(1, m) ==
              power_sum(part({1})).scaled(qpochhammer(m, 1) / qpochhammer(1, 1)));
        for (int j = 1; j <= 6; ++j) CHECK(eng.one_row_g(j, m) == eng.Q(Partition({j}), m));
    }
    // m=1 gives the complete homogeneous functions.
    for (int j = 1; j <= 6; ++j) CHECK(eng.one_row_g(j, 1) == complete_homogeneous(j));
}

TEST_CASE("q -> 1 specialization of Q is pole-free") {
    MacdonaldEngine eng;
    for (int d = 1; d <= 5; ++d)
        for (const Partition& lam : partitions_of(d)) {
            const auto vals = eng.Q(lam, 2).specialize_q(BigRational(1));
            CHECK(!vals.empty());
        }
    // A genuinely singular coefficient does throw.
    const RationalFunction bad = RationalFunction::one() / qpochhammer(1, 1);
    SymFun::CoeffMap coeffs;
    coeffs.emplace(part({1}), bad);
    CHECK_THROWS_AS(SymFun(SymBasis::power, coeffs).specialize_q(BigRational(1)),
                    std::domain_error);
}

TEST_CASE("disk cache round trip") {
    const std::string dir =
        (std::filesystem::temp_directory_path() / "lhd_cache_test").string();
    std::filesystem::remove_all(dir);

    MacdonaldEngine first;
    first.attach_cache(dir);
    const SymFun p21 = first.P(part({2, 1}), 2);

    const auto file = std::filesystem::path(dir) / MacdonaldEngine::cache_file_name(2);
    REQUIRE(std::filesystem::exists(file));
    {
        std::ifstream in(file);
        nlohmann::json doc;
        in >> doc;
        CHECK(doc["m"] == 2);
        CHECK(doc["basis"] == "p");
        CHECK(doc["entries"].contains("[2,1]"));
        CHECK(doc["entries"]["[2,1]"].is_object());
    }

    MacdonaldEngine second;
    second.attach_cache(dir);
    CHECK(second.cached_keys(2).count("[2,1]") == 1);
    CHECK(second.P(part({2, 1}), 2) == p21);

    // A corrupted cache is treated as cold, not fatal.
    {
        std::ofstream out(file);
        out << "{ not json";
    }
    MacdonaldEngine third;
    third.attach_cache(dir);
    CHECK(third.P(part({2, 1}), 2) == p21);

    std::filesystem::remove_all(dir);
}
