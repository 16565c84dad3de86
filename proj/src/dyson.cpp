#include "lhd/dyson.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lhd {

namespace {

void validate_sm(const char* who, int s, int m) {
    if (s < 1) throw std::invalid_argument(std::string(who) + ": s must be positive");
    if (m < 1) throw std::invalid_argument(std::string(who) + ": m must be positive");
}

}  // namespace

ZPoly expand_F(int s, int m, std::int64_t budget) {
    validate_sm("expand_F", s, m);
    ZPoly f = ZPoly::one();
    const RationalFunction q = RationalFunction::q();
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            Exponents forward(static_cast<std::size_t>(j) + 1, 0);
            forward[i] = 1;
            forward[j] = -1;
            Exponents backward(static_cast<std::size_t>(j) + 1, 0);
            backward[i] = -1;
            backward[j] = 1;
            for (int t = 0; t < m; ++t) {
                // (1 - q^t z_i z_j^{-1}) (1 - q^{t+1} z_i^{-1} z_j)
                f = f * (ZPoly::one() - ZPoly::term(forward, q.pow(t)));
                f = f * (ZPoly::one() - ZPoly::term(backward, q.pow(t + 1)));
                if (static_cast<std::int64_t>(f.term_count()) > budget)
                    throw std::runtime_error("expand_F: term count " +
                                             std::to_string(f.term_count()) +
                                             " exceeds the budget of " + std::to_string(budget));
            }
        }
    }
    return f;
}

SymCoeffPoly truncated_G(int s, int m, int dmax, MacdonaldEngine& engine) {
    validate_sm("truncated_G", s, m);
    if (dmax < 0) throw std::invalid_argument("truncated_G: dmax must be nonnegative");
    SymCoeffPoly g = SymCoeffPoly::one();
    for (int i = 0; i < s; ++i) {
        SymCoeffPoly factor;
        for (int j = 0; j <= dmax; ++j) {
            Exponents e(static_cast<std::size_t>(i) + 1, 0);
            e[i] = j;
            factor = factor + SymCoeffPoly::term(std::move(e), engine.one_row_g(j, m));
        }
        g = g * factor;
    }
    return g;
}

SymFun dyson_coefficient(int k, int s, int m, MacdonaldEngine& engine, Exec exec,
                         std::int64_t budget) {
    validate_sm("dyson_coefficient", s, m);
    if (k < 0) throw std::invalid_argument("dyson_coefficient: k must be nonnegative");

    const ZPoly f = expand_F(s, m, budget);
    // Warm the one-row cache serially; the parallel terms then only read it.
    const int dmax = g_truncation_bound(k, s, m);
    for (int j = 0; j <= dmax; ++j) engine.one_row_g(j, m);

    std::vector<std::pair<Exponents, RationalFunction>> terms(f.terms().begin(),
                                                              f.terms().end());
    const SymFun zero = SymFun::zero();
    return sum_terms<SymFun>(
        static_cast<std::int64_t>(terms.size()), exec, zero, [&](std::int64_t w) {
            const auto& [e, c] = terms[static_cast<std::size_t>(w)];
            SymFun prod = SymFun::one();
            for (int i = 0; i < s; ++i) {
                const int ei = i < static_cast<int>(e.size()) ? e[i] : 0;
                if (k - ei < 0) return zero;  // G has no negative powers
                prod = prod * engine.one_row_g(k - ei, m);
            }
            return prod.scaled(c);
        });
}

}  // namespace lhd
