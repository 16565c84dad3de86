#pragma once

/**
 * @file laurent.hpp
 * @brief Sparse multivariate Laurent polynomials over a coefficient field.
 *
 * Terms are keyed by integer exponent vectors (negative exponents allowed).
 * Keys are stored with trailing zeros removed, so the constant term has the
 * empty key and arity never has to be carried around: polynomials in
 * different numbers of variables combine by zero-padding.  Zero coefficients
 * are never stored.
 */

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lhd/ring.hpp"

namespace lhd {

using Exponents = std::vector<int>;

template <class K>
class LaurentPoly {
public:
    using TermMap = std::map<Exponents, K>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }

    static LaurentPoly constant(K c) {
        LaurentPoly p;
        p.add_term(Exponents{}, std::move(c));
        return p;
    }

    static LaurentPoly one() { return constant(Ring<K>::one()); }

    /// The variable z_{i+1} (0-based index), i.e. the monomial with exponent
    /// vector e_i.
    static LaurentPoly variable(std::size_t i, int exponent = 1) {
        LaurentPoly p;
        if (exponent != 0) {
            Exponents e(i + 1, 0);
            e[i] = exponent;
            p.terms_.emplace(std::move(e), Ring<K>::one());
        } else {
            p = one();
        }
        return p;
    }

    static LaurentPoly term(Exponents e, K c) {
        LaurentPoly p;
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the monomial with the given exponent vector (trailing
    /// zeros in the query are ignored).
    K coefficient(Exponents e) const {
        trim(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? Ring<K>::zero() : it->second;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, Ring<K>::zero() - c);
        return r;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, Ring<K>::zero() - c);
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) r.add_term(exp_add(ea, eb), ca * cb);
        return r;
    }

    LaurentPoly scaled(const K& c) const {
        LaurentPoly r;
        if (is_ring_zero(c)) return r;
        for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Exact division.  Eliminates leading terms under the lexicographic key
    /// order; each step emits one quotient term, so exact quotients terminate
    /// in term_count(quotient) steps.  Throws std::domain_error when the
    /// divisor is zero or no exact quotient exists.  Inexact inputs are
    /// rejected quickly: Newton polytopes add under multiplication without
    /// cancellation at faces, so every exponent of a true quotient lies in
    /// the coordinate-wise box [min(a)-min(b), max(a)-max(b)].
    friend LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
        if (a.is_zero()) return LaurentPoly();
        std::size_t dim = 0;
        for (const auto& [e, c] : a.terms_) dim = std::max(dim, e.size());
        for (const auto& [e, c] : b.terms_) dim = std::max(dim, e.size());
        const auto bounds = [dim](const LaurentPoly& p) {
            std::pair<Exponents, Exponents> mm{Exponents(dim, 0), Exponents(dim, 0)};
            bool first = true;
            for (const auto& [e, c] : p.terms_) {
                for (std::size_t i = 0; i < dim; ++i) {
                    const int v = i < e.size() ? e[i] : 0;
                    if (first) {
                        mm.first[i] = mm.second[i] = v;
                    } else {
                        mm.first[i] = std::min(mm.first[i], v);
                        mm.second[i] = std::max(mm.second[i], v);
                    }
                }
                first = false;
            }
            return mm;
        };
        const auto [amin, amax] = bounds(a);
        const auto [bmin, bmax] = bounds(b);
        LaurentPoly q;
        LaurentPoly rem = a;
        const auto& blead = *b.terms_.rbegin();
        while (!rem.is_zero()) {
            const auto rlead = *rem.terms_.rbegin();
            Exponents qe = exp_sub(rlead.first, blead.first);
            for (std::size_t i = 0; i < dim; ++i) {
                const int v = i < qe.size() ? qe[i] : 0;
                if (v < amin[i] - bmin[i] || v > amax[i] - bmax[i])
                    throw std::domain_error("LaurentPoly: not exactly divisible");
            }
            K qc = Ring<K>::divide(rlead.second, blead.second);
            LaurentPoly qt = term(qe, qc);
            q = q + qt;
            rem = rem - qt * b;
            // Exactness means the leading monomial strictly drops each step;
            // if it ever fails to, the quotient does not exist.
            if (!rem.is_zero() && !(rem.terms_.rbegin()->first < rlead.first))
                throw std::domain_error("LaurentPoly: not exactly divisible");
        }
        return q;
    }

    std::string to_string(const std::string& var_prefix = "z") const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) out << " + ";
            first = false;
            out << "(" << coeff_str(it->second) << ")";
            for (std::size_t i = 0; i < it->first.size(); ++i) {
                int e = it->first[i];
                if (e == 0) continue;
                out << "*" << var_prefix << (i + 1);
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

private:
    TermMap terms_;

    static void trim(Exponents& e) {
        while (!e.empty() && e.back() == 0) e.pop_back();
    }

    static Exponents exp_add(const Exponents& a, const Exponents& b) {
        Exponents r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        trim(r);
        return r;
    }

    static Exponents exp_sub(const Exponents& a, const Exponents& b) {
        Exponents r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
        trim(r);
        return r;
    }

    static bool is_ring_zero(const K& c) { return c == Ring<K>::zero(); }

    static std::string coeff_str(const K& c) { return c.to_string(); }

    void add_term(Exponents e, K c) {
        trim(e);
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!is_ring_zero(c)) terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second = it->second + c;
            if (is_ring_zero(it->second)) terms_.erase(it);
        }
    }
};

template <class K>
struct Ring<LaurentPoly<K>> {
    static LaurentPoly<K> zero() { return LaurentPoly<K>::zero(); }
    static LaurentPoly<K> one() { return LaurentPoly<K>::one(); }
    static LaurentPoly<K> from_int(long v) {
        return LaurentPoly<K>::constant(Ring<K>::from_int(v));
    }
    static LaurentPoly<K> divide(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
        return divide_exact(a, b);
    }
};

template <class K>
LaurentPoly<K> scale(const LaurentPoly<K>& p, const K& c) {
    return p.scaled(c);
}

}  // namespace lhd
