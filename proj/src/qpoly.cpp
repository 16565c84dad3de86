#include "lhd/qpoly.hpp"

#include <stdexcept>

namespace lhd {

namespace {

const BigRational kZero{};

// Content-stripped integer coefficient vector, positive leading coefficient.
void make_primitive(std::vector<BigInt>& c) {
    BigInt g = 0;
    for (const auto& x : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g == 0) {
        c.clear();
        return;
    }
    if (c.back() < 0) g = -g;
    for (auto& x : c) x /= g;
}

void trim_int(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Pseudo-remainder of a by b (integer coefficients, b nonzero).
std::vector<BigInt> prem(std::vector<BigInt> r, const std::vector<BigInt>& b) {
    const BigInt lb = b.back();
    const int db = static_cast<int>(b.size()) - 1;
    trim_int(r);
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        const int sh = static_cast<int>(r.size()) - 1 - db;
        const BigInt c = r.back();
        for (auto& x : r) x *= lb;
        for (int i = 0; i <= db; ++i) r[sh + i] -= c * b[i];
        trim_int(r);
    }
    return r;
}

}  // namespace

QPoly QPoly::monomial(const BigRational& c, int deg) {
    if (deg < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
    QPoly p;
    if (c.is_zero()) return p;
    p.coeffs_.assign(static_cast<size_t>(deg) + 1, BigRational());
    p.coeffs_.back() = c;
    return p;
}

const BigRational& QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const BigRational& QPoly::lc() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

QPoly QPoly::operator-() const {
    QPoly r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    const size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    r.coeffs_.assign(n, BigRational());
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r;
    const size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    r.coeffs_.assign(n, BigRational());
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, BigRational());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

QPoly QPoly::scaled(const BigRational& c) const {
    QPoly r;
    if (c.is_zero()) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& x : coeffs_) r.coeffs_.push_back(x * c);
    return r;
}

QPoly QPoly::pow(unsigned e) const {
    QPoly r(BigRational(1));
    QPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("QPoly::divrem: division by zero polynomial");
    QPoly q, r = a;
    const int db = b.degree();
    while (r.degree() >= db) {
        const int sh = r.degree() - db;
        const BigRational c = r.lc() / b.lc();
        QPoly t = QPoly::monomial(c, sh);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

QPoly QPoly::div_exact(const QPoly& a, const QPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("QPoly::div_exact: division is not exact");
    return q;
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    std::vector<BigInt> u = a.primitive_int_coeffs();
    std::vector<BigInt> v = b.primitive_int_coeffs();
    if (u.empty()) std::swap(u, v);
    while (!v.empty()) {
        std::vector<BigInt> r = prem(u, v);
        make_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    QPoly g;
    g.coeffs_.reserve(u.size());
    for (const auto& x : u) g.coeffs_.push_back(BigRational(x));
    return g;
}

BigRational QPoly::eval(const BigRational& x) const {
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<BigInt> QPoly::primitive_int_coeffs() const {
    std::vector<BigInt> out;
    if (is_zero()) return out;
    BigInt L = 1;
    for (const auto& c : coeffs_) {
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.den().get_mpz_t());
    }
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.num() * (L / c.den()));
    make_primitive(out);
    return out;
}

}  // namespace lhd
