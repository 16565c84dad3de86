#include "lhd/rational_function.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lhd {

void RationalFunction::reduce() {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    if (num_.is_zero()) {
        den_ = QPoly(BigRational(1));
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = QPoly::div_exact(num_, g);
        den_ = QPoly::div_exact(den_, g);
    }
    if (!den_.lc().is_one()) {
        const BigRational inv = BigRational(1) / den_.lc();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return one();
    if (e < 0) return inverse().pow(-e);
    RationalFunction r = one();
    RationalFunction base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1ul) r = r * base;
        base = base * base;
        k >>= 1ul;
    }
    return r;
}

BigRational RationalFunction::specialize(const BigRational& q0) const {
    const BigRational d = den_.eval(q0);
    if (d.is_zero()) {
        throw std::domain_error("RationalFunction: pole at q = " + q0.to_string());
    }
    return num_.eval(q0) / d;
}

namespace {

std::string format_int_poly(const std::vector<BigInt>& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] == 0) continue;
        BigInt a = c[static_cast<size_t>(i)];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        const bool unit = (a == 1);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (!unit) os << a.get_str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace

std::string RationalFunction::to_string() const {
    if (is_zero()) return "0";
    // Joint integer scaling so both polynomials print with integer
    // coefficients and no common content; den keeps a positive lead.
    BigInt L = 1;
    for (const auto& c : num_.coeffs()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.den().get_mpz_t());
    for (const auto& c : den_.coeffs()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.den().get_mpz_t());
    std::vector<BigInt> ni, di;
    ni.reserve(num_.coeffs().size());
    di.reserve(den_.coeffs().size());
    for (const auto& c : num_.coeffs()) ni.push_back(c.num() * (L / c.den()));
    for (const auto& c : den_.coeffs()) di.push_back(c.num() * (L / c.den()));
    BigInt g = 0;
    for (const auto& x : ni) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (const auto& x : di) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1) {
        for (auto& x : ni) x /= g;
        for (auto& x : di) x /= g;
    }
    // den_ is monic so its scaled lead is positive already.
    if (di.size() == 1 && di[0] == 1) return format_int_poly(ni);

    auto term_count = [](const std::vector<BigInt>& c) {
        size_t k = 0;
        for (const auto& x : c)
            if (x != 0) ++k;
        return k;
    };
    std::string ns = format_int_poly(ni);
    if (term_count(ni) > 1) ns = "(" + ns + ")";
    std::string ds = format_int_poly(di);
    // A lone constant or power of q re-parses unambiguously; anything else
    // on the divisor side needs parentheses.
    const bool den_atom = term_count(di) == 1 && (di.size() == 1 || di.back() == 1);
    if (!den_atom) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("RationalFunction::parse: " + what + " at position " +
                                    std::to_string(pos) + " in '" + s + "'");
    }

    RationalFunction parse_expr() {
        RationalFunction v = eat('-') ? -parse_term() : (eat('+'), parse_term());
        while (true) {
            if (eat('+')) {
                v += parse_term();
            } else if (eat('-')) {
                v -= parse_term();
            } else {
                return v;
            }
        }
    }

    RationalFunction parse_term() {
        RationalFunction v = parse_factor();
        while (true) {
            const char c = peek();
            if (c == '*') {
                ++pos;
                v *= parse_factor();
            } else if (c == '/') {
                ++pos;
                v /= parse_factor();
            } else if (c == 'q' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                v *= parse_factor();  // implicit multiplication, e.g. "2q^3"
            } else {
                return v;
            }
        }
    }

    RationalFunction parse_factor() {
        RationalFunction base = parse_atom();
        if (peek() == '^') {
            ++pos;
            bool neg = eat('-');
            long e = parse_uint();
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    RationalFunction parse_atom() {
        const char c = peek();
        if (c == '(') {
            ++pos;
            RationalFunction v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'q') {
            ++pos;
            return RationalFunction::q();
        }
        if (c == '-') {
            ++pos;
            return -parse_atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RationalFunction(BigRational(BigInt(parse_digits())));
        }
        fail("unexpected character");
    }

    long parse_uint() {
        const std::string d = parse_digits();
        return std::stol(d);
    }

    std::string parse_digits() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return s.substr(start, pos - start);
    }
};

}  // namespace

RationalFunction RationalFunction::parse(const std::string& text) {
    Parser p(text);
    RationalFunction v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

RationalFunction qpochhammer(long a_power, unsigned n) {
    RationalFunction r = RationalFunction::one();
    for (unsigned i = 0; i < n; ++i) {
        r *= RationalFunction::one() - RationalFunction::q().pow(a_power + static_cast<long>(i));
        if (r.is_zero()) break;
    }
    return r;
}

RationalFunction lambda_factorial(unsigned n) {
    QPoly r(BigRational(1));
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<BigRational> ones(i, BigRational(1));
        r = r * QPoly(std::move(ones));
    }
    return RationalFunction(r);
}

}  // namespace lhd
