#include "lhd/symfun.hpp"

#include <functional>
#include <iterator>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lhd {

namespace {

// Transition tables between the p and m bases at one weight.  Partitions are
// indexed in ascending Partition::operator< order, under which the p-to-m
// matrix is upper triangular with nonzero diagonal (p_lambda expands over
// monomials whose shapes dominate lambda).
struct WeightTables {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::vector<std::vector<BigRational>> p_to_m;
    std::vector<std::vector<BigRational>> m_to_p;
};

// m_mu * p_r expanded over monomial functions: the coefficient of m_nu is the
// number of positions of nu from which removing r recovers mu, which is the
// multiplicity in nu of the grown part.
std::map<Partition, BigRational> multiply_pr_into_m(const std::map<Partition, BigRational>& f,
                                                    int r) {
    std::map<Partition, BigRational> out;
    const auto multiplicity = [](const Partition& p, int v) {
        int c = 0;
        for (int x : p.parts())
            if (x == v) ++c;
        return c;
    };
    for (const auto& [mu, c] : f) {
        {
            std::vector<int> grown = mu.parts();
            grown.push_back(r);
            Partition nu(std::move(grown));
            out[nu] += c * BigRational(multiplicity(nu, r));
        }
        const auto& parts = mu.parts();
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i > 0 && parts[i] == parts[i - 1]) continue;  // each distinct value once
            std::vector<int> grown = parts;
            grown[i] += r;
            Partition nu(std::move(grown));
            out[nu] += c * BigRational(multiplicity(nu, parts[i] + r));
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == BigRational(0)) ? out.erase(it) : std::next(it);
    return out;
}

WeightTables build_tables(int d) {
    WeightTables t;
    t.parts = partitions_of(d);
    const size_t n = t.parts.size();
    for (size_t i = 0; i < n; ++i) t.index.emplace(t.parts[i], static_cast<int>(i));

    t.p_to_m.assign(n, std::vector<BigRational>(n));
    for (size_t i = 0; i < n; ++i) {
        std::map<Partition, BigRational> row = {{Partition(), BigRational(1)}};
        for (int r : t.parts[i].parts()) row = multiply_pr_into_m(row, r);
        for (const auto& [mu, c] : row) t.p_to_m[i][static_cast<size_t>(t.index.at(mu))] = c;
    }

    // Invert the upper-triangular transition by back substitution.
    t.m_to_p.assign(n, std::vector<BigRational>(n));
    for (size_t j = n; j-- > 0;) {
        t.m_to_p[j][j] = BigRational(1) / t.p_to_m[j][j];
        for (size_t i = j; i-- > 0;) {
            BigRational s;
            for (size_t k = i + 1; k <= j; ++k) s = s + t.p_to_m[i][k] * t.m_to_p[k][j];
            t.m_to_p[i][j] = (BigRational(0) - s) / t.p_to_m[i][i];
        }
    }
    return t;
}

const WeightTables& tables_for(int d) {
    static std::mutex mu;
    static std::map<int, WeightTables> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, build_tables(d)).first;
    return it->second;
}

}  // namespace

SymFun::SymFun(SymBasis b, CoeffMap coeffs) : basis_(b), coeffs_(std::move(coeffs)) {
    const RationalFunction zero = RationalFunction::zero();
    int deg = -1;
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == zero) {
            it = coeffs_.erase(it);
            continue;
        }
        if (deg < 0)
            deg = it->first.weight();
        else if (it->first.weight() != deg)
            throw std::domain_error("SymFun: coefficients mix degrees");
        ++it;
    }
}

SymFun SymFun::one(SymBasis b) { return constant(RationalFunction::one(), b); }

SymFun SymFun::constant(const RationalFunction& c, SymBasis b) {
    CoeffMap m;
    if (!(c == RationalFunction::zero())) m.emplace(Partition(), c);
    return SymFun(b, std::move(m));
}

SymFun SymFun::basis_element(SymBasis b, const Partition& lambda) {
    CoeffMap m;
    m.emplace(lambda, RationalFunction::one());
    return SymFun(b, std::move(m));
}

int SymFun::degree() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first.weight(); }

RationalFunction SymFun::coefficient(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? RationalFunction::zero() : it->second;
}

void SymFun::add_term(const Partition& lambda, const RationalFunction& c) {
    if (!coeffs_.empty() && coeffs_.begin()->first.weight() != lambda.weight())
        throw std::domain_error("SymFun: adding terms of different degrees");
    auto it = coeffs_.find(lambda);
    if (it == coeffs_.end()) {
        if (!(c == RationalFunction::zero())) coeffs_.emplace(lambda, c);
    } else {
        it->second = it->second + c;
        if (it->second == RationalFunction::zero()) coeffs_.erase(it);
    }
}

SymFun SymFun::convert(const SymFun& f, SymBasis target) {
    if (f.basis_ == target || f.is_zero()) {
        SymFun g = f;
        g.basis_ = target;
        return g;
    }
    const WeightTables& t = tables_for(f.degree());
    const auto& rows = (f.basis_ == SymBasis::power) ? t.p_to_m : t.m_to_p;
    SymFun out = SymFun::zero(target);
    for (const auto& [lam, c] : f.coeffs_) {
        const auto i = static_cast<size_t>(t.index.at(lam));
        for (size_t j = 0; j < t.parts.size(); ++j) {
            if (rows[i][j] == BigRational(0)) continue;
            out.add_term(t.parts[j], c * RationalFunction(rows[i][j]));
        }
    }
    return out;
}

SymFun SymFun::to_basis(SymBasis target) const { return convert(*this, target); }

SymFun SymFun::operator+(const SymFun& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (degree() != o.degree()) throw std::domain_error("SymFun: adding different degrees");
    SymFun rhs = o.to_basis(basis_);
    SymFun out = *this;
    for (const auto& [lam, c] : rhs.coeffs_) out.add_term(lam, c);
    return out;
}

SymFun SymFun::operator-(const SymFun& o) const {
    return *this + o.scaled(RationalFunction::zero() - RationalFunction::one());
}

SymFun SymFun::operator*(const SymFun& o) const {
    if (is_zero() || o.is_zero()) return SymFun::zero();
    SymFun a = to_basis(SymBasis::power);
    SymFun b = o.to_basis(SymBasis::power);
    SymFun out = SymFun::zero(SymBasis::power);
    for (const auto& [la, ca] : a.coeffs_)
        for (const auto& [lb, cb] : b.coeffs_) {
            std::vector<int> parts = la.parts();
            const auto& more = lb.parts();
            parts.insert(parts.end(), more.begin(), more.end());
            out.add_term(Partition(std::move(parts)), ca * cb);
        }
    return out;
}

SymFun SymFun::scaled(const RationalFunction& c) const {
    SymFun out = SymFun::zero(basis_);
    if (c == RationalFunction::zero()) return out;
    for (const auto& [lam, co] : coeffs_) out.coeffs_.emplace(lam, co * c);
    return out;
}

bool SymFun::operator==(const SymFun& o) const {
    if (basis_ == o.basis_) return coeffs_ == o.coeffs_;
    return to_basis(SymBasis::power).coeffs_ == o.to_basis(SymBasis::power).coeffs_;
}

std::map<Partition, BigRational> SymFun::specialize_q(const BigRational& q0) const {
    std::map<Partition, BigRational> out;
    for (const auto& [lam, c] : coeffs_) {
        BigRational v = c.specialize(q0);
        if (!(v == BigRational(0))) out.emplace(lam, std::move(v));
    }
    return out;
}

std::string SymFun::to_string() const {
    if (is_zero()) return "0";
    const char* letter = basis_ == SymBasis::power ? "p" : "m";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lam, c] : coeffs_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        if (lam.weight() == 0)
            out << "*1";
        else
            out << "*" << letter << lam.to_string();
    }
    return out.str();
}

SymFun Ring<SymFun>::divide(const SymFun& a, const SymFun& b) {
    if (b.is_zero()) throw std::domain_error("SymFun: division by zero");
    if (b.degree() != 0) throw std::domain_error("SymFun: division only defined by constants");
    return a.scaled(RationalFunction::one() / b.coefficient(Partition()));
}

SymFun power_sum(const Partition& lambda) {
    return SymFun::basis_element(SymBasis::power, lambda);
}

SymFun complete_homogeneous(int r) {
    if (r < 0) return SymFun::zero();
    if (r == 0) return SymFun::one();
    SymFun::CoeffMap m;
    for (const Partition& lam : partitions_of(r))
        m.emplace(lam, RationalFunction(BigRational(1, lam.z())));
    return SymFun(SymBasis::power, std::move(m));
}

SymFun schur_jacobi_trudi(const Partition& lambda) {
    const int l = lambda.length();
    if (l == 0) return SymFun::one();
    // Cofactor expansion of det(h_{lambda_i - i + j}); no division, any size.
    std::vector<std::vector<SymFun>> h(static_cast<size_t>(l), std::vector<SymFun>(static_cast<size_t>(l)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            h[static_cast<size_t>(i)][static_cast<size_t>(j)] = complete_homogeneous(lambda.part(i) - i + j);
    std::vector<int> cols(static_cast<size_t>(l));
    for (int j = 0; j < l; ++j) cols[static_cast<size_t>(j)] = j;
    std::function<SymFun(int)> expand = [&](int row) -> SymFun {
        if (cols.size() == 1) return h[static_cast<size_t>(row)][static_cast<size_t>(cols[0])];
        SymFun acc = SymFun::zero();
        for (size_t k = 0; k < cols.size(); ++k) {
            const int col = cols[k];
            if (h[static_cast<size_t>(row)][static_cast<size_t>(col)].is_zero()) continue;
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
            SymFun minor = expand(row + 1);
            cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
            SymFun term = h[static_cast<size_t>(row)][static_cast<size_t>(col)] * minor;
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return expand(0);
}

RationalFunction scalar_product_qt(const SymFun& f, const SymFun& g, int m) {
    if (m < 1) throw std::invalid_argument("scalar_product_qt: m must be positive");
    if (f.is_zero() || g.is_zero()) return RationalFunction::zero();
    if (f.degree() != g.degree())
        throw std::domain_error("scalar_product_qt: operands have different degrees");
    SymFun a = f.to_basis(SymBasis::power);
    SymFun b = g.to_basis(SymBasis::power);
    RationalFunction acc = RationalFunction::zero();
    for (const auto& [lam, ca] : a.coefficients()) {
        const RationalFunction cb = b.coefficient(lam);
        if (cb == RationalFunction::zero()) continue;
        RationalFunction w(BigRational(lam.z()));
        for (int part : lam.parts())
            w = w * qpochhammer(part, 1) / qpochhammer(static_cast<long>(m) * part, 1);
        acc = acc + ca * cb * w;
    }
    return acc;
}

}  // namespace lhd
