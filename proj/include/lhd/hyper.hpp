#pragma once

/**
 * @file hyper.hpp
 * @brief Hypermatrices, Cayley's second hyperdeterminant, the generalized
 *        sign factor phi, and the lambda-hyperdeterminant over ASM tuples.
 *
 * A 2m-dimensional hypermatrix of side n is either a dense n^{2m} array or a
 * pure index function on [1,n]^{2m}.  Both hyperdeterminants are sums over
 * tuples of row objects: permutations for the Cayley form, alternating sign
 * matrices (acting through their generalized permutations) for the lambda
 * deformation.  Entries live in a ring R; the deformation weights live in a
 * coefficient field K acting on R through scale().
 *
 * The sign factor carries two conventions, paper_literal and proof_consistent,
 * which differ in the sign of the exponent inside the (1 - lambda^e) factors
 * attached to negative ASM entries.  Neither is hard-coded as correct; the
 * verification harness decides empirically which one validates the rectangular
 * Macdonald identity.  Both agree whenever no matrix has a negative entry, and
 * both kill every tuple whose first matrix has one.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lhd/alt_matrix.hpp"
#include "lhd/bigrational.hpp"
#include "lhd/detlib.hpp"
#include "lhd/parallel.hpp"
#include "lhd/ring.hpp"

namespace lhd {

/// Dense hypermatrices refuse to allocate past this many entries; larger
/// shapes should use a function backing and recompute entries on demand.
inline constexpr std::size_t kDenseEntryCeiling = 1'000'000;

enum class PhiConvention { paper_literal, proof_consistent };

inline const char* to_string(PhiConvention c) {
    return c == PhiConvention::paper_literal ? "paper-literal" : "proof-consistent";
}

/// 2m-dimensional side-n array of ring elements, indexed by vectors in
/// [1,n]^{2m}.  Either dense (mutable) or backed by a pure index function.
template <class R>
class HyperMatrix {
  public:
    using EntryFn = std::function<R(const std::vector<int>&)>;

    /// Dense zero hypermatrix.
    HyperMatrix(int side, int dim) : side_(side), dim_(dim) {
        validate_shape(side, dim);
        std::size_t size = 1;
        for (int t = 0; t < dim; ++t) {
            size *= static_cast<std::size_t>(side);
            if (size > kDenseEntryCeiling)
                throw std::invalid_argument(
                    "HyperMatrix: dense shape exceeds the entry ceiling; use from_function");
        }
        data_.assign(size, Ring<R>::zero());
    }

    static HyperMatrix from_function(int side, int dim, EntryFn fn) {
        validate_shape(side, dim);
        if (!fn) throw std::invalid_argument("HyperMatrix: null entry function");
        HyperMatrix h;
        h.side_ = side;
        h.dim_ = dim;
        h.fn_ = std::move(fn);
        return h;
    }

    int side() const { return side_; }
    int dim() const { return dim_; }
    bool is_dense() const { return !fn_; }

    R entry(const std::vector<int>& index) const {
        validate_index(index);
        if (fn_) return fn_(index);
        return data_[offset(index)];
    }

    void set(const std::vector<int>& index, const R& value) {
        if (fn_)
            throw std::logic_error("HyperMatrix: cannot set entries of a function backing");
        validate_index(index);
        data_[offset(index)] = value;
    }

  private:
    HyperMatrix() = default;

    static void validate_shape(int side, int dim) {
        if (side < 1) throw std::invalid_argument("HyperMatrix: side must be positive");
        if (dim < 2 || dim % 2 != 0)
            throw std::invalid_argument("HyperMatrix: dimension must be even and at least 2");
    }

    void validate_index(const std::vector<int>& index) const {
        if (static_cast<int>(index.size()) != dim_)
            throw std::invalid_argument("HyperMatrix: index arity does not match the dimension");
        for (int v : index)
            if (v < 1 || v > side_)
                throw std::invalid_argument("HyperMatrix: index component out of [1, side]");
    }

    std::size_t offset(const std::vector<int>& index) const {
        std::size_t off = 0;
        for (int v : index) off = off * static_cast<std::size_t>(side_) + (v - 1);
        return off;
    }

    int side_ = 0;
    int dim_ = 0;
    std::vector<R> data_;
    EntryFn fn_;
};

namespace detail {

/// x^e in the coefficient field; negative exponents go through exact division.
template <class K>
K field_pow(const K& x, long e) {
    if (e < 0) return Ring<K>::divide(Ring<K>::one(), field_pow(x, -e));
    K acc = Ring<K>::one();
    for (long i = 0; i < e; ++i) acc = acc * x;
    return acc;
}

/// The factor a single slot contributes to phi.  Slots 0..m-1 use base
/// -lambda^t and attach (1 - lambda^{+-t}) per negative entry; slots m..2m-1
/// use base -lambda^{t-m+1} and (1 - lambda^{+-(t-m+1)}).  paper_literal takes
/// the positive exponent, proof_consistent the negative one.
template <class K>
K phi_slot_factor(int slot, int m, int inversions, int negatives, const K& lambda,
                  PhiConvention convention) {
    const long p = (slot < m) ? slot : slot - m + 1;
    const K base = Ring<K>::zero() - field_pow(lambda, p);
    const long se = (convention == PhiConvention::paper_literal) ? p : -p;
    const K unit = Ring<K>::one() - field_pow(lambda, se);
    return field_pow(base, inversions) * field_pow(unit, negatives);
}

struct SignedPerm {
    std::vector<int> values;  // 1-based images of 1..n
    int sign = 1;
};

inline std::vector<SignedPerm> signed_permutations(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::vector<SignedPerm> out;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (v[i] > v[j]) ++inv;
        out.push_back({v, inv % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline std::int64_t checked_term_count(const char* who, std::size_t base0, std::size_t base,
                                       int varying, std::int64_t budget) {
    BigInt estimate(static_cast<unsigned long>(base0));
    for (int t = 0; t < varying; ++t) estimate *= static_cast<unsigned long>(base);
    if (estimate > BigInt(static_cast<long>(budget)))
        throw std::runtime_error(std::string(who) + ": term count " + estimate.get_str() +
                                 " exceeds the budget of " + std::to_string(budget));
    return static_cast<std::int64_t>(estimate.get_si());
}

template <class R>
R cayley_core(const HyperMatrix<R>& a, bool fix_first, Exec exec, std::int64_t budget) {
    const int n = a.side();
    const int d = a.dim();
    const auto perms = signed_permutations(n);
    const std::int64_t p = static_cast<std::int64_t>(perms.size());
    const int varying = fix_first ? d - 1 : d;
    const std::int64_t count =
        checked_term_count("cayley_hyperdet", perms.size(), perms.size(), varying - 1, budget);

    const R rzero = Ring<R>::zero();
    R total = sum_terms<R>(count, exec, rzero, [&](std::int64_t w) {
        std::vector<const SignedPerm*> sel(d, &perms[0]);
        int sign = 1;
        std::int64_t rem = w;
        for (int t = fix_first ? 1 : 0; t < d; ++t) {
            sel[t] = &perms[rem % p];
            rem /= p;
            sign *= sel[t]->sign;
        }
        std::vector<int> idx(d);
        R prod = Ring<R>::one();
        for (int i = 0; i < n; ++i) {
            for (int t = 0; t < d; ++t) idx[t] = sel[t]->values[i];
            R e = a.entry(idx);
            if (e == rzero) return rzero;
            prod = prod * e;
        }
        return sign > 0 ? prod : rzero - prod;
    });
    if (!fix_first) {
        long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        total = Ring<R>::divide(total, Ring<R>::from_int(fact));
    }
    return total;
}

}  // namespace detail

/// Generalized sign factor for a tuple (X_1, ..., X_{2m}) of equal-side ASMs.
/// Exactly zero whenever X_1 has a negative entry, under both conventions.
template <class K>
K phi(const std::vector<Asm>& xs, const K& lambda, PhiConvention convention) {
    if (xs.size() < 2 || xs.size() % 2 != 0)
        throw std::invalid_argument("phi: expected a positive even number of matrices");
    const int n = xs.front().side();
    for (const Asm& x : xs)
        if (x.side() != n) throw std::invalid_argument("phi: matrices must share one side");
    if (lambda == Ring<K>::zero())
        throw std::domain_error("phi: lambda must be nonzero (factors involve lambda^{-r})");
    const int m = static_cast<int>(xs.size()) / 2;
    K acc = Ring<K>::one();
    for (std::size_t t = 0; t < xs.size(); ++t)
        acc = acc * detail::phi_slot_factor(static_cast<int>(t), m, xs[t].inversion_number(),
                                            xs[t].negative_count(), lambda, convention);
    return acc;
}

/// Cayley's second hyperdeterminant with the first permutation fixed to the
/// identity (an exact reduction by sign symmetry; see cayley_hyperdet_full).
template <class R>
R cayley_hyperdet(const HyperMatrix<R>& a, Exec exec = Exec::parallel,
                  std::int64_t budget = kDefaultTermBudget) {
    return detail::cayley_core(a, true, exec, budget);
}

/// The literal (1/n!)-averaged sum over all 2m permutation slots.  Kept as the
/// reference the reduced form is validated against.
template <class R>
R cayley_hyperdet_full(const HyperMatrix<R>& a, Exec exec = Exec::parallel,
                       std::int64_t budget = kDefaultTermBudget) {
    return detail::cayley_core(a, false, exec, budget);
}

/// lambda-hyperdeterminant: 1/[n]_lambda! times the phi-weighted sum over ASM
/// tuples, entries indexed by the generalized permutations.  X_1 ranges over
/// permutation matrices (tuples with n(X_1) > 0 have phi = 0 exactly);
/// x1_over_full_alt restores the full Alt_n range for soundness testing.
template <class R, class K>
R lambda_hyperdet(const HyperMatrix<R>& a, const K& lambda, PhiConvention convention,
                  Exec exec = Exec::parallel, std::int64_t budget = kDefaultTermBudget,
                  bool x1_over_full_alt = false) {
    const int n = a.side();
    const int d = a.dim();
    const int m = d / 2;
    if (n > kAsmEnumerationCeiling)
        throw std::invalid_argument("lambda_hyperdet: side exceeds the Alt_n enumeration ceiling (" +
                                    std::to_string(kAsmEnumerationCeiling) + ")");
    const K kzero = Ring<K>::zero();
    if (lambda == kzero)
        throw std::domain_error("lambda_hyperdet: lambda must be nonzero");

    const std::vector<Asm> alts = asm_enumerate(n);
    const std::vector<Asm> firsts = x1_over_full_alt ? alts : permutation_matrices(n);
    const std::int64_t count = detail::checked_term_count("lambda_hyperdet", firsts.size(),
                                                          alts.size(), d - 1, budget);

    const K fact = lambda_factorial_at(static_cast<unsigned>(n), lambda);
    if (fact == kzero)
        throw std::domain_error("lambda_hyperdet: the prefactor [n]_lambda! vanishes at this lambda");
    const K inv_fact = Ring<K>::divide(Ring<K>::one(), fact);

    // Per-slot tables: the phi factor and the generalized permutation of each
    // candidate matrix.  Slot 0 draws from `firsts`, the rest from Alt_n.
    std::vector<std::vector<K>> factor(d);
    std::vector<std::vector<std::vector<int>>> image(d);
    for (int t = 0; t < d; ++t) {
        const std::vector<Asm>& list = (t == 0) ? firsts : alts;
        factor[t].reserve(list.size());
        image[t].reserve(list.size());
        for (const Asm& x : list) {
            factor[t].push_back(detail::phi_slot_factor(t, m, x.inversion_number(),
                                                        x.negative_count(), lambda, convention));
            image[t].push_back(x.generalized_permutation().values);
        }
    }

    const std::int64_t p0 = static_cast<std::int64_t>(firsts.size());
    const std::int64_t pa = static_cast<std::int64_t>(alts.size());
    const R rzero = Ring<R>::zero();
    R total = sum_terms<R>(count, exec, rzero, [&](std::int64_t w) {
        std::vector<int> sel(d);
        std::int64_t rem = w;
        sel[0] = static_cast<int>(rem % p0);
        rem /= p0;
        K weight = factor[0][sel[0]];
        if (weight == kzero) return rzero;
        for (int t = 1; t < d; ++t) {
            sel[t] = static_cast<int>(rem % pa);
            rem /= pa;
            if (factor[t][sel[t]] == kzero) return rzero;
            weight = weight * factor[t][sel[t]];
        }
        std::vector<int> idx(d);
        R prod = Ring<R>::one();
        for (int i = 0; i < n; ++i) {
            for (int t = 0; t < d; ++t) idx[t] = image[t][sel[t]][i];
            R e = a.entry(idx);
            if (e == rzero) return rzero;
            prod = prod * e;
        }
        return scale(prod, weight);
    });
    return scale(total, inv_fact);
}

/// Contraction of a matrix against the k-th index slot (1-based):
/// (B o_k A)(i_1,...,i_{2m}) = sum_j B(i_k, j) * A(..., j, ...).
template <class R>
HyperMatrix<R> circ_action(const Matrix<R>& b, const HyperMatrix<R>& a, int slot) {
    if (b.n != a.side()) throw std::invalid_argument("circ_action: matrix side mismatch");
    if (slot < 1 || slot > a.dim())
        throw std::invalid_argument("circ_action: slot out of [1, dim]");
    const int n = a.side();
    const int d = a.dim();
    HyperMatrix<R> out(n, d);
    std::vector<int> idx(d, 1);
    const R rzero = Ring<R>::zero();
    while (true) {
        R acc = rzero;
        std::vector<int> src = idx;
        for (int j = 1; j <= n; ++j) {
            src[slot - 1] = j;
            acc = acc + b.at(idx[slot - 1] - 1, j - 1) * a.entry(src);
        }
        out.set(idx, acc);
        int t = d - 1;
        while (t >= 0 && idx[t] == n) idx[t--] = 1;
        if (t < 0) break;
        ++idx[t];
    }
    return out;
}

}  // namespace lhd
