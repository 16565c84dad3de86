#include "lhd/alt_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lhd {

Asm::Asm(std::vector<std::vector<int>> rows) {
    if (!validate(rows)) throw std::invalid_argument("Asm: not an alternating sign matrix");
    n_ = static_cast<int>(rows.size());
    e_.reserve(static_cast<size_t>(n_) * n_);
    for (const auto& r : rows)
        for (int v : r) e_.push_back(static_cast<int8_t>(v));
}

bool Asm::validate(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw std::invalid_argument("Asm::validate: empty matrix");
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) {
            throw std::invalid_argument("Asm::validate: matrix is not square");
        }
    }
    // Prefix partial sums along every row and column must stay in {0,1};
    // full sums must be 1.  This is equivalent to the alternating condition.
    for (int i = 0; i < n; ++i) {
        int s = 0;
        for (int j = 0; j < n; ++j) {
            const int v = rows[i][j];
            if (v < -1 || v > 1) return false;
            s += v;
            if (s < 0 || s > 1) return false;
        }
        if (s != 1) return false;
    }
    for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int i = 0; i < n; ++i) {
            s += rows[i][j];
            if (s < 0 || s > 1) return false;
        }
        if (s != 1) return false;
    }
    return true;
}

int Asm::inversion_number() const {
    // i(X) = sum_{ij} x_ij * B(i,j) with B(i,j) = sum_{r>i, s<j} x_rs,
    // computed from column suffix sums in O(n^2).
    const int n = n_;
    std::vector<int> below(static_cast<size_t>(n), 0);  // below[j] = sum_{r>i} x_rj
    for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int r = 1; r < n; ++r) s += entry(r, j);
        below[static_cast<size_t>(j)] = s;
    }
    int inv = 0;
    for (int i = 0; i < n; ++i) {
        int left = 0;  // sum_{s<j} below[s]
        for (int j = 0; j < n; ++j) {
            inv += entry(i, j) * left;
            left += below[static_cast<size_t>(j)];
        }
        if (i + 1 < n) {
            for (int j = 0; j < n; ++j) below[static_cast<size_t>(j)] -= entry(i + 1, j);
        }
    }
    return inv;
}

int Asm::negative_count() const {
    int c = 0;
    for (int8_t v : e_)
        if (v < 0) ++c;
    return c;
}

GenPerm Asm::generalized_permutation() const {
    GenPerm g;
    g.values.resize(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        int s = 0;
        for (int j = 0; j < n_; ++j) s += (j + 1) * entry(i, j);
        g.values[static_cast<size_t>(i)] = s;
    }
    return g;
}

Asm Asm::transpose() const {
    std::vector<int8_t> t(e_.size());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t[static_cast<size_t>(j * n_ + i)] = e_[static_cast<size_t>(i * n_ + j)];
    return Asm(n_, std::move(t));
}

std::vector<std::vector<int>> Asm::rows() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry(i, j);
    return out;
}

std::string Asm::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < n_; ++j) os << (j ? "," : "") << entry(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

Asm Asm::from_permutation(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        const int j = word[static_cast<size_t>(i)];
        if (j < 1 || j > n) throw std::invalid_argument("Asm::from_permutation: entry out of range");
        rows[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] = 1;
    }
    return Asm(std::move(rows));
}

void asm_foreach(int n, const std::function<void(const Asm&)>& fn) {
    if (n < 1) throw std::invalid_argument("asm_foreach: n must be positive");
    if (n > kAsmEnumerationCeiling) {
        throw std::invalid_argument(
            "asm_foreach: n = " + std::to_string(n) + " exceeds the enumeration ceiling " +
            std::to_string(kAsmEnumerationCeiling) + "; use asm_count_formula for counts");
    }
    // Row-by-row DFS.  Trying entries in the order -1 < 0 < 1 yields exactly
    // the lexicographic order on the flattened entry sequence.  Column prefix
    // sums in {0,1} prune invalid prefixes early.
    std::vector<int8_t> entries(static_cast<size_t>(n) * n, 0);
    std::vector<int8_t> colsum(static_cast<size_t>(n), 0);

    const auto emit = [&]() { fn(Asm(n, entries)); };

    // Extends from cell (i, j) with current row prefix sum rp.
    std::function<void(int, int, int)> extend = [&](int i, int j, int rp) {
        if (j == n) {
            if (rp != 1) return;
            if (i + 1 == n) {
                for (int c = 0; c < n; ++c)
                    if (colsum[static_cast<size_t>(c)] != 1) return;
                emit();
            } else {
                extend(i + 1, 0, 0);
            }
            return;
        }
        for (int v = -1; v <= 1; ++v) {
            const int nrp = rp + v;
            if (nrp < 0 || nrp > 1) continue;
            const int ncs = colsum[static_cast<size_t>(j)] + v;
            if (ncs < 0 || ncs > 1) continue;
            entries[static_cast<size_t>(i * n + j)] = static_cast<int8_t>(v);
            colsum[static_cast<size_t>(j)] = static_cast<int8_t>(ncs);
            extend(i, j + 1, nrp);
            colsum[static_cast<size_t>(j)] = static_cast<int8_t>(ncs - v);
        }
        entries[static_cast<size_t>(i * n + j)] = 0;
    };
    extend(0, 0, 0);
}

std::vector<Asm> asm_enumerate(int n) {
    std::vector<Asm> out;
    asm_foreach(n, [&](const Asm& a) { out.push_back(a); });
    return out;
}

BigInt asm_count_formula(int n) {
    if (n < 1) throw std::invalid_argument("asm_count_formula: n must be positive");
    BigInt num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        num *= big_factorial(static_cast<unsigned>(3 * i + 1));
        den *= big_factorial(static_cast<unsigned>(n + i));
    }
    return num / den;
}

std::vector<Asm> permutation_matrices(int n) {
    std::vector<int> word(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = i + 1;
    std::vector<Asm> out;
    do {
        out.push_back(Asm::from_permutation(word));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

}  // namespace lhd
