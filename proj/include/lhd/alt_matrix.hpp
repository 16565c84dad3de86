#pragma once

/**
 * @file alt_matrix.hpp
 * @brief Alternating sign matrices and their statistics.
 *
 * An ASM is a square {-1,0,1} matrix whose rows and columns each sum to 1
 * with nonzero entries alternating in sign; equivalently every row/column
 * prefix sum lies in {0,1}.  Permutation matrices are exactly the ASMs
 * without negative entries.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lhd/bigrational.hpp"

namespace lhd {

/// Row image of an ASM acting on (1,...,n): values[i] = sum_j j*x_{ij},
/// always within [1, n].
struct GenPerm {
    std::vector<int> values;

    bool operator==(const GenPerm& o) const { return values == o.values; }
};

class Asm {
public:
    /// Validated construction; throws std::invalid_argument on bad input.
    explicit Asm(std::vector<std::vector<int>> rows);

    /// True iff the square matrix satisfies all ASM invariants.  Throws on
    /// non-square input.
    static bool validate(const std::vector<std::vector<int>>& rows);

    int side() const { return n_; }
    int entry(int i, int j) const { return e_[static_cast<size_t>(i * n_ + j)]; }

    /// i(X) = sum_{r>i, s<j} x_{ij} x_{rs}.
    int inversion_number() const;
    /// Number of -1 entries.
    int negative_count() const;
    bool is_permutation() const { return negative_count() == 0; }

    GenPerm generalized_permutation() const;
    Asm transpose() const;

    std::vector<std::vector<int>> rows() const;
    std::string to_string() const;

    bool operator==(const Asm& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator<(const Asm& o) const { return e_ < o.e_; }

    /// Permutation matrix for a one-based permutation word.
    static Asm from_permutation(const std::vector<int>& word);

private:
    Asm(int n, std::vector<int8_t> e) : n_(n), e_(std::move(e)) {}
    int n_ = 0;
    std::vector<int8_t> e_;

    friend void asm_foreach(int n, const std::function<void(const Asm&)>& fn);
};

/// Full enumeration ceiling; |Alt_7| = 218348 and the hyperdeterminant sums
/// take powers of this count, so larger n must go through count_formula.
inline constexpr int kAsmEnumerationCeiling = 7;

/// Streams Alt_n in lexicographic order of the flattened entry sequence
/// (entry order -1 < 0 < 1).  Throws beyond the enumeration ceiling.
void asm_foreach(int n, const std::function<void(const Asm&)>& fn);

/// Materialized Alt_n in the same deterministic order.
std::vector<Asm> asm_enumerate(int n);

/// |Alt_n| by the product formula prod_{i=0}^{n-1} (3i+1)!/(n+i)!.
BigInt asm_count_formula(int n);

/// All permutation matrices of side n in lexicographic word order.
std::vector<Asm> permutation_matrices(int n);

}  // namespace lhd
