#pragma once

/**
 * @file partition.hpp
 * @brief Integer partitions with the statistics symmetric-function code needs:
 *        weight, conjugate, arm/leg lengths, the centralizer size z_lambda,
 *        and the dominance order.
 */

#include <string>
#include <vector>

#include "lhd/bigrational.hpp"

namespace lhd {

class Partition {
public:
    /// The empty partition (weight 0).
    Partition() = default;

    /// Parts may arrive in any order; they are sorted decreasingly.  Throws
    /// std::invalid_argument if any part is < 1.
    explicit Partition(std::vector<int> parts);

    /// Accepts "[2,1]", "2,1", or "" / "[]" for the empty partition.
    static Partition parse(const std::string& text);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    /// i-th part, 0-based; 0 beyond the length (convenient for dominance and
    /// Jacobi-Trudi index arithmetic).
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    Partition conjugate() const;

    /// Arm and leg lengths of the cell in row i, column j (0-based).  Throws
    /// std::invalid_argument if the cell lies outside the diagram.
    int arm(int i, int j) const;
    int leg(int i, int j) const;

    /// z_lambda = prod over part sizes i of i^{m_i} * m_i!.
    BigInt z() const;

    /// Dominance: equal weight and every prefix sum of *this >= that of o.
    /// Throws std::invalid_argument on weight mismatch.
    bool dominates(const Partition& o) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

    /// Lexicographic on the decreasing part vectors.  Within one weight this
    /// is a total order refining dominance: mu dominated by lambda implies
    /// mu < lambda.
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;  // "[2,1]", "[]" for empty

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n, sorted increasingly by Partition::operator< (so any
/// partition appears after everything it dominates).
std::vector<Partition> partitions_of(int n);

}  // namespace lhd
