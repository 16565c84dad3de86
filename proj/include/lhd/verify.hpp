#pragma once

/**
 * @file verify.hpp
 * @brief The identity harness: each checkable claim runs as an isolated
 *        experiment and returns a structured report.
 *
 * Status semantics:
 *   - pass: the identity holds exactly as computed.
 *   - fail: it does not, and the witness carries the differing values.
 *   - discrepancy-documented: reserved for the two known source typos — the
 *     sign of the quotient term in the printed 3x3 lambda-determinant
 *     expansion, and the exponent signs of the generalized sign factor (the
 *     paper-literal convention failing the rectangular Macdonald identity).
 *     These are findings, not failures: the computation confirms the
 *     corrected reading and records the witness.
 *
 * The harness never hard-codes which sign-factor convention is right.  It
 * runs both; resolve_convention inspects the resulting reports and names the
 * convention that validated the whole grid.
 */

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lhd/bigrational.hpp"
#include "lhd/hyper.hpp"
#include "lhd/macdonald.hpp"
#include "lhd/parallel.hpp"

namespace lhd {

enum class VerifyStatus { pass, fail, discrepancy_documented };

inline const char* to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::pass: return "pass";
        case VerifyStatus::fail: return "fail";
        default: return "discrepancy-documented";
    }
}

struct VerificationReport {
    std::string identity;
    std::map<std::string, std::string> params;
    std::optional<PhiConvention> convention;
    VerifyStatus status = VerifyStatus::pass;
    std::string witness;  // empty on a clean pass
    long long runtime_ms = 0;

    bool ok() const { return status != VerifyStatus::fail; }

    std::string to_json() const;
    std::string to_text() const;
};

/// det_lambda on the (x_i^{j-1}) matrix equals prod_{i<j}(x_j - lambda x_i),
/// symbolically in both lambda and the points.
VerificationReport verify_lambda_vandermonde(int n, Exec exec = Exec::parallel);

/// The printed 3x3 expansion: six permutation terms match Eq. (3) verbatim;
/// the quotient term computes to lambda(lambda-1), not the printed
/// +lambda(1-lambda).  Witness: the matching lambda-Vandermonde coefficient.
VerificationReport verify_det3_discrepancy();

/// specialize(lambda_hyperdet(A, lambda), 1) = cayley_hyperdet(A) on random
/// rational hypermatrices of side n and dimension 2m, both conventions.
VerificationReport verify_limit_to_cayley(int n, int m, int trials, unsigned seed,
                                          Exec exec = Exec::parallel);

/// The rectangular Macdonald identity at one grid point under one convention:
/// (q;q)_{sm}/(q;q)_m^s Q_{(k^s)} = (q;q)_s/(1-q)^s * lambda_hyperdet(M, q).
VerificationReport verify_theorem_3_2(int k, int s, int m, PhiConvention convention,
                                      MacdonaldEngine& engine, Exec exec = Exec::parallel,
                                      std::int64_t budget = kDefaultTermBudget);

/// The q-Dyson coefficient reaches the same scaled rectangular function.
VerificationReport verify_dyson_oracle(int k, int s, int m, MacdonaldEngine& engine,
                                       Exec exec = Exec::parallel,
                                       std::int64_t budget = kDefaultTermBudget);

/// det_1/det_{-1} of the power matrix equals the Pfaffian of
/// ((x_j - x_i)/(x_j + x_i)).  Degenerate points (det_1 = 0) pass by zero.
VerificationReport verify_schur_pfaffian(const std::vector<BigRational>& xs);

/// q = 1 limit of the verified identity: pole-free specialization, the scalar
/// tends to (sm)!/(m!)^s, and the hyperdeterminant side degenerates to s!
/// times the Cayley hyperdeterminant of the specialized one-row entries.
VerificationReport verify_matsumoto_limit(int k, int s, int m, PhiConvention convention,
                                          MacdonaldEngine& engine, Exec exec = Exec::parallel,
                                          std::int64_t budget = kDefaultTermBudget);

/// Engine self-checks backing the Macdonald layer.
VerificationReport verify_macdonald_orthogonality(int max_weight, MacdonaldEngine& engine);
VerificationReport verify_macdonald_one_row(int max_j, MacdonaldEngine& engine);
VerificationReport verify_macdonald_schur_degeneration(int max_weight, MacdonaldEngine& engine);

struct VerifyOptions {
    unsigned seed = 12345;
    std::int64_t budget = kDefaultTermBudget;
    std::string cache_dir;  // attach the Macdonald disk cache when nonempty
    int trials = 5;         // random hypermatrices per limit-to-cayley shape
    Exec exec = Exec::parallel;
};

/// Theorem 3.2 grid: every (k, s, m) with ks <= 6, s <= 3, m <= 2.
std::vector<std::array<int, 3>> theorem_grid();

/// Every identity in a fixed order; deterministic modulo runtime fields.
std::vector<VerificationReport> run_all(const VerifyOptions& opts = {});

/// The convention that passed every theorem-3-2 report, when exactly one did.
std::optional<PhiConvention> resolve_convention(const std::vector<VerificationReport>& reports);

/// JSON array over reports.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace lhd
