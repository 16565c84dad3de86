#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <variant>

#include "lhd/alt_matrix.hpp"
#include "lhd/detlib.hpp"
#include "lhd/hyper.hpp"
#include "lhd/laurent.hpp"
#include "lhd/macdonald.hpp"
#include "lhd/parallel.hpp"
#include "lhd/symfun.hpp"

namespace lhd {

/// Process-level knobs shared by the CLI subcommands.  Defaults come from the
/// constants of the owning modules; config_from_env overlays the environment;
/// explicit flags overwrite whatever is there last, so flags win.
struct Config {
    std::int64_t budget_terms = kDefaultTermBudget;
    int degree_ceiling = MacdonaldEngine::kDefaultDegreeCeiling;
    std::string cache_dir;
    unsigned seed = 12345;
    bool json = false;

    /// Throws std::invalid_argument unless budget_terms > 0 and
    /// degree_ceiling >= 1.
    void validate() const;
};

/// Defaults overlaid with HYPERDET_CACHE_DIR and HYPERDET_BUDGET.  A
/// malformed HYPERDET_BUDGET raises std::invalid_argument rather than being
/// ignored.
Config config_from_env();

/// {"n": 3, "rows": [[0,1,0],[1,-1,1],[0,1,0]]}
nlohmann::json asm_to_json(const Asm& a);
Asm asm_from_json(const nlohmann::json& doc);

/// Square matrices arrive as {"n": 3, "entries": [["a11", ...], ...]} with
/// every entry either a rational-function string or a symbolic variable name
/// x1..xn.  All-rational input stays in the coefficient field; one symbolic
/// name switches the whole matrix to Laurent polynomials so the deformed
/// Vandermonde product can be fed in by name.
using SymbolicEntry = LaurentPoly<RationalFunction>;
using MatrixInput = std::variant<Matrix<RationalFunction>, Matrix<SymbolicEntry>>;
MatrixInput matrix_from_json(const nlohmann::json& doc);
nlohmann::json matrix_to_json(const Matrix<RationalFunction>& m);

/// {"n": 2, "dim": 4, "entries": [{"index": [1,1,1,1], "value": "3/2"}, ...]}
/// Absent indices are zero; a repeated index is an error, not a overwrite.
HyperMatrix<RationalFunction> hypermatrix_from_json(const nlohmann::json& doc);
nlohmann::json hypermatrix_to_json(const HyperMatrix<RationalFunction>& a);

/// {"basis": "p", "coefficients": {"[1,1]": "1/2", "[2]": "-1/2"}}
nlohmann::json symfun_to_json(const SymFun& f);

/// Parses the file as JSON, rethrowing parse and I/O failures as
/// std::runtime_error carrying the path.
nlohmann::json read_json_file(const std::string& path);

}  // namespace lhd
