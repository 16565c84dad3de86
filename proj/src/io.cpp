#include "lhd/io.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <set>
#include <string>

namespace lhd {

namespace {

long long require_int(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
    return doc[key].get<long long>();
}

std::string require_string(const nlohmann::json& value, const std::string& where) {
    if (!value.is_string())
        throw std::invalid_argument(where + " must be a string");
    return value.get<std::string>();
}

// Symbolic matrix entries: a variable name x1, x2, ... with an optional
// positive power, enough to spell out the Vandermonde power matrix.
const std::regex kVariableName("^x([1-9][0-9]*)(\\^([1-9][0-9]*))?$");
constexpr std::size_t kMaxSymbolicVariables = 64;
constexpr int kMaxSymbolicExponent = 64;

}  // namespace

void Config::validate() const {
    if (budget_terms <= 0)
        throw std::invalid_argument("config: budget_terms must be positive");
    if (degree_ceiling < 1)
        throw std::invalid_argument("config: degree_ceiling must be at least 1");
}

Config config_from_env() {
    Config cfg;
    if (const char* dir = std::getenv("HYPERDET_CACHE_DIR")) cfg.cache_dir = dir;
    if (const char* budget = std::getenv("HYPERDET_BUDGET")) {
        const std::string text(budget);
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != text.size() || value <= 0)
            throw std::invalid_argument(
                "HYPERDET_BUDGET must be a positive integer, got \"" + text + "\"");
        cfg.budget_terms = value;
    }
    return cfg;
}

nlohmann::json asm_to_json(const Asm& a) {
    nlohmann::json doc;
    doc["n"] = a.side();
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < a.side(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < a.side(); ++j) row.push_back(a.entry(i, j));
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

Asm asm_from_json(const nlohmann::json& doc) {
    const long long n = require_int(doc, "n");
    if (!doc.contains("rows") || !doc["rows"].is_array())
        throw std::invalid_argument("alternating sign matrix: missing \"rows\" array");
    const auto& rows_json = doc["rows"];
    if (static_cast<long long>(rows_json.size()) != n)
        throw std::invalid_argument("alternating sign matrix: \"rows\" must have n rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row_json : rows_json) {
        if (!row_json.is_array() || static_cast<long long>(row_json.size()) != n)
            throw std::invalid_argument("alternating sign matrix: each row must have n entries");
        std::vector<int> row;
        for (const auto& cell : row_json) {
            if (!cell.is_number_integer())
                throw std::invalid_argument("alternating sign matrix: entries must be integers");
            row.push_back(cell.get<int>());
        }
        rows.push_back(std::move(row));
    }
    return Asm(rows);
}

MatrixInput matrix_from_json(const nlohmann::json& doc) {
    const long long n = require_int(doc, "n");
    if (n < 1) throw std::invalid_argument("matrix: n must be positive");
    if (!doc.contains("entries") || !doc["entries"].is_array())
        throw std::invalid_argument("matrix: missing \"entries\" array");
    const auto& entries = doc["entries"];
    if (static_cast<long long>(entries.size()) != n)
        throw std::invalid_argument("matrix: \"entries\" must have n rows");

    // Classify every cell before committing to a representation.
    struct Cell {
        bool symbolic = false;
        std::size_t variable = 0;
        int exponent = 1;
        RationalFunction value;
    };
    std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(n));
    bool any_symbolic = false;
    for (long long i = 0; i < n; ++i) {
        const auto& row = entries[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<long long>(row.size()) != n)
            throw std::invalid_argument("matrix: each row must have n entries");
        for (long long j = 0; j < n; ++j) {
            const std::string where =
                "matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            const std::string text = require_string(row[static_cast<std::size_t>(j)], where);
            Cell cell;
            std::smatch match;
            if (std::regex_match(text, match, kVariableName)) {
                const unsigned long index = std::stoul(match[1].str());
                if (index > kMaxSymbolicVariables)
                    throw std::invalid_argument(where + ": variable index " + match[1].str() +
                                                " is too large");
                cell.symbolic = true;
                cell.variable = index - 1;
                if (match[3].matched) {
                    const unsigned long exponent = std::stoul(match[3].str());
                    if (exponent > kMaxSymbolicExponent)
                        throw std::invalid_argument(where + ": exponent " + match[3].str() +
                                                    " is too large");
                    cell.exponent = static_cast<int>(exponent);
                }
                any_symbolic = true;
            } else {
                try {
                    cell.value = RationalFunction::parse(text);
                } catch (const std::exception& e) {
                    throw std::invalid_argument(where + ": \"" + text +
                                                "\" is neither a rational function in q nor a "
                                                "variable name x1, x2, ...");
                }
            }
            cells[static_cast<std::size_t>(i)].push_back(std::move(cell));
        }
    }

    if (!any_symbolic) {
        Matrix<RationalFunction> m(static_cast<int>(n));
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j)
                m.at(static_cast<int>(i), static_cast<int>(j)) =
                    cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].value;
        return m;
    }
    Matrix<SymbolicEntry> m(static_cast<int>(n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            const Cell& cell = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            m.at(static_cast<int>(i), static_cast<int>(j)) =
                cell.symbolic ? SymbolicEntry::variable(cell.variable, cell.exponent)
                              : SymbolicEntry::constant(cell.value);
        }
    return m;
}

nlohmann::json matrix_to_json(const Matrix<RationalFunction>& m) {
    nlohmann::json doc;
    doc["n"] = m.n;
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < m.n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j).to_string());
        entries.push_back(std::move(row));
    }
    doc["entries"] = std::move(entries);
    return doc;
}

HyperMatrix<RationalFunction> hypermatrix_from_json(const nlohmann::json& doc) {
    const long long n = require_int(doc, "n");
    const long long dim = require_int(doc, "dim");
    HyperMatrix<RationalFunction> a(static_cast<int>(n), static_cast<int>(dim));
    if (!doc.contains("entries")) return a;  // all-zero hypermatrix
    if (!doc["entries"].is_array())
        throw std::invalid_argument("hypermatrix: \"entries\" must be an array");
    std::set<std::vector<int>> seen;
    for (const auto& item : doc["entries"]) {
        if (!item.is_object() || !item.contains("index") || !item.contains("value"))
            throw std::invalid_argument(
                "hypermatrix: each entry needs an \"index\" and a \"value\"");
        const auto& index_json = item["index"];
        if (!index_json.is_array())
            throw std::invalid_argument("hypermatrix: \"index\" must be an array");
        std::vector<int> index;
        for (const auto& part : index_json) {
            if (!part.is_number_integer())
                throw std::invalid_argument("hypermatrix: index entries must be integers");
            index.push_back(part.get<int>());
        }
        if (!seen.insert(index).second) {
            std::string text;
            for (int v : index) text += (text.empty() ? "" : ",") + std::to_string(v);
            throw std::invalid_argument("hypermatrix: duplicate index [" + text + "]");
        }
        const std::string value = require_string(item["value"], "hypermatrix entry value");
        a.set(index, RationalFunction::parse(value));
    }
    return a;
}

nlohmann::json hypermatrix_to_json(const HyperMatrix<RationalFunction>& a) {
    nlohmann::json doc;
    doc["n"] = a.side();
    doc["dim"] = a.dim();
    nlohmann::json entries = nlohmann::json::array();
    std::vector<int> idx(static_cast<std::size_t>(a.dim()), 1);
    while (true) {
        const RationalFunction value = a.entry(idx);
        if (!(value == RationalFunction::zero())) {
            nlohmann::json item;
            item["index"] = idx;
            item["value"] = value.to_string();
            entries.push_back(std::move(item));
        }
        int t = a.dim() - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == a.side())
            idx[static_cast<std::size_t>(t--)] = 1;
        if (t < 0) break;
        ++idx[static_cast<std::size_t>(t)];
    }
    doc["entries"] = std::move(entries);
    return doc;
}

nlohmann::json symfun_to_json(const SymFun& f) {
    nlohmann::json doc;
    doc["basis"] = f.basis() == SymBasis::power ? "p" : "m";
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [lam, value] : f.coefficients()) coeffs[lam.to_string()] = value.to_string();
    doc["coefficients"] = std::move(coeffs);
    return doc;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        nlohmann::json doc;
        in >> doc;
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace lhd
