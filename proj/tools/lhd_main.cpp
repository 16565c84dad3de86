#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <map>
#include <regex>
#include <string>
#include <vector>

#include "lhd/alt_matrix.hpp"
#include "lhd/detlib.hpp"
#include "lhd/dyson.hpp"
#include "lhd/hyper.hpp"
#include "lhd/io.hpp"
#include "lhd/verify.hpp"

namespace {

using lhd::Config;
using lhd::Exec;
using lhd::MacdonaldEngine;
using lhd::PhiConvention;
using lhd::RationalFunction;
using lhd::VerificationReport;
using lhd::VerifyStatus;

RationalFunction parse_lambda(const std::string& text) {
    if (text == "sym") return RationalFunction::q();
    return RationalFunction::parse(text);
}

PhiConvention parse_convention(const std::string& text) {
    return text == "paper" ? PhiConvention::paper_literal : PhiConvention::proof_consistent;
}

void configure_engine(MacdonaldEngine& engine, const Config& cfg) {
    if (!cfg.cache_dir.empty()) engine.attach_cache(cfg.cache_dir);
}

int run_asm_count(const Config& cfg, int n) {
    const lhd::BigInt count = lhd::asm_count_formula(n);
    if (cfg.json) {
        nlohmann::json doc;
        doc["n"] = n;
        doc["count"] = count.get_str();
        std::cout << doc.dump(1) << "\n";
    } else {
        std::cout << count.get_str() << "\n";
    }
    return 0;
}

int run_asm_list(const Config& cfg, int n) {
    const std::vector<lhd::Asm> all = lhd::asm_enumerate(n);
    if (cfg.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const lhd::Asm& a : all) arr.push_back(lhd::asm_to_json(a));
        std::cout << arr.dump(1) << "\n";
    } else {
        for (const lhd::Asm& a : all) std::cout << a.to_string() << "\n";
    }
    return 0;
}

int run_asm_stats(const Config& cfg, int n) {
    std::map<int, long long> inversions;
    std::map<int, long long> negatives;
    long long count = 0;
    lhd::asm_foreach(n, [&](const lhd::Asm& a) {
        ++count;
        ++inversions[a.inversion_number()];
        ++negatives[a.negative_count()];
    });
    if (cfg.json) {
        nlohmann::json doc;
        doc["n"] = n;
        doc["count"] = count;
        nlohmann::json inv = nlohmann::json::object();
        for (const auto& [value, freq] : inversions) inv[std::to_string(value)] = freq;
        nlohmann::json neg = nlohmann::json::object();
        for (const auto& [value, freq] : negatives) neg[std::to_string(value)] = freq;
        doc["inversions"] = std::move(inv);
        doc["negatives"] = std::move(neg);
        std::cout << doc.dump(1) << "\n";
    } else {
        std::cout << count << " alternating sign matrices of order " << n << "\n";
        std::cout << "i(X):";
        for (const auto& [value, freq] : inversions) std::cout << " " << value << "->" << freq;
        std::cout << "\n";
        std::cout << "n(X):";
        for (const auto& [value, freq] : negatives) std::cout << " " << value << "->" << freq;
        std::cout << "\n";
    }
    return 0;
}

int run_det(const Config& cfg, const std::string& input, const std::string& lambda_text) {
    const RationalFunction lambda = parse_lambda(lambda_text);
    const lhd::MatrixInput matrix = lhd::matrix_from_json(lhd::read_json_file(input));
    std::string value;
    if (std::holds_alternative<lhd::Matrix<RationalFunction>>(matrix)) {
        value = lhd::det_lambda(std::get<lhd::Matrix<RationalFunction>>(matrix), lambda,
                                Exec::parallel)
                    .to_string();
    } else {
        value = lhd::det_lambda(std::get<lhd::Matrix<lhd::SymbolicEntry>>(matrix), lambda,
                                Exec::parallel)
                    .to_string("x");
    }
    if (cfg.json) {
        nlohmann::json doc;
        doc["lambda"] = lambda.to_string();
        doc["det"] = value;
        std::cout << doc.dump(1) << "\n";
    } else {
        std::cout << value << "\n";
    }
    return 0;
}

int run_hyperdet(const Config& cfg, const std::string& input, const std::string& mode,
                 const std::string& convention_text, const std::string& lambda_text) {
    const lhd::HyperMatrix<RationalFunction> a =
        lhd::hypermatrix_from_json(lhd::read_json_file(input));
    nlohmann::json doc;
    doc["mode"] = mode;
    std::string value;
    if (mode == "cayley") {
        value = lhd::cayley_hyperdet(a, Exec::parallel, cfg.budget_terms).to_string();
    } else {
        const RationalFunction lambda = parse_lambda(lambda_text);
        const PhiConvention convention = parse_convention(convention_text);
        value = lhd::lambda_hyperdet(a, lambda, convention, Exec::parallel, cfg.budget_terms)
                    .to_string();
        doc["convention"] = lhd::to_string(convention);
        doc["lambda"] = lambda.to_string();
    }
    if (cfg.json) {
        doc["value"] = value;
        std::cout << doc.dump(1) << "\n";
    } else {
        std::cout << value << "\n";
    }
    return 0;
}

int run_macdonald(const Config& cfg, const std::string& partition_text, int m,
                  const std::string& basis) {
    const lhd::Partition lambda = lhd::Partition::parse(partition_text);
    MacdonaldEngine engine(cfg.degree_ceiling);
    configure_engine(engine, cfg);
    lhd::SymFun q = engine.Q(lambda, m);
    if (basis == "m") q = q.to_basis(lhd::SymBasis::monomial);
    if (cfg.json) {
        nlohmann::json doc = lhd::symfun_to_json(q);
        doc["partition"] = lambda.to_string();
        doc["m"] = m;
        std::cout << doc.dump(1) << "\n";
    } else {
        std::cout << q.to_string() << "\n";
    }
    return 0;
}

int run_dyson(const Config& cfg, int k, int s, int m) {
    MacdonaldEngine engine(cfg.degree_ceiling);
    configure_engine(engine, cfg);
    const lhd::SymFun f =
        lhd::dyson_coefficient(k, s, m, engine, Exec::parallel, cfg.budget_terms);
    if (cfg.json) {
        nlohmann::json doc = lhd::symfun_to_json(f);
        doc["k"] = k;
        doc["s"] = s;
        doc["m"] = m;
        std::cout << doc.dump(1) << "\n";
    } else {
        std::cout << f.to_string() << "\n";
    }
    return 0;
}

struct VerifyFlags {
    std::string identity = "all";
    int n = -1;
    int k = -1;
    int s = -1;
    int m = -1;
    std::string convention = "both";
};

std::vector<PhiConvention> conventions_for(const std::string& choice) {
    if (choice == "paper") return {PhiConvention::paper_literal};
    if (choice == "proof") return {PhiConvention::proof_consistent};
    return {PhiConvention::paper_literal, PhiConvention::proof_consistent};
}

/// Grid points for one identity: the single (k, s, m) from the flags if all
/// three were given, the full verification grid if none were.
std::vector<std::array<int, 3>> points_for(const VerifyFlags& flags) {
    const int given = (flags.k >= 0) + (flags.s >= 0) + (flags.m >= 0);
    if (given == 3) return {{flags.k, flags.s, flags.m}};
    if (given != 0)
        throw std::invalid_argument("give all of --k, --s, --m, or none for the full grid");
    return lhd::theorem_grid();
}

std::vector<VerificationReport> run_identity(const Config& cfg, const VerifyFlags& flags) {
    std::vector<VerificationReport> reports;
    const std::string& id = flags.identity;
    if (id == "lambda-vandermonde") {
        if (flags.n >= 0) {
            reports.push_back(lhd::verify_lambda_vandermonde(flags.n, Exec::parallel));
        } else {
            for (int n = 1; n <= 4; ++n)
                reports.push_back(lhd::verify_lambda_vandermonde(n, Exec::parallel));
        }
    } else if (id == "det3-discrepancy") {
        reports.push_back(lhd::verify_det3_discrepancy());
    } else if (id == "schur-pfaffian") {
        for (int n : flags.n >= 0 ? std::vector<int>{flags.n} : std::vector<int>{2, 4, 6}) {
            std::vector<lhd::BigRational> xs;
            for (int i = 1; i <= n; ++i) xs.emplace_back(i);
            reports.push_back(lhd::verify_schur_pfaffian(xs));
        }
    } else if (id == "limit-to-cayley") {
        const bool single = flags.n >= 0 || flags.m >= 0;
        if (single && (flags.n < 0 || flags.m < 0))
            throw std::invalid_argument("limit-to-cayley needs both --n and --m, or neither");
        const std::vector<std::pair<int, int>> shapes =
            single ? std::vector<std::pair<int, int>>{{flags.n, flags.m}}
                   : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}};
        for (auto [n, m] : shapes)
            reports.push_back(lhd::verify_limit_to_cayley(n, m, 5, cfg.seed, Exec::parallel));
    } else if (id == "theorem-3-2") {
        MacdonaldEngine engine(cfg.degree_ceiling);
        configure_engine(engine, cfg);
        for (PhiConvention conv : conventions_for(flags.convention))
            for (const auto& [k, s, m] : points_for(flags))
                reports.push_back(lhd::verify_theorem_3_2(k, s, m, conv, engine,
                                                          Exec::parallel, cfg.budget_terms));
    } else if (id == "dyson-oracle") {
        MacdonaldEngine engine(cfg.degree_ceiling);
        configure_engine(engine, cfg);
        for (const auto& [k, s, m] : points_for(flags))
            reports.push_back(
                lhd::verify_dyson_oracle(k, s, m, engine, Exec::parallel, cfg.budget_terms));
    } else if (id == "matsumoto-limit") {
        MacdonaldEngine engine(cfg.degree_ceiling);
        configure_engine(engine, cfg);
        for (PhiConvention conv : conventions_for(flags.convention))
            for (const auto& [k, s, m] : points_for(flags))
                reports.push_back(lhd::verify_matsumoto_limit(k, s, m, conv, engine,
                                                              Exec::parallel, cfg.budget_terms));
    } else if (id == "macdonald-orthogonality") {
        MacdonaldEngine engine(cfg.degree_ceiling);
        configure_engine(engine, cfg);
        reports.push_back(lhd::verify_macdonald_orthogonality(6, engine));
    } else if (id == "macdonald-one-row") {
        MacdonaldEngine engine(cfg.degree_ceiling);
        configure_engine(engine, cfg);
        reports.push_back(lhd::verify_macdonald_one_row(6, engine));
    } else if (id == "macdonald-schur-degeneration") {
        MacdonaldEngine engine(cfg.degree_ceiling);
        configure_engine(engine, cfg);
        reports.push_back(lhd::verify_macdonald_schur_degeneration(5, engine));
    } else {
        throw std::invalid_argument(
            "unknown identity \"" + id +
            "\"; expected all, lambda-vandermonde, det3-discrepancy, schur-pfaffian, "
            "limit-to-cayley, theorem-3-2, dyson-oracle, matsumoto-limit, "
            "macdonald-orthogonality, macdonald-one-row, or macdonald-schur-degeneration");
    }
    return reports;
}

int run_verify(const Config& cfg, const VerifyFlags& flags) {
    std::vector<VerificationReport> reports;
    if (flags.identity == "all") {
        lhd::VerifyOptions opts;
        opts.seed = cfg.seed;
        opts.budget = cfg.budget_terms;
        opts.cache_dir = cfg.cache_dir;
        opts.exec = Exec::parallel;
        reports = lhd::run_all(opts);
    } else {
        reports = run_identity(cfg, flags);
    }
    if (cfg.json) {
        std::cout << lhd::reports_to_json(reports) << "\n";
    } else {
        for (const VerificationReport& r : reports) std::cout << r.to_text() << "\n";
    }
    for (const VerificationReport& r : reports)
        if (r.status == VerifyStatus::fail) return 1;
    return 0;
}

std::filesystem::path require_cache_dir(const Config& cfg) {
    if (cfg.cache_dir.empty())
        throw std::invalid_argument(
            "no cache directory configured; pass --cache-dir or set HYPERDET_CACHE_DIR");
    return std::filesystem::path(cfg.cache_dir);
}

/// The m values with a cache file under dir, in increasing order.
std::vector<int> cached_m_values(const std::filesystem::path& dir) {
    std::vector<int> ms;
    if (!std::filesystem::exists(dir)) return ms;
    const std::regex name_pattern("^macdonald_m([0-9]+)\\.json$");
    for (const auto& item : std::filesystem::directory_iterator(dir)) {
        std::smatch match;
        const std::string name = item.path().filename().string();
        if (std::regex_match(name, match, name_pattern)) ms.push_back(std::stoi(match[1]));
    }
    std::sort(ms.begin(), ms.end());
    return ms;
}

int run_cache_stat(const Config& cfg) {
    const auto dir = require_cache_dir(cfg);
    nlohmann::json files = nlohmann::json::array();
    for (int m : cached_m_values(dir)) {
        const auto path = dir / MacdonaldEngine::cache_file_name(m);
        nlohmann::json doc = lhd::read_json_file(path.string());
        nlohmann::json keys = nlohmann::json::array();
        if (doc.contains("entries") && doc["entries"].is_object())
            for (const auto& [key, unused] : doc["entries"].items()) keys.push_back(key);
        nlohmann::json file;
        file["m"] = m;
        file["keys"] = std::move(keys);
        files.push_back(std::move(file));
    }
    if (cfg.json) {
        nlohmann::json doc;
        doc["dir"] = dir.string();
        doc["files"] = std::move(files);
        std::cout << doc.dump(1) << "\n";
    } else if (files.empty()) {
        std::cout << "cache at " << dir.string() << ": empty\n";
    } else {
        std::cout << "cache at " << dir.string() << ":\n";
        for (const auto& file : files) {
            std::cout << "m=" << file["m"].get<int>() << ": " << file["keys"].size()
                      << (file["keys"].size() == 1 ? " entry\n" : " entries\n");
            for (const auto& key : file["keys"]) std::cout << "  " << key.get<std::string>() << "\n";
        }
    }
    return 0;
}

int run_cache_clear(const Config& cfg, int m) {
    const auto dir = require_cache_dir(cfg);
    int removed = 0;
    for (int present : cached_m_values(dir)) {
        if (m >= 0 && present != m) continue;
        std::filesystem::remove(dir / MacdonaldEngine::cache_file_name(present));
        ++removed;
    }
    std::cout << "removed " << removed << (removed == 1 ? " cache file\n" : " cache files\n");
    return 0;
}

int run_cache_export(const Config& cfg, int m) {
    const auto dir = require_cache_dir(cfg);
    const auto path = dir / MacdonaldEngine::cache_file_name(m);
    if (!std::filesystem::exists(path))
        throw std::invalid_argument("no cache file for m=" + std::to_string(m) + " at " +
                                    path.string());
    std::cout << lhd::read_json_file(path.string()).dump(1) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    try {
        cfg = lhd::config_from_env();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"Deformed determinants, hyperdeterminants, and rectangular Macdonald functions"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", cfg.json, "machine-readable output");
    app.add_option("--seed", cfg.seed, "seed for randomized verifications");
    app.add_option("--budget", cfg.budget_terms, "term budget for expanded sums");
    app.add_option("--cache-dir", cfg.cache_dir, "Macdonald disk cache directory");
    app.add_option("--degree-ceiling", cfg.degree_ceiling,
                   "largest symmetric-function degree the engine accepts");

    // asm count|list|stats --n N
    CLI::App* asm_cmd = app.add_subcommand("asm", "alternating sign matrices");
    asm_cmd->require_subcommand(1);
    asm_cmd->fallthrough();
    int asm_n = 0;
    CLI::App* asm_count = asm_cmd->add_subcommand("count", "count via the product formula");
    asm_count->fallthrough();
    asm_count->add_option("--n", asm_n, "matrix order")->required();
    CLI::App* asm_list = asm_cmd->add_subcommand("list", "enumerate all matrices");
    asm_list->fallthrough();
    asm_list->add_option("--n", asm_n, "matrix order")->required();
    CLI::App* asm_stats = asm_cmd->add_subcommand("stats", "tabulate i(X) and n(X)");
    asm_stats->fallthrough();
    asm_stats->add_option("--n", asm_n, "matrix order")->required();

    // det --lambda <value|sym> --input matrix.json
    CLI::App* det_cmd = app.add_subcommand("det", "deformed determinant of a square matrix");
    det_cmd->fallthrough();
    std::string det_lambda_text = "sym";
    std::string det_input;
    det_cmd->add_option("--lambda", det_lambda_text, "deformation value, or sym for q");
    det_cmd->add_option("--input,--matrix", det_input, "matrix JSON file")->required();

    // hyperdet --mode cayley|lambda --convention paper|proof --lambda ... --input ...
    CLI::App* hyper_cmd = app.add_subcommand("hyperdet", "hyperdeterminant of a hypermatrix");
    hyper_cmd->fallthrough();
    std::string hyper_mode = "cayley";
    std::string hyper_convention = "proof";
    std::string hyper_lambda = "sym";
    std::string hyper_input;
    hyper_cmd->add_option("--mode", hyper_mode, "cayley or lambda")
        ->check(CLI::IsMember({"cayley", "lambda"}));
    hyper_cmd->add_option("--convention", hyper_convention, "sign factor convention")
        ->check(CLI::IsMember({"paper", "proof"}));
    hyper_cmd->add_option("--lambda", hyper_lambda, "deformation value, or sym for q");
    hyper_cmd->add_option("--input", hyper_input, "hypermatrix JSON file")->required();

    // macdonald --partition 2,2 --m 2 [--basis p|m]
    CLI::App* mac_cmd =
        app.add_subcommand("macdonald", "rectangular-ready Macdonald Q in the p or m basis");
    mac_cmd->fallthrough();
    std::string mac_partition;
    int mac_m = 1;
    std::string mac_basis = "p";
    mac_cmd->add_option("--partition", mac_partition, "partition, e.g. 2,1")->required();
    mac_cmd->add_option("--m", mac_m, "exponent in t = q^m")->required();
    mac_cmd->add_option("--basis", mac_basis, "output basis")
        ->check(CLI::IsMember({"p", "m"}));

    // dyson --k --s --m
    CLI::App* dyson_cmd =
        app.add_subcommand("dyson", "constant-term extraction of the rectangular coefficient");
    dyson_cmd->fallthrough();
    int dyson_k = 0, dyson_s = 0, dyson_m = 0;
    dyson_cmd->add_option("--k", dyson_k, "rectangle width")->required();
    dyson_cmd->add_option("--s", dyson_s, "number of variables")->required();
    dyson_cmd->add_option("--m", dyson_m, "exponent in t = q^m")->required();

    // verify all|<identity> [--n --k --s --m --convention both|paper|proof]
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity harness");
    verify_cmd->fallthrough();
    VerifyFlags verify_flags;
    verify_cmd->add_option("identity", verify_flags.identity,
                           "all, or one identity name (see error text for the list)");
    verify_cmd->add_option("--n", verify_flags.n, "size parameter where applicable");
    verify_cmd->add_option("--k", verify_flags.k, "rectangle width");
    verify_cmd->add_option("--s", verify_flags.s, "number of rows");
    verify_cmd->add_option("--m", verify_flags.m, "exponent in t = q^m");
    verify_cmd->add_option("--convention", verify_flags.convention, "sign factor conventions")
        ->check(CLI::IsMember({"both", "paper", "proof"}));

    // cache stat|clear|export
    CLI::App* cache_cmd = app.add_subcommand("cache", "Macdonald disk cache administration");
    cache_cmd->require_subcommand(1);
    cache_cmd->fallthrough();
    CLI::App* cache_stat = cache_cmd->add_subcommand("stat", "list cached keys per m");
    cache_stat->fallthrough();
    int cache_m = -1;
    CLI::App* cache_clear = cache_cmd->add_subcommand("clear", "remove cache files");
    cache_clear->fallthrough();
    cache_clear->add_option("--m", cache_m, "only the file for this m");
    CLI::App* cache_export = cache_cmd->add_subcommand("export", "dump one cache file as JSON");
    cache_export->fallthrough();
    cache_export->add_option("--m", cache_m, "which cache file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cfg.validate();
        if (asm_count->parsed()) return run_asm_count(cfg, asm_n);
        if (asm_list->parsed()) return run_asm_list(cfg, asm_n);
        if (asm_stats->parsed()) return run_asm_stats(cfg, asm_n);
        if (det_cmd->parsed()) return run_det(cfg, det_input, det_lambda_text);
        if (hyper_cmd->parsed())
            return run_hyperdet(cfg, hyper_input, hyper_mode, hyper_convention, hyper_lambda);
        if (mac_cmd->parsed()) return run_macdonald(cfg, mac_partition, mac_m, mac_basis);
        if (dyson_cmd->parsed()) return run_dyson(cfg, dyson_k, dyson_s, dyson_m);
        if (verify_cmd->parsed()) return run_verify(cfg, verify_flags);
        if (cache_stat->parsed()) return run_cache_stat(cfg);
        if (cache_clear->parsed()) return run_cache_clear(cfg, cache_m);
        if (cache_export->parsed()) return run_cache_export(cfg, cache_m);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
