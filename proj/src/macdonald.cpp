#include "lhd/macdonald.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace lhd {

namespace {

RationalFunction one_minus_q_pow(long k) { return qpochhammer(k, 1); }

}  // namespace

MacdonaldEngine::MacdonaldEngine(int degree_ceiling) : ceiling_(degree_ceiling) {
    if (degree_ceiling < 1)
        throw std::invalid_argument("MacdonaldEngine: degree ceiling must be >= 1");
}

void MacdonaldEngine::attach_cache(const std::string& dir) {
    std::lock_guard<std::mutex> lock(mu_);
    std::filesystem::create_directories(dir);
    cache_dir_ = dir;
    for (auto& [m, slot] : data_) slot.disk_loaded = false;  // re-read under the new dir
}

std::string MacdonaldEngine::cache_file_name(int m) {
    return "macdonald_m" + std::to_string(m) + ".json";
}

void MacdonaldEngine::load_disk(PerM& slot, int m) {
    slot.disk_loaded = true;
    if (cache_dir_.empty()) return;
    const auto path = std::filesystem::path(cache_dir_) / cache_file_name(m);
    std::ifstream in(path);
    if (!in) return;
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception&) {
        return;  // unreadable cache is treated as cold
    }
    if (!doc.is_object() || doc.value("m", -1) != m || doc.value("basis", "") != "p") return;
    if (!doc.contains("entries") || !doc["entries"].is_object()) return;
    for (const auto& [key, expansion] : doc["entries"].items()) {
        try {
            const Partition lam = Partition::parse(key);
            SymFun::CoeffMap coeffs;
            for (const auto& [pkey, text] : expansion.items())
                coeffs.emplace(Partition::parse(pkey),
                               RationalFunction::parse(text.get<std::string>()));
            slot.p.emplace(lam, SymFun(SymBasis::power, std::move(coeffs)));
        } catch (const std::exception&) {
            // Skip malformed entries; they will be recomputed and rewritten.
        }
    }
}

void MacdonaldEngine::save_disk(const PerM& slot, int m) const {
    if (cache_dir_.empty()) return;
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [lam, f] : slot.p) {
        nlohmann::json expansion = nlohmann::json::object();
        for (const auto& [mu, c] : f.coefficients()) expansion[mu.to_string()] = c.to_string();
        entries[lam.to_string()] = std::move(expansion);
    }
    nlohmann::json doc = {{"m", m}, {"basis", "p"}, {"entries", std::move(entries)}};
    const auto path = std::filesystem::path(cache_dir_) / cache_file_name(m);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("MacdonaldEngine: cannot write cache file " + path.string());
    out << doc.dump(1) << "\n";
}

void MacdonaldEngine::ensure_weight_built(PerM& slot, int m, int d) {
    const auto parts = partitions_of(d);
    bool computed_something = false;
    for (const Partition& nu : parts) {
        if (slot.p.count(nu)) continue;
        // Gram-Schmidt against everything earlier in the (dominance-refining)
        // order; predecessors are guaranteed present by the iteration order.
        SymFun candidate = SymFun::basis_element(SymBasis::monomial, nu).to_basis(SymBasis::power);
        for (const Partition& mu : parts) {
            if (!(mu < nu)) break;
            const SymFun& prev = slot.p.at(mu);
            auto nit = slot.norms.find(mu);
            if (nit == slot.norms.end())
                nit = slot.norms.emplace(mu, scalar_product_qt(prev, prev, m)).first;
            const RationalFunction c = scalar_product_qt(candidate, prev, m) / nit->second;
            if (!(c == RationalFunction::zero())) candidate = candidate - prev.scaled(c);
        }
        slot.p.emplace(nu, std::move(candidate));
        computed_something = true;
    }
    if (computed_something) save_disk(slot, m);
}

SymFun MacdonaldEngine::P(const Partition& lambda, int m) {
    if (m < 1) throw std::invalid_argument("MacdonaldEngine::P: m must be positive");
    if (lambda.weight() > ceiling_)
        throw std::invalid_argument("MacdonaldEngine::P: weight " + std::to_string(lambda.weight()) +
                                    " exceeds the degree ceiling " + std::to_string(ceiling_));
    std::lock_guard<std::mutex> lock(mu_);
    PerM& slot = data_[m];
    if (!slot.disk_loaded) load_disk(slot, m);
    auto it = slot.p.find(lambda);
    if (it == slot.p.end()) {
        ensure_weight_built(slot, m, lambda.weight());
        it = slot.p.find(lambda);
    }
    return it->second;
}

RationalFunction MacdonaldEngine::norm(const Partition& lambda, int m) {
    const SymFun p = P(lambda, m);
    std::lock_guard<std::mutex> lock(mu_);
    PerM& slot = data_[m];
    auto it = slot.norms.find(lambda);
    if (it == slot.norms.end())
        it = slot.norms.emplace(lambda, scalar_product_qt(p, p, m)).first;
    return it->second;
}

RationalFunction MacdonaldEngine::b_lambda(const Partition& lambda, int m) {
    if (m < 1) throw std::invalid_argument("MacdonaldEngine::b_lambda: m must be positive");
    RationalFunction acc = RationalFunction::one();
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) {
            const long a = lambda.arm(i, j);
            const long l = lambda.leg(i, j);
            acc = acc * one_minus_q_pow(a + m * (l + 1)) / one_minus_q_pow(a + 1 + m * l);
        }
    return acc;
}

SymFun MacdonaldEngine::Q(const Partition& lambda, int m) {
    return P(lambda, m).scaled(b_lambda(lambda, m));
}

SymFun MacdonaldEngine::one_row_g(int j, int m) {
    if (m < 1) throw std::invalid_argument("MacdonaldEngine::one_row_g: m must be positive");
    if (j < 0) return SymFun::zero();
    if (j == 0) return SymFun::one();
    std::lock_guard<std::mutex> lock(mu_);
    PerM& slot = data_[m];
    auto it = slot.g.find(j);
    if (it == slot.g.end()) {
        SymFun::CoeffMap coeffs;
        for (const Partition& lam : partitions_of(j)) {
            RationalFunction c(BigRational(BigInt(1), lam.z()));
            for (int part : lam.parts())
                c = c * one_minus_q_pow(static_cast<long>(m) * part) / one_minus_q_pow(part);
            coeffs.emplace(lam, std::move(c));
        }
        it = slot.g.emplace(j, SymFun(SymBasis::power, std::move(coeffs))).first;
    }
    return it->second;
}

std::set<std::string> MacdonaldEngine::cached_keys(int m) {
    std::lock_guard<std::mutex> lock(mu_);
    PerM& slot = data_[m];
    if (!slot.disk_loaded) load_disk(slot, m);
    std::set<std::string> keys;
    for (const auto& [lam, f] : slot.p) keys.insert(lam.to_string());
    return keys;
}

}  // namespace lhd
