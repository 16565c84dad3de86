#pragma once

/**
 * @file macdonald.hpp
 * @brief Macdonald symmetric functions at t = q^m: P_lambda by Gram-Schmidt
 *        over the monomial basis, Q_lambda = b_lambda * P_lambda, and the
 *        one-row functions entering the hyperdeterminant identity, with an
 *        optional JSON disk cache for the Gram-Schmidt results.
 */

#include <map>
#include <mutex>
#include <set>
#include <string>

#include "lhd/symfun.hpp"

namespace lhd {

class MacdonaldEngine {
public:
    static constexpr int kDefaultDegreeCeiling = 8;

    explicit MacdonaldEngine(int degree_ceiling = kDefaultDegreeCeiling);

    int degree_ceiling() const { return ceiling_; }

    /// Enables the disk cache under dir (created if missing): one JSON file
    /// per m holding the P_lambda expansions; newly computed entries are
    /// written through.
    void attach_cache(const std::string& dir);
    const std::string& cache_dir() const { return cache_dir_; }

    /// P_lambda(q, q^m): monic on m_lambda, orthogonal under the t=q^m scalar
    /// product.  Power basis.  Throws when |lambda| exceeds the ceiling.
    SymFun P(const Partition& lambda, int m);

    /// <P_lambda, P_lambda> under scalar_product_qt.
    RationalFunction norm(const Partition& lambda, int m);

    /// Closed-form normalizer prod over cells of
    /// (1-q^{a+m(l+1)})/(1-q^{a+1+m*l}); Q_lambda = b_lambda * P_lambda.
    static RationalFunction b_lambda(const Partition& lambda, int m);

    SymFun Q(const Partition& lambda, int m);

    /// Coefficients of the one-row generating function: 0 for j < 0, 1 for
    /// j = 0, and for j > 0 the closed form
    /// sum over lambda of j: z_lambda^{-1} prod_i (1-q^{m*lambda_i})/(1-q^{lambda_i}) p_lambda,
    /// which equals Q((j), m).
    SymFun one_row_g(int j, int m);

    /// Keys (as partition strings) present in the in-memory store for m.
    std::set<std::string> cached_keys(int m);

    static std::string cache_file_name(int m);  // "macdonald_m2.json"

private:
    struct PerM {
        std::map<Partition, SymFun> p;  // power-basis P_lambda
        std::map<Partition, RationalFunction> norms;
        std::map<int, SymFun> g;
        bool disk_loaded = false;
    };

    int ceiling_;
    std::string cache_dir_;
    std::map<int, PerM> data_;
    std::mutex mu_;

    void ensure_weight_built(PerM& slot, int m, int d);
    void load_disk(PerM& slot, int m);
    void save_disk(const PerM& slot, int m) const;
};

}  // namespace lhd
