#pragma once

/**
 * @file parallel.hpp
 * @brief OpenMP exact-reduction helper plus the serial reference path.
 *
 * Every combinatorial kernel in this library is a sum of independent terms
 * in an exact commutative ring, so the parallel and serial paths must agree
 * bit for bit.  The serial path is kept as the reference implementation and
 * the tests compare the two.
 */

#include <cstdint>
#include <exception>

namespace lhd {

enum class Exec { serial, parallel };

/// Default ceiling on the number of terms an expansion kernel may produce
/// (hyperdeterminant tuple sums, the Dyson product F).  Overridable per call
/// and, through the CLI, by --budget / HYPERDET_BUDGET.
inline constexpr std::int64_t kDefaultTermBudget = 10'000'000;

/// Sums term(i) for i in [0, count) into zero + ....  TermFn must be pure.
/// Exceptions thrown by term() are captured inside the parallel region and
/// rethrown on the calling thread (OpenMP regions must not leak them).
template <class R, class TermFn>
R sum_terms(std::int64_t count, Exec exec, const R& zero, TermFn&& term) {
    if (exec == Exec::serial || count < 64) {
        R acc = zero;
        for (std::int64_t i = 0; i < count; ++i) acc = acc + term(i);
        return acc;
    }
    R acc = zero;
    std::exception_ptr failure;
#pragma omp parallel default(shared)
    {
        R local = zero;
        std::exception_ptr local_failure;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t i = 0; i < count; ++i) {
            if (local_failure) continue;
            try {
                local = local + term(i);
            } catch (...) {
                local_failure = std::current_exception();
            }
        }
#pragma omp critical
        {
            if (local_failure && !failure) failure = local_failure;
            acc = acc + local;
        }
    }
    if (failure) std::rethrow_exception(failure);
    return acc;
}

}  // namespace lhd
