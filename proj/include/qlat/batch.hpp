#pragma once

#include <cstddef>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qlat {

// Index-ordered batch map.  The OpenMP path and the serial reference path
// fill the same result slots, so outputs are identical by construction;
// tests compare them and the benchmark target times them against each
// other.  fn(i) must be independent of other items (all batch work in this
// library is: exact values, per-index RNG streams).
enum class BatchMode { serial, parallel };

#if defined(_OPENMP)
inline constexpr bool kHaveOpenMP = true;
#else
inline constexpr bool kHaveOpenMP = false;
#endif

template <class Fn>
auto batch_map(std::size_t count, Fn&& fn, BatchMode mode = BatchMode::parallel)
    -> std::vector<decltype(fn(std::size_t{0}))> {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(count);
#if defined(_OPENMP)
    if (mode == BatchMode::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        return out;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
}

}  // namespace qlat
