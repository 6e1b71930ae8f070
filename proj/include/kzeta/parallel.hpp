#pragma once

#include <cstddef>
#include <vector>

#include <omp.h>

namespace kzeta {

// Execution policy for the data-parallel kernels.  Every parallel kernel
// has a serial twin (policy Serial) that the tests compare against, and
// results are bitwise identical across thread counts: terms are written to
// per-index slots and reduced in a fixed serial order.
enum class Exec { Serial, Parallel };

inline int default_threads() {
    const char* env = std::getenv("KZETA_THREADS");
    if (env) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

// Deterministic indexed sum: out = sum_{i<n} term(i), accumulated in index
// order regardless of the execution policy.
template <class T, class F>
T indexed_sum(std::size_t n, F&& term, Exec exec = Exec::Parallel) {
    std::vector<T> slot(n);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(default_threads())
        for (long long i = 0; i < (long long)n; ++i) slot[i] = term((std::size_t)i);
    } else {
        for (std::size_t i = 0; i < n; ++i) slot[i] = term(i);
    }
    T acc{};
    for (std::size_t i = 0; i < n; ++i) acc += slot[i];
    return acc;
}

template <class F>
void indexed_for(std::size_t n, F&& body, Exec exec = Exec::Parallel) {
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(default_threads())
        for (long long i = 0; i < (long long)n; ++i) body((std::size_t)i);
    } else {
        for (std::size_t i = 0; i < n; ++i) body(i);
    }
}

}  // namespace kzeta
