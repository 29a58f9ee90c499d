#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gjzeta {

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace detail {
// Captures the first exception thrown inside an OpenMP region so it can be
// rethrown on the calling thread (exceptions must not escape the region).
struct ExceptionGate {
    std::exception_ptr first;
    std::mutex mu;
    template <class F>
    void run(F&& f) {
        if (first) return;
        try {
            f();
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!first) first = std::current_exception();
        }
    }
    void rethrow() {
        if (first) std::rethrow_exception(first);
    }
};
} // namespace detail

// Chunked parallel reduction over [0, n).  Each worker owns an accumulator of
// type Acc; `body(acc, i)` folds item i into it and `merge(total, acc)`
// combines the per-worker results.  All accumulated values are exact, so the
// merge order does not affect the result; we still merge in worker order to
// keep reports byte-identical.
template <class Acc, class Body, class Merge>
void parallel_reduce(int64_t n, int threads, Acc& total, const Body& body, const Merge& merge) {
    if (n <= 0) return;
#ifdef _OPENMP
    if (threads > 1) {
        std::vector<Acc> partial(static_cast<size_t>(threads));
        detail::ExceptionGate gate;
#pragma omp parallel num_threads(threads)
        {
            const int tid = omp_get_thread_num();
            Acc& acc = partial[static_cast<size_t>(tid)];
#pragma omp for schedule(static)
            for (int64_t i = 0; i < n; ++i) gate.run([&] { body(acc, i); });
        }
        gate.rethrow();
        for (Acc& acc : partial) merge(total, acc);
        return;
    }
#else
    (void)threads;
#endif
    for (int64_t i = 0; i < n; ++i) body(total, i);
}

// Plain parallel for over [0, n); iterations must touch disjoint state.
template <class Body>
void parallel_for(int64_t n, int threads, const Body& body) {
#ifdef _OPENMP
    if (threads > 1) {
        detail::ExceptionGate gate;
#pragma omp parallel for num_threads(threads) schedule(static)
        for (int64_t i = 0; i < n; ++i) gate.run([&] { body(i); });
        gate.rethrow();
        return;
    }
#else
    (void)threads;
#endif
    for (int64_t i = 0; i < n; ++i) body(i);
}

} // namespace gjzeta
