#include "disclab/sweep.hpp"

#include <atomic>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace disclab::sweep {

namespace {
constexpr std::size_t kChunk = 1024;
std::atomic<bool> g_force_serial{false};

double chunk_sum(std::size_t lo, std::size_t hi, const std::function<double(std::size_t)>& f) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += f(i);
    return s;
}

void merge_max(MaxResult& into, const MaxResult& r) {
    if (r.value > into.value || (r.value == into.value && r.index < into.index)) into = r;
}
}  // namespace

void set_force_serial(bool on) { g_force_serial.store(on); }
bool force_serial() { return g_force_serial.load(); }

bool parallel_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

MaxResult max_serial(std::size_t n, const std::function<double(std::size_t)>& f) {
    MaxResult best{-1e308, 0};
    for (std::size_t i = 0; i < n; ++i) merge_max(best, {f(i), i});
    return best;
}

double sum_serial(std::size_t n, const std::function<double(std::size_t)>& f) {
    // fixed chunking mirrors the parallel kernel exactly
    double total = 0.0;
    for (std::size_t lo = 0; lo < n; lo += kChunk) total += chunk_sum(lo, std::min(lo + kChunk, n), f);
    return total;
}

MaxResult max_parallel(std::size_t n, const std::function<double(std::size_t)>& f) {
#ifdef _OPENMP
    MaxResult best{-1e308, 0};
#pragma omp parallel
    {
        MaxResult local{-1e308, 0};
#pragma omp for schedule(dynamic, 256) nowait
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            merge_max(local, {f(static_cast<std::size_t>(i)), static_cast<std::size_t>(i)});
#pragma omp critical
        merge_max(best, local);
    }
    return best;
#else
    return max_serial(n, f);
#endif
}

double sum_parallel(std::size_t n, const std::function<double(std::size_t)>& f) {
#ifdef _OPENMP
    std::size_t chunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
        std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        partial[static_cast<std::size_t>(c)] = chunk_sum(lo, std::min(lo + kChunk, n), f);
    }
    double total = 0.0;
    for (double p : partial) total += p;  // ordered combine
    return total;
#else
    return sum_serial(n, f);
#endif
}

MaxResult max(std::size_t n, const std::function<double(std::size_t)>& f) {
    return force_serial() ? max_serial(n, f) : max_parallel(n, f);
}

double sum(std::size_t n, const std::function<double(std::size_t)>& f) {
    return force_serial() ? sum_serial(n, f) : sum_parallel(n, f);
}

void for_each(std::size_t n, const std::function<void(std::size_t)>& f) {
#ifdef _OPENMP
    if (!force_serial()) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) f(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace disclab::sweep
