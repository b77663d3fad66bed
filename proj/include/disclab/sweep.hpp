#pragma once

#include <cstddef>
#include <functional>

// Grid-sweep kernels.  Every caller-supplied functor must be pure: sweeps may
// run the index space on several threads.  Sums use a fixed chunk decomposition
// with an ordered combine, so serial and parallel results are bit-identical
// and independent of the thread count.
namespace disclab::sweep {

struct MaxResult {
    double value = 0.0;
    std::size_t index = 0;
};

// serial reference kernels
MaxResult max_serial(std::size_t n, const std::function<double(std::size_t)>& f);
double sum_serial(std::size_t n, const std::function<double(std::size_t)>& f);

// OpenMP kernels (fall back to serial when OpenMP is unavailable)
MaxResult max_parallel(std::size_t n, const std::function<double(std::size_t)>& f);
double sum_parallel(std::size_t n, const std::function<double(std::size_t)>& f);

// dispatching kernels honoring force_serial()
MaxResult max(std::size_t n, const std::function<double(std::size_t)>& f);
double sum(std::size_t n, const std::function<double(std::size_t)>& f);

// parallel-for over the index space; the body must write disjoint state
void for_each(std::size_t n, const std::function<void(std::size_t)>& f);

void set_force_serial(bool on);
bool force_serial();
bool parallel_available();

}  // namespace disclab::sweep
