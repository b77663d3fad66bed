// Benchmark of the parallel grid sweeps against the serial reference path.
// Both paths use the same chunked accumulation order, so results must agree
// bit for bit; the benchmark asserts that while timing both.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "disclab/gallery.hpp"
#include "disclab/measures.hpp"
#include "disclab/sweep.hpp"

using namespace disclab;

namespace {

double time_best_of(int reps, const std::function<double()>& run, double* result) {
    double best = 1e308;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        *result = run();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void bench(const char* label, std::size_t n, const std::function<double(std::size_t)>& kernel,
           bool use_sum) {
    double serial_v = 0.0, parallel_v = 0.0;

    sweep::set_force_serial(true);
    double ts = time_best_of(3, [&] { return use_sum ? sweep::sum(n, kernel) : sweep::max(n, kernel).value; },
                             &serial_v);
    sweep::set_force_serial(false);
    double tp = time_best_of(3, [&] { return use_sum ? sweep::sum(n, kernel) : sweep::max(n, kernel).value; },
                             &parallel_v);

    bool identical = serial_v == parallel_v;  // bitwise, by design
    std::printf("%-28s n=%8zu  serial %8.1f ms  parallel %8.1f ms  speedup %5.2fx  %s\n", label, n,
                ts * 1e3, tp * 1e3, ts / tp, identical ? "bit-identical" : "MISMATCH");
    if (!identical) std::exit(1);
}

}  // namespace

int main() {
    std::printf("parallel sweeps %s\n\n", sweep::parallel_available() ? "enabled" : "unavailable (serial only)");

    GalleryEntry e = gallery_entry("legendre");
    SampleGrid grid = make_grid(256, 512, 0.9, RadialScheme::boundary_refined);

    // residual sweep: the kernel behind every grid verification
    bench("residual max", grid.nodes.size(),
          [&](std::size_t i) {
              cplx z = grid.nodes[i].z;
              Jet j = e.f1->jet(z, 2);
              return std::abs(j[2] + e.A->value(z) * j[0]) / (1.0 + std::abs(j[0]));
          },
          /*use_sum=*/false);

    // kernel-mass sweep: one fixed test point of the Carleson profile
    cplx a(0.35, -0.2);
    DensityMeasure mu = coefficient_density(e.A);
    bench("kernel-mass sum", grid.nodes.size(),
          [&](std::size_t i) {
              cplx z = grid.nodes[i].z;
              double ker = (1.0 - std::norm(a)) / std::norm(cplx(1.0) - std::conj(a) * z);
              return grid.nodes[i].weight * ker * mu.density(z);
          },
          /*use_sum=*/true);

    // weighted-growth sweep over a heavier closed form
    GalleryEntry t = gallery_entry("thm1_ii", 0.25);
    bench("weighted growth max", grid.nodes.size(),
          [&](std::size_t i) {
              cplx z = grid.nodes[i].z;
              double w = 1.0 - std::norm(z);
              return std::abs(t.A->value(z)) * w * w;
          },
          /*use_sum=*/false);
    return 0;
}
