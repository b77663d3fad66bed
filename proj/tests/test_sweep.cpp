#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "disclab/sweep.hpp"

using namespace disclab;

namespace {
// deterministic quasi-random fill
std::vector<double> fill(std::size_t n) {
    std::vector<double> v(n);
    std::uint64_t s = 0x243f6a8885a308d3ull;
    for (std::size_t i = 0; i < n; ++i) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        v[i] = static_cast<double>(s >> 11) * 0x1.0p-53 - 0.5;
    }
    return v;
}
}  // namespace

TEST_CASE("parallel and serial sums are bit-identical") {
    auto v = fill(100000);
    auto f = [&](std::size_t i) { return std::sin(v[i]) * (1.0 + v[i] * v[i]); };
    double s_ser = sweep::sum_serial(v.size(), f);
    double s_par = sweep::sum_parallel(v.size(), f);
    CHECK(s_ser == s_par);  // exact: same chunking, ordered combine

    sweep::set_force_serial(true);
    double s_forced = sweep::sum(v.size(), f);
    sweep::set_force_serial(false);
    double s_default = sweep::sum(v.size(), f);
    CHECK(s_forced == s_ser);
    CHECK(s_default == s_ser);
}

TEST_CASE("parallel and serial maxima agree including the winning index") {
    auto v = fill(65537);
    auto f = [&](std::size_t i) { return v[i]; };
    auto ser = sweep::max_serial(v.size(), f);
    auto par = sweep::max_parallel(v.size(), f);
    CHECK(ser.value == par.value);
    CHECK(ser.index == par.index);
}

TEST_CASE("ties resolve to the lowest index in both kernels") {
    std::vector<double> v(10000, 0.0);
    v[137] = v[4099] = v[9998] = 7.5;
    auto f = [&](std::size_t i) { return v[i]; };
    CHECK(sweep::max_serial(v.size(), f).index == 137);
    CHECK(sweep::max_parallel(v.size(), f).index == 137);
}

TEST_CASE("empty sweeps are benign") {
    auto f = [](std::size_t) { return 1.0; };
    CHECK(sweep::sum(0, f) == 0.0);
    CHECK(sweep::max(0, f).value < -1e307);
}

TEST_CASE("for_each touches every index exactly once") {
    const std::size_t n = 50000;
    std::vector<int> hits(n, 0);
    sweep::for_each(n, [&](std::size_t i) { hits[i] += 1; });
    for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(hits[i] == 1);
    }
}

TEST_CASE("force_serial round-trips") {
    bool before = sweep::force_serial();
    sweep::set_force_serial(true);
    CHECK(sweep::force_serial());
    sweep::set_force_serial(false);
    CHECK(!sweep::force_serial());
    sweep::set_force_serial(before);
}
