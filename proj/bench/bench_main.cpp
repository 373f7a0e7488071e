// Compares the OpenMP kernels against their serial reference
// implementations, checking that both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gg/approx.hpp"
#include "gg/covering.hpp"
#include "gg/haar.hpp"
#include "gg/lattice.hpp"

using namespace gg;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

template <typename F>
double time_ms(F&& f) {
    auto start = clock_type::now();
    f();
    auto stop = clock_type::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "results equal" : "MISMATCH");
    if (!equal) ++failures;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads: %d%s\n", threads, quick ? " (quick mode)" : "");
    std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "openmp", "speedup");

    {
        const std::int64_t n = quick ? 78125 : static_cast<std::int64_t>(pow5(8));
        LatticeShell a, b;
        double ts = time_ms([&] { a = enumerate_nu_serial(n, true); });
        double tp = time_ms([&] { b = enumerate_nu(n, true); });
        report("four-square enumeration", ts, tp, a.points == b.points);
    }

    {
        const std::size_t n = quick ? 20'000 : 2'000'000;
        std::vector<Psu2Point> a, b;
        double ts = time_ms([&] { a = sample_haar_serial(n, 1); });
        double tp = time_ms([&] { b = sample_haar(n, 1); });
        bool equal = a.size() == b.size();
        for (std::size_t i = 0; equal && i < a.size(); ++i) equal = a[i] == b[i];
        report("haar sampling", ts, tp, equal);
    }

    {
        PointSet ps = build_point_set(quick ? 3 : 6);
        const std::int64_t probes = quick ? 2000 : 50'000;
        double sres = 0, pres = 0;
        double ts = time_ms([&] { sres = max_min_distance_serial(ps, probes, 7); });
        double tp = time_ms(
            [&] { pres = covering_radius_estimate(ps, 6, probes, 7, false).probe_max; });
        report("covering probe sweep", ts, tp, sres == pres);
    }

    {
        GateSystem sys(GateSet::S, quick ? 4 : 7);
        const std::int64_t n = quick ? 2000 : 20'000;
        double sres = 0, pres = 0;
        double ts = time_ms([&] { sres = coverage_fraction_serial(sys, sys.t_max(), 0.2, n, 3); });
        double tp = time_ms([&] { pres = coverage_fraction(sys, sys.t_max(), 0.2, n, 3); });
        report("coverage fraction", ts, tp, sres == pres);
    }

    return failures == 0 ? 0 : 1;
}
