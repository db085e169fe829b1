// Benchmark: serial reference sweep engine vs the OpenMP-parallel one.
//
// Also asserts the two engines agree cell-for-cell, since speed without
// identical reports is worthless here.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spikegate/report.hpp"
#include "spikegate/sweep.hpp"

using namespace spikegate;

namespace {

double time_ms(const SweepConfig& config, bool serial, SweepReport* out) {
    const auto start = std::chrono::steady_clock::now();
    SweepReport report = serial ? run_sweep_serial(config) : run_sweep(config);
    const auto stop = std::chrono::steady_clock::now();
    if (out) {
        *out = std::move(report);
    }
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    SweepConfig config;
    config.runs = argc > 1 ? std::atoi(argv[1]) : 400;

    SweepReport reference;
    const double serial_ms = time_ms(config, true, &reference);
    std::printf("serial reference: %8.1f ms  (%d runs)\n", serial_ms,
                config.runs);

#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    for (int threads = 1; threads <= max_threads; threads *= 2) {
        config.threads = threads;
        SweepReport report;
        const double parallel_ms = time_ms(config, false, &report);
        const bool identical =
            render_csv(report, SweepMetric::Probability) ==
                render_csv(reference, SweepMetric::Probability) &&
            render_csv(report, SweepMetric::L1Mean) ==
                render_csv(reference, SweepMetric::L1Mean) &&
            render_csv(report, SweepMetric::L1Std) ==
                render_csv(reference, SweepMetric::L1Std);
        std::printf("omp %2d thread%s: %8.1f ms  speedup %5.2fx  %s\n", threads,
                    threads == 1 ? " " : "s", parallel_ms,
                    serial_ms / parallel_ms,
                    identical ? "reports identical" : "REPORTS DIFFER");
        if (!identical) {
            return 1;
        }
    }
    return 0;
}
