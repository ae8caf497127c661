// Benchmark: serial reference sweep vs the parallel kernel, with an
// agreement check on the aggregated reports.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "cyc/harness.hpp"

using namespace cyc;

namespace {

double run_once(u64 n_max, ClassifyMode mode, int threads, SweepReport& rep) {
    auto t0 = std::chrono::steady_clock::now();
    rep = sweep_theorem(SweepConfig{n_max, mode, {}, threads});
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    u64 n_max = argc > 1 ? std::stoull(argv[1]) : 14;
    int reps = argc > 2 ? std::atoi(argv[2]) : 3;

    for (ClassifyMode mode : {ClassifyMode::Main, ClassifyMode::Aux}) {
        const char* name = mode == ClassifyMode::Main ? "main" : "aux";
        double serial_best = 1e300, parallel_best = 1e300;
        SweepReport serial_rep, parallel_rep;
        for (int r = 0; r < reps; ++r) {
            SweepReport rep;
            serial_best = std::min(serial_best, run_once(n_max, mode, 1, rep));
            if (r == 0) serial_rep = rep;
            parallel_best =
                std::min(parallel_best, run_once(n_max, mode, 0, rep));
            if (r == 0) parallel_rep = rep;
        }
        bool agree = serial_rep.to_json() == parallel_rep.to_json();
        std::cout << "mode=" << name << " n_max=" << n_max
                  << " serial_ms=" << serial_best
                  << " parallel_ms=" << parallel_best
                  << " speedup=" << serial_best / parallel_best
                  << " agree=" << (agree ? "yes" : "NO") << "\n";
        if (!agree) return 1;
    }
    return 0;
}
