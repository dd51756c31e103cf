// Timing comparison of the parallel enumeration kernels against the serial
// reference implementations. Usage: qform_bench [n_scale]
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "qf/automorphs.hpp"
#include "qf/representations.hpp"
#include "qf/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qf;

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double timed(F&& fn) {
    double t0 = now_seconds();
    fn();
    return now_seconds() - t0;
}

}  // namespace

int main(int argc, char** argv) {
    i64 scale = argc > 1 ? std::atoll(argv[1]) : 4000;
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled\n");
#endif

    TernaryForm q{4, 4, 5, 0, -4, 0};
    i64 parallel_count = 0, serial_count = 0;
    double tp = timed([&] {
        for (i64 n = scale; n < scale + 8; ++n)
            parallel_count += representation_count(q, n);
    });
    double ts = timed([&] {
        for (i64 n = scale; n < scale + 8; ++n)
            serial_count += static_cast<i64>(reference::representations_serial(q, n).vectors.size());
    });
    if (parallel_count != serial_count) {
        std::fprintf(stderr, "representation kernels disagree: %lld vs %lld\n",
                     static_cast<long long>(parallel_count), static_cast<long long>(serial_count));
        return 1;
    }
    std::printf("representations around n=%lld: parallel %.3fs, serial reference %.3fs (%.2fx)\n",
                static_cast<long long>(scale), tp, ts, ts / tp);

    TernaryForm big{4, 4, 4, 4, 4, 4};
    i64 u1 = 0, u2 = 0;
    double ta = timed([&] { u1 = automorphisms(big).proper_count; });
    double tb = timed([&] { u2 = reference::automorphisms_serial(big).proper_count; });
    if (u1 != u2) {
        std::fprintf(stderr, "automorphism kernels disagree\n");
        return 1;
    }
    std::printf("automorphisms of %s: parallel %.4fs, serial reference %.4fs\n", big.str().c_str(),
                ta, tb);

    double tsweep = timed([&] { sweep(std::min<i64>(scale / 4, 1500)); });
    std::printf("sweep: %.3fs\n", tsweep);
    return 0;
}
