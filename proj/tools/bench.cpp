// Compares the OpenMP kernels against the serial reference on synthetic
// workloads: exact matrix products and Smith elimination.
#include <chrono>
#include <cstdio>

#include <omp.h>

#include "cforge/smith.hpp"

using namespace cforge;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

IntMatrix random_matrix(Rng& rng, std::size_t n, long lo, long hi) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.uniform(lo, hi);
    return a;
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());

    {
        Rng rng(42);
        IntMatrix a = random_matrix(rng, 192, -1000000, 1000000);
        IntMatrix b = random_matrix(rng, 192, -1000000, 1000000);
        auto t0 = std::chrono::steady_clock::now();
        IntMatrix c1 = serial::multiply(a, b);
        double ts = seconds(t0);
        t0 = std::chrono::steady_clock::now();
        IntMatrix c2 = multiply(a, b);
        double tp = seconds(t0);
        std::printf("matmul 192x192:   serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n", ts, tp,
                    ts / tp, c1 == c2 ? "match" : "MISMATCH");
    }

    {
        Rng rng(43);
        IntMatrix a = random_matrix(rng, 120, -9, 9);
        auto t0 = std::chrono::steady_clock::now();
        auto s1 = serial::smith_normal_form(a);
        double ts = seconds(t0);
        t0 = std::chrono::steady_clock::now();
        auto s2 = smith_normal_form(a);
        double tp = seconds(t0);
        std::printf("smith 120x120:    serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n", ts, tp,
                    ts / tp, s1.s == s2.s && s1.u == s2.u ? "match" : "MISMATCH");
    }

    return 0;
}
