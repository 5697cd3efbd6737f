// Microbenchmark comparing the serial reference kernels with their OpenMP
// counterparts: bigint series convolution and multiplicative coefficient
// assembly. Results must agree exactly; only the timing differs.

#include <chrono>
#include <cstdio>
#include <vector>

#include "qpart/dirichlet.hpp"
#include "qpart/kernels.hpp"
#include "qpart/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Partition-number coefficients grow to hundreds of bits, a realistic load.
std::vector<mpz_class> sample_series(long order) {
    const qpart::Series s = qpart::expand_product({{-1, 1, 0, -1}}, order);
    return {s.coeffs().begin(), s.coeffs().end()};
}

void bench_convolution(long order, int reps) {
    const std::vector<mpz_class> a = sample_series(order);
    std::vector<mpz_class> out_s(a.size()), out_p(a.size());

    auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) qpart::kernels::convolve_serial(a, a, out_s);
    const double ts = seconds_since(t0) / reps;

    t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) qpart::kernels::convolve_parallel(a, a, out_p);
    const double tp = seconds_since(t0) / reps;

    bool equal = out_s == out_p;
    std::printf("convolve       N=%-6ld serial %8.2f ms   parallel %8.2f ms   speedup %.2fx  %s\n",
                order, ts * 1e3, tp * 1e3, ts / tp, equal ? "exact-match" : "MISMATCH");
}

void bench_multiplicative(long limit, int reps) {
    // 2^nu(n) local factor: the overpartition analogue on the Dirichlet side.
    const qpart::EulerProductSpec spec{{{1, 2}, {2, -1}}};
    long lmax = 0;
    while ((1L << (lmax + 1)) <= limit) ++lmax;
    const std::vector<mpz_class> local = qpart::local_factor_coeffs(spec, lmax);
    const std::vector<int32_t> spf = qpart::kernels::smallest_prime_factor_sieve(limit);

    auto t0 = std::chrono::steady_clock::now();
    std::vector<mpz_class> a;
    for (int r = 0; r < reps; ++r)
        a = qpart::kernels::multiplicative_values_serial(local, spf, limit);
    const double ts = seconds_since(t0) / reps;

    t0 = std::chrono::steady_clock::now();
    std::vector<mpz_class> b;
    for (int r = 0; r < reps; ++r)
        b = qpart::kernels::multiplicative_values_parallel(local, spf, limit);
    const double tp = seconds_since(t0) / reps;

    std::printf("multiplicative N=%-6ld serial %8.2f ms   parallel %8.2f ms   speedup %.2fx  %s\n",
                limit, ts * 1e3, tp * 1e3, ts / tp, a == b ? "exact-match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel variants run serially\n");
#endif
    for (long order : {256L, 512L, 1024L, 2048L}) bench_convolution(order, order <= 512 ? 5 : 2);
    for (long limit : {100000L, 1000000L}) bench_multiplicative(limit, 3);
    return 0;
}
