#include "qpart/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qpart::kernels {

namespace {

// One output coefficient of the Cauchy product.
void conv_coeff(std::span<const mpz_class> a, std::span<const mpz_class> b, mpz_class& out,
                long n) {
    out = 0;
    const long lo = std::max<long>(0, n - (static_cast<long>(b.size()) - 1));
    const long hi = std::min<long>(n, static_cast<long>(a.size()) - 1);
    for (long i = lo; i <= hi; ++i) {
        mpz_addmul(out.get_mpz_t(), a[static_cast<size_t>(i)].get_mpz_t(),
                   b[static_cast<size_t>(n - i)].get_mpz_t());
    }
}

}  // namespace

void convolve_serial(std::span<const mpz_class> a, std::span<const mpz_class> b,
                     std::span<mpz_class> out) {
    for (long n = 0; n < static_cast<long>(out.size()); ++n)
        conv_coeff(a, b, out[static_cast<size_t>(n)], n);
}

void convolve_parallel(std::span<const mpz_class> a, std::span<const mpz_class> b,
                       std::span<mpz_class> out) {
    const long m = static_cast<long>(out.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long n = 0; n < m; ++n) conv_coeff(a, b, out[static_cast<size_t>(n)], n);
}

void convolve(std::span<const mpz_class> a, std::span<const mpz_class> b,
              std::span<mpz_class> out) {
    // Below ~256 coefficients the fork/join overhead dominates.
    if (out.size() >= 256)
        convolve_parallel(a, b, out);
    else
        convolve_serial(a, b, out);
}

std::vector<int32_t> smallest_prime_factor_sieve(long limit) {
    if (limit < 0) throw std::invalid_argument("sieve limit must be >= 0");
    std::vector<int32_t> spf(static_cast<size_t>(limit) + 1, 0);
    for (long i = 2; i <= limit; ++i) {
        if (spf[static_cast<size_t>(i)] != 0) continue;
        for (long j = i; j <= limit; j += i)
            if (spf[static_cast<size_t>(j)] == 0) spf[static_cast<size_t>(j)] = static_cast<int32_t>(i);
    }
    return spf;
}

std::vector<mpz_class> multiplicative_values_serial(std::span<const mpz_class> local,
                                                    std::span<const int32_t> spf,
                                                    long limit) {
    std::vector<mpz_class> a(static_cast<size_t>(limit) + 1);
    if (limit >= 1) a[1] = 1;
    for (long n = 2; n <= limit; ++n) {
        const long p = spf[static_cast<size_t>(n)];
        long m = n, e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        a[static_cast<size_t>(n)] = local[static_cast<size_t>(e)] * a[static_cast<size_t>(m)];
    }
    return a;
}

std::vector<mpz_class> multiplicative_values_parallel(std::span<const mpz_class> local,
                                                      std::span<const int32_t> spf,
                                                      long limit) {
    std::vector<mpz_class> a(static_cast<size_t>(limit) + 1);
    if (limit >= 1) a[1] = 1;
    // a(n) = local[e] * a(n / p^e) only ever reads entries below n/2, so the
    // doubling blocks [B, 2B) have all dependencies resolved and each block
    // parallelizes internally. The head stays serial.
    const long head = std::min<long>(limit, 1 << 12);
    auto fill = [&](long n) {
        const long p = spf[static_cast<size_t>(n)];
        long m = n, e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        a[static_cast<size_t>(n)] = local[static_cast<size_t>(e)] * a[static_cast<size_t>(m)];
    };
    for (long n = 2; n <= head; ++n) fill(n);
    for (long block = head + 1; block <= limit; block = 2 * block) {
        const long hi = std::min(limit, 2 * block - 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long n = block; n <= hi; ++n) fill(n);
    }
    return a;
}

std::vector<mpz_class> multiplicative_values(std::span<const mpz_class> local,
                                             std::span<const int32_t> spf, long limit) {
    // Memory-bound at ~100ns/element: the threaded variant only pays off with
    // private caches to spare (see tools/bench), so the dispatcher stays serial.
    return multiplicative_values_serial(local, spf, limit);
}

}  // namespace qpart::kernels
