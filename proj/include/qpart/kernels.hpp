#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

// Low-level data-parallel kernels. Each kernel ships in two variants: a plain
// serial reference and an OpenMP version. Results are bit-identical (exact
// integer arithmetic); the test suite checks the pair against each other and
// tools/bench compares their throughput.

namespace qpart::kernels {

/// out[n] = sum_{i+j=n} a[i]*b[j] for n < out.size().
void convolve_serial(std::span<const mpz_class> a, std::span<const mpz_class> b,
                     std::span<mpz_class> out);
void convolve_parallel(std::span<const mpz_class> a, std::span<const mpz_class> b,
                       std::span<mpz_class> out);
/// Dispatches to the parallel variant for large inputs.
void convolve(std::span<const mpz_class> a, std::span<const mpz_class> b,
              std::span<mpz_class> out);

/// Smallest-prime-factor table for 0..limit (spf[0] = spf[1] = 0).
std::vector<int32_t> smallest_prime_factor_sieve(long limit);

/// Values a(1..limit) of the multiplicative function whose value on every
/// prime power p^j is local[j] (the same local expansion at every prime).
/// Both variants memoize a(n) = local[e] * a(n / p^e); the parallel one
/// processes doubling blocks [B, 2B) whose dependencies all lie below B.
std::vector<mpz_class> multiplicative_values_serial(std::span<const mpz_class> local,
                                                    std::span<const int32_t> spf,
                                                    long limit);
std::vector<mpz_class> multiplicative_values_parallel(std::span<const mpz_class> local,
                                                      std::span<const int32_t> spf,
                                                      long limit);
std::vector<mpz_class> multiplicative_values(std::span<const mpz_class> local,
                                             std::span<const int32_t> spf, long limit);

}  // namespace qpart::kernels
