#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpart/partitions.hpp"

namespace qpart {

/// Formal product prod_i zeta(m_i * t)^(e_i), the Euler-product side of every
/// Dirichlet claim. Multipliers are positive, exponents nonzero.
struct EulerProductSpec {
    std::vector<std::pair<long, long>> factors;  // (multiplier m, exponent e)
};

/// a(1..limit) of a Dirichlet series, exact integers. values[0] is unused.
struct ArithmeticSequence {
    long limit = 0;
    std::vector<mpz_class> values;
    const mpz_class& at(long n) const { return values[static_cast<size_t>(n)]; }
};

/// Trial-division factorization, primes ascending. 1 <= n <= 10^7.
std::vector<std::pair<long, long>> factorize(long n);

/// Coefficients of the local Euler factor prod_i (1 - y^(m_i))^(-e_i), which
/// is the same power series at every prime, up to y^order.
std::vector<mpz_class> local_factor_coeffs(const EulerProductSpec& spec, long order);

/// Dirichlet coefficients of the spec up to limit, assembled multiplicatively
/// from the local factor over the factorization of every n.
ArithmeticSequence zeta_quotient_coeffs(const EulerProductSpec& spec, long limit);

/// Direct arithmetic functions. Function ids:
///   mobius, liouville, nu, two_nu, tau, squarefree,
///   squarefree_divisor_count, unitary_divisor_count, divisor_q_sum,
///   q_s, mu_s, nu_s, two_nu_s_lambda, a_plus, a_minus  (these need s)
mpz_class arith_value(const std::string& fn, long n, std::optional<long> s = std::nullopt);
std::vector<std::string> arith_function_names();

/// A verifiable coefficient claim: one Euler-product spec against one direct
/// arithmetic evaluation.
struct DirichletClaim {
    std::string id;
    std::string description;
    bool needs_s = false;
    std::vector<long> default_s;  // instances exercised by verify-all
};

std::vector<DirichletClaim> dirichlet_claims();

/// Compare the spec-derived coefficients with the direct evaluation for every
/// n <= limit. Throws for unknown ids or missing/invalid s.
Verdict verify_dirichlet(const std::string& id, long limit,
                         std::optional<long> s = std::nullopt);

/// The spec and direct function behind a claim id (exposed for tests).
EulerProductSpec claim_spec(const std::string& id, std::optional<long> s);
mpz_class claim_direct_value(const std::string& id, long n, std::optional<long> s);

}  // namespace qpart
