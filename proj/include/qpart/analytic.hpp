#pragma once

#include <string>

namespace qpart {

/// theta(t)  = 1 + 2 sum_{n>=1} exp(-n^2 pi t)
/// theta4(t) = 1 + 2 sum_{n>=1} (-1)^n exp(-n^2 pi t)
/// Both are evaluated through their modular transformation for t < 1 so the
/// term count stays small at uniform precision.
double theta_value(double t, const std::string& variant);

/// Plain term-by-term summation with no modular transform. Slower near 0 but
/// independent of the transform, so residual checks against theta_value stay
/// meaningful.
double theta_direct_sum(double t, const std::string& variant);

/// Dirichlet eta(s) = sum (-1)^(n+1) n^(-s) by accelerated alternating
/// summation (Cohen-Rodriguez Villegas-Zagier).
double dirichlet_eta(double s);

struct MellinCheckResult {
    double s = 0;
    double lhs = 0;  // split quadrature of the transform of theta4
    double rhs = 0;  // -2 pi^(-s/2) Gamma(s/2) eta(s) + 2/s
    double abs_err = 0;
};

/// Quadrature tolerance is exposed so the stability-under-refinement
/// invariant can be exercised.
MellinCheckResult mellin_theta4(double s, double quad_tol = 1e-9);

struct HyperbolicCheckResult {
    double exact_residual = 0;    // 2cosh(t/2) - sinh(t)/sinh(t/2)
    double product_residual = 0;  // 2cosh(t/2) vs K-term product over odd modes
};

HyperbolicCheckResult hyperbolic_product_check(double t, long terms);

struct ParastatCheckResult {
    double z_half = 0;        // direct sum of exp(-t(2n+1/2))
    double z_three_half = 0;  // direct sum of exp(-t(2n+3/2))
    double closed_residual = 0;      // vs x^(1/2)/(1-x)
    double factorized_residual = 0;  // vs Z_B(2beta) * Z_F(beta)
    double max_residual = 0;
};

ParastatCheckResult parastat_half_check(double t);

struct HagisCheckResult {
    double empirical = 0;        // ln p(n,s) / sqrt(n), exact count underneath
    double conjectured_rate = 0; // pi sqrt(2s/(3(1+s)))
    double classical_rate = 0;   // pi sqrt(2(s-1)/(3s)), the Hardy-Ramanujan shape
};

/// Growth rate of partitions with every multiplicity at most s-1, against two
/// closed-form candidate constants. Asserts nothing about which one is right.
HagisCheckResult hagis_check(long s, long n);

}  // namespace qpart
