#include "qpart/analytic.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "qpart/constraints.hpp"
#include "qpart/partitions.hpp"

namespace qpart {

namespace {

constexpr double kPi = std::numbers::pi;

double theta_direct(double t) {
    double s = 0;
    for (long n = 1;; ++n) {
        const double term = std::exp(-static_cast<double>(n) * n * kPi * t);
        s += term;
        if (term < 1e-20) break;
    }
    return 1 + 2 * s;
}

double theta4_direct(double t) {
    double s = 0;
    int sign = -1;
    for (long n = 1;; ++n) {
        const double term = std::exp(-static_cast<double>(n) * n * kPi * t);
        s += sign * term;
        sign = -sign;
        if (term < 1e-20) break;
    }
    return 1 + 2 * s;
}

// theta2(t) = 2 sum_{n>=0} exp(-(n+1/2)^2 pi t); theta4(t) = t^(-1/2) theta2(1/t).
double theta2_direct(double t) {
    double s = 0;
    for (long n = 0;; ++n) {
        const double m = static_cast<double>(n) + 0.5;
        const double term = std::exp(-m * m * kPi * t);
        s += term;
        if (term < 1e-22) break;
    }
    return 2 * s;
}

}  // namespace

double theta_direct_sum(double t, const std::string& variant) {
    if (t <= 0) throw std::invalid_argument("theta_direct_sum: t must be > 0");
    if (variant == "theta") return theta_direct(t);
    if (variant == "theta4") return theta4_direct(t);
    throw std::invalid_argument("theta_direct_sum: variant must be theta or theta4");
}

double theta_value(double t, const std::string& variant) {
    if (t <= 0) throw std::invalid_argument("theta_value: t must be > 0");
    if (variant == "theta") {
        if (t >= 1) return theta_direct(t);
        return theta_direct(1 / t) / std::sqrt(t);
    }
    if (variant == "theta4") {
        if (t >= 1) return theta4_direct(t);
        return theta2_direct(1 / t) / std::sqrt(t);
    }
    throw std::invalid_argument("theta_value: variant must be theta or theta4");
}

double dirichlet_eta(double s) {
    // Cohen-Rodriguez Villegas-Zagier acceleration of sum (-1)^k a_k with
    // a_k = (k+1)^(-s); error ~ (3+sqrt(8))^(-n).
    const int n = 48;
    double d = std::pow(3 + std::sqrt(8.0), n);
    d = (d + 1 / d) / 2;
    double b = -1, c = -d, sum = 0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::pow(k + 1, -s);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1));
    }
    return sum / d;
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = (a + b) / 2;
    const double lm = (a + m) / 2, rm = (m + b) / 2;
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth > 48 || std::fabs(left + right - whole) <= 15 * tol)
        return left + right + (left + right - whole) / 15;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth + 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth + 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = (a + b) / 2;
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 0);
}

}  // namespace

MellinCheckResult mellin_theta4(double s, double quad_tol) {
    if (s <= 0 || s > 4) throw std::invalid_argument("mellin_theta4: s must be in (0, 4]");
    // Tail piece on [1, inf): integrand decays like exp(-pi t).
    const auto tail = [s](double t) {
        return std::pow(t, s / 2 - 1) * (theta_value(t, "theta4") - 1);
    };
    const double i1 = integrate(tail, 1.0, 42.0, quad_tol);
    // Head piece on (0, 1]: substitute u = 1/t; theta4(1/u) = sqrt(u) theta2(u),
    // so the integrand becomes u^(-s/2-1/2) theta2(u), decaying like exp(-pi u/4).
    const auto head = [s](double u) {
        return std::pow(u, -s / 2 - 0.5) * theta2_direct(u);
    };
    const double i2 = integrate(head, 1.0, 130.0, quad_tol);
    MellinCheckResult r;
    r.s = s;
    r.lhs = i1 + i2;
    r.rhs = -2 * std::pow(kPi, -s / 2) * std::tgamma(s / 2) * dirichlet_eta(s) + 2 / s;
    r.abs_err = std::fabs(r.lhs - r.rhs);
    return r;
}

HyperbolicCheckResult hyperbolic_product_check(double t, long terms) {
    if (t <= 0) throw std::invalid_argument("hyperbolic_product_check: t must be > 0");
    if (terms < 1) throw std::invalid_argument("hyperbolic_product_check: terms must be >= 1");
    HyperbolicCheckResult r;
    const double lhs = 2 * std::cosh(t / 2);
    r.exact_residual = std::fabs(lhs - std::sinh(t) / std::sinh(t / 2));
    double prod = 2;
    for (long k = 0; k < terms; ++k) {
        const double odd = static_cast<double>(2 * k + 1);
        prod *= 1 + t * t / (odd * odd * kPi * kPi);
    }
    r.product_residual = std::fabs(lhs - prod);
    return r;
}

ParastatCheckResult parastat_half_check(double t) {
    if (t <= 0) throw std::invalid_argument("parastat_half_check: t must be > 0");
    ParastatCheckResult r;
    // Direct spectral sums (the oracle side).
    for (long n = 0;; ++n) {
        const double a = std::exp(-t * (2 * n + 0.5));
        const double b = std::exp(-t * (2 * n + 1.5));
        r.z_half += a;
        r.z_three_half += b;
        if (a < 1e-22) break;
    }
    const double x = std::exp(-t);
    const double total = r.z_half + r.z_three_half;
    const double closed = std::sqrt(x) / (1 - x);               // Z_B(beta)
    const double zb2 = x / (1 - x * x);                         // Z_B(2beta)
    const double zf = std::exp(t / 2) + std::exp(-t / 2);       // Z_F(beta) = 2cosh(t/2)
    r.closed_residual = std::fabs(total - closed);
    r.factorized_residual = std::fabs(total - zb2 * zf);
    r.max_residual = std::max(r.closed_residual, r.factorized_residual);
    return r;
}

HagisCheckResult hagis_check(long s, long n) {
    if (s < 2 || s > 10) throw std::invalid_argument("hagis_check: s must be in [2, 10]");
    if (n < 1 || n > 10'000) throw std::invalid_argument("hagis_check: n must be in [1, 10^4]");
    const mpz_class count = count_restricted(n, constraints::multiplicity_at_most(s - 1));
    // ln of a bigint via its base-2 mantissa/exponent split.
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, count.get_mpz_t());
    const double ln_count = std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
    HagisCheckResult r;
    r.empirical = ln_count / std::sqrt(static_cast<double>(n));
    r.conjectured_rate = kPi * std::sqrt(2.0 * s / (3.0 * (1 + s)));
    r.classical_rate = kPi * std::sqrt(2.0 * (s - 1) / (3.0 * s));
    return r;
}

}  // namespace qpart
