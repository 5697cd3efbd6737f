#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

namespace qpart {

/// Dense formal power series over Z, truncated at a fixed degree.
/// coeff(n) is the coefficient of x^n for 0 <= n <= order().
/// All arithmetic is exact; there is no floating point in this module.
class Series {
public:
    explicit Series(long order);
    Series(std::vector<mpz_class> coeffs, long order);

    long order() const { return order_; }
    const mpz_class& coeff(long n) const { return c_[static_cast<size_t>(n)]; }
    mpz_class& coeff(long n) { return c_[static_cast<size_t>(n)]; }
    std::span<const mpz_class> coeffs() const { return c_; }

    bool operator==(const Series& other) const = default;

private:
    long order_;
    std::vector<mpz_class> c_;
};

/// One infinite-product factor pattern: prod_{k>=1} (1 + sign*x^(step*k+offset))^power
/// with sign, power in {-1,+1}, step >= 1 and step+offset >= 1.
struct FactorFamily {
    int sign;
    long step;
    long offset;
    int power;
};

Series make_series(std::vector<mpz_class> coeffs, long order);
Series constant_series(long value, long order);
Series monomial(long exponent, long order);

/// Exact Cauchy product truncated at the common order. Orders must agree.
Series mul(const Series& a, const Series& b);

/// Multiplicative inverse up to the truncation order; requires coeff(0) == 1.
Series invert(const Series& a);

/// Substitute x -> sign*x^m (sign in {-1,+1}, m >= 1).
Series substitute(const Series& a, int sign, long m);

/// Expand a list of factor families exactly; result is independent of the
/// order in which the families are listed.
Series expand_product(std::span<const FactorFamily> families, long order);
Series expand_product(std::initializer_list<FactorFamily> families, long order);

/// 1 + 2*sum_{n>=1} (-1)^n x^(n^2), truncated.
Series theta4_series(long order);

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);

/// acc += x^shift * t (term truncated at acc's order).
void add_shifted(Series& acc, const Series& t, long shift);

/// In-place multiply/divide by the sparse binomial (1 + sign*x^e), e >= 1.
void mul_binomial(Series& a, int sign, long e);
void div_binomial(Series& a, int sign, long e);

}  // namespace qpart
