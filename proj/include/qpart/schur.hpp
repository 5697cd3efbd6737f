#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "qpart/partitions.hpp"

namespace qpart {

/// Weakly decreasing positive parts.
struct IntegerPartition {
    std::vector<long> parts;

    long length() const { return static_cast<long>(parts.size()); }
    long largest() const { return parts.empty() ? 0 : parts.front(); }
    long weight() const;
    bool valid() const;
};

/// Exact multivariate polynomial in `vars` variables with all monomials of
/// total degree <= cap. Zero coefficients are never stored.
class MultivariatePolynomial {
public:
    MultivariatePolynomial(long vars, long cap);

    long vars() const { return vars_; }
    long cap() const { return cap_; }
    const std::map<std::vector<long>, mpz_class>& terms() const { return terms_; }

    void add_term(const std::vector<long>& exponents, const mpz_class& coeff);
    MultivariatePolynomial mul(const MultivariatePolynomial& other) const;
    MultivariatePolynomial plus(const MultivariatePolynomial& other) const;
    /// Same polynomial under a different degree cap (over-cap monomials drop).
    MultivariatePolynomial recapped(long cap) const;
    mpq_class eval(const std::vector<mpq_class>& point) const;
    bool symmetric() const;

    bool operator==(const MultivariatePolynomial& other) const = default;

    static MultivariatePolynomial one(long vars, long cap);

private:
    long vars_;
    long cap_;
    std::map<std::vector<long>, mpz_class> terms_;
};

/// Schur polynomial s_lambda(x_1..x_M) as the content-monomial sum over
/// semistandard Young tableaux; zero when l(lambda) > M.
MultivariatePolynomial schur_poly(const IntegerPartition& lambda, long vars);

/// Exact determinant ratio det(x_i^(lambda_j + M - j)) / det(x_i^(M - j)) at a
/// point with pairwise distinct coordinates.
mpq_class bialternant_eval(const IntegerPartition& lambda, const std::vector<mpq_class>& point);

/// Sum of s_lambda over all lambda with largest part <= s and length <= M.
MultivariatePolynomial green_parafermi_sum(long s, long vars);

/// det(x_i^(s+2M-j) - x_i^(j-1)) / det(x_i^(2M-j) - x_i^(j-1)), 1 <= i,j <= M.
mpq_class green_parafermi_det(long s, long vars, const std::vector<mpq_class>& point);

/// Bounded Schur sum against the degree-cap truncation of
/// prod_i 1/(1-x_i) * prod_{i<j} 1/(1-x_i x_j); requires s >= M.
Verdict littlewood_check(long vars, long cap, long s);

}  // namespace qpart
