#include "qpart/series.hpp"

#include <stdexcept>

#include "qpart/kernels.hpp"

namespace qpart {

Series::Series(long order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    c_.resize(static_cast<size_t>(order) + 1);
}

Series::Series(std::vector<mpz_class> coeffs, long order) : Series(order) {
    if (static_cast<long>(coeffs.size()) > order + 1)
        throw std::invalid_argument("more coefficients than order+1");
    for (size_t i = 0; i < coeffs.size(); ++i) c_[i] = std::move(coeffs[i]);
}

Series make_series(std::vector<mpz_class> coeffs, long order) {
    return Series(std::move(coeffs), order);
}

Series constant_series(long value, long order) {
    Series s(order);
    s.coeff(0) = value;
    return s;
}

Series monomial(long exponent, long order) {
    Series s(order);
    if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
    if (exponent <= order) s.coeff(exponent) = 1;
    return s;
}

Series mul(const Series& a, const Series& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch in mul");
    Series out(a.order());
    kernels::convolve(a.coeffs(), b.coeffs(),
                      std::span<mpz_class>(&out.coeff(0), static_cast<size_t>(out.order()) + 1));
    return out;
}

Series invert(const Series& a) {
    if (a.coeff(0) != 1) throw std::invalid_argument("invert requires constant term 1");
    const long n = a.order();
    Series b(n);
    b.coeff(0) = 1;
    // b[m] = -sum_{i=1..m} a[i] * b[m-i]
    for (long m = 1; m <= n; ++m) {
        mpz_class acc = 0;
        for (long i = 1; i <= m; ++i)
            mpz_addmul(acc.get_mpz_t(), a.coeff(i).get_mpz_t(), b.coeff(m - i).get_mpz_t());
        b.coeff(m) = -acc;
    }
    return b;
}

Series substitute(const Series& a, int sign, long m) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("substitute sign must be +-1");
    if (m < 1) throw std::invalid_argument("substitute power must be >= 1");
    Series out(a.order());
    int s = 1;  // sign^n
    for (long n = 0; n * m <= a.order(); ++n) {
        out.coeff(n * m) = (s > 0) ? a.coeff(n) : -a.coeff(n);
        s *= sign;
    }
    return out;
}

void mul_binomial(Series& a, int sign, long e) {
    if (e < 1) throw std::invalid_argument("binomial exponent must be >= 1");
    if (e > a.order()) return;
    for (long n = a.order(); n >= e; --n) {
        if (sign > 0)
            a.coeff(n) += a.coeff(n - e);
        else
            a.coeff(n) -= a.coeff(n - e);
    }
}

void div_binomial(Series& a, int sign, long e) {
    if (e < 1) throw std::invalid_argument("binomial exponent must be >= 1");
    if (e > a.order()) return;
    for (long n = e; n <= a.order(); ++n) {
        if (sign > 0)
            a.coeff(n) -= a.coeff(n - e);
        else
            a.coeff(n) += a.coeff(n - e);
    }
}

static void validate_family(const FactorFamily& f) {
    if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("family sign must be +-1");
    if (f.power != 1 && f.power != -1) throw std::invalid_argument("family power must be +-1");
    if (f.step < 1) throw std::invalid_argument("family step must be >= 1");
    if (f.step + f.offset < 1) throw std::invalid_argument("family exponent at k=1 must be >= 1");
}

Series expand_product(std::span<const FactorFamily> families, long order) {
    Series acc = constant_series(1, order);
    for (const FactorFamily& f : families) {
        validate_family(f);
        for (long k = 1; f.step * k + f.offset <= order; ++k) {
            const long e = f.step * k + f.offset;
            if (f.power > 0)
                mul_binomial(acc, f.sign, e);
            else
                div_binomial(acc, f.sign, e);
        }
    }
    return acc;
}

Series expand_product(std::initializer_list<FactorFamily> families, long order) {
    return expand_product(std::span<const FactorFamily>(families.begin(), families.size()), order);
}

Series theta4_series(long order) {
    Series s(order);
    s.coeff(0) = 1;
    for (long n = 1; n * n <= order; ++n) s.coeff(n * n) = (n % 2 == 0) ? 2 : -2;
    return s;
}

Series add(const Series& a, const Series& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch in add");
    Series out = a;
    for (long n = 0; n <= b.order(); ++n) out.coeff(n) += b.coeff(n);
    return out;
}

Series sub(const Series& a, const Series& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch in sub");
    Series out = a;
    for (long n = 0; n <= b.order(); ++n) out.coeff(n) -= b.coeff(n);
    return out;
}

void add_shifted(Series& acc, const Series& t, long shift) {
    if (shift < 0) throw std::invalid_argument("shift must be >= 0");
    for (long n = 0; n + shift <= acc.order() && n <= t.order(); ++n)
        acc.coeff(n + shift) += t.coeff(n);
}

}  // namespace qpart
