#include "qpart/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qpart/kernels.hpp"

namespace qpart {

std::vector<std::pair<long, long>> factorize(long n) {
    if (n < 1 || n > 10'000'000) throw std::invalid_argument("factorize: n out of range");
    std::vector<std::pair<long, long>> out;
    for (long p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p) continue;
        long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

// poly *= (1 - y^m), truncated.
void mul_one_minus(std::vector<mpz_class>& poly, long m) {
    for (long j = static_cast<long>(poly.size()) - 1; j >= m; --j)
        poly[static_cast<size_t>(j)] -= poly[static_cast<size_t>(j - m)];
}

// poly /= (1 - y^m), truncated.
void div_one_minus(std::vector<mpz_class>& poly, long m) {
    for (long j = m; j < static_cast<long>(poly.size()); ++j)
        poly[static_cast<size_t>(j)] += poly[static_cast<size_t>(j - m)];
}

void validate(const EulerProductSpec& spec) {
    for (auto [m, e] : spec.factors) {
        if (m < 1) throw std::invalid_argument("zeta multiplier must be >= 1");
        if (e == 0) throw std::invalid_argument("zeta exponent must be nonzero");
    }
}

}  // namespace

std::vector<mpz_class> local_factor_coeffs(const EulerProductSpec& spec, long order) {
    validate(spec);
    std::vector<mpz_class> poly(static_cast<size_t>(order) + 1);
    poly[0] = 1;
    for (auto [m, e] : spec.factors) {
        for (long i = 0; i < std::abs(e); ++i) {
            if (e > 0)
                div_one_minus(poly, m);
            else
                mul_one_minus(poly, m);
        }
    }
    return poly;
}

ArithmeticSequence zeta_quotient_coeffs(const EulerProductSpec& spec, long limit) {
    if (limit < 1 || limit > 1'000'000)
        throw std::invalid_argument("zeta_quotient_coeffs: limit out of range");
    long lmax = 0;
    while ((1L << (lmax + 1)) <= limit) ++lmax;
    const std::vector<mpz_class> local = local_factor_coeffs(spec, std::max(lmax, 1L));
    const std::vector<int32_t> spf = kernels::smallest_prime_factor_sieve(limit);
    ArithmeticSequence seq;
    seq.limit = limit;
    seq.values = kernels::multiplicative_values(local, spf, limit);
    return seq;
}

namespace {

using Factorization = std::vector<std::pair<long, long>>;

mpz_class pow2(long k) {
    mpz_class v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return v;
}

long exponent_sum(const Factorization& f) {
    long t = 0;
    for (auto [p, e] : f) t += e;
    return t;
}

// All divisors of n from its factorization.
std::vector<long> divisors(const Factorization& f) {
    std::vector<long> out = {1};
    for (auto [p, e] : f) {
        const size_t base = out.size();
        long q = 1;
        for (long i = 1; i <= e; ++i) {
            q *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * q);
        }
    }
    return out;
}

bool is_squarefree(long n) {
    for (auto [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

}  // namespace

mpz_class arith_value(const std::string& fn, long n, std::optional<long> s) {
    if (n < 1) throw std::invalid_argument("arith_value: n must be >= 1");
    const Factorization f = factorize(n);
    auto need_s = [&]() -> long {
        if (!s || *s < 1) throw std::invalid_argument("arith_value: " + fn + " needs s >= 1");
        return *s;
    };
    if (fn == "mobius") {
        for (auto [p, e] : f)
            if (e > 1) return 0;
        return (f.size() % 2 == 0) ? 1 : -1;
    }
    if (fn == "liouville") return (exponent_sum(f) % 2 == 0) ? 1 : -1;
    if (fn == "nu") return static_cast<long>(f.size());
    if (fn == "two_nu") return pow2(static_cast<long>(f.size()));
    if (fn == "tau") {
        mpz_class t = 1;
        for (auto [p, e] : f) t *= (e + 1);
        return t;
    }
    if (fn == "squarefree") {
        for (auto [p, e] : f)
            if (e > 1) return 0;
        return 1;
    }
    if (fn == "squarefree_divisor_count") {
        long cnt = 0;
        for (long d : divisors(f))
            if (is_squarefree(d)) ++cnt;
        return cnt;
    }
    if (fn == "unitary_divisor_count") {
        long cnt = 0;
        for (long d : divisors(f))
            if (std::gcd(d, n / d) == 1) ++cnt;
        return cnt;
    }
    if (fn == "divisor_q_sum") {
        mpz_class t = 0;
        for (long d : divisors(f)) t += is_squarefree(d) ? 1 : 0;
        return t;
    }
    if (fn == "q_s") {
        const long k = need_s();
        for (auto [p, e] : f)
            if (e >= k) return 0;
        return 1;
    }
    if (fn == "mu_s") {
        const long k = need_s();
        for (auto [p, e] : f)
            if (e >= k) return 0;
        return (exponent_sum(f) % 2 == 0) ? 1 : -1;
    }
    if (fn == "nu_s") {
        const long k = need_s();
        long cnt = 0;
        for (auto [p, e] : f)
            if (e >= k) ++cnt;
        return cnt;
    }
    if (fn == "two_nu_s_lambda") {
        const long k = need_s();
        long cnt = 0;
        for (auto [p, e] : f)
            if (e >= k) ++cnt;
        mpz_class v = pow2(cnt);
        return (exponent_sum(f) % 2 == 0) ? v : -v;
    }
    if (fn == "a_plus") {
        const long k = need_s();
        for (auto [p, e] : f)
            if (e % k > 1) return 0;
        return 1;
    }
    if (fn == "a_minus") {
        const long k = need_s();
        long flips = 0;
        for (auto [p, e] : f) {
            if (e % k > 1) return 0;
            flips += e / k;
        }
        return (flips % 2 == 0) ? 1 : -1;
    }
    if (fn == "a_theta") {
        // Coefficients of zeta(t)^2 zeta(2st) / (zeta(2t) zeta(st)^2):
        // zero when any exponent is divisible by s, otherwise a signed power
        // of two over the distinct prime factors.
        const long k = need_s();
        long flips = 0;
        for (auto [p, e] : f) {
            if (e % k == 0) return 0;
            flips += e / k;
        }
        mpz_class v = pow2(static_cast<long>(f.size()));
        return (flips % 2 == 0) ? v : -v;
    }
    throw std::invalid_argument("unknown arithmetic function: " + fn);
}

std::vector<std::string> arith_function_names() {
    return {"mobius",        "liouville",  "nu",   "two_nu", "tau",
            "squarefree",    "squarefree_divisor_count",     "unitary_divisor_count",
            "divisor_q_sum", "q_s",        "mu_s", "nu_s",   "two_nu_s_lambda",
            "a_plus",        "a_minus",    "a_theta"};
}

namespace {

struct ClaimDef {
    std::string id;
    std::string description;
    bool needs_s;
    std::vector<long> default_s;
    // spec builder + the direct function id evaluated against it; empty fn
    // marks the direct-vs-direct claims handled in verify_dirichlet.
    std::function<EulerProductSpec(long)> spec;
    std::string direct_fn;
};

const std::vector<ClaimDef>& claim_table() {
    static const std::vector<ClaimDef> table = {
        {"d56", "zeta(t)/zeta(2t) = sum q(n)/n^t (squarefree indicator)", false, {},
         [](long) { return EulerProductSpec{{{1, 1}, {2, -1}}}; }, "squarefree"},
        {"d57", "zeta(t)/zeta(st) = sum q_s(n)/n^t (s-power-free indicator)", true,
         {2, 3, 4, 5, 6},
         [](long s) { return EulerProductSpec{{{1, 1}, {s, -1}}}; }, "q_s"},
        {"d58", "zeta(2t)/(zeta(t) zeta(st)) = sum mu_s(n)/n^t, s even", true, {2, 4, 6},
         [](long s) { return EulerProductSpec{{{2, 1}, {1, -1}, {s, -1}}}; }, "mu_s"},
        {"d59", "zeta(2t) zeta(st)/(zeta(t) zeta(2st)) = sum mu_s(n)/n^t, s odd", true,
         {3, 5, 7},
         [](long s) { return EulerProductSpec{{{2, 1}, {s, 1}, {1, -1}, {2 * s, -1}}}; },
         "mu_s"},
        {"d60", "zeta(t) zeta(st)/zeta(2t): exponents 0,1 mod s", true, {4, 6},
         [](long s) { return EulerProductSpec{{{1, 1}, {s, 1}, {2, -1}}}; }, "a_plus"},
        {"d62", "zeta(t) zeta(2st)/(zeta(2t) zeta(st)): signed 0,1 mod s", true, {3, 5},
         [](long s) { return EulerProductSpec{{{1, 1}, {2 * s, 1}, {2, -1}, {s, -1}}}; },
         "a_minus"},
        {"d64", "zeta(t)^2/zeta(2t) = sum 2^nu(n)/n^t", false, {},
         [](long) { return EulerProductSpec{{{1, 2}, {2, -1}}}; }, "two_nu"},
        {"d65", "sum_{d|n} q(d) = 2^nu(n) = #unitary divisors", false, {}, nullptr, ""},
        {"d68", "zeta(t)^2 zeta(2st)/(zeta(2t) zeta(st)^2): signed 2^nu, exponents prime to s",
         true, {3, 5},
         [](long s) { return EulerProductSpec{{{1, 2}, {2 * s, 1}, {2, -1}, {s, -2}}}; },
         "a_theta"},
        {"d69", "zeta(2t)/(zeta(t) zeta(st)) = sum 2^(nu_s) lambda / n^t, s odd", true, {3, 5},
         [](long s) { return EulerProductSpec{{{2, 1}, {1, -1}, {s, -1}}}; },
         "two_nu_s_lambda"},
        {"d70", "zeta(2t) zeta(st)/(zeta(t) zeta(2st)) = sum 2^(nu_s) lambda / n^t, s even",
         true, {2, 4},
         [](long s) { return EulerProductSpec{{{2, 1}, {s, 1}, {1, -1}, {2 * s, -1}}}; },
         "two_nu_s_lambda"},
        {"d_s1", "zeta(2t)/zeta(t)^2 = sum 2^nu(n) lambda(n)/n^t", false, {},
         [](long) { return EulerProductSpec{{{2, 1}, {1, -2}}}; }, ""},
    };
    return table;
}

const ClaimDef& find_claim(const std::string& id) {
    for (const auto& c : claim_table())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown dirichlet claim: " + id);
}

}  // namespace

std::vector<DirichletClaim> dirichlet_claims() {
    std::vector<DirichletClaim> out;
    for (const auto& c : claim_table())
        out.push_back({c.id, c.description, c.needs_s, c.default_s});
    return out;
}

EulerProductSpec claim_spec(const std::string& id, std::optional<long> s) {
    const ClaimDef& c = find_claim(id);
    if (!c.spec) throw std::invalid_argument(id + " has no Euler-product side");
    if (c.needs_s && !s) throw std::invalid_argument(id + " needs s");
    return c.spec(c.needs_s ? *s : 0);
}

mpz_class claim_direct_value(const std::string& id, long n, std::optional<long> s) {
    const ClaimDef& c = find_claim(id);
    if (c.id == "d65") return arith_value("divisor_q_sum", n);
    if (c.id == "d_s1") {
        mpz_class v = arith_value("two_nu", n);
        return arith_value("liouville", n) * v;
    }
    return arith_value(c.direct_fn, n, s);
}

Verdict verify_dirichlet(const std::string& id, long limit, std::optional<long> s) {
    const ClaimDef& c = find_claim(id);
    if (c.needs_s && !s) throw std::invalid_argument(id + " needs s");
    if (c.id == "d65") {
        for (long n = 1; n <= limit; ++n) {
            const mpz_class lhs = arith_value("divisor_q_sum", n);
            const mpz_class mid = arith_value("two_nu", n);
            const mpz_class rhs = arith_value("unitary_divisor_count", n);
            if (lhs != mid) return {false, FirstDiff{n, lhs, mid}};
            if (mid != rhs) return {false, FirstDiff{n, mid, rhs}};
        }
        return {true, std::nullopt};
    }
    const ArithmeticSequence seq = zeta_quotient_coeffs(claim_spec(id, s), limit);
    for (long n = 1; n <= limit; ++n) {
        const mpz_class rhs = claim_direct_value(id, n, s);
        if (seq.at(n) != rhs) return {false, FirstDiff{n, seq.at(n), rhs}};
    }
    return {true, std::nullopt};
}

}  // namespace qpart
