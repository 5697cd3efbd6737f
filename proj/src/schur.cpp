#include "qpart/schur.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qpart {

long IntegerPartition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0L);
}

bool IntegerPartition::valid() const {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

MultivariatePolynomial::MultivariatePolynomial(long vars, long cap) : vars_(vars), cap_(cap) {
    if (vars < 1) throw std::invalid_argument("polynomial needs at least one variable");
    if (cap < 0) throw std::invalid_argument("degree cap must be >= 0");
}

MultivariatePolynomial MultivariatePolynomial::one(long vars, long cap) {
    MultivariatePolynomial p(vars, cap);
    p.add_term(std::vector<long>(static_cast<size_t>(vars), 0), 1);
    return p;
}

void MultivariatePolynomial::add_term(const std::vector<long>& exponents, const mpz_class& coeff) {
    if (static_cast<long>(exponents.size()) != vars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (std::accumulate(exponents.begin(), exponents.end(), 0L) > cap_) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(exponents, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

MultivariatePolynomial MultivariatePolynomial::mul(const MultivariatePolynomial& other) const {
    if (vars_ != other.vars_ || cap_ != other.cap_)
        throw std::invalid_argument("polynomial shape mismatch");
    MultivariatePolynomial out(vars_, cap_);
    std::vector<long> e(static_cast<size_t>(vars_));
    for (const auto& [ea, ca] : terms_) {
        const long da = std::accumulate(ea.begin(), ea.end(), 0L);
        for (const auto& [eb, cb] : other.terms_) {
            if (da + std::accumulate(eb.begin(), eb.end(), 0L) > cap_) continue;
            for (long i = 0; i < vars_; ++i)
                e[static_cast<size_t>(i)] = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultivariatePolynomial MultivariatePolynomial::plus(const MultivariatePolynomial& other) const {
    if (vars_ != other.vars_ || cap_ != other.cap_)
        throw std::invalid_argument("polynomial shape mismatch");
    MultivariatePolynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

MultivariatePolynomial MultivariatePolynomial::recapped(long cap) const {
    MultivariatePolynomial out(vars_, cap);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
}

mpq_class MultivariatePolynomial::eval(const std::vector<mpq_class>& point) const {
    if (static_cast<long>(point.size()) != vars_)
        throw std::invalid_argument("evaluation point length mismatch");
    mpq_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class term(c);
        for (long i = 0; i < vars_; ++i) {
            for (long j = 0; j < e[static_cast<size_t>(i)]; ++j)
                term *= point[static_cast<size_t>(i)];
        }
        total += term;
    }
    return total;
}

bool MultivariatePolynomial::symmetric() const {
    std::vector<long> perm(static_cast<size_t>(vars_));
    std::iota(perm.begin(), perm.end(), 0L);
    std::vector<long> e(static_cast<size_t>(vars_));
    while (std::next_permutation(perm.begin(), perm.end())) {
        for (const auto& [exp, c] : terms_) {
            for (long i = 0; i < vars_; ++i)
                e[static_cast<size_t>(perm[static_cast<size_t>(i)])] = exp[static_cast<size_t>(i)];
            auto it = terms_.find(e);
            if (it == terms_.end() || it->second != c) return false;
        }
    }
    return true;
}

MultivariatePolynomial schur_poly(const IntegerPartition& lambda, long vars) {
    if (!lambda.valid()) throw std::invalid_argument("invalid partition");
    const long cap = std::max(lambda.weight(), 0L);
    MultivariatePolynomial out(vars, cap);
    if (lambda.length() > vars) return out;  // zero polynomial
    if (lambda.parts.empty()) return MultivariatePolynomial::one(vars, cap);

    // Fill the tableau cell by cell in row-major order: rows weakly increase,
    // columns strictly increase, entries in 1..vars.
    const long rows = lambda.length();
    std::vector<std::vector<long>> t(static_cast<size_t>(rows));
    for (long r = 0; r < rows; ++r)
        t[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda.parts[static_cast<size_t>(r)]), 0);
    std::vector<long> content(static_cast<size_t>(vars), 0);

    auto rec = [&](auto&& self, long r, long c) -> void {
        if (r == rows) {
            out.add_term(content, 1);
            return;
        }
        long nr = r, nc = c + 1;
        if (nc >= lambda.parts[static_cast<size_t>(r)]) {
            nr = r + 1;
            nc = 0;
        }
        const long left = (c > 0) ? t[static_cast<size_t>(r)][static_cast<size_t>(c - 1)] : 1;
        const long above = (r > 0 && c < lambda.parts[static_cast<size_t>(r - 1)])
                               ? t[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1
                               : 1;
        for (long v = std::max(left, above); v <= vars; ++v) {
            t[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            ++content[static_cast<size_t>(v - 1)];
            self(self, nr, nc);
            --content[static_cast<size_t>(v - 1)];
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace {

// Exact determinant by Bareiss-style fraction-free elimination; divisions are
// exact at every step.
mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
    const size_t n = m.size();
    mpq_class sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

mpq_class qpow(const mpq_class& base, long e) {
    mpq_class out = 1;
    for (long i = 0; i < e; ++i) out *= base;
    return out;
}

void check_distinct(const std::vector<mpq_class>& point) {
    for (size_t i = 0; i < point.size(); ++i)
        for (size_t j = i + 1; j < point.size(); ++j)
            if (point[i] == point[j])
                throw std::invalid_argument("point coordinates must be pairwise distinct");
}

}  // namespace

mpq_class bialternant_eval(const IntegerPartition& lambda, const std::vector<mpq_class>& point) {
    if (!lambda.valid()) throw std::invalid_argument("invalid partition");
    check_distinct(point);
    const long m = static_cast<long>(point.size());
    if (lambda.length() > m) return 0;
    std::vector<long> ext(lambda.parts);
    ext.resize(static_cast<size_t>(m), 0);
    std::vector<std::vector<mpq_class>> num(static_cast<size_t>(m)), den(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) {
        num[static_cast<size_t>(i)].resize(static_cast<size_t>(m));
        den[static_cast<size_t>(i)].resize(static_cast<size_t>(m));
        for (long j = 0; j < m; ++j) {
            const mpq_class& x = point[static_cast<size_t>(i)];
            num[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                qpow(x, ext[static_cast<size_t>(j)] + m - (j + 1));
            den[static_cast<size_t>(i)][static_cast<size_t>(j)] = qpow(x, m - (j + 1));
        }
    }
    const mpq_class d = determinant(std::move(den));
    if (d == 0) throw std::invalid_argument("Vandermonde denominator vanished");
    mpq_class r = determinant(std::move(num)) / d;
    r.canonicalize();
    return r;
}

MultivariatePolynomial green_parafermi_sum(long s, long vars) {
    if (s < 1 || s > 6 || vars < 1 || vars > 6)
        throw std::invalid_argument("green_parafermi_sum: s and M must be in [1, 6]");
    // Enumerate all partitions inside the s x M box (largest part <= s,
    // length <= M); each recursion level appends one weakly smaller row.
    MultivariatePolynomial acc(vars, s * vars);
    std::vector<long> parts;
    auto rec = [&](auto&& self, long maxpart, long rows_left) -> void {
        acc = acc.plus(schur_poly(IntegerPartition{parts}, vars).recapped(acc.cap()));
        if (rows_left == 0) return;
        for (long p = maxpart; p >= 1; --p) {
            parts.push_back(p);
            self(self, p, rows_left - 1);
            parts.pop_back();
        }
    };
    rec(rec, s, vars);
    return acc;
}

mpq_class green_parafermi_det(long s, long vars, const std::vector<mpq_class>& point) {
    if (s < 1) throw std::invalid_argument("green_parafermi_det: s must be >= 1");
    const long m = static_cast<long>(point.size());
    if (m != vars) throw std::invalid_argument("point length must equal M");
    std::vector<std::vector<mpq_class>> num(static_cast<size_t>(m)), den(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) {
        num[static_cast<size_t>(i)].resize(static_cast<size_t>(m));
        den[static_cast<size_t>(i)].resize(static_cast<size_t>(m));
        const mpq_class& x = point[static_cast<size_t>(i)];
        for (long j = 1; j <= m; ++j) {
            num[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] =
                qpow(x, s + 2 * m - j) - qpow(x, j - 1);
            den[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] =
                qpow(x, 2 * m - j) - qpow(x, j - 1);
        }
    }
    const mpq_class d = determinant(std::move(den));
    if (d == 0) throw std::invalid_argument("denominator determinant vanished");
    mpq_class r = determinant(std::move(num)) / d;
    r.canonicalize();
    return r;
}

Verdict littlewood_check(long vars, long cap, long s) {
    if (vars < 1 || vars > 6 || cap < 0 || cap > 10)
        throw std::invalid_argument("littlewood_check: M <= 6 and D <= 10");
    if (s < vars) throw std::invalid_argument("littlewood_check needs s >= M");

    // Sum side: all partitions of weight <= cap with length <= M.
    MultivariatePolynomial sum(vars, cap);
    std::vector<long> parts;
    auto rec = [&](auto&& self, long maxpart, long budget) -> void {
        sum = sum.plus(schur_poly(IntegerPartition{parts}, vars).recapped(cap));
        if (static_cast<long>(parts.size()) == vars) return;
        for (long p = std::min(maxpart, budget); p >= 1; --p) {
            parts.push_back(p);
            self(self, p, budget - p);
            parts.pop_back();
        }
    };
    rec(rec, cap, cap);

    // Product side, expanded independently: truncated geometric series for
    // every 1/(1-x_i) and 1/(1-x_i x_j).
    MultivariatePolynomial prod = MultivariatePolynomial::one(vars, cap);
    auto geometric = [&](const std::vector<long>& step) {
        MultivariatePolynomial g(vars, cap);
        std::vector<long> e(static_cast<size_t>(vars), 0);
        const long stepdeg = std::accumulate(step.begin(), step.end(), 0L);
        for (long k = 0; k * stepdeg <= cap; ++k) {
            g.add_term(e, 1);
            for (long i = 0; i < vars; ++i) e[static_cast<size_t>(i)] += step[static_cast<size_t>(i)];
        }
        return g;
    };
    for (long i = 0; i < vars; ++i) {
        std::vector<long> step(static_cast<size_t>(vars), 0);
        step[static_cast<size_t>(i)] = 1;
        prod = prod.mul(geometric(step));
    }
    for (long i = 0; i < vars; ++i)
        for (long j = i + 1; j < vars; ++j) {
            std::vector<long> step(static_cast<size_t>(vars), 0);
            step[static_cast<size_t>(i)] = 1;
            step[static_cast<size_t>(j)] = 1;
            prod = prod.mul(geometric(step));
        }

    if (sum == prod) return {true, std::nullopt};
    // Report the first differing monomial (by total degree, then map order).
    for (long d = 0; d <= cap; ++d) {
        for (const auto& [e, c] : prod.terms()) {
            if (std::accumulate(e.begin(), e.end(), 0L) != d) continue;
            auto it = sum.terms().find(e);
            const mpz_class lhs = (it == sum.terms().end()) ? mpz_class(0) : it->second;
            if (lhs != c) return {false, FirstDiff{d, lhs, c}};
        }
        for (const auto& [e, c] : sum.terms()) {
            if (std::accumulate(e.begin(), e.end(), 0L) != d) continue;
            if (prod.terms().find(e) == prod.terms().end())
                return {false, FirstDiff{d, c, mpz_class(0)}};
        }
    }
    return {false, FirstDiff{0, 0, 0}};
}

}  // namespace qpart
