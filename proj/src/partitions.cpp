#include "qpart/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpart {

bool MultSet::contains(long m) const {
    if (m < 0) return false;
    if (std::find(extra.begin(), extra.end(), m) != extra.end()) return true;
    return tail_start >= 0 && m >= tail_start && (m - tail_start) % tail_step == 0;
}

std::vector<long> MultSet::members_up_to(long cap) const {
    std::vector<long> out;
    for (long m : extra)
        if (m <= cap) out.push_back(m);
    if (tail_start >= 0)
        for (long m = tail_start; m <= cap; m += tail_step) out.push_back(m);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MultSet MultSet::unrestricted() { return {{}, 0, 1}; }
MultSet MultSet::at_most(long t) {
    MultSet s;
    for (long m = 0; m <= t; ++m) s.extra.push_back(m);
    return s;
}
MultSet MultSet::zero_or_one() { return {{0, 1}, -1, 1}; }
MultSet MultSet::even_unbounded() { return {{}, 0, 2}; }
MultSet MultSet::even_up_to(long m) {
    MultSet s;
    for (long v = 0; v <= m; v += 2) s.extra.push_back(v);
    return s;
}
MultSet MultSet::zero_or_at_least(long start) { return {{0}, start, 1}; }
MultSet MultSet::only_zero() { return {{0}, -1, 1}; }

Verdict compare_series(const Series& a, const Series& b) {
    const long n = std::min(a.order(), b.order());
    for (long i = 0; i <= n; ++i) {
        if (a.coeff(i) != b.coeff(i)) return {false, FirstDiff{i, a.coeff(i), b.coeff(i)}};
    }
    return {true, std::nullopt};
}

long polygonal(long k, long gon) {
    if (k < 1) throw std::invalid_argument("polygonal index must be >= 1");
    if (gon < 3) throw std::invalid_argument("polygonal order must be >= 3");
    return k * ((gon - 2) * k - (gon - 4)) / 2;
}

mpz_class count_restricted(long n, const PartitionConstraint& c) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    std::vector<mpz_class> f(static_cast<size_t>(n) + 1), g(static_cast<size_t>(n) + 1);
    f[0] = 1;
    for (long k = 1; k <= n; ++k) {
        if (!c.admits(k)) continue;
        const MultSet ms = c.multiplicity(k);
        if (!ms.contains(0)) throw std::logic_error("multiplicity set must contain 0");
        // Unrestricted parts take the O(n) geometric recurrence; everything
        // else sums over the explicit multiplicities.
        if (ms.extra.empty() && ms.tail_start == 0 && ms.tail_step == 1) {
            for (long j = k; j <= n; ++j) f[static_cast<size_t>(j)] += f[static_cast<size_t>(j - k)];
            continue;
        }
        const std::vector<long> mults = ms.members_up_to(n / k);
        for (long j = 0; j <= n; ++j) {
            mpz_class& acc = g[static_cast<size_t>(j)];
            acc = 0;
            for (long m : mults) {
                if (m * k > j) break;
                acc += f[static_cast<size_t>(j - m * k)];
            }
        }
        std::swap(f, g);
    }
    return f[static_cast<size_t>(n)];
}

std::vector<std::vector<long>> enumerate_restricted(long n, const PartitionConstraint& c) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (n > 40) throw std::invalid_argument("enumeration guarded to n <= 40");
    std::vector<std::vector<long>> out;
    std::vector<long> current;
    // Parts are chosen in decreasing order, largest multiplicity first, which
    // yields decreasing-lexicographic output directly.
    auto rec = [&](auto&& self, long remaining, long max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (long k = std::min(remaining, max_part); k >= 1; --k) {
            if (!c.admits(k)) continue;
            const MultSet ms = c.multiplicity(k);
            std::vector<long> mults = ms.members_up_to(remaining / k);
            for (auto it = mults.rbegin(); it != mults.rend(); ++it) {
                const long m = *it;
                if (m == 0) continue;
                current.insert(current.end(), static_cast<size_t>(m), k);
                self(self, remaining - m * k, k - 1);
                current.resize(current.size() - static_cast<size_t>(m));
            }
        }
    };
    rec(rec, n, n);
    return out;
}

Series gen_series(const PartitionConstraint& c, long order) {
    Series acc = constant_series(1, order);
    for (long k = 1; k <= order; ++k) {
        if (!c.admits(k)) continue;
        const MultSet ms = c.multiplicity(k);
        if (!ms.contains(0)) throw std::logic_error("multiplicity set must contain 0");
        // acc *= sum_{m in set} x^(k*m), split into the finite members and the
        // rational tail x^(k*t)/(1 - x^(k*d)).
        Series next(order);
        for (long m : ms.extra) {
            if (m * k > order) continue;
            add_shifted(next, acc, m * k);
        }
        if (ms.tail_start >= 0 && ms.tail_start * k <= order) {
            Series tail(order);
            add_shifted(tail, acc, ms.tail_start * k);
            if (ms.tail_step * k <= order) div_binomial(tail, -1, ms.tail_step * k);
            next = add(next, tail);
        }
        acc = std::move(next);
    }
    return acc;
}

mpz_class overpartition_count(long n, std::optional<long> exclude_div) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    // Per part k the weight generating function is 1 + 2*(x^k + x^(2k) + ...):
    // the factor 2 marks whether the first occurrence is overlined.
    std::vector<mpz_class> f(static_cast<size_t>(n) + 1), h(static_cast<size_t>(n) + 1);
    f[0] = 1;
    for (long k = 1; k <= n; ++k) {
        if (exclude_div && k % *exclude_div == 0) continue;
        // h[j] = sum_{m>=1} f[j - m*k]
        for (long j = 0; j < k; ++j) h[static_cast<size_t>(j)] = 0;
        for (long j = k; j <= n; ++j)
            h[static_cast<size_t>(j)] = f[static_cast<size_t>(j - k)] + h[static_cast<size_t>(j - k)];
        for (long j = k; j <= n; ++j) f[static_cast<size_t>(j)] += 2 * h[static_cast<size_t>(j)];
    }
    return f[static_cast<size_t>(n)];
}

mpz_class distinct_profile(long n, long i, std::optional<long> exclude_div) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (i < 1) throw std::invalid_argument("i must be >= 1");
    // imax: i distinct part sizes need at least 1+2+...+i.
    long imax = 0;
    while ((imax + 1) * (imax + 2) / 2 <= n) ++imax;
    if (i > imax) return 0;
    // t[d][j]: partitions of j with exactly d distinct part sizes seen so far.
    std::vector<std::vector<mpz_class>> t(static_cast<size_t>(imax) + 1,
                                          std::vector<mpz_class>(static_cast<size_t>(n) + 1));
    t[0][0] = 1;
    std::vector<mpz_class> h(static_cast<size_t>(n) + 1);
    for (long k = 1; k <= n; ++k) {
        if (exclude_div && k % *exclude_div == 0) continue;
        for (long d = imax; d >= 1; --d) {
            // h[j] = sum_{m>=1} t[d-1][j - m*k]
            for (long j = 0; j < k; ++j) h[static_cast<size_t>(j)] = 0;
            for (long j = k; j <= n; ++j)
                h[static_cast<size_t>(j)] =
                    t[static_cast<size_t>(d - 1)][static_cast<size_t>(j - k)] + h[static_cast<size_t>(j - k)];
            for (long j = k; j <= n; ++j)
                t[static_cast<size_t>(d)][static_cast<size_t>(j)] += h[static_cast<size_t>(j)];
        }
    }
    return t[static_cast<size_t>(i)][static_cast<size_t>(n)];
}

}  // namespace qpart
