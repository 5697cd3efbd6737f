#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpart/series.hpp"

namespace qpart {

/// Set of allowed multiplicities for one part value: the explicit members of
/// `extra` plus, when tail_start >= 0, the arithmetic tail
/// {tail_start, tail_start+tail_step, ...}.
struct MultSet {
    std::vector<long> extra;
    long tail_start = -1;
    long tail_step = 1;

    bool contains(long m) const;
    /// Members of the set that are <= cap, ascending.
    std::vector<long> members_up_to(long cap) const;

    static MultSet unrestricted();            // 0,1,2,...
    static MultSet at_most(long t);           // 0..t
    static MultSet zero_or_one();             // distinct parts
    static MultSet even_unbounded();          // 0,2,4,...
    static MultSet even_up_to(long m);        // 0,2,...,m
    static MultSet zero_or_at_least(long s);  // 0, s, s+1, ...
    static MultSet only_zero();               // part never used
};

/// Declarative restriction on partitions: which part values are admitted and,
/// per part value, which multiplicities are allowed. Multiplicity sets always
/// contain 0.
struct PartitionConstraint {
    std::string name;
    std::function<bool(long)> admits;
    std::function<MultSet(long)> multiplicity;
};

struct FirstDiff {
    long index;
    mpz_class lhs;
    mpz_class rhs;
};

struct Verdict {
    bool match = false;
    std::optional<FirstDiff> first_diff;
};

/// Smallest index at which the two series differ, as a Verdict.
Verdict compare_series(const Series& a, const Series& b);

/// k-th g-gonal number: k*((g-2)*k - (g-4))/2 for k >= 1, g >= 3.
long polygonal(long k, long gon);

/// Number of multisets of admitted parts with admitted multiplicities summing
/// to n (dynamic programming over parts <= n).
mpz_class count_restricted(long n, const PartitionConstraint& c);

/// All admitted partitions of n in decreasing-lexicographic order.
/// Guarded to n <= 40.
std::vector<std::vector<long>> enumerate_restricted(long n, const PartitionConstraint& c);

/// prod_{admitted k <= N} sum_{m in mult(k)} x^(k*m), truncated at N.
/// Built out of series algebra, independently of the counting DP.
Series gen_series(const PartitionConstraint& c, long order);

/// Number of overpartitions of n (parts not divisible by exclude_div when
/// given), computed as sum over ordinary partitions of 2^(distinct part sizes).
mpz_class overpartition_count(long n, std::optional<long> exclude_div = std::nullopt);

/// Number of admitted partitions of n with exactly i distinct part sizes.
mpz_class distinct_profile(long n, long i, std::optional<long> exclude_div = std::nullopt);

}  // namespace qpart
