#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpart/partitions.hpp"
#include "qpart/series.hpp"

namespace qpart {

/// One way of constructing the series of an identity. Builders attached to
/// the same record come from genuinely different code paths (product
/// expansion, constraint counting, explicit sums, theta quotients, ...).
struct SeriesBuilder {
    std::string label;
    std::function<Series(long)> build;
};

struct IdentityRecord {
    std::string id;
    std::string description;
    std::string reference;  // classical-literature / OEIS anchor
    long default_order = 200;
    bool claim = false;  // proposed identity: the verdict is recorded output
    std::vector<SeriesBuilder> builders;
};

/// The full identity inventory; parametrized families instantiated over their
/// default parameter ranges.
const std::vector<IdentityRecord>& catalog();

const IdentityRecord& find_identity(const std::string& id);

/// Build every builder of the record at the given order (default order of the
/// record when absent) and compare pairwise; reports the smallest differing
/// index on mismatch.
Verdict verify(const IdentityRecord& rec, std::optional<long> order = std::nullopt);
Verdict verify(const std::string& id, std::optional<long> order = std::nullopt);

struct VerifyAllRow {
    std::string id;
    bool claim = false;
    long order = 0;
    Verdict verdict;
    double elapsed_ms = 0;
};

/// Verify the whole catalog (orders scaled by order_scale, minimum 8).
/// Evaluation may fan out across threads; rows come back in catalog order.
std::vector<VerifyAllRow> verify_all(double order_scale = 1.0);

// --- Explicit sum-side expansions -----------------------------------------
// max_top (when >= 0) keeps only the terms whose top index is <= max_top,
// which lets tests compare two sums term family by term family.

/// 1 + sum_k 2 (1+x)...(1+x^(k-1)) / ((1-x)...(1-x^k)) x^k.
Series gauss_cauchy_sum(long order, long max_top = -1);

/// 1 + sum_k 2 (1+x)...(1+x^(k-1)) / ((1-x)...(1-x^k)) x^(k(k+1)/2).
Series lebesgue_sum(long order, long max_top = -1);

/// 1 + sum_k 2 (1+x)...(1+x^(k-1)) x^(k^2)
///       / ((1-x)...(1-x^k) (1-x)(1-x^3)...(1-x^(2k-1))).
Series slater6_sum(long order, long max_top = -1);

/// Multiple series over chains n_(s-1) >= ... >= n_1 >= 0 with numerator
/// prod_{j=0}^{n_(s-1)-1} (1+x^j), staircase q-factorial denominators and
/// exponent n_(s-1)(n_(s-1)+1)/2 + n_(s-2)^2 + ... + n_1^2.
Series andrews_multisum(long s, long order, long max_top = -1);

/// 1 + sum over strict chains n_1 > ... > n_i > 0 of
/// 2^i x^(n_1+...+n_i) / prod (1 - x^(n_j)).
Series overpartition_double_sum(long order);

/// Quantifier readings for the proposed 2-modular sum: for each n either every
/// admissible m contributes, or only the smallest / largest one.
enum class TwoModularMode { AllM, SmallestM, LargestM };

/// Proposed sum for prod (1+x^(2k-1))/(1-x^(2k)): terms x^n (1+x)^m / prod
/// (1-x^(n_j)) over partitions of n+m into m distinct even parts, n+m even,
/// n > m except n = m = 1, n != 2.
Series two_modular_sum(long order, TwoModularMode mode = TwoModularMode::AllM);

}  // namespace qpart
