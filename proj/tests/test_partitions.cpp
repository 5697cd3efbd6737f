#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "qpart/constraints.hpp"
#include "qpart/partitions.hpp"

using namespace qpart;

namespace {

// Literal overlined enumeration (test oracle, small n): every ordinary
// partition together with every subset of its distinct part values (the
// overlined first occurrences).
long literal_overpartitions(long n, std::optional<long> exclude_div) {
    PartitionConstraint c = constraints::unrestricted();
    if (exclude_div) c = constraints::parts_prime_to(*exclude_div);
    long total = 0;
    for (const auto& parts : enumerate_restricted(n, c)) {
        const std::set<long> sizes(parts.begin(), parts.end());
        long objects = 1;
        for (size_t i = 0; i < sizes.size(); ++i) objects *= 2;
        total += objects;
    }
    return total;
}

}  // namespace

TEST_CASE("polygonal numbers") {
    CHECK(polygonal(3, 4) == 9);
    CHECK(polygonal(2, 5) == 5);
    for (long g = 3; g <= 12; ++g) CHECK(polygonal(1, g) == 1);
    CHECK(polygonal(4, 3) == 10);  // triangular
    CHECK_THROWS(polygonal(0, 4));
    CHECK_THROWS(polygonal(2, 2));
}

TEST_CASE("count_restricted point values") {
    CHECK(count_restricted(7, constraints::parts_prime_to(3)) == 9);
    CHECK(count_restricted(6, constraints::odd_even_multiplicity()) == 8);
    CHECK(count_restricted(0, constraints::distinct()) == 1);
    CHECK(count_restricted(0, constraints::parts_prime_to(5)) == 1);
    CHECK(count_restricted(11, constraints::residues(6, {0, 1, 3, 5})) == 15);
    CHECK(count_restricted(10, constraints::distinct_prime_to(3)) == 4);
    // Unrestricted multiplicities with an all-parts filter reproduce p(n).
    CHECK(count_restricted(30, constraints::unrestricted()) == 5604);
}

TEST_CASE("enumerate_restricted order and contents") {
    const auto p3 = enumerate_restricted(3, constraints::unrestricted());
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == std::vector<long>{3});
    CHECK(p3[1] == std::vector<long>{2, 1});
    CHECK(p3[2] == std::vector<long>{1, 1, 1});

    // Decreasing lexicographic throughout.
    const auto p8 = enumerate_restricted(8, constraints::unrestricted());
    CHECK(p8.size() == 22);
    CHECK(std::is_sorted(p8.begin(), p8.end(),
                         [](const auto& a, const auto& b) { return a > b; }));

    // a(9) = 6 for distinct parts prime to 5: [9] itself qualifies and is
    // the partition hand lists tend to omit.
    const auto p9 = enumerate_restricted(9, constraints::distinct_prime_to(5));
    CHECK(p9.size() == 6);
    CHECK(std::find(p9.begin(), p9.end(), std::vector<long>{9}) != p9.end());
    CHECK(count_restricted(9, constraints::distinct_prime_to(5)) == 6);

    const auto p10 = enumerate_restricted(10, constraints::distinct_prime_to(3));
    REQUIRE(p10.size() == 4);
    CHECK(p10[0] == std::vector<long>{10});
    CHECK(p10[1] == std::vector<long>{8, 2});
    CHECK(p10[2] == std::vector<long>{7, 2, 1});
    CHECK(p10[3] == std::vector<long>{5, 4, 1});

    CHECK_THROWS(enumerate_restricted(41, constraints::unrestricted()));
}

TEST_CASE("gen_series matches counting") {
    const Series p = gen_series(constraints::unrestricted(), 10);
    const long a000041[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long i = 0; i <= 10; ++i) CHECK(p.coeff(i) == a000041[i]);

    // Each k at most k-1 times vs prod (1-x^(k^2))/(1-x^k).
    Series squares = expand_product({{-1, 1, 0, -1}}, 30);
    for (long k = 1; polygonal(k, 4) <= 30; ++k) mul_binomial(squares, -1, polygonal(k, 4));
    CHECK(gen_series(constraints::multiplicity_less_than_part(), 30) == squares);

    PartitionConstraint none{"none", [](long) { return false; },
                             [](long) { return MultSet::unrestricted(); }};
    CHECK(gen_series(none, 5) == constant_series(1, 5));
}

TEST_CASE("three-way agreement: DP, enumeration, series") {
    for (const auto& name : constraint_names()) {
        const PartitionConstraint c = named_constraint(name);
        const Series s = gen_series(c, 18);
        for (long n = 0; n <= 18; ++n) {
            const mpz_class dp = count_restricted(n, c);
            CHECK(dp == s.coeff(n));
            CHECK(dp == static_cast<long>(enumerate_restricted(n, c).size()));
        }
    }
}

TEST_CASE("Euler's theorem to 200 via gen_series") {
    CHECK(gen_series(constraints::distinct(), 200) == gen_series(constraints::odd_parts(), 200));
}

TEST_CASE("Theorem 2 with r=2 degenerates to Theorem 1") {
    CHECK(gen_series(constraints::theorem2_multiplicity(2), 60) ==
          gen_series(constraints::multiplicity_less_than_part(), 60));
    CHECK(gen_series(constraints::polygon_free(4), 60) ==
          gen_series(constraints::multiplicity_less_than_part(), 60));
}

TEST_CASE("overpartition counts") {
    CHECK(overpartition_count(3) == 8);
    CHECK(overpartition_count(4) == 14);
    CHECK(overpartition_count(4, 2) == 6);
    CHECK(overpartition_count(3, 2) == 4);
    CHECK(overpartition_count(0) == 1);

    const Series prod = expand_product({{1, 1, 0, 1}, {-1, 1, 0, -1}}, 60);
    for (long n = 0; n <= 60; ++n) CHECK(overpartition_count(n) == prod.coeff(n));
    CHECK(overpartition_count(21) == 9904);
    CHECK(overpartition_count(22) == 13288);

    for (long n = 0; n <= 12; ++n) {
        CHECK(overpartition_count(n) == literal_overpartitions(n, std::nullopt));
        CHECK(overpartition_count(n, 2) == literal_overpartitions(n, 2));
        CHECK(overpartition_count(n, 3) == literal_overpartitions(n, 3));
    }
}

TEST_CASE("distinct_profile and the 2^i weighting") {
    CHECK(distinct_profile(4, 1) == 3);
    CHECK(distinct_profile(4, 2) == 2);
    CHECK(distinct_profile(4, 1, 2) == 1);
    CHECK(distinct_profile(4, 2, 2) == 1);

    for (long n = 1; n <= 30; ++n) {
        for (std::optional<long> s :
             {std::optional<long>{}, std::optional<long>{2}, std::optional<long>{3},
              std::optional<long>{4}, std::optional<long>{5}}) {
            mpz_class sum = (n == 0) ? 1 : 0;
            mpz_class w = 2;
            for (long i = 1; i * (i + 1) / 2 <= n; ++i) {
                sum += w * distinct_profile(n, i, s);
                w *= 2;
            }
            CHECK(sum == overpartition_count(n, s));
        }
    }
}

TEST_CASE("multiplicity sets") {
    const MultSet even = MultSet::even_unbounded();
    CHECK(even.contains(0));
    CHECK(even.contains(6));
    CHECK_FALSE(even.contains(3));

    const MultSet pb = MultSet::zero_or_at_least(4);
    CHECK(pb.contains(0));
    CHECK_FALSE(pb.contains(3));
    CHECK(pb.contains(4));
    CHECK(pb.contains(9));
    CHECK(pb.members_up_to(6) == std::vector<long>{0, 4, 5, 6});

    CHECK(MultSet::at_most(2).members_up_to(10) == std::vector<long>{0, 1, 2});
}

TEST_CASE("compare_series verdicts") {
    const Series a = make_series({1, 2, 3}, 4);
    const Series b = make_series({1, 2, 4}, 4);
    const Verdict good = compare_series(a, a);
    CHECK(good.match);
    CHECK_FALSE(good.first_diff.has_value());
    const Verdict bad = compare_series(a, b);
    REQUIRE_FALSE(bad.match);
    CHECK(bad.first_diff->index == 2);
    CHECK(bad.first_diff->lhs == 3);
    CHECK(bad.first_diff->rhs == 4);
}
