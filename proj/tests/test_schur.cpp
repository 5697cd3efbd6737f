#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qpart/schur.hpp"

using namespace qpart;

namespace {

std::vector<std::vector<mpq_class>> rational_points(long vars, long count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> numer(-9, 9);
    std::uniform_int_distribution<long> denom(2, 9);
    std::vector<std::vector<mpq_class>> points;
    while (static_cast<long>(points.size()) < count) {
        std::vector<mpq_class> p;
        bool ok = true;
        for (long i = 0; i < vars; ++i) {
            mpq_class v(numer(rng), denom(rng));
            v.canonicalize();
            if (v == 0 || v == 1 || v == -1) ok = false;
            for (const auto& q : p)
                if (q == v || q * v == 1) ok = false;
            if (!ok) break;
            p.push_back(v);
        }
        if (ok) points.push_back(std::move(p));
    }
    return points;
}

std::vector<IntegerPartition> partitions_up_to(long weight, long max_len) {
    std::vector<IntegerPartition> out;
    std::vector<long> parts;
    auto rec = [&](auto&& self, long maxpart, long budget) -> void {
        out.push_back(IntegerPartition{parts});
        if (static_cast<long>(parts.size()) == max_len) return;
        for (long p = std::min(maxpart, budget); p >= 1; --p) {
            parts.push_back(p);
            self(self, p, budget - p);
            parts.pop_back();
        }
    };
    rec(rec, weight, weight);
    return out;
}

}  // namespace

TEST_CASE("schur_poly base cases") {
    const MultivariatePolynomial single = schur_poly({{1}}, 2);
    CHECK(single.terms().size() == 2);
    CHECK(single.terms().at({1, 0}) == 1);
    CHECK(single.terms().at({0, 1}) == 1);

    const MultivariatePolynomial hook = schur_poly({{2, 1}}, 2);
    CHECK(hook.terms().size() == 2);
    CHECK(hook.terms().at({2, 1}) == 1);
    CHECK(hook.terms().at({1, 2}) == 1);

    CHECK(schur_poly({{1, 1, 1}}, 2).terms().empty());
    CHECK_THROWS(schur_poly({{1, 2}}, 2));  // not weakly decreasing
}

TEST_CASE("schur_poly is symmetric") {
    for (const auto& lambda : {IntegerPartition{{3, 1}}, IntegerPartition{{2, 2, 1}},
                               IntegerPartition{{4, 2}}}) {
        CHECK(schur_poly(lambda, 3).symmetric());
    }
}

TEST_CASE("bialternant point values") {
    CHECK(bialternant_eval({{1}}, {mpq_class(2), mpq_class(3)}) == 5);
    CHECK(bialternant_eval({{2, 1}}, {mpq_class(1), mpq_class(2)}) == 6);
    CHECK(bialternant_eval({{}}, {mpq_class(7, 3), mpq_class(-2)}) == 1);
    CHECK_THROWS(bialternant_eval({{1}}, {mpq_class(2), mpq_class(2)}));
}

TEST_CASE("SSYT expansion equals the bialternant ratio") {
    for (long m : {2L, 3L}) {
        const auto points = rational_points(m, 5, 99);
        for (const auto& lambda : partitions_up_to(5, m + 1)) {
            const MultivariatePolynomial poly = schur_poly(lambda, m);
            for (const auto& p : points) {
                CHECK(poly.eval(p) == bialternant_eval(lambda, p));
            }
        }
    }
}

TEST_CASE("green_parafermi_sum small cases") {
    const MultivariatePolynomial s1m2 = green_parafermi_sum(1, 2);
    // 1 + (x1 + x2) + x1 x2
    CHECK(s1m2.terms().size() == 4);
    CHECK(s1m2.terms().at({0, 0}) == 1);
    CHECK(s1m2.terms().at({1, 0}) == 1);
    CHECK(s1m2.terms().at({0, 1}) == 1);
    CHECK(s1m2.terms().at({1, 1}) == 1);

    const MultivariatePolynomial s1m1 = green_parafermi_sum(1, 1);
    CHECK(s1m1.terms().size() == 2);
    CHECK(s1m1.terms().at({0}) == 1);
    CHECK(s1m1.terms().at({1}) == 1);

    // Six shapes fit in the 2x2 box; the sum equals their explicit total.
    long shapes = 0;
    MultivariatePolynomial manual(2, 4);
    for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= a; ++b) {
            std::vector<long> parts;
            if (a) parts.push_back(a);
            if (b) parts.push_back(b);
            ++shapes;
            manual = manual.plus(schur_poly(IntegerPartition{parts}, 2).recapped(4));
        }
    CHECK(shapes == 6);
    CHECK(green_parafermi_sum(2, 2) == manual);

    // Nonnegative coefficients, constant term 1.
    for (long s : {1L, 2L, 3L}) {
        for (long m : {2L, 3L}) {
            const MultivariatePolynomial sum = green_parafermi_sum(s, m);
            CHECK(sum.terms().at(std::vector<long>(static_cast<size_t>(m), 0)) == 1);
            for (const auto& [e, c] : sum.terms()) CHECK(c > 0);
        }
    }
    CHECK_THROWS(green_parafermi_sum(7, 2));
}

TEST_CASE("green_parafermi_det") {
    CHECK(green_parafermi_det(1, 1, {mpq_class(1, 2)}) == mpq_class(3, 2));

    // M = 1 reduces to the geometric sum 1 + x + ... + x^s.
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> numer(2, 9);
    for (long s = 1; s <= 5; ++s) {
        const mpq_class x(numer(rng), 7);
        mpq_class geom = 0, pw = 1;
        for (long j = 0; j <= s; ++j) {
            geom += pw;
            pw *= x;
        }
        CHECK(green_parafermi_det(s, 1, {x}) == geom);
    }

    // Sum and determinant routes agree at random rational points.
    for (long s : {1L, 2L, 3L}) {
        for (long m : {2L, 3L}) {
            const MultivariatePolynomial sum = green_parafermi_sum(s, m);
            for (const auto& p : rational_points(m, 8, 1234 + static_cast<unsigned>(10 * s + m))) {
                CHECK(sum.eval(p) == green_parafermi_det(s, m, p));
            }
        }
    }
}

TEST_CASE("littlewood") {
    CHECK(littlewood_check(2, 6, 2).match);
    CHECK(littlewood_check(3, 5, 3).match);

    // Single variable: both sides are 1 + x + ... + x^5.
    CHECK(littlewood_check(1, 5, 1).match);

    // For s >= M the bounded parastatistics sum is the same truncation.
    const MultivariatePolynomial green = green_parafermi_sum(6, 2).recapped(6);
    MultivariatePolynomial manual(2, 6);
    for (const auto& lambda : partitions_up_to(6, 2))
        manual = manual.plus(schur_poly(lambda, 2).recapped(6));
    CHECK(green == manual);

    CHECK_THROWS(littlewood_check(3, 6, 2));   // needs s >= M
    CHECK_THROWS(littlewood_check(7, 6, 7));   // M cap
    CHECK_THROWS(littlewood_check(2, 11, 2));  // degree cap
}

TEST_CASE("partition type invariants") {
    CHECK(IntegerPartition{{3, 2, 2}}.weight() == 7);
    CHECK(IntegerPartition{{3, 2, 2}}.length() == 3);
    CHECK(IntegerPartition{{3, 2, 2}}.largest() == 3);
    CHECK(IntegerPartition{{}}.weight() == 0);
    CHECK(IntegerPartition{{2, 3}}.valid() == false);
    CHECK(IntegerPartition{{0}}.valid() == false);
}
