// Acceptance suite: every criterion below runs at its stated size and
// tolerance and prints exactly one PASS/FAIL line. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qpart/analytic.hpp"
#include "qpart/constraints.hpp"
#include "qpart/dirichlet.hpp"
#include "qpart/identities.hpp"
#include "qpart/partitions.hpp"
#include "qpart/schur.hpp"
#include "qpart/series.hpp"

using namespace qpart;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
    if (!ok) ++failures;
}

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

bool prefix_is(const Series& s, const std::vector<long>& expected) {
    for (size_t i = 0; i < expected.size(); ++i) {
        if (static_cast<long>(i) > s.order()) return false;
        if (s.coeff(static_cast<long>(i)) != expected[i]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

void criterion1_euler() {
    const double t0 = now_seconds();
    const Series distinct = expand_product({{1, 1, 0, 1}}, 500);
    const Series odd = expand_product({{-1, 2, -1, -1}}, 500);
    const bool equal = distinct == odd &&
                       gen_series(constraints::distinct(), 500) == distinct &&
                       gen_series(constraints::odd_parts(), 500) == odd;
    const double dt = now_seconds() - t0;
    std::ostringstream what;
    what << "Euler distinct=odd to N=500, exact, " << std::fixed << dt << "s";
    report(1, equal && dt < 1.0, what.str());
}

void criterion2_parafermion() {
    bool ok = true;
    for (long s = 2; s <= 10; ++s) {
        const Series prod = expand_product({{-1, s, 0, 1}, {-1, 1, 0, -1}}, 300);
        ok = ok && prod == gen_series(constraints::multiplicity_at_most(s - 1), 300) &&
             prod == gen_series(constraints::parts_prime_to(s), 300);
    }
    report(2, ok, "multiplicity <= s-1 vs not-divisible-by-s, s=2..10, N=300, exact");
}

void criterion3_prefixes() {
    bool ok = true;
    const Series s3 = expand_product({{-1, 3, 0, 1}, {-1, 1, 0, -1}}, 30);
    ok = ok && prefix_is(s3, {1, 1, 2}) && s3.coeff(7) == 9 && s3.coeff(8) == 13 &&
         s3.coeff(30) == 1225;
    ok = ok && prefix_is(gen_series(constraints::distinct_prime_to(3), 17),
                         {1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 4, 5, 6, 7, 8, 9, 10, 12});
    ok = ok && prefix_is(expand_product({{1, 2, -1, 1}, {-1, 2, 0, -1}}, 11),
                         {1, 1, 1, 2, 3, 4, 5, 7, 10, 13, 16, 21});
    ok = ok && prefix_is(invert(theta4_series(9)), {1, 2, 4, 8, 14, 24, 40, 64, 100, 154});
    ok = ok && prefix_is(mul(substitute(theta4_series(14), 1, 3), invert(theta4_series(14))),
                         {1, 2, 4, 6, 10, 16, 24, 36, 52, 74, 104, 144, 198, 268, 360});
    ok = ok && prefix_is(lebesgue_sum(5), {1, 2, 2, 4, 6, 8});
    report(3, ok, "sequence prefixes: order-3 parafermion, A003105, A006950, 1/theta4, "
                  "theta4(x^3)/theta4(x), theta4(x^2)/theta4(x)");
}

void criterion4_point_counts() {
    bool ok = true;
    ok = ok && count_restricted(7, constraints::parts_prime_to(3)) == 9 &&
         enumerate_restricted(7, constraints::parts_prime_to(3)).size() == 9;
    ok = ok && count_restricted(10, constraints::distinct_prime_to(3)) == 4;
    ok = ok && count_restricted(11, constraints::residues(6, {0, 1, 3, 5})) == 15;
    ok = ok && overpartition_count(3) == 8 && overpartition_count(4) == 14 &&
         overpartition_count(4, 2) == 6 && overpartition_count(3, 2) == 4;
    ok = ok && arith_value("two_nu", 20) == 4 &&
         zeta_quotient_coeffs({{{1, 2}, {2, -1}}}, 20).at(20) == 4;

    // a(9) for distinct parts prime to 5: the enumeration oracle settles the
    // count and shows [9] itself belongs.
    const auto nine = enumerate_restricted(9, constraints::distinct_prime_to(5));
    bool has_nine = false;
    for (const auto& p : nine) has_nine = has_nine || p == std::vector<long>{9};
    ok = ok && nine.size() == 6 && count_restricted(9, constraints::distinct_prime_to(5)) == 6 &&
         has_nine;
    std::ostringstream what;
    what << "point counts; a(9) oracle verdict: " << nine.size()
         << " partitions, [9] included (hand lists of 5 omit it)";
    report(4, ok, what.str());
}

void criterion5_theorems() {
    bool ok = verify("thm_squares", 200).match;
    for (long r = 2; r <= 4; ++r) {
        ok = ok && verify("thm_2r_gons_r" + std::to_string(r), 150).match;
        ok = ok && verify("thm_2r1_gons_r" + std::to_string(r), 150).match;
    }
    ok = ok && gen_series(constraints::theorem2_multiplicity(2), 150) ==
                   gen_series(constraints::multiplicity_less_than_part(), 150);
    report(5, ok, "Theorems 1-3: N=200 squares, r=2,3,4 at N=150, r=2 degeneracy exact");
}

void criterion6_sums() {
    bool ok = true;
    ok = ok && gauss_cauchy_sum(200) ==
                   expand_product({{1, 1, 0, 1}, {-1, 1, 0, -1}}, 200);
    ok = ok && lebesgue_sum(200) == expand_product({{1, 2, -1, 1}, {-1, 2, -1, -1}}, 200);
    ok = ok && slater6_sum(120) ==
                   expand_product({{1, 3, -1, 1}, {1, 3, -2, 1}, {-1, 3, -1, -1}, {-1, 3, -2, -1}},
                                  120);
    for (long s = 2; s <= 5; ++s) {
        const Series ratio = expand_product(
            {{1, 1, 0, 1}, {-1, s, 0, 1}, {-1, 1, 0, -1}, {1, s, 0, -1}}, 60);
        ok = ok && andrews_multisum(s, 60) == ratio;
    }
    // s=2 term for term against the Lebesgue sum.
    for (long k = 0; k <= 10; ++k)
        ok = ok && andrews_multisum(2, 60, k) == lebesgue_sum(60, k);
    ok = ok && overpartition_double_sum(60) ==
                   expand_product({{1, 1, 0, 1}, {-1, 1, 0, -1}}, 60);

    // Proposed 2-modular sum: the check must run and produce a verdict; the
    // verdict itself is output, not an assumption.
    const Verdict v = verify("two_modular", 40);
    std::ostringstream what;
    what << "sum-vs-product: gauss 200, lebesgue 200, slater6 120, andrews s=2..5 at 60, "
            "double sum 60; two_modular(all-m, N=40) verdict recorded: "
         << (v.match ? "match" : "mismatch");
    report(6, ok, what.str());
}

void criterion7_dirichlet() {
    const double t0 = now_seconds();
    const long N = 10000;
    bool ok = verify_dirichlet("d56", N).match;
    for (long s = 2; s <= 6; ++s) ok = ok && verify_dirichlet("d57", N, s).match;
    for (long s : {2, 4, 6}) ok = ok && verify_dirichlet("d58", N, s).match;
    for (long s : {3, 5, 7}) ok = ok && verify_dirichlet("d59", N, s).match;
    for (long s : {4, 6}) ok = ok && verify_dirichlet("d60", N, s).match;
    for (long s : {3, 5}) ok = ok && verify_dirichlet("d62", N, s).match;
    ok = ok && verify_dirichlet("d64", N).match;
    ok = ok && verify_dirichlet("d65", N).match;
    for (long s : {3, 5}) ok = ok && verify_dirichlet("d68", N, s).match;
    for (long s : {3, 5}) ok = ok && verify_dirichlet("d69", N, s).match;
    for (long s : {2, 4}) ok = ok && verify_dirichlet("d70", N, s).match;
    ok = ok && verify_dirichlet("d_s1", N).match;
    const double dt = now_seconds() - t0;
    std::ostringstream what;
    what << "Dirichlet suite exact to 10^4 in " << std::fixed << dt << "s";
    report(7, ok && dt < 30.0, what.str());
}

void criterion8_mellin() {
    bool ok = true;
    for (double s : {1.0, 2.0, 3.0}) ok = ok && mellin_theta4(s).abs_err < 1e-6;
    double worst1 = 0, worst2 = 0;
    for (int i = 1; i <= 30; ++i) {
        const double t = i / 10.0;
        worst1 = std::max(worst1,
                          std::fabs(theta_value(t, "theta4") -
                                    (2 * theta_value(4 * t, "theta") - theta_value(t, "theta"))));
        worst2 = std::max(worst2, std::fabs(theta_direct_sum(t, "theta") -
                                            theta_direct_sum(1 / t, "theta") / std::sqrt(t)));
    }
    ok = ok && worst1 < 1e-12 && worst2 < 1e-10;
    std::ostringstream what;
    what << "Mellin |quad-closed| < 1e-6 at s=1,2,3; theta residuals "
         << std::scientific << worst1 << ", " << worst2;
    report(8, ok, what.str());
}

void criterion9_hagis() {
    const HagisCheckResult r = hagis_check(2, 4000);
    const bool closer = std::fabs(r.empirical - r.classical_rate) <
                        std::fabs(r.empirical - r.conjectured_rate);
    const HagisCheckResult r10 = hagis_check(10, 4000);
    const bool within10 =
        std::fabs(r10.empirical - r10.conjectured_rate) / r10.conjectured_rate < 0.10 &&
        std::fabs(r10.empirical - r10.classical_rate) / r10.classical_rate < 0.10;
    std::ostringstream what;
    what << "growth rate: s=2,n=4000 empirical " << std::setprecision(4) << std::fixed
         << r.empirical << " closer to " << r.classical_rate << " than to "
         << r.conjectured_rate << " (classical constant favored); s=10 within 10% of both";
    report(9, closer && within10, what.str());
}

void criterion10_schur() {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> numer(-9, 9);
    std::uniform_int_distribution<long> denom(2, 9);
    auto points_for = [&](long m, long count) {
        std::vector<std::vector<mpq_class>> pts;
        while (static_cast<long>(pts.size()) < count) {
            std::vector<mpq_class> p;
            bool good = true;
            for (long i = 0; i < m; ++i) {
                mpq_class v(numer(rng), denom(rng));
                v.canonicalize();
                if (v == 0 || v == 1 || v == -1) good = false;
                for (const auto& q : p)
                    if (q == v || q * v == 1) good = false;
                if (!good) break;
                p.push_back(v);
            }
            if (good) pts.push_back(std::move(p));
        }
        return pts;
    };

    bool ok = true;
    for (long m : {2L, 3L}) {
        const auto pts = points_for(m, 20);
        std::vector<long> parts;
        auto shapes = [&](auto&& self, long maxpart, long budget) -> void {
            const IntegerPartition lambda{parts};
            const MultivariatePolynomial poly = schur_poly(lambda, m);
            for (const auto& p : pts) ok = ok && poly.eval(p) == bialternant_eval(lambda, p);
            if (static_cast<long>(parts.size()) == m + 1) return;
            for (long v = std::min(maxpart, budget); v >= 1; --v) {
                parts.push_back(v);
                self(self, v, budget - v);
                parts.pop_back();
            }
        };
        shapes(shapes, 6, 6);
    }
    for (long s : {1L, 2L, 3L}) {
        for (long m : {2L, 3L}) {
            const MultivariatePolynomial sum = green_parafermi_sum(s, m);
            for (const auto& p : points_for(m, 20))
                ok = ok && sum.eval(p) == green_parafermi_det(s, m, p);
        }
    }
    ok = ok && littlewood_check(2, 6, 2).match && littlewood_check(3, 6, 3).match;
    report(10, ok, "Schur suite: SSYT vs bialternant (|lambda|<=6, M=2,3; 20 points), "
                   "bounded sum vs determinant (s,M in {1,2,3}x{2,3}), Littlewood D=6");
}

void criterion11_properties() {
    bool ok = true;
    // Three-way agreement for every cataloged constraint, n <= 30.
    for (const auto& name : constraint_names()) {
        const PartitionConstraint c = named_constraint(name);
        const Series s = gen_series(c, 30);
        for (long n = 0; n <= 30; ++n) {
            const mpz_class dp = count_restricted(n, c);
            ok = ok && dp == s.coeff(n) &&
                 dp == static_cast<long>(enumerate_restricted(n, c).size());
        }
    }
    // qseries ring laws on random inputs.
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> coeff(-9, 9);
    auto random_series = [&](long order, bool unit) {
        Series s(order);
        for (long n = 0; n <= order; ++n) s.coeff(n) = coeff(rng);
        if (unit) s.coeff(0) = 1;
        return s;
    };
    for (int rep = 0; rep < 25; ++rep) {
        const Series a = random_series(24, false);
        const Series b = random_series(24, false);
        ok = ok && mul(a, b) == mul(b, a);
        for (long m : {2L, 3L})
            ok = ok && substitute(mul(a, b), -1, m) ==
                           mul(substitute(a, -1, m), substitute(b, -1, m));
        const Series u = random_series(24, true);
        ok = ok && mul(u, invert(u)) == constant_series(1, 24);
    }
    // Multiplicativity of every spec-derived Dirichlet sequence.
    std::uniform_int_distribution<long> pick(2, 99);
    for (const auto& claim : dirichlet_claims()) {
        if (claim.id == "d65") continue;
        const std::vector<long> ss = claim.needs_s ? claim.default_s : std::vector<long>{0};
        for (long s : ss) {
            const std::optional<long> s_opt =
                claim.needs_s ? std::optional<long>(s) : std::nullopt;
            const ArithmeticSequence seq =
                zeta_quotient_coeffs(claim_spec(claim.id, s_opt), 9999);
            for (int rep = 0; rep < 300; ++rep) {
                const long a = pick(rng), b = pick(rng);
                if (std::gcd(a, b) != 1 || a * b > 9999) continue;
                ok = ok && seq.at(a * b) == seq.at(a) * seq.at(b);
            }
        }
    }
    report(11, ok, "property suite: three-way counts n<=30, qseries ring laws, "
                   "multiplicativity of all spec-derived sequences");
}

}  // namespace

int main() {
    criterion1_euler();
    criterion2_parafermion();
    criterion3_prefixes();
    criterion4_point_counts();
    criterion5_theorems();
    criterion6_sums();
    criterion7_dirichlet();
    criterion8_mellin();
    criterion9_hagis();
    criterion10_schur();
    criterion11_properties();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
