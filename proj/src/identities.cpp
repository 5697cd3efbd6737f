#include "qpart/identities.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qpart/constraints.hpp"

namespace qpart {

namespace {

// Family shorthand: one factor pattern in the numerator or denominator.
FactorFamily num(int sign, long step, long offset) { return {sign, step, offset, +1}; }
FactorFamily den(int sign, long step, long offset) { return {sign, step, offset, -1}; }

SeriesBuilder families(std::string label, std::vector<FactorFamily> fams) {
    return {std::move(label), [fams = std::move(fams)](long order) {
                return expand_product(std::span<const FactorFamily>(fams), order);
            }};
}

SeriesBuilder counted(const PartitionConstraint& c) {
    return {"partitions: " + c.name, [c](long order) { return gen_series(c, order); }};
}

// prod_k (1 - x^(e(k))) / prod_k (1 - x^k) for a strictly increasing exponent
// sequence (squares and the polygonal runs; the family type only covers
// affine exponents).
SeriesBuilder excluded_exponent_product(std::string label, std::function<long(long)> exponent) {
    return {std::move(label), [exponent](long order) {
                Series acc = expand_product({den(-1, 1, 0)}, order);
                for (long k = 1; exponent(k) <= order; ++k) mul_binomial(acc, -1, exponent(k));
                return acc;
            }};
}

// Parafermionic product prod_k (1 + x^k + ... + x^((s-1)k)) as the family
// form prod (1-x^(sk))/(1-x^k).
Series parafermion_series(long s, long order) {
    return expand_product({num(-1, s, 0), den(-1, 1, 0)}, order);
}

// Graded parafermionic product prod_k (1 - x^k + x^(2k) - ... ), expanded
// per mode from the explicit alternating polynomial.
Series graded_parafermion_direct(long s, long order) {
    Series acc = constant_series(1, order);
    for (long k = 1; k <= order; ++k) {
        Series next(order);
        int sign = 1;
        for (long j = 0; j < s && j * k <= order; ++j) {
            for (long n = 0; n + j * k <= order; ++n) {
                if (sign > 0)
                    next.coeff(n + j * k) += acc.coeff(n);
                else
                    next.coeff(n + j * k) -= acc.coeff(n);
            }
            sign = -sign;
        }
        acc = std::move(next);
    }
    return acc;
}

// Coefficient n of the result <- coefficient 2n of the constrained series;
// all odd-index coefficients must vanish for the constraint to make sense.
SeriesBuilder even_compression(const PartitionConstraint& c) {
    return {"partitions of 2n: " + c.name, [c](long order) {
                const Series full = gen_series(c, 2 * order);
                Series out(order);
                for (long n = 0; n <= order; ++n) {
                    if (2 * n - 1 >= 0 && full.coeff(2 * n - 1) != 0)
                        throw std::logic_error("odd coefficient in an even-only series");
                    out.coeff(n) = full.coeff(2 * n);
                }
                return out;
            }};
}

SeriesBuilder theta4_ratio(long s) {
    return {"theta4(x^" + std::to_string(s) + ")/theta4(x)", [s](long order) {
                return mul(substitute(theta4_series(order), 1, s), invert(theta4_series(order)));
            }};
}

SeriesBuilder inverse_theta4() {
    return {"1/theta4", [](long order) { return invert(theta4_series(order)); }};
}

// Z_s(beta) / Delta_s(beta): parafermionic product over the graded form,
// the latter expanded per mode from its alternating polynomial.
SeriesBuilder parafermion_over_graded(long s) {
    return {"Z_" + std::to_string(s) + "/graded", [s](long order) {
                const Series z = parafermion_series(s, order);
                return mul(z, invert(graded_parafermion_direct(s, order)));
            }};
}

// acc += factor * x^shift * t
void add_shifted_scaled(Series& acc, const Series& t, long shift, const mpz_class& factor) {
    for (long n = 0; n + shift <= acc.order() && n <= t.order(); ++n)
        acc.coeff(n + shift) += factor * t.coeff(n);
}

// Inverse q-factorial ladder: invpoch[g] = 1/((1-x)(1-x^2)...(1-x^g)).
std::vector<Series> inverse_pochhammer(long max_g, long order) {
    std::vector<Series> inv;
    inv.reserve(static_cast<size_t>(max_g) + 1);
    inv.push_back(constant_series(1, order));
    for (long g = 1; g <= max_g; ++g) {
        Series next = inv.back();
        div_binomial(next, -1, g);
        inv.push_back(std::move(next));
    }
    return inv;
}

}  // namespace

Series gauss_cauchy_sum(long order, long max_top) {
    Series acc = constant_series(1, order);
    Series ratio = constant_series(1, order);  // (1+x)...(1+x^(k-1)) / (1-x)...(1-x^k)
    for (long k = 1; k <= order; ++k) {
        if (max_top >= 0 && k > max_top) break;
        if (k >= 2) mul_binomial(ratio, 1, k - 1);
        div_binomial(ratio, -1, k);
        add_shifted_scaled(acc, ratio, k, 2);
    }
    return acc;
}

Series lebesgue_sum(long order, long max_top) {
    Series acc = constant_series(1, order);
    Series ratio = constant_series(1, order);
    for (long k = 1; k * (k + 1) / 2 <= order; ++k) {
        if (max_top >= 0 && k > max_top) break;
        if (k >= 2) mul_binomial(ratio, 1, k - 1);
        div_binomial(ratio, -1, k);
        add_shifted_scaled(acc, ratio, k * (k + 1) / 2, 2);
    }
    return acc;
}

Series slater6_sum(long order, long max_top) {
    Series acc = constant_series(1, order);
    Series ratio = constant_series(1, order);
    for (long k = 1; k * k <= order; ++k) {
        if (max_top >= 0 && k > max_top) break;
        if (k >= 2) mul_binomial(ratio, 1, k - 1);
        div_binomial(ratio, -1, k);
        div_binomial(ratio, -1, 2 * k - 1);
        add_shifted_scaled(acc, ratio, k * k, 2);
    }
    return acc;
}

Series andrews_multisum(long s, long order, long max_top) {
    if (s < 2) throw std::invalid_argument("andrews_multisum: s must be >= 2");
    long top_max = 0;
    while ((top_max + 1) * (top_max + 2) / 2 <= order) ++top_max;
    if (max_top >= 0) top_max = std::min(top_max, max_top);

    const std::vector<Series> invpoch = inverse_pochhammer(top_max, order);

    // Numerator prefix products prod_{j=0}^{m-1} (1+x^j); the j = 0 factor
    // doubles the term.
    std::vector<Series> numer;
    numer.reserve(static_cast<size_t>(top_max) + 1);
    numer.push_back(constant_series(1, order));
    for (long m = 1; m <= top_max; ++m) {
        Series next = numer.back();
        if (m == 1) {
            for (long n = 0; n <= order; ++n) next.coeff(n) *= 2;
        } else {
            mul_binomial(next, 1, m - 1);
        }
        numer.push_back(std::move(next));
    }

    Series acc(order);
    // DFS over the remaining s-2 chain levels; each edge divides by the
    // q-factorial of the gap, the lowest level also divides by (x;x)_{n_1}.
    auto descend = [&](auto&& self, long level, long prev, long exponent,
                       const Series& partial) -> void {
        if (level == 0) {
            Series term = mul(partial, invpoch[static_cast<size_t>(prev)]);
            add_shifted_scaled(acc, term, exponent, 1);
            return;
        }
        for (long w = prev; w >= 0; --w) {
            const long e2 = exponent + w * w;
            if (e2 > order) continue;
            if (prev - w == 0) {
                self(self, level - 1, w, e2, partial);
            } else {
                Series next = mul(partial, invpoch[static_cast<size_t>(prev - w)]);
                self(self, level - 1, w, e2, next);
            }
        }
    };

    for (long m = 0; m <= top_max; ++m) {
        const long e0 = m * (m + 1) / 2;
        if (e0 > order) break;
        descend(descend, s - 2, m, e0, numer[static_cast<size_t>(m)]);
    }
    return acc;
}

Series overpartition_double_sum(long order) {
    Series acc = constant_series(1, order);
    mpz_class two = 2;
    auto rec = [&](auto&& self, long max_next, long sum, const Series& partial,
                   const mpz_class& weight) -> void {
        for (long v = max_next; v >= 1; --v) {
            if (sum + v > order) continue;
            Series next = partial;
            div_binomial(next, -1, v);
            add_shifted_scaled(acc, next, sum + v, weight);
            self(self, v - 1, sum + v, next, weight * 2);
        }
    };
    rec(rec, order, 0, constant_series(1, order), two);
    return acc;
}

Series two_modular_sum(long order, TwoModularMode mode) {
    Series acc = constant_series(1, order);

    // All partitions of `total` into exactly m distinct even parts.
    std::vector<long> parts;
    std::vector<std::vector<long>> solutions;
    auto enumerate = [&](auto&& self, long total, long m, long max_part) -> void {
        if (m == 0) {
            if (total == 0) solutions.push_back(parts);
            return;
        }
        // Remaining m parts are distinct even numbers below max_part.
        for (long v = std::min(max_part, total); v >= 2; v -= 2) {
            if (total - v < (m - 1) * m) continue;  // min sum of m-1 smaller evens
            parts.push_back(v);
            self(self, total - v, m - 1, v - 2);
            parts.pop_back();
        }
    };

    for (long n = 1; n <= order; ++n) {
        if (n == 2) continue;
        std::vector<long> admissible;
        for (long m = 1; m * (m + 1) <= n + m; ++m) {
            if ((n + m) % 2 != 0) continue;
            if (!(n > m || (n == 1 && m == 1))) continue;
            solutions.clear();
            parts.clear();
            enumerate(enumerate, n + m, m, n + m);
            if (!solutions.empty()) admissible.push_back(m);
        }
        if (admissible.empty()) continue;
        std::vector<long> selected;
        switch (mode) {
            case TwoModularMode::AllM: selected = admissible; break;
            case TwoModularMode::SmallestM: selected = {admissible.front()}; break;
            case TwoModularMode::LargestM: selected = {admissible.back()}; break;
        }
        for (long m : selected) {
            solutions.clear();
            parts.clear();
            enumerate(enumerate, n + m, m, n + m);
            for (const auto& sol : solutions) {
                Series term = constant_series(1, order);
                for (long j = 0; j < m; ++j) mul_binomial(term, 1, 1);  // (1+x)^m
                for (long part : sol) div_binomial(term, -1, part);
                add_shifted_scaled(acc, term, n, 1);
            }
        }
    }
    return acc;
}

namespace {

void append_euler_and_foundations(std::vector<IdentityRecord>& cat) {
    cat.push_back(
        {"euler_distinct_odd",
         "distinct parts and odd parts are equinumerous",
         "Euler; Andrews, The Theory of Partitions, Cor. 1.2",
         500,
         false,
         {families("prod (1+x^k)", {num(1, 1, 0)}),
          families("prod 1/(1-x^(2k-1))", {den(-1, 2, -1)}),
          counted(constraints::distinct()), counted(constraints::odd_parts())}});

    cat.push_back({"witten_cancellation",
                   "prod (1-x^k) times prod 1/(1-x^k) collapses to 1",
                   "index-style cancellation of a product with its inverse",
                   300,
                   false,
                   {{"product of the pair", [](long order) {
                         return mul(expand_product({num(-1, 1, 0)}, order),
                                    expand_product({den(-1, 1, 0)}, order));
                     }},
                    {"constant 1", [](long order) { return constant_series(1, order); }}}});

    for (long s = 2; s <= 10; ++s) {
        cat.push_back({"parafermion_multiplicity_s" + std::to_string(s),
                       "multiplicity at most " + std::to_string(s - 1) +
                           " equals no part divisible by " + std::to_string(s),
                       "Glaisher; Andrews, The Theory of Partitions, Cor. 1.3",
                       300,
                       false,
                       {families("prod (1-x^(sk))/(1-x^k)", {num(-1, s, 0), den(-1, 1, 0)}),
                        counted(constraints::multiplicity_at_most(s - 1)),
                        counted(constraints::parts_prime_to(s))}});
    }

    cat.push_back({"s3_prime_to_3",
                   "order-3 truncation: parts prime to 3",
                   "OEIS A000726",
                   300,
                   false,
                   {families("prod 1/((1-x^(3k-2))(1-x^(3k-1)))", {den(-1, 3, -2), den(-1, 3, -1)}),
                    families("prod (1-x^(3k))/(1-x^k)", {num(-1, 3, 0), den(-1, 1, 0)}),
                    counted(constraints::parts_prime_to(3))}});
}

void append_polygonal_theorems(std::vector<IdentityRecord>& cat) {
    cat.push_back({"thm_squares",
                   "each k at most k-1 times equals square-free parts",
                   "Andrews 1966; Sellers, polygonal generalizations",
                   200,
                   false,
                   {counted(constraints::multiplicity_less_than_part()),
                    excluded_exponent_product("prod (1-x^(k^2))/(1-x^k)",
                                              [](long k) { return polygonal(k, 4); }),
                    counted(constraints::polygon_free(4))}});

    for (long r = 2; r <= 8; ++r) {
        cat.push_back(
            {"thm_2r_gons_r" + std::to_string(r),
             "each k at most (r-1)(k-1) times equals no " + std::to_string(2 * r) + "-gon parts",
             "Sellers; polygonal exclusion, even case",
             150,
             false,
             {counted(constraints::theorem2_multiplicity(r)),
              excluded_exponent_product("prod (1-x^(2r-gon_k))/(1-x^k)",
                                        [r](long k) { return polygonal(k, 2 * r); }),
              counted(constraints::polygon_free(2 * r))}});

        cat.push_back({"thm_2r1_gons_r" + std::to_string(r),
                       "part 2k-1 at most (2r-1)(k-1) times equals no odd-indexed " +
                           std::to_string(2 * r + 1) + "-gon parts",
                       "Sellers; polygonal exclusion, odd case",
                       150,
                       false,
                       {counted(constraints::theorem3_multiplicity(r)),
                        excluded_exponent_product(
                            "prod (1-x^(odd (2r+1)-gon))/(1-x^k)",
                            [r](long k) { return polygonal(2 * k - 1, 2 * r + 1); }),
                        counted(constraints::odd_polygon_free(2 * r + 1))}});
    }
}

void append_graded(std::vector<IdentityRecord>& cat) {
    for (long s = 2; s <= 8; ++s) {
        const int top_sign = (s % 2 == 1) ? 1 : -1;
        cat.push_back({"graded_parafermion_s" + std::to_string(s),
                       "alternating order-" + std::to_string(s) +
                           " truncation equals (1+(-1)^(s-1)x^(sk))/(1+x^k)",
                       "graded truncation of the alternating product",
                       200,
                       false,
                       {{"per-mode alternating polynomial",
                         [s](long order) { return graded_parafermion_direct(s, order); }},
                        {"inverse of the inverse-graded product",
                         [s, top_sign](long order) {
                             return invert(
                                 expand_product({num(1, 1, 0), den(top_sign, s, 0)}, order));
                         }},
                        families("prod (1+(-1)^(s-1)x^(sk))/(1+x^k)",
                                 {num(top_sign, s, 0), den(1, 1, 0)})}});
    }

    cat.push_back(
        {"schur_1926",
         "distinct parts prime to 3 equal parts congruent to 1,5 mod 6",
         "Schur 1926; OEIS A003105",
         200,
         false,
         {families("prod (1+x^(3k-2))(1+x^(3k-1))", {num(1, 3, -2), num(1, 3, -1)}),
          families("prod (1-x^(6k-3))/(1-x^(2k-1))", {num(-1, 6, -3), den(-1, 2, -1)}),
          families("prod 1/((1-x^(6k-5))(1-x^(6k-1)))", {den(-1, 6, -5), den(-1, 6, -1)}),
          counted(constraints::distinct_prime_to(3)),
          counted(constraints::residues(6, {1, 5}))}});

    cat.push_back({"igppf4",
                   "inverse graded order-4: odd parts at most once",
                   "OEIS A006950",
                   200,
                   false,
                   {families("prod (1+x^k)/(1-x^(4k))", {num(1, 1, 0), den(-1, 4, 0)}),
                    families("prod (1+x^(2k-1))/(1-x^(2k))", {num(1, 2, -1), den(-1, 2, 0)}),
                    counted(constraints::odd_distinct_even_free()),
                    counted(constraints::even_even_multiplicity()),
                    counted(constraints::residues(4, {0, 1, 3}))}});

    cat.push_back(
        {"igppf5",
         "inverse graded order-5: distinct parts prime to 5; 1,3,7,9 mod 10",
         "OEIS A096938",
         200,
         false,
         {families("prod (1+x^k)/(1+x^(5k))", {num(1, 1, 0), den(1, 5, 0)}),
          families("prod (1+x^(5k-1))(1+x^(5k-2))(1+x^(5k-3))(1+x^(5k-4))",
                   {num(1, 5, -1), num(1, 5, -2), num(1, 5, -3), num(1, 5, -4)}),
          families("prod 1/((1-x^(10k-1))(1-x^(10k-3))(1-x^(10k-7))(1-x^(10k-9)))",
                   {den(-1, 10, -1), den(-1, 10, -3), den(-1, 10, -7), den(-1, 10, -9)}),
          counted(constraints::distinct_prime_to(5)),
          counted(constraints::residues(10, {1, 3, 7, 9}))}});

    cat.push_back(
        {"igppf6",
         "inverse graded order-6: parts congruent to 0,1,3,5 mod 6 "
         "(all residue factors enter with a minus sign)",
         "OEIS A096981",
         200,
         false,
         {families("prod (1+x^k)/(1-x^(6k))", {num(1, 1, 0), den(-1, 6, 0)}),
          families("prod (1+x^(3k-1))(1+x^(3k-2))/(1-x^(3k))",
                   {num(1, 3, -1), num(1, 3, -2), den(-1, 3, 0)}),
          families("prod 1/((1-x^(6k))(1-x^(6k-1))(1-x^(6k-3))(1-x^(6k-5)))",
                   {den(-1, 6, 0), den(-1, 6, -1), den(-1, 6, -3), den(-1, 6, -5)}),
          counted(constraints::residues(6, {0, 1, 3, 5}))}});

    for (long s = 4; s <= 8; s += 2) {
        cat.push_back(
            {"prop1_even_s" + std::to_string(s),
             "even order: odd parts free, even parts multiples of " + std::to_string(s / 2),
             "residue characterization, even case",
             200,
             false,
             {families("prod (1+x^k)/(1-x^(sk))", {num(1, 1, 0), den(-1, s, 0)}),
              families("prod 1/((1-x^(2k-1))(1-x^(sk)))", {den(-1, 2, -1), den(-1, s, 0)}),
              [s] {
                  std::vector<FactorFamily> fams = {den(-1, s, 0)};
                  for (long r = 1; r < s; r += 2) fams.push_back(den(-1, s, r - s));
                  return families("prod over residues 0,1,3,...,s-1 mod s", std::move(fams));
              }(),
              [s] {
                  std::vector<long> allowed = {0};
                  for (long r = 1; r < s; r += 2) allowed.push_back(r);
                  return counted(constraints::residues(s, allowed));
              }()}});
    }

    for (long s = 3; s <= 7; s += 2) {
        cat.push_back(
            {"prop1_odd_s" + std::to_string(s),
             "odd order: distinct parts prime to " + std::to_string(s) +
                 "; odd residues mod " + std::to_string(2 * s) + " except " + std::to_string(s),
             "residue characterization, odd case",
             200,
             false,
             {families("prod (1+x^k)/(1+x^(sk))", {num(1, 1, 0), den(1, s, 0)}),
              families("prod 1/((1-x^(2k-1))(1+x^(sk)))", {den(-1, 2, -1), den(1, s, 0)}),
              [s] {
                  std::vector<FactorFamily> fams;
                  for (long r = 1; r < 2 * s; r += 2)
                      if (r != s) fams.push_back(den(-1, 2 * s, r - 2 * s));
                  return families("prod over odd residues except s mod 2s", std::move(fams));
              }(),
              counted(constraints::distinct_prime_to(s)),
              [s] {
                  std::vector<long> allowed;
                  for (long r = 1; r < 2 * s; r += 2)
                      if (r != s) allowed.push_back(r);
                  return counted(constraints::residues(2 * s, allowed));
              }()}});
    }

    for (long s = 2; s <= 8; ++s) {
        std::vector<SeriesBuilder> builders;
        if (s % 2 == 0) {
            builders.push_back(
                families("prod (1+x^k)/(1-x^(sk))", {num(1, 1, 0), den(-1, s, 0)}));
            builders.push_back({"distinct parts prime to s/2 times multiples of s/2",
                                [s](long order) {
                                    return mul(gen_series(constraints::distinct_prime_to(s / 2),
                                                          order),
                                               gen_series(constraints::multiples_of(s / 2),
                                                          order));
                                }});
        } else {
            builders.push_back(
                families("prod (1+x^k)/(1+x^(sk))", {num(1, 1, 0), den(1, s, 0)}));
            builders.push_back(counted(constraints::distinct_prime_to(s)));
        }
        cat.push_back({"fermion_truncation_s" + std::to_string(s),
                       "inverse graded order-" + std::to_string(s) + " as truncated fermions",
                       "fermionic truncation of the distinct-parts product",
                       200, false, std::move(builders)});
    }
}

void append_theta(std::vector<IdentityRecord>& cat) {
    {
        std::vector<SeriesBuilder> builders;
        for (long s = 4; s <= 8; s += 2) {
            builders.push_back(parafermion_over_graded(s));
        }
        builders.push_back(families("prod (1+x^k)/(1-x^k)", {num(1, 1, 0), den(-1, 1, 0)}));
        builders.push_back(inverse_theta4());
        cat.push_back({"mixed_even",
                       "parafermion over graded, any even order, equals 1/theta4",
                       "Gauss; OEIS A015128",
                       200, false, std::move(builders)});
    }

    for (long s = 3; s <= 7; s += 2) {
        cat.push_back(
            {"mixed_odd_s" + std::to_string(s),
             "parafermion over graded, odd order: theta4(x^s)/theta4(x)",
             "theta quotient form of the odd mixture",
             200,
             false,
             {parafermion_over_graded(s),
              families("prod (1+x^k)(1-x^(sk))/((1-x^k)(1+x^(sk)))",
                       {num(1, 1, 0), num(-1, s, 0), den(-1, 1, 0), den(1, s, 0)}),
              theta4_ratio(s)}});
    }

    cat.push_back({"theta4_gauss",
                   "Gauss/Cauchy single sum for prod (1+x^k)/(1-x^k)",
                   "Cauchy's identity at a = 1",
                   200,
                   false,
                   {{"single sum", [](long order) { return gauss_cauchy_sum(order); }},
                    families("prod (1+x^k)/(1-x^k)", {num(1, 1, 0), den(-1, 1, 0)}),
                    inverse_theta4()}});

    cat.push_back({"theta4_inv_def",
                   "1/theta4 as products and as partitions of 2n with odd parts "
                   "in even multiplicity",
                   "OEIS A015128",
                   200,
                   false,
                   {inverse_theta4(),
                    families("prod 1/((1-x^(2k-1))(1-x^k))", {den(-1, 2, -1), den(-1, 1, 0)}),
                    even_compression(constraints::odd_even_multiplicity()),
                    {"overpartition weights", [](long order) {
                         Series out(order);
                         for (long n = 0; n <= order; ++n)
                             out.coeff(n) = overpartition_count(n);
                         return out;
                     }}}});

    cat.push_back(
        {"slater6",
         "theta4(x^3)/theta4(x): Slater-list sum against the product",
         "Slater (#6), corrected by Sills; OEIS A098151",
         120,
         false,
         {{"Slater sum", [](long order) { return slater6_sum(order); }},
          families("prod (1+x^(3k-1))(1+x^(3k-2))/((1-x^(3k-1))(1-x^(3k-2)))",
                   {num(1, 3, -1), num(1, 3, -2), den(-1, 3, -1), den(-1, 3, -2)}),
          theta4_ratio(3)}});

    for (long s = 2; s <= 8; ++s) {
        std::vector<SeriesBuilder> builders = {
            families("prod (1+x^k)(1-x^(sk))/((1-x^k)(1+x^(sk)))",
                     {num(1, 1, 0), num(-1, s, 0), den(-1, 1, 0), den(1, s, 0)}),
            families("prod (1-x^(sk))(1-x^(s(2k-1)))/((1-x^k)(1-x^(2k-1)))",
                     {num(-1, s, 0), num(-1, 2 * s, -s), den(-1, 1, 0), den(-1, 2, -1)}),
            theta4_ratio(s),
            even_compression(constraints::theta_ratio_constraint(s)),
        };
        if (s % 2 == 1)
            builders.push_back(even_compression(constraints::odd_even_multiplicity_prime_to(s)));
        cat.push_back({"prop2_s" + std::to_string(s),
                       "theta4(x^s)/theta4(x) counts partitions of 2n with bounded "
                       "odd/even multiplicities",
                       "theta quotient multiplicities", 200, false, std::move(builders)});
    }

    cat.push_back(
        {"a080054",
         "theta4(x^2)/theta4(x) as two products",
         "OEIS A080054",
         200,
         false,
         {families("prod (1+x^(2k-1))/(1-x^(2k-1))", {num(1, 2, -1), den(-1, 2, -1)}),
          families("prod (1+x^(2k-1))(1+x^k)", {num(1, 2, -1), num(1, 1, 0)}),
          theta4_ratio(2)}});

    cat.push_back({"lebesgue",
                   "Lebesgue single sum for theta4(x^2)/theta4(x)",
                   "Lebesgue; Andrews, The Theory of Partitions, Cor. 2.7",
                   200,
                   false,
                   {{"Lebesgue sum", [](long order) { return lebesgue_sum(order); }},
                    families("prod (1+x^(2k-1))/(1-x^(2k-1))", {num(1, 2, -1), den(-1, 2, -1)}),
                    theta4_ratio(2)}});

    cat.push_back({"overpartition_series",
                   "prod (1+x^k)/(1-x^k) generates overpartitions",
                   "Corteel-Lovejoy; OEIS A015128",
                   200,
                   false,
                   {families("prod (1+x^k)/(1-x^k)", {num(1, 1, 0), den(-1, 1, 0)}),
                    {"overpartition weights",
                     [](long order) {
                         Series out(order);
                         for (long n = 0; n <= order; ++n)
                             out.coeff(n) = overpartition_count(n);
                         return out;
                     }},
                    inverse_theta4()}});

    cat.push_back({"theta_ratio_s2",
                   "theta4(x^2)/theta4(x) counts overpartitions with no even parts",
                   "Corteel-Lovejoy restriction mod 2",
                   200,
                   false,
                   {families("prod (1+x^k)(1-x^(2k))/((1-x^k)(1+x^(2k)))",
                             {num(1, 1, 0), num(-1, 2, 0), den(-1, 1, 0), den(1, 2, 0)}),
                    {"overpartition weights, parts prime to 2",
                     [](long order) {
                         Series out(order);
                         for (long n = 0; n <= order; ++n)
                             out.coeff(n) = overpartition_count(n, 2);
                         return out;
                     }},
                    theta4_ratio(2)}});

    for (long s = 2; s <= 8; ++s) {
        std::vector<SeriesBuilder> builders = {
            {"multiple sum", [s](long order) { return andrews_multisum(s, order); }},
            families("prod (1+x^k)(1-x^(sk))/((1-x^k)(1+x^(sk)))",
                     {num(1, 1, 0), num(-1, s, 0), den(-1, 1, 0), den(1, s, 0)}),
        };
        if (s == 2)
            builders.push_back({"Lebesgue sum", [](long order) { return lebesgue_sum(order); }});
        cat.push_back({"andrews_multi_s" + std::to_string(s),
                       "multiple series for theta4(x^s)/theta4(x)",
                       "Andrews's multiple series transformation", 60, false,
                       std::move(builders)});
    }

    for (long s = 2; s <= 8; s += 2) {
        cat.push_back(
            {"restricted_over_s" + std::to_string(s),
             "overlined parts prime to " + std::to_string(s / 2) +
                 ", plain parts multiples of " + std::to_string(s / 2),
             "restricted overpartitions as a convolution",
             200,
             false,
             {families("prod (1+x^k)/(1-x^(sk))", {num(1, 1, 0), den(-1, s, 0)}),
              {"distinct prime to s/2 (*) multiples of s/2", [s](long order) {
                   return mul(gen_series(constraints::distinct_prime_to(s / 2), order),
                              gen_series(constraints::multiples_of(s / 2), order));
               }}}});
    }
}

void append_parastatistics(std::vector<IdentityRecord>& cat) {
    for (long s = 2; s <= 6; ++s) {
        cat.push_back(
            {"parabose_complement_s" + std::to_string(s),
             "per mode, truncated bosons plus the parabosonic complement restore "
             "the full boson (modes k <= 10)",
             "parabose occupation numbers 0, s, s+1, ...",
             100,
             false,
             {{"sum of the two occupation families",
               [s](long order) {
                   Series acc = constant_series(1, order);
                   for (long k = 1; k <= 10; ++k) {
                       // (1 + x^k + ... + x^((s-1)k)) + x^(sk)/(1 - x^k)
                       Series mode(order);
                       for (long j = 0; j < s && j * k <= order; ++j) mode.coeff(j * k) = 1;
                       Series tail(order);
                       if (s * k <= order) {
                           tail.coeff(s * k) = 1;
                           div_binomial(tail, -1, k);
                       }
                       acc = mul(acc, add(mode, tail));
                   }
                   return acc;
               }},
              {"prod_{k<=10} 1/(1-x^k)", [](long order) {
                   Series acc = constant_series(1, order);
                   for (long k = 1; k <= 10; ++k) div_binomial(acc, -1, k);
                   return acc;
               }}}});
    }

    for (long s = 2; s <= 8; ++s) {
        cat.push_back({"paraboson_product_s" + std::to_string(s),
                       "parabosonic modes: multiplicity 0 or >= " + std::to_string(s),
                       "parabose occupation numbers per mode",
                       150,
                       false,
                       {{"prod (1 + x^(sk)/(1-x^k))",
                         [s](long order) {
                             Series acc = constant_series(1, order);
                             for (long k = 1; s * k <= order; ++k) {
                                 Series tmp = acc;
                                 div_binomial(tmp, -1, k);
                                 add_shifted(acc, tmp, s * k);
                             }
                             return acc;
                         }},
                        counted(constraints::parabose(s))}});
    }

    cat.push_back({"over_double_sum",
                   "double sum over distinct part-size chains for overpartitions",
                   "overpartition double sum",
                   60,
                   false,
                   {{"double sum", [](long order) { return overpartition_double_sum(order); }},
                    families("prod (1+x^k)/(1-x^k)", {num(1, 1, 0), den(-1, 1, 0)})}});

    cat.push_back({"two_modular",
                   "proposed 2-modular sum for prod (1+x^(2k-1))/(1-x^(2k)) "
                   "(all admissible m enter for each n)",
                   "proposed identity; verdict is recorded output",
                   40,
                   true,
                   {{"proposed sum", [](long order) { return two_modular_sum(order); }},
                    families("prod (1+x^(2k-1))/(1-x^(2k))", {num(1, 2, -1), den(-1, 2, 0)})}});
}

std::vector<IdentityRecord> build_catalog() {
    std::vector<IdentityRecord> cat;
    append_euler_and_foundations(cat);
    append_polygonal_theorems(cat);
    append_graded(cat);
    append_theta(cat);
    append_parastatistics(cat);
    return cat;
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
    static const std::vector<IdentityRecord> cat = build_catalog();
    return cat;
}

const IdentityRecord& find_identity(const std::string& id) {
    for (const auto& rec : catalog())
        if (rec.id == id) return rec;
    throw std::invalid_argument("unknown identity: " + id);
}

Verdict verify(const IdentityRecord& rec, std::optional<long> order) {
    const long n = order.value_or(rec.default_order);
    std::vector<Series> built;
    built.reserve(rec.builders.size());
    for (const auto& b : rec.builders) built.push_back(b.build(n));
    Verdict out{true, std::nullopt};
    for (size_t i = 0; i < built.size(); ++i) {
        for (size_t j = i + 1; j < built.size(); ++j) {
            const Verdict v = compare_series(built[i], built[j]);
            if (v.match) continue;
            if (out.match || v.first_diff->index < out.first_diff->index) out = v;
        }
    }
    return out;
}

Verdict verify(const std::string& id, std::optional<long> order) {
    return verify(find_identity(id), order);
}

std::vector<VerifyAllRow> verify_all(double order_scale) {
    const auto& cat = catalog();
    std::vector<VerifyAllRow> rows(cat.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(cat.size()); ++i) {
        const IdentityRecord& rec = cat[static_cast<size_t>(i)];
        const long order =
            std::max<long>(8, std::lround(static_cast<double>(rec.default_order) * order_scale));
        const auto start = std::chrono::steady_clock::now();
        Verdict v = verify(rec, order);
        const auto stop = std::chrono::steady_clock::now();
        rows[static_cast<size_t>(i)] = {
            rec.id, rec.claim, order, std::move(v),
            std::chrono::duration<double, std::milli>(stop - start).count()};
    }
    return rows;
}

}  // namespace qpart
