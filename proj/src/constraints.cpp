#include "qpart/constraints.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qpart {

namespace constraints {

namespace {
const auto all = [](long) { return true; };
const auto unrestricted_mult = [](long) { return MultSet::unrestricted(); };
}  // namespace

PartitionConstraint unrestricted() { return {"unrestricted", all, unrestricted_mult}; }

PartitionConstraint distinct() {
    return {"distinct", all, [](long) { return MultSet::zero_or_one(); }};
}

PartitionConstraint odd_parts() {
    return {"odd", [](long k) { return k % 2 == 1; }, unrestricted_mult};
}

PartitionConstraint parts_prime_to(long s) {
    return {"prime-to-" + std::to_string(s), [s](long k) { return k % s != 0; },
            unrestricted_mult};
}

PartitionConstraint distinct_prime_to(long s) {
    return {"distinct-prime-to-" + std::to_string(s), [s](long k) { return k % s != 0; },
            [](long) { return MultSet::zero_or_one(); }};
}

PartitionConstraint multiplicity_at_most(long t) {
    return {"mult-at-most-" + std::to_string(t), all,
            [t](long) { return MultSet::at_most(t); }};
}

PartitionConstraint multiplicity_less_than_part() {
    return {"mult-less-than-part", all, [](long k) { return MultSet::at_most(k - 1); }};
}

PartitionConstraint polygon_free(long gon) {
    return {"no-" + std::to_string(gon) + "-gons",
            [gon](long k) {
                for (long i = 1; polygonal(i, gon) <= k; ++i)
                    if (polygonal(i, gon) == k) return false;
                return true;
            },
            unrestricted_mult};
}

PartitionConstraint theorem2_multiplicity(long r) {
    return {"mult-at-most-(r-1)(k-1)-r" + std::to_string(r), all,
            [r](long k) { return MultSet::at_most((r - 1) * (k - 1)); }};
}

PartitionConstraint theorem3_multiplicity(long r) {
    // Part 2k-1 at most (2r-1)(k-1) times; even parts unbounded.
    return {"odd-mult-at-most-(2r-1)(k-1)-r" + std::to_string(r), all, [r](long part) {
                if (part % 2 == 0) return MultSet::unrestricted();
                const long k = (part + 1) / 2;
                return MultSet::at_most((2 * r - 1) * (k - 1));
            }};
}

PartitionConstraint odd_polygon_free(long gon) {
    return {"no-odd-" + std::to_string(gon) + "-gons",
            [gon](long k) {
                for (long i = 1; polygonal(2 * i - 1, gon) <= k; ++i)
                    if (polygonal(2 * i - 1, gon) == k) return false;
                return true;
            },
            unrestricted_mult};
}

PartitionConstraint residues(long modulus, std::vector<long> allowed) {
    std::string name = "mod" + std::to_string(modulus) + "-";
    for (long r : allowed) name += std::to_string(r);
    return {name,
            [modulus, allowed](long k) {
                return std::find(allowed.begin(), allowed.end(), k % modulus) != allowed.end();
            },
            unrestricted_mult};
}

PartitionConstraint odd_distinct_even_free() {
    return {"odd-at-most-once", all, [](long k) {
                return k % 2 == 1 ? MultSet::zero_or_one() : MultSet::unrestricted();
            }};
}

PartitionConstraint even_even_multiplicity() {
    return {"even-even-multiplicity", all, [](long k) {
                return k % 2 == 0 ? MultSet::even_unbounded() : MultSet::unrestricted();
            }};
}

PartitionConstraint odd_even_multiplicity() {
    return {"odd-even-multiplicity", all, [](long k) {
                return k % 2 == 1 ? MultSet::even_unbounded() : MultSet::unrestricted();
            }};
}

PartitionConstraint odd_even_multiplicity_prime_to(long s) {
    return {"odd-even-multiplicity-prime-to-" + std::to_string(s),
            [s](long k) { return k % s != 0; }, [](long k) {
                return k % 2 == 1 ? MultSet::even_unbounded() : MultSet::unrestricted();
            }};
}

PartitionConstraint theta_ratio_constraint(long s) {
    return {"odd-even-mult-up-to-" + std::to_string(2 * (s - 1)) + "-even-at-most-" +
                std::to_string(s - 1),
            all, [s](long k) {
                return k % 2 == 1 ? MultSet::even_up_to(2 * (s - 1)) : MultSet::at_most(s - 1);
            }};
}

PartitionConstraint parabose(long s) {
    return {"parabose-" + std::to_string(s), all,
            [s](long) { return MultSet::zero_or_at_least(s); }};
}

PartitionConstraint multiples_of(long s) {
    return {"multiples-of-" + std::to_string(s), [s](long k) { return k % s == 0; },
            unrestricted_mult};
}

}  // namespace constraints

namespace {

std::vector<PartitionConstraint> registry() {
    using namespace constraints;
    std::vector<PartitionConstraint> table = {
        unrestricted(),
        distinct(),
        odd_parts(),
        multiplicity_less_than_part(),
        polygon_free(4),
        odd_distinct_even_free(),
        even_even_multiplicity(),
        odd_even_multiplicity(),
        parabose(2),
    };
    for (long s = 2; s <= 10; ++s) {
        table.push_back(parts_prime_to(s));
        table.push_back(multiplicity_at_most(s - 1));
    }
    for (long s = 1; s <= 8; ++s) table.push_back(distinct_prime_to(s));
    for (long s = 1; s <= 4; ++s) table.push_back(multiples_of(s));
    for (long r = 2; r <= 8; ++r) {
        table.push_back(theorem2_multiplicity(r));
        table.push_back(polygon_free(2 * r));
        table.push_back(theorem3_multiplicity(r));
        table.push_back(odd_polygon_free(2 * r + 1));
    }
    table.push_back(residues(6, {1, 5}));
    table.push_back(residues(6, {0, 1, 3, 5}));
    table.push_back(residues(10, {1, 3, 7, 9}));
    table.push_back(residues(14, {1, 3, 5, 9, 11, 13}));
    table.push_back(residues(4, {0, 1, 3}));
    table.push_back(residues(8, {0, 1, 3, 5, 7}));
    for (long s = 2; s <= 8; ++s) table.push_back(theta_ratio_constraint(s));
    for (long s = 3; s <= 7; s += 2) table.push_back(odd_even_multiplicity_prime_to(s));
    for (long s = 3; s <= 8; ++s) table.push_back(parabose(s));
    return table;
}

}  // namespace

std::vector<std::string> constraint_names() {
    std::vector<std::string> names;
    for (const auto& c : registry()) names.push_back(c.name);
    return names;
}

PartitionConstraint named_constraint(const std::string& name) {
    for (auto& c : registry())
        if (c.name == name) return c;
    throw std::out_of_range("unknown constraint: " + name);
}

}  // namespace qpart
