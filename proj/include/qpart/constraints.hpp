#pragma once

#include <string>
#include <vector>

#include "qpart/partitions.hpp"

namespace qpart {

// Named partition constraints. The identity catalog and the CLI `count`
// subcommand share this single table so the names cannot drift apart.

/// Constraint factories used both here and by the identity catalog.
namespace constraints {

PartitionConstraint unrestricted();
PartitionConstraint distinct();
PartitionConstraint odd_parts();
PartitionConstraint parts_prime_to(long s);
PartitionConstraint distinct_prime_to(long s);
PartitionConstraint multiplicity_at_most(long t);          // same bound for every part
PartitionConstraint multiplicity_less_than_part();         // k at most k-1 times
PartitionConstraint polygon_free(long gon);                // no g-gon parts
PartitionConstraint theorem2_multiplicity(long r);         // k at most (r-1)(k-1) times
PartitionConstraint theorem3_multiplicity(long r);         // 2k-1 at most (2r-1)(k-1) times
PartitionConstraint odd_polygon_free(long gon);            // no odd-subscripted g-gons
PartitionConstraint residues(long modulus, std::vector<long> allowed);
PartitionConstraint odd_distinct_even_free();              // odd parts at most once
PartitionConstraint even_even_multiplicity();              // even parts even multiplicity
PartitionConstraint odd_even_multiplicity();               // odd parts even multiplicity
PartitionConstraint odd_even_multiplicity_prime_to(long s);
PartitionConstraint theta_ratio_constraint(long s);  // odd mult in {0,2,..,2(s-1)}, even at most s-1
PartitionConstraint parabose(long s);                // multiplicity 0 or >= s
PartitionConstraint multiples_of(long s);

}  // namespace constraints

/// Every registered constraint name, in registry order.
std::vector<std::string> constraint_names();

/// Look up a named constraint; throws std::out_of_range for unknown names.
PartitionConstraint named_constraint(const std::string& name);

}  // namespace qpart
