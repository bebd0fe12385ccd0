#pragma once

#include "rightsplit/group.hpp"
#include "rightsplit/matgrp.hpp"

namespace rsplit {

/// Builds a group from a spec string:
///   gl2:q | sl2:q | pgl2:q | psl2:q | cyclic:n | sym:n | table:FILE
/// q must be a prime power (at most 31 for the matrix families).
GroupPtr parse_group_spec(const std::string& spec);

/// Subgroup of a previously built group from a spec string:
///   full | derived | det-power:n (matrix groups) | gens:i,j,...
Subgroup parse_subgroup_spec(const GroupPtr& g, const std::string& spec);

/// Splits a prime power q into (p, r); throws NotPrimePower otherwise.
std::pair<std::int64_t, int> split_prime_power(std::int64_t q);

} // namespace rsplit
