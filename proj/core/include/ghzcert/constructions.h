#pragma once

#include <string>
#include <vector>

#include "ghzcert/state_model.h"

namespace ghzcert::constructions {

// Generators for the known strongly nonlocal GHZ-like sets. Tuples are emitted
// family by family (S1, S2, ...), row-major over the family's index pair, and
// labelled "S1[i,j]", "S4", "B7" etc. so that families can be ablated.

/// 26 states in C^3 x C^3 x C^3.
StateSet c333();

/// 54 states in C^3 x C^4 x C^5.
StateSet c345();

/// d^3 - (d-2)^3 states in (C^d)^{x3}; d odd, d >= 3. odd_d(3) == c333().
StateSet odd_d(int d);

/// d^3 - (d-2)^3 + 2 states in (C^d)^{x3}; d even, d >= 4.
/// At d = 4 the last family's two kets share their B and C coordinates; the
/// set is emitted as defined and the validators report it.
StateSet even_d(int d);

/// 16 weight-4 tuples partitioning the computational basis of C^4 x C^4 x C^4.
StateSet c444_weight4();

/// Family name of a tuple label: "S1[0,1]" -> "S1".
std::string family_of(const GhzTuple& tuple);

/// Copy of `set` without the tuples whose family is listed.
StateSet drop_families(const StateSet& set, const std::vector<std::string>& families);

/// Dispatch by CLI name: c333, c345, odd, even, c444w4. `d` is used by odd/even only.
StateSet by_name(const std::string& name, int d);

}  // namespace ghzcert::constructions
