#pragma once

#include <string>
#include <vector>

#include "actlab/act.hpp"
#include "actlab/monoid.hpp"

namespace actlab {

// Monoid builders. Every builder returns a validated table.

MonoidPtr make_trivial_monoid();
MonoidPtr make_cyclic_group(int n);
/// Monogenic monoid with x^(index+period) = x^index; size index+period.
MonoidPtr make_cyclic_monoid(int index, int period);
/// base with a new absorbing zero adjoined.
MonoidPtr make_zero_adjoined(const MonoidPtr& base);
/// {1} ∪ {r1..rn} with x·y = y on the r's.
MonoidPtr make_right_zero_identity(int n);
/// {1} ∪ {l1..ln} with x·y = x on the l's.
MonoidPtr make_left_zero_identity(int n);
/// {1..n} under min, with an adjoined identity eps; size n+1.
MonoidPtr make_min_chain(int n);
/// All maps on n points (apply left-to-right); n ≤ 3 kept enumerable.
MonoidPtr make_full_transformation(int n);

/// Builds a monoid from a catalog spec string, e.g. "trivial",
/// "cyclic_group:3", "cyclic_monoid:1,2", "zero_adjoined:cyclic_group:2",
/// "right_zero_identity:2", "min_chain:3", "full_transformation:2".
MonoidPtr monoid_from_spec(const std::string& spec);

/// The desk catalog: every builder instantiated up to size 4, plus the
/// full transformation monoids on 2 and 3 points.
std::vector<std::string> desk_catalog();

// Act builders.

/// The one-element act (trivial action is valid over every monoid).
ActPtr theta(const MonoidPtr& m, const std::string& label = "th");
/// S acting on itself by right multiplication.
ActPtr regular_act(const MonoidPtr& m);
/// {1..n} over the min-chain monoid of the same n; its subacts form the
/// chain {1} ⊂ {1,2} ⊂ ... ⊂ {1..n}.
ActPtr min_chain_act(int n);

}  // namespace actlab
