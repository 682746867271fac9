#pragma once

#include <vector>

#include "actlab/act.hpp"

namespace actlab {

/// All acts of the given size over the monoid, as action tables sorted
/// lexicographically (flattened row-major). An action table is a monoid
/// homomorphism into the transformation monoid of the carrier, so the
/// search assigns a transformation to each monoid generator and extends
/// level by level, pruning inconsistent partial assignments.
/// With up_to_iso, exactly one representative per isomorphism class is
/// kept: the one whose table is the canonical (permutation-minimal) form.
std::vector<ActPtr> enumerate_acts(const MonoidPtr& m, int size, bool up_to_iso);

/// Lexicographically minimal action table over all permutations of the
/// act's elements; equal canonical forms characterize isomorphism.
std::vector<int> canonical_form(const Act& a);

/// Some bijective equivariant map exists. Throws MixedMonoids.
bool act_isomorphic(const Act& a, const Act& b);

}  // namespace actlab
