#pragma once

#include <optional>
#include <string>
#include <vector>

#include "actlab/act.hpp"
#include "actlab/ops.hpp"

namespace actlab {

/// Counterexample payload attached to a failed property check. Subsets
/// are bitsets over the act the verdict refers to; every witness can be
/// re-checked against the defining condition.
struct Witness {
  std::string kind;  // "subact" | "subact_pair" | "elements" | "note"
  std::vector<Bitset> subsets;
  std::vector<int> elements;
  std::string note;
};

struct PropertyVerdict {
  bool holds = false;
  std::optional<Witness> witness;

  static PropertyVerdict ok() { return PropertyVerdict{true, std::nullopt}; }
  static PropertyVerdict fail(Witness w) { return PropertyVerdict{false, std::move(w)}; }
};

/// B ∪ C ≠ A for every proper subact C (definitional scan). B may be the
/// whole act, in which case the verdict holds iff the act is simple.
PropertyVerdict is_superfluous(const Subact& b);

/// Finite-case characterization: B is superfluous iff B is contained in
/// every maximal subact. Must agree with the definitional scan.
PropertyVerdict is_superfluous_fast(const Subact& b);

/// Empty-set convention: the empty subset is superfluous (∅ ∪ C = C ≠ A),
/// so radical arithmetic stays evaluable when the radical is empty.
PropertyVerdict is_superfluous_subset(const ActPtr& act, const Bitset& b);

/// Criterion implementation: for every proper subact C, C ∩ B ≠ ∅
/// implies C ∪ B ≠ A.
PropertyVerdict is_coessential(const Subact& b);

/// Definitional implementation: the projection A → A/B is a cover.
PropertyVerdict is_coessential_def(const Subact& b);

/// f is an epimorphism whose restriction to every proper subact of the
/// source fails to be one; it suffices to test maximal subacts.
PropertyVerdict is_cover(const Hom& f);

/// Slow definitional scan over all proper subacts (cross-check path).
PropertyVerdict is_cover_all_subacts(const Hom& f);

PropertyVerdict is_hollow(const ActPtr& act);      // every proper subact superfluous
PropertyVerdict is_co_uniform(const ActPtr& act);  // every proper subact coessential

/// Characterization routes for is_hollow, used as cross-check oracles.
PropertyVerdict is_hollow_via_decomposition(const ActPtr& act);  // indecomposable ∧ co-uniform
PropertyVerdict is_hollow_via_local(const ActPtr& act);          // simple ∨ (cyclic ∧ local)

/// Partition into indecomposable components: connected components of the
/// relation joining a and b whenever aS ∩ bS ≠ ∅ (transitively closed).
std::vector<Subact> decompose(const ActPtr& act);
PropertyVerdict is_indecomposable(const ActPtr& act);

struct Cyclicity {
  bool is_cyclic = false;
  bool is_locally_cyclic = false;
  bool is_simple = false;
  std::vector<int> generators;  // elements a with aS = A
};

Cyclicity cyclicity(const ActPtr& act);

struct RadicalResult {
  Bitset subset;   // ∩ of maximal subacts; the whole act when none exist
  bool is_whole = false;  // Max(A) = ∅ convention case
  std::vector<Subact> maximals;
};

RadicalResult radical(const ActPtr& act);

/// Cross-check route: the union of all superfluous subacts (the whole
/// act counts when it is simple; the empty union is the empty set).
Bitset radical_as_union(const ActPtr& act);

/// Union of the proper superfluous subacts only; differs from
/// radical_as_union exactly on simple acts.
Bitset radical_proper_union(const ActPtr& act);

PropertyVerdict is_local_act(const ActPtr& act);   // exactly one maximal subact
PropertyVerdict is_local_monoid(const MonoidPtr& m);  // non-right-invertibles nonempty

PropertyVerdict is_uniserial(const ActPtr& act);   // subacts totally ordered
PropertyVerdict is_uniserial_via_hollow_subacts(const ActPtr& act);
PropertyVerdict is_uniserial_via_two_generated(const ActPtr& act);

/// All minimal generating sets: exactly the transversals picking one
/// element from each maximal cyclic class. Sorted lexicographically.
std::vector<std::vector<int>> minimal_generating_sets(const ActPtr& act);

/// Reading of the supplement definition: `strict` restricts supplement
/// candidates to proper subacts (as the definition is written), `relaxed`
/// also admits the whole act when it is minimal with B ∪ C = A.
enum class Reading { strict, relaxed };

/// C is a supplement of B: B ∪ C = A and no smaller subact of C joins
/// with B to the whole act. Requires both subacts proper (NotProper).
PropertyVerdict is_supplement(const ActPtr& act, const Subact& b, const Subact& c);

/// Criterion route: given B ∪ C = A, C is a supplement of B iff
/// C ∩ B = ∅ or C ∩ B is superfluous in C.
PropertyVerdict supplement_criterion(const ActPtr& act, const Subact& b, const Subact& c);

/// Supplement candidates of b under the given reading, in bitset order.
std::vector<Subact> supplements_of(const ActPtr& act, const Subact& b, Reading reading);

/// Every proper subact has a supplement; vacuous without proper subacts.
PropertyVerdict is_supplemented(const ActPtr& act, Reading reading);

/// Every indecomposable component is isomorphic to eS for an idempotent e.
PropertyVerdict is_projective(const ActPtr& act);

/// Slow oracle (|A| < 4): the canonical epimorphism from the free act on a
/// minimal generating set splits.
PropertyVerdict is_projective_by_lifting(const ActPtr& act);

namespace detail {
/// Supplement minimality without properness checks; candidates may be the
/// whole act. Shared by both readings.
bool supplement_minimal(const std::vector<Subact>& subs, const Bitset& b,
                        const Bitset& c, int act_size);
}

}  // namespace actlab
