#pragma once

#include <utility>
#include <vector>

#include "actlab/act.hpp"

namespace actlab {

/// Smallest subact containing the given generators; equals the union of
/// the cyclic subacts aS over the generators. Throws EmptyGenerators.
Subact generated_subact(const ActPtr& act, const std::vector<int>& generators);

/// All nonempty action-closed subsets. Every subact is a union of cyclic
/// subacts, so the list is the union-closure of the distinct cyclics,
/// deduplicated and sorted in bitset order.
std::vector<Subact> all_subacts(const ActPtr& act);

/// Maximal proper subacts, in bitset order.
std::vector<Subact> maximal_subacts(const ActPtr& act);

struct ReesQuotient {
  ActPtr act;      // surviving elements keep source order, zero class last
  Hom projection;  // the canonical surjection
  int zero;        // index of the collapsed class in the quotient
};

/// The Rees factor act A/B: all of B collapsed to a single zero element.
/// If b is the whole act the quotient is the one-element act.
ReesQuotient rees_quotient(const ActPtr& act, const Subact& b);

/// Quotient by a possibly-empty subset: empty set means no collapse
/// (identity projection, zero = -1). Used in radical arithmetic.
ReesQuotient quotient_by_subset(const ActPtr& act, const Bitset& b);

struct Coproduct {
  ActPtr act;
  std::vector<Hom> injections;
};

/// Disjoint union with componentwise action. Throws MixedMonoids.
Coproduct coproduct(const std::vector<ActPtr>& parts);

/// Pushout of two copies of the act glued along a proper subact b:
/// elements are b first, then copy a, then copy b of act∖b.
/// Throws NotProper when b is the whole act.
ActPtr amalgam(const ActPtr& act, const Subact& b);

struct SubactAct {
  ActPtr act;     // the subact re-indexed as an act in its own right
  Hom inclusion;  // into the parent
};

/// Re-index a subact as a standalone act together with its inclusion.
SubactAct subact_act(const Subact& b);

/// The lexicographically first minimal generating set: one lowest-index
/// representative per maximal cyclic class.
std::vector<int> lex_min_generating_set(const ActPtr& act);

/// All equivariant maps source → target, search bounded by a minimal
/// generating set of the source. Deterministic order (maps sorted
/// lexicographically). Throws MixedMonoids.
std::vector<Hom> homomorphisms(const ActPtr& source, const ActPtr& target);

/// Independent cross-check path: filter all |target|^|source| maps.
/// Throws Error when |target|^|source| > 4096.
std::vector<Hom> homomorphisms_brute(const ActPtr& source, const ActPtr& target);

struct HomQueries {
  bool is_epi;
  bool is_mono;
  Subact image;
};

HomQueries hom_queries(const Hom& h);
bool is_epi(const Hom& h);
bool is_mono(const Hom& h);
Subact image(const Hom& h);
Bitset image_of(const Hom& h, const Bitset& subset);

/// Preimage of a target subact; action-closed but possibly empty.
Bitset preimage(const Hom& h, const Subact& of_target);

/// Restriction of h to a subact of its source, re-indexed onto b.
Hom restrict_hom(const Hom& h, const Subact& b);

}  // namespace actlab
