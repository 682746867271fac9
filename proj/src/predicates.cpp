#include "actlab/predicates.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "actlab/catalog.hpp"
#include "actlab/enumerate.hpp"
#include "actlab/errors.hpp"

namespace actlab {

namespace {

// First proper C (bitset order) with B ∪ C = A, or nullptr.
const Bitset* superfluous_witness(const std::vector<Subact>& subs, const Bitset& b) {
  for (const Subact& c : subs) {
    if (c.is_whole()) continue;
    if ((b | c.members()).is_full()) return &c.members();
  }
  return nullptr;
}

// First proper C with C ∩ B ≠ ∅ and C ∪ B = A, or nullptr.
const Bitset* coessential_witness(const std::vector<Subact>& subs, const Bitset& b) {
  for (const Subact& c : subs) {
    if (c.is_whole()) continue;
    if (c.members().intersects(b) && (b | c.members()).is_full())
      return &c.members();
  }
  return nullptr;
}

Witness subact_witness(const Bitset& c, std::string note) {
  return Witness{"subact", {c}, {}, std::move(note)};
}

Witness pair_witness(const Bitset& b, const Bitset& c, std::string note) {
  return Witness{"subact_pair", {b, c}, {}, std::move(note)};
}

Witness note_witness(std::string note) {
  return Witness{"note", {}, {}, std::move(note)};
}

}  // namespace

PropertyVerdict is_superfluous(const Subact& b) {
  std::vector<Subact> subs = all_subacts(b.parent());
  if (const Bitset* c = superfluous_witness(subs, b.members()))
    return PropertyVerdict::fail(
        subact_witness(*c, "union with this proper subact is the whole act"));
  return PropertyVerdict::ok();
}

PropertyVerdict is_superfluous_fast(const Subact& b) {
  for (const Subact& m : maximal_subacts(b.parent()))
    if (!m.members().contains(b.members()))
      return PropertyVerdict::fail(subact_witness(
          m.members(), "maximal subact not containing the subact; their union "
                       "is the whole act"));
  return PropertyVerdict::ok();
}

PropertyVerdict is_superfluous_subset(const ActPtr& act, const Bitset& b) {
  if (b.none()) return PropertyVerdict::ok();
  return is_superfluous(Subact::make(act, b));
}

PropertyVerdict is_coessential(const Subact& b) {
  std::vector<Subact> subs = all_subacts(b.parent());
  if (const Bitset* c = coessential_witness(subs, b.members()))
    return PropertyVerdict::fail(subact_witness(
        *c, "proper subact meeting the subact whose union is the whole act"));
  return PropertyVerdict::ok();
}

PropertyVerdict is_coessential_def(const Subact& b) {
  ReesQuotient q = rees_quotient(b.parent(), b);
  return is_cover(q.projection);
}

PropertyVerdict is_cover(const Hom& f) {
  if (!is_epi(f))
    return PropertyVerdict::fail(note_witness("not an epimorphism"));
  // A restriction to a proper subact is epi iff a restriction to some
  // maximal subact is (finite case), so maximal subacts suffice.
  for (const Subact& m : maximal_subacts(f.source()))
    if (image_of(f, m.members()).is_full())
      return PropertyVerdict::fail(subact_witness(
          m.members(), "restriction to this proper subact is an epimorphism"));
  return PropertyVerdict::ok();
}

PropertyVerdict is_cover_all_subacts(const Hom& f) {
  if (!is_epi(f))
    return PropertyVerdict::fail(note_witness("not an epimorphism"));
  for (const Subact& c : all_subacts(f.source())) {
    if (c.is_whole()) continue;
    if (image_of(f, c.members()).is_full())
      return PropertyVerdict::fail(subact_witness(
          c.members(), "restriction to this proper subact is an epimorphism"));
  }
  return PropertyVerdict::ok();
}

PropertyVerdict is_hollow(const ActPtr& act) {
  std::vector<Subact> subs = all_subacts(act);
  for (const Subact& b : subs) {
    if (b.is_whole()) continue;
    if (const Bitset* c = superfluous_witness(subs, b.members()))
      return PropertyVerdict::fail(pair_witness(
          b.members(), *c, "proper subact that is not superfluous, with partner"));
  }
  return PropertyVerdict::ok();
}

PropertyVerdict is_co_uniform(const ActPtr& act) {
  std::vector<Subact> subs = all_subacts(act);
  for (const Subact& b : subs) {
    if (b.is_whole()) continue;
    if (const Bitset* c = coessential_witness(subs, b.members()))
      return PropertyVerdict::fail(pair_witness(
          b.members(), *c, "proper subact that is not coessential, with partner"));
  }
  return PropertyVerdict::ok();
}

PropertyVerdict is_hollow_via_decomposition(const ActPtr& act) {
  PropertyVerdict ind = is_indecomposable(act);
  if (!ind.holds) return ind;
  return is_co_uniform(act);
}

PropertyVerdict is_hollow_via_local(const ActPtr& act) {
  Cyclicity cyc = cyclicity(act);
  if (cyc.is_simple) return PropertyVerdict::ok();
  if (cyc.is_cyclic && is_local_act(act).holds) return PropertyVerdict::ok();
  return PropertyVerdict::fail(
      note_witness("neither simple nor both cyclic and local"));
}

std::vector<Subact> decompose(const ActPtr& act) {
  const int m = act->size();
  std::vector<Bitset> cyc(m);
  for (int a = 0; a < m; ++a) cyc[a] = act->cyclic(a);

  std::vector<int> root(m);
  for (int a = 0; a < m; ++a) root[a] = a;
  std::function<int(int)> find = [&](int a) {
    while (root[a] != a) a = root[a] = root[root[a]];
    return a;
  };
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (cyc[a].intersects(cyc[b])) root[find(a)] = find(b);

  std::map<int, Bitset> comps;
  for (int a = 0; a < m; ++a) {
    auto [it, fresh] = comps.try_emplace(find(a), Bitset(m));
    it->second.set(a);
  }
  std::vector<Subact> out;
  for (auto& [r, bits] : comps) out.push_back(Subact::unchecked(act, bits));
  std::sort(out.begin(), out.end());
  return out;
}

PropertyVerdict is_indecomposable(const ActPtr& act) {
  std::vector<Subact> comps = decompose(act);
  if (comps.size() == 1) return PropertyVerdict::ok();
  Bitset rest = Bitset::full(act->size()).minus(comps.front().members());
  return PropertyVerdict::fail(pair_witness(
      comps.front().members(), rest,
      "the act splits as the disjoint union of these two subacts"));
}

Cyclicity cyclicity(const ActPtr& act) {
  const int m = act->size();
  std::vector<Bitset> cyc(m);
  Cyclicity out;
  bool all_full = true;
  for (int a = 0; a < m; ++a) {
    cyc[a] = act->cyclic(a);
    if (cyc[a].is_full())
      out.generators.push_back(a);
    else
      all_full = false;
  }
  out.is_cyclic = !out.generators.empty();
  // Simple: the only subact is the act itself, i.e. every cyclic is full.
  out.is_simple = all_full;
  out.is_locally_cyclic = true;
  for (int a = 0; a < m && out.is_locally_cyclic; ++a)
    for (int b = a; b < m; ++b) {
      bool common = false;
      for (int c = 0; c < m; ++c)
        if (cyc[c].test(a) && cyc[c].test(b)) {
          common = true;
          break;
        }
      if (!common) {
        out.is_locally_cyclic = false;
        break;
      }
    }
  return out;
}

RadicalResult radical(const ActPtr& act) {
  RadicalResult out;
  out.maximals = maximal_subacts(act);
  if (out.maximals.empty()) {
    out.subset = Bitset::full(act->size());
    out.is_whole = true;
    return out;
  }
  out.subset = out.maximals.front().members();
  for (const Subact& m : out.maximals) out.subset = out.subset & m.members();
  out.is_whole = false;
  return out;
}

Bitset radical_as_union(const ActPtr& act) {
  std::vector<Subact> subs = all_subacts(act);
  Bitset acc(act->size());
  for (const Subact& b : subs)
    if (superfluous_witness(subs, b.members()) == nullptr) acc |= b.members();
  return acc;
}

Bitset radical_proper_union(const ActPtr& act) {
  std::vector<Subact> subs = all_subacts(act);
  Bitset acc(act->size());
  for (const Subact& b : subs) {
    if (b.is_whole()) continue;
    if (superfluous_witness(subs, b.members()) == nullptr) acc |= b.members();
  }
  return acc;
}

PropertyVerdict is_local_act(const ActPtr& act) {
  std::vector<Subact> maxs = maximal_subacts(act);
  if (maxs.size() == 1) return PropertyVerdict::ok();
  if (maxs.empty())
    return PropertyVerdict::fail(note_witness("no maximal subacts"));
  return PropertyVerdict::fail(pair_witness(maxs[0].members(), maxs[1].members(),
                                            "two distinct maximal subacts"));
}

PropertyVerdict is_local_monoid(const MonoidPtr& m) {
  Bitset n = m->non_right_invertible();
  if (n.any()) return PropertyVerdict::ok();
  return PropertyVerdict::fail(
      note_witness("every element is right invertible; the monoid is a group"));
}

PropertyVerdict is_uniserial(const ActPtr& act) {
  std::vector<Subact> subs = all_subacts(act);
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      const Bitset& b = subs[i].members();
      const Bitset& c = subs[j].members();
      if (!b.contains(c) && !c.contains(b))
        return PropertyVerdict::fail(
            pair_witness(b, c, "incomparable pair of subacts"));
    }
  return PropertyVerdict::ok();
}

PropertyVerdict is_uniserial_via_hollow_subacts(const ActPtr& act) {
  for (const Subact& b : all_subacts(act)) {
    if (!is_hollow(subact_act(b).act).holds)
      return PropertyVerdict::fail(
          subact_witness(b.members(), "subact that is not hollow"));
  }
  return PropertyVerdict::ok();
}

PropertyVerdict is_uniserial_via_two_generated(const ActPtr& act) {
  for (int a = 0; a < act->size(); ++a)
    for (int b = a; b < act->size(); ++b) {
      Subact n = generated_subact(act, {a, b});
      if (!is_hollow(subact_act(n).act).holds)
        return PropertyVerdict::fail(Witness{
            "elements", {n.members()}, {a, b},
            "two-generated subact that is not hollow"});
    }
  return PropertyVerdict::ok();
}

std::vector<std::vector<int>> minimal_generating_sets(const ActPtr& act) {
  const int m = act->size();
  std::vector<Bitset> cyc(m);
  for (int a = 0; a < m; ++a) cyc[a] = act->cyclic(a);

  // Group elements into cyclic classes (equal aS); a minimal generating
  // set is exactly a transversal of the inclusion-maximal classes.
  std::vector<Bitset> class_bits;
  std::vector<std::vector<int>> class_members;
  for (int a = 0; a < m; ++a) {
    bool found = false;
    for (std::size_t k = 0; k < class_bits.size(); ++k)
      if (class_bits[k] == cyc[a]) {
        class_members[k].push_back(a);
        found = true;
        break;
      }
    if (!found) {
      class_bits.push_back(cyc[a]);
      class_members.push_back({a});
    }
  }
  std::vector<std::vector<int>> maximal_classes;
  for (std::size_t k = 0; k < class_bits.size(); ++k) {
    bool maximal = true;
    for (std::size_t l = 0; l < class_bits.size(); ++l)
      if (l != k && class_bits[l] != class_bits[k] &&
          class_bits[l].contains(class_bits[k])) {
        maximal = false;
        break;
      }
    if (maximal) maximal_classes.push_back(class_members[k]);
  }

  std::vector<std::vector<int>> out;
  std::vector<std::size_t> pick(maximal_classes.size(), 0);
  while (true) {
    std::vector<int> set;
    for (std::size_t k = 0; k < maximal_classes.size(); ++k)
      set.push_back(maximal_classes[k][pick[k]]);
    std::sort(set.begin(), set.end());
    out.push_back(std::move(set));
    int i = static_cast<int>(maximal_classes.size()) - 1;
    while (i >= 0 && pick[i] + 1 == maximal_classes[i].size()) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

bool supplement_minimal(const std::vector<Subact>& subs, const Bitset& b,
                        const Bitset& c, int /*act_size*/) {
  for (const Subact& d : subs) {
    if (d.members() == c || !c.contains(d.members())) continue;
    if ((b | d.members()).is_full()) return false;
  }
  return true;
}

}  // namespace detail

PropertyVerdict is_supplement(const ActPtr& act, const Subact& b, const Subact& c) {
  if (b.is_whole() || c.is_whole())
    throw NotProper("supplement arguments must be proper subacts");
  if (!(b.members() | c.members()).is_full())
    return PropertyVerdict::fail(
        note_witness("the union of the two subacts is not the whole act"));
  std::vector<Subact> subs = all_subacts(act);
  for (const Subact& d : subs) {
    if (d.members() == c.members() || !c.members().contains(d.members())) continue;
    if ((b.members() | d.members()).is_full())
      return PropertyVerdict::fail(subact_witness(
          d.members(), "smaller subact of the candidate already joins with the "
                       "subact to the whole act"));
  }
  return PropertyVerdict::ok();
}

PropertyVerdict supplement_criterion(const ActPtr& act, const Subact& b,
                                     const Subact& c) {
  if (!(b.members() | c.members()).is_full())
    return PropertyVerdict::fail(
        note_witness("the union of the two subacts is not the whole act"));
  Bitset meet = b.members() & c.members();
  if (meet.none()) return PropertyVerdict::ok();
  // C ∩ B superfluous within C: no proper subact of C joins with it to C.
  std::vector<Subact> subs = all_subacts(act);
  for (const Subact& e : subs) {
    if (!c.members().contains(e.members()) || e.members() == c.members()) continue;
    if ((meet | e.members()) == c.members())
      return PropertyVerdict::fail(subact_witness(
          e.members(),
          "intersection joins with this proper subact of the candidate"));
  }
  return PropertyVerdict::ok();
}

std::vector<Subact> supplements_of(const ActPtr& act, const Subact& b,
                                   Reading reading) {
  if (b.is_whole()) throw NotProper("supplements are sought for proper subacts");
  std::vector<Subact> subs = all_subacts(act);
  std::vector<Subact> out;
  for (const Subact& c : subs) {
    if (reading == Reading::strict && c.is_whole()) continue;
    if (!(b.members() | c.members()).is_full()) continue;
    if (detail::supplement_minimal(subs, b.members(), c.members(), act->size()))
      out.push_back(c);
  }
  return out;
}

PropertyVerdict is_supplemented(const ActPtr& act, Reading reading) {
  std::vector<Subact> subs = all_subacts(act);
  for (const Subact& b : subs) {
    if (b.is_whole()) continue;
    bool found = false;
    for (const Subact& c : subs) {
      if (reading == Reading::strict && c.is_whole()) continue;
      if (!(b.members() | c.members()).is_full()) continue;
      if (detail::supplement_minimal(subs, b.members(), c.members(), act->size())) {
        found = true;
        break;
      }
    }
    if (!found)
      return PropertyVerdict::fail(
          subact_witness(b.members(), "proper subact with no supplement"));
  }
  return PropertyVerdict::ok();
}

PropertyVerdict is_projective(const ActPtr& act) {
  ActPtr regular = regular_act(act->monoid_ptr());
  std::vector<ActPtr> principal;  // eS for each idempotent e
  for (int e : act->monoid().idempotents())
    principal.push_back(
        subact_act(Subact::unchecked(regular, regular->cyclic(e))).act);

  for (const Subact& comp : decompose(act)) {
    ActPtr part = subact_act(comp).act;
    bool ok = false;
    for (const ActPtr& p : principal)
      if (act_isomorphic(*part, *p)) {
        ok = true;
        break;
      }
    if (!ok)
      return PropertyVerdict::fail(subact_witness(
          comp.members(), "indecomposable component isomorphic to no cyclic "
                          "act generated by an idempotent"));
  }
  return PropertyVerdict::ok();
}

PropertyVerdict is_projective_by_lifting(const ActPtr& act) {
  if (act->size() >= 4)
    throw Error("projectivity lifting oracle is limited to acts of size < 4");
  std::vector<int> gens = lex_min_generating_set(act);
  ActPtr regular = regular_act(act->monoid_ptr());
  std::vector<ActPtr> copies(gens.size(), regular);
  Coproduct free = coproduct(copies);

  // Canonical epimorphism from the free act: (copy i, s) ↦ gens[i]·s.
  std::vector<int> gmap(static_cast<std::size_t>(free.act->size()));
  const int n = act->monoid().size();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int s = 0; s < n; ++s)
      gmap[static_cast<std::size_t>(free.injections[i].map()[s])] =
          act->apply(gens[i], s);
  Hom g = Hom::make(free.act, act, gmap);

  // Projective iff the canonical epimorphism splits.
  for (const Hom& h : homomorphisms(act, free.act)) {
    bool section = true;
    for (int a = 0; a < act->size(); ++a)
      if (g.map()[h.map()[a]] != a) {
        section = false;
        break;
      }
    if (section) return PropertyVerdict::ok();
  }
  return PropertyVerdict::fail(
      note_witness("the canonical epimorphism from the free act does not split"));
}

}  // namespace actlab
