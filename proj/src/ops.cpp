#include "actlab/ops.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "actlab/errors.hpp"

namespace actlab {

namespace {

std::string uniquify(std::string label, const std::set<std::string>& taken) {
  while (taken.count(label)) label += "_";
  return label;
}

void require_same_monoid(const Act& a, const Act& b) {
  if (!a.monoid().same_structure(b.monoid())) throw MixedMonoids();
}

}  // namespace

Subact generated_subact(const ActPtr& act, const std::vector<int>& generators) {
  if (generators.empty()) throw EmptyGenerators();
  Bitset out(act->size());
  for (int g : generators) {
    if (g < 0 || g >= act->size()) throw ParseError("generator index out of range");
    out |= act->cyclic(g);
  }
  return Subact::unchecked(act, out);
}

std::vector<Subact> all_subacts(const ActPtr& act) {
  const int m = act->size();
  // Distinct cyclic subacts.
  std::set<Bitset> cyclics;
  for (int a = 0; a < m; ++a) cyclics.insert(act->cyclic(a));

  // Union closure: BFS, joining each known subact with each cyclic.
  std::set<Bitset> closed(cyclics);
  std::vector<Bitset> queue(cyclics.begin(), cyclics.end());
  while (!queue.empty()) {
    Bitset x = queue.back();
    queue.pop_back();
    for (const Bitset& c : cyclics) {
      Bitset y = x | c;
      if (closed.insert(y).second) queue.push_back(y);
    }
  }

  std::vector<Subact> out;
  out.reserve(closed.size());
  for (const Bitset& b : closed) out.push_back(Subact::unchecked(act, b));
  return out;  // std::set iterates in bitset order already
}

std::vector<Subact> maximal_subacts(const ActPtr& act) {
  std::vector<Subact> subs = all_subacts(act);
  std::vector<Subact> out;
  for (const Subact& b : subs) {
    if (b.is_whole()) continue;
    bool maximal = true;
    for (const Subact& c : subs) {
      if (c.is_whole() || c.members() == b.members()) continue;
      if (c.members().contains(b.members())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(b);
  }
  return out;
}

ReesQuotient rees_quotient(const ActPtr& act, const Subact& b) {
  if (b.parent().get() != act.get() && !b.act().same_table(*act))
    throw ParseError("subact does not belong to the act");
  return quotient_by_subset(act, b.members());
}

ReesQuotient quotient_by_subset(const ActPtr& act, const Bitset& b) {
  const int m = act->size();
  const int n = act->monoid().size();

  if (b.none()) {
    std::vector<int> id(m);
    for (int a = 0; a < m; ++a) id[a] = a;
    return ReesQuotient{act, Hom::unchecked(act, act, id), -1};
  }

  // Survivors keep source order; the collapsed class is appended last.
  std::vector<int> to_class(m, -1);
  std::vector<std::string> labels;
  std::set<std::string> taken;
  int next = 0;
  for (int a = 0; a < m; ++a) {
    if (!b.test(a)) {
      to_class[a] = next++;
      labels.push_back(act->label(a));
      taken.insert(act->label(a));
    }
  }
  const int zero = next;
  for (int a = 0; a < m; ++a)
    if (b.test(a)) to_class[a] = zero;
  labels.push_back(uniquify("theta", taken));

  const int q = zero + 1;
  std::vector<std::vector<int>> action(q, std::vector<int>(n));
  for (int a = 0; a < m; ++a) {
    if (b.test(a)) continue;
    for (int s = 0; s < n; ++s)
      action[to_class[a]][s] = to_class[act->apply(a, s)];
  }
  for (int s = 0; s < n; ++s) action[zero][s] = zero;

  ActPtr quotient = Act::make(act->monoid_ptr(), action, labels);
  return ReesQuotient{quotient, Hom::unchecked(act, quotient, to_class), zero};
}

Coproduct coproduct(const std::vector<ActPtr>& parts) {
  if (parts.empty()) throw ParseError("coproduct needs at least one act");
  for (const ActPtr& p : parts) require_same_monoid(*parts.front(), *p);

  const int n = parts.front()->monoid().size();
  int total = 0;
  for (const ActPtr& p : parts) total += p->size();

  // Keep original labels when globally unique, else suffix the part ordinal.
  std::set<std::string> seen;
  bool unique = true;
  for (const ActPtr& p : parts)
    for (const std::string& l : p->labels())
      if (!seen.insert(l).second) unique = false;

  std::vector<std::vector<int>> action(total, std::vector<int>(n));
  std::vector<std::string> labels(total);
  std::vector<Hom> injections;
  int base = 0, part_no = 0;
  std::vector<std::pair<int, ActPtr>> offsets;
  for (const ActPtr& p : parts) {
    ++part_no;
    for (int a = 0; a < p->size(); ++a) {
      for (int s = 0; s < n; ++s) action[base + a][s] = base + p->apply(a, s);
      labels[base + a] =
          unique ? p->label(a) : p->label(a) + "_" + std::to_string(part_no);
    }
    offsets.emplace_back(base, p);
    base += p->size();
  }

  ActPtr sum = Act::make(parts.front()->monoid_ptr(), action, labels);
  for (auto& [off, p] : offsets) {
    std::vector<int> inj(p->size());
    for (int a = 0; a < p->size(); ++a) inj[a] = off + a;
    injections.push_back(Hom::unchecked(p, sum, std::move(inj)));
  }
  return Coproduct{sum, std::move(injections)};
}

ActPtr amalgam(const ActPtr& act, const Subact& b) {
  if (b.is_whole()) throw NotProper("amalgam needs a proper subact");
  const int m = act->size();
  const int n = act->monoid().size();
  const Bitset& shared = b.members();

  // Element order: shared part first, then copy a, then copy b of act∖b.
  std::vector<int> shared_index(m, -1), outside_index(m, -1);
  std::vector<std::string> labels;
  std::set<std::string> taken;
  int next = 0;
  for (int a = 0; a < m; ++a)
    if (shared.test(a)) {
      shared_index[a] = next++;
      std::string l = uniquify(act->label(a), taken);
      taken.insert(l);
      labels.push_back(l);
    }
  const int outside = m - shared.count();
  int pos = 0;
  for (int a = 0; a < m; ++a)
    if (!shared.test(a)) outside_index[a] = pos++;
  for (const char* tag : {"_a", "_b"})
    for (int a = 0; a < m; ++a)
      if (!shared.test(a)) {
        std::string l = uniquify(act->label(a) + tag, taken);
        taken.insert(l);
        labels.push_back(l);
      }

  const int total = next + 2 * outside;
  auto embed = [&](int a, int copy) {
    if (shared.test(a)) return shared_index[a];
    return next + copy * outside + outside_index[a];
  };

  std::vector<std::vector<int>> action(total, std::vector<int>(n));
  for (int copy = 0; copy < 2; ++copy)
    for (int a = 0; a < m; ++a) {
      if (shared.test(a) && copy == 1) continue;
      int idx = embed(a, copy);
      for (int s = 0; s < n; ++s) action[idx][s] = embed(act->apply(a, s), copy);
    }

  return Act::make(act->monoid_ptr(), action, labels);
}

SubactAct subact_act(const Subact& b) {
  const ActPtr& parent = b.parent();
  const int n = parent->monoid().size();
  std::vector<int> elems = b.members().members();
  std::vector<int> to_sub(parent->size(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) to_sub[elems[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> action(elems.size(), std::vector<int>(n));
  std::vector<std::string> labels(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    labels[i] = parent->label(elems[i]);
    for (int s = 0; s < n; ++s) action[i][s] = to_sub[parent->apply(elems[i], s)];
  }

  ActPtr act = Act::make(parent->monoid_ptr(), action, labels);
  return SubactAct{act, Hom::unchecked(act, parent, elems)};
}

namespace {

// Derivation tree: every element as gens[i] acted by a word, stored as
// (source element, monoid element) parent links in BFS order.
struct Derivation {
  std::vector<int> order;        // elements in derivation order
  std::vector<int> parent;       // -1 for roots (generators)
  std::vector<int> via;          // monoid element used from the parent
  std::vector<int> root_of;      // which generator index each root is
};

Derivation derive(const Act& act, const std::vector<int>& gens) {
  const int m = act.size();
  const int n = act.monoid().size();
  Derivation d;
  d.parent.assign(m, -2);
  d.via.assign(m, -1);
  d.root_of.assign(m, -1);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (d.parent[gens[i]] != -2) continue;
    d.parent[gens[i]] = -1;
    d.root_of[gens[i]] = static_cast<int>(i);
    d.order.push_back(gens[i]);
  }
  for (std::size_t head = 0; head < d.order.size(); ++head) {
    int a = d.order[head];
    for (int s = 0; s < n; ++s) {
      int b = act.apply(a, s);
      if (d.parent[b] == -2) {
        d.parent[b] = a;
        d.via[b] = s;
        d.order.push_back(b);
      }
    }
  }
  return d;
}

}  // namespace

std::vector<int> lex_min_generating_set(const ActPtr& act) {
  const int m = act->size();
  std::vector<Bitset> cyc(m);
  for (int a = 0; a < m; ++a) cyc[a] = act->cyclic(a);
  // One representative (lowest index) of each maximal cyclic class.
  std::vector<int> gens;
  for (int a = 0; a < m; ++a) {
    bool first_of_class = true;
    for (int b = 0; b < a; ++b)
      if (cyc[b] == cyc[a]) {
        first_of_class = false;
        break;
      }
    if (!first_of_class) continue;
    bool maximal = true;
    for (int b = 0; b < m; ++b)
      if (cyc[b] != cyc[a] && cyc[b].contains(cyc[a])) {
        maximal = false;
        break;
      }
    if (maximal) gens.push_back(a);
  }
  return gens;
}

std::vector<Hom> homomorphisms(const ActPtr& source, const ActPtr& target) {
  require_same_monoid(*source, *target);
  const int m = source->size();
  const std::vector<int> gens = lex_min_generating_set(source);
  const Derivation d = derive(*source, gens);

  std::vector<Hom> out;
  std::vector<int> choice(gens.size(), 0);
  std::vector<int> map(m, -1);
  const int tsize = target->size();
  const int n = source->monoid().size();

  while (true) {
    // Extend the generator images along the derivation order.
    for (int a : d.order) {
      if (d.parent[a] == -1)
        map[a] = choice[d.root_of[a]];
      else
        map[a] = target->apply(map[d.parent[a]], d.via[a]);
    }
    // Full equivariance check; the derivation fixes one path only.
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      for (int s = 0; s < n; ++s)
        if (map[source->apply(a, s)] != target->apply(map[a], s)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(Hom::unchecked(source, target, map));

    // Odometer over generator images.
    int i = static_cast<int>(gens.size()) - 1;
    while (i >= 0 && choice[i] == tsize - 1) choice[i--] = 0;
    if (i < 0) break;
    ++choice[i];
  }

  std::sort(out.begin(), out.end(),
            [](const Hom& a, const Hom& b) { return a.map() < b.map(); });
  return out;
}

std::vector<Hom> homomorphisms_brute(const ActPtr& source, const ActPtr& target) {
  require_same_monoid(*source, *target);
  const int m = source->size();
  const int t = target->size();
  double space = 1;
  for (int i = 0; i < m; ++i) space *= t;
  if (space > 4096) throw Error("brute-force hom search space exceeds 4096 maps");

  std::vector<Hom> out;
  std::vector<int> map(m, 0);
  const int n = source->monoid().size();
  while (true) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      for (int s = 0; s < n; ++s)
        if (map[source->apply(a, s)] != target->apply(map[a], s)) {
          ok = false;
          break;
        }
    if (ok) out.push_back(Hom::unchecked(source, target, map));
    int i = m - 1;
    while (i >= 0 && map[i] == t - 1) map[i--] = 0;
    if (i < 0) break;
    ++map[i];
  }
  return out;  // odometer order is already lexicographic
}

bool is_epi(const Hom& h) {
  Bitset img(h.target()->size());
  for (int v : h.map()) img.set(v);
  return img.is_full();
}

bool is_mono(const Hom& h) {
  Bitset seen(h.target()->size());
  for (int v : h.map()) {
    if (seen.test(v)) return false;
    seen.set(v);
  }
  return true;
}

Subact image(const Hom& h) {
  Bitset img(h.target()->size());
  for (int v : h.map()) img.set(v);
  return Subact::unchecked(h.target(), img);
}

Bitset image_of(const Hom& h, const Bitset& subset) {
  Bitset img(h.target()->size());
  for (int a : subset.members()) img.set(h.map()[a]);
  return img;
}

HomQueries hom_queries(const Hom& h) {
  return HomQueries{is_epi(h), is_mono(h), image(h)};
}

Bitset preimage(const Hom& h, const Subact& of_target) {
  Bitset out(h.source()->size());
  for (int a = 0; a < h.source()->size(); ++a)
    if (of_target.members().test(h.map()[a])) out.set(a);
  return out;
}

Hom restrict_hom(const Hom& h, const Subact& b) {
  SubactAct sub = subact_act(b);
  std::vector<int> map;
  map.reserve(static_cast<std::size_t>(b.count()));
  for (int a : b.members().members()) map.push_back(h.map()[a]);
  return Hom::unchecked(sub.act, h.target(), std::move(map));
}

}  // namespace actlab
