#include "actlab/act.hpp"

#include "actlab/errors.hpp"

namespace actlab {

ActPtr Act::make(MonoidPtr monoid, const std::vector<std::vector<int>>& action,
                 std::vector<std::string> labels) {
  if (!monoid) throw ParseError("act requires a monoid");
  const int n = monoid->size();
  const int m = static_cast<int>(action.size());
  if (m == 0) throw ParseError("act must have at least one element");

  std::vector<int> flat(static_cast<std::size_t>(m) * n);
  for (int a = 0; a < m; ++a) {
    if (static_cast<int>(action[a].size()) != n)
      throw ParseError("action table row has wrong width");
    for (int s = 0; s < n; ++s) {
      int v = action[a][s];
      if (v < 0 || v >= m) throw ParseError("action table entry out of range");
      flat[static_cast<std::size_t>(a) * n + s] = v;
    }
  }

  const int e = monoid->identity();
  for (int a = 0; a < m; ++a)
    if (flat[static_cast<std::size_t>(a) * n + e] != a)
      throw IdentityActionFails(a);

  for (int a = 0; a < m; ++a)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        int as = flat[static_cast<std::size_t>(a) * n + s];
        if (flat[static_cast<std::size_t>(as) * n + t] !=
            flat[static_cast<std::size_t>(a) * n + monoid->mul(s, t)])
          throw CompatibilityFails(a, s, t);
      }

  if (labels.empty()) {
    labels.resize(m);
    for (int a = 0; a < m; ++a) labels[a] = "a" + std::to_string(a);
  } else if (static_cast<int>(labels.size()) != m) {
    throw ParseError("act label count does not match size");
  }

  return ActPtr(new Act(std::move(monoid), m, std::move(flat), std::move(labels)));
}

Bitset Act::cyclic(int a) const {
  Bitset out(m_);
  const int n = monoid_->size();
  for (int s = 0; s < n; ++s)
    out.set(action_[static_cast<std::size_t>(a) * n + s]);
  return out;
}

std::vector<std::vector<int>> Act::rows() const {
  const int n = monoid_->size();
  std::vector<std::vector<int>> out(m_, std::vector<int>(n));
  for (int a = 0; a < m_; ++a)
    for (int s = 0; s < n; ++s)
      out[a][s] = action_[static_cast<std::size_t>(a) * n + s];
  return out;
}

Subact Subact::make(ActPtr parent, Bitset members) {
  if (!parent) throw ParseError("subact requires a parent act");
  if (members.universe() != parent->size())
    throw ParseError("subact bitset has wrong universe");
  if (members.none()) throw ParseError("subact must be nonempty");
  const int n = parent->monoid().size();
  for (int a : members.members())
    for (int s = 0; s < n; ++s)
      if (!members.test(parent->apply(a, s)))
        throw ParseError("subset is not closed under the action (element " +
                         parent->label(a) + " acted by " +
                         parent->monoid().label(s) + " escapes)");
  return Subact(std::move(parent), std::move(members));
}

Hom Hom::make(ActPtr source, ActPtr target, std::vector<int> map) {
  if (!source || !target) throw ParseError("hom requires source and target");
  if (!source->monoid().same_structure(target->monoid())) throw MixedMonoids();
  if (static_cast<int>(map.size()) != source->size())
    throw ParseError("hom map has wrong length");
  const int n = source->monoid().size();
  for (int a = 0; a < source->size(); ++a) {
    if (map[a] < 0 || map[a] >= target->size())
      throw ParseError("hom map entry out of range");
    for (int s = 0; s < n; ++s)
      if (map[source->apply(a, s)] != target->apply(map[a], s))
        throw ParseError("map is not equivariant at (a=" + std::to_string(a) +
                         ", s=" + std::to_string(s) + ")");
  }
  return Hom(std::move(source), std::move(target), std::move(map));
}

}  // namespace actlab
