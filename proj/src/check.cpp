#include "actlab/check.hpp"

#include "actlab/errors.hpp"
#include "actlab/ops.hpp"

namespace actlab {

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{
      "superfluous", "coessential", "hollow",       "co-uniform",
      "indecomposable", "cyclic",   "locally-cyclic", "simple",
      "local",       "uniserial",   "supplemented", "projective",
      "supplement",  "cover"};
  return names;
}

namespace {

void expect_args(const std::string& property, const std::vector<Subact>& subacts,
                 std::size_t n) {
  if (subacts.size() != n)
    throw ParseError("property " + property + " takes " + std::to_string(n) +
                     " subact argument(s), got " + std::to_string(subacts.size()));
}

PropertyVerdict cyclic_verdict(const ActPtr& act) {
  Cyclicity c = cyclicity(act);
  if (c.is_cyclic) return PropertyVerdict::ok();
  return PropertyVerdict::fail(
      Witness{"note", {}, {}, "no element generates the whole act"});
}

PropertyVerdict locally_cyclic_verdict(const ActPtr& act) {
  const int m = act->size();
  std::vector<Bitset> cyc(m);
  for (int a = 0; a < m; ++a) cyc[a] = act->cyclic(a);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      bool common = false;
      for (int c = 0; c < m; ++c)
        if (cyc[c].test(a) && cyc[c].test(b)) {
          common = true;
          break;
        }
      if (!common)
        return PropertyVerdict::fail(Witness{
            "elements", {}, {a, b}, "no cyclic subact contains both elements"});
    }
  return PropertyVerdict::ok();
}

PropertyVerdict simple_verdict(const ActPtr& act) {
  for (int a = 0; a < act->size(); ++a) {
    Bitset c = act->cyclic(a);
    if (!c.is_full())
      return PropertyVerdict::fail(Witness{"subact", {c}, {}, "proper subact"});
  }
  return PropertyVerdict::ok();
}

PropertyVerdict supplement_verdict(const ActPtr& act, const Subact& b,
                                   const Subact& c, Reading reading) {
  if (b.is_whole())
    throw NotProper("supplement arguments must be proper subacts");
  if (c.is_whole() && reading == Reading::strict)
    throw NotProper("supplement arguments must be proper subacts");
  if (!(b.members() | c.members()).is_full())
    return PropertyVerdict::fail(Witness{
        "note", {}, {}, "the union of the two subacts is not the whole act"});
  std::vector<Subact> subs = all_subacts(act);
  for (const Subact& d : subs) {
    if (d.members() == c.members() || !c.members().contains(d.members())) continue;
    if ((b.members() | d.members()).is_full())
      return PropertyVerdict::fail(Witness{
          "subact", {d.members()}, {},
          "smaller subact of the candidate already joins with the subact to "
          "the whole act"});
  }
  return PropertyVerdict::ok();
}

}  // namespace

PropertyVerdict check_property(const ActPtr& act, const std::string& property,
                               const std::vector<Subact>& subacts,
                               Reading reading) {
  if (property == "superfluous") {
    expect_args(property, subacts, 1);
    return is_superfluous(subacts[0]);
  }
  if (property == "coessential") {
    expect_args(property, subacts, 1);
    return is_coessential(subacts[0]);
  }
  if (property == "hollow") {
    expect_args(property, subacts, 0);
    return is_hollow(act);
  }
  if (property == "co-uniform") {
    expect_args(property, subacts, 0);
    return is_co_uniform(act);
  }
  if (property == "indecomposable") {
    expect_args(property, subacts, 0);
    return is_indecomposable(act);
  }
  if (property == "cyclic") {
    expect_args(property, subacts, 0);
    return cyclic_verdict(act);
  }
  if (property == "locally-cyclic") {
    expect_args(property, subacts, 0);
    return locally_cyclic_verdict(act);
  }
  if (property == "simple") {
    expect_args(property, subacts, 0);
    return simple_verdict(act);
  }
  if (property == "local") {
    expect_args(property, subacts, 0);
    return is_local_act(act);
  }
  if (property == "uniserial") {
    expect_args(property, subacts, 0);
    return is_uniserial(act);
  }
  if (property == "supplemented") {
    expect_args(property, subacts, 0);
    return is_supplemented(act, reading);
  }
  if (property == "projective") {
    expect_args(property, subacts, 0);
    return is_projective(act);
  }
  if (property == "supplement") {
    expect_args(property, subacts, 2);
    return supplement_verdict(act, subacts[0], subacts[1], reading);
  }
  throw ParseError("unknown property: " + property);
}

}  // namespace actlab
