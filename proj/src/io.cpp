#include "actlab/io.hpp"

#include <fstream>

#include "actlab/errors.hpp"

namespace actlab {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(what + " must contain strings only");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::map<std::string, int> index_labels(const std::vector<std::string>& labels,
                                        const std::string& what) {
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!out.emplace(labels[i], static_cast<int>(i)).second)
      throw ParseError(what + " labels must be unique: " + labels[i]);
  return out;
}

std::vector<std::vector<int>> matrix(const json& j,
                                     const std::map<std::string, int>& cell_index,
                                     const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be a matrix of labels");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    std::vector<int> r;
    for (const auto& cell : string_list(row, what + " row")) {
      auto it = cell_index.find(cell);
      if (it == cell_index.end())
        throw ParseError(what + " refers to unknown label: " + cell);
      r.push_back(it->second);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

ActFile parse_act_file(const json& j) {
  if (!j.is_object() || !j.contains("monoid"))
    throw ParseError("act file needs a monoid block");
  const json& mj = j.at("monoid");
  auto mlabels = string_list(mj.at("elements"), "monoid elements");
  auto mindex = index_labels(mlabels, "monoid");
  if (!mj.contains("identity") || !mj.at("identity").is_string())
    throw ParseError("monoid block needs an identity label");
  auto idit = mindex.find(mj.at("identity").get<std::string>());
  if (idit == mindex.end()) throw ParseError("identity is not a monoid element");
  MonoidPtr monoid =
      Monoid::make(matrix(mj.at("table"), mindex, "monoid table"), idit->second,
                   mlabels);

  ActFile out;
  out.monoid = monoid;
  if (j.contains("act")) {
    const json& aj = j.at("act");
    auto alabels = string_list(aj.at("elements"), "act elements");
    auto aindex = index_labels(alabels, "act");
    out.act = Act::make(monoid, matrix(aj.at("action"), aindex, "action table"),
                        alabels);
  } else {
    std::vector<std::vector<int>> action(monoid->size(),
                                         std::vector<int>(monoid->size()));
    for (int a = 0; a < monoid->size(); ++a)
      for (int s = 0; s < monoid->size(); ++s) action[a][s] = monoid->mul(a, s);
    out.act = Act::make(monoid, action, mlabels);
  }

  if (j.contains("subacts")) {
    if (!j.at("subacts").is_object())
      throw ParseError("subacts must be an object of label lists");
    auto aindex = index_labels(out.act->labels(), "act");
    for (const auto& [name, members] : j.at("subacts").items()) {
      Bitset bits(out.act->size());
      for (const auto& l : string_list(members, "subact " + name)) {
        auto it = aindex.find(l);
        if (it == aindex.end())
          throw ParseError("subact " + name + " refers to unknown label: " + l);
        bits.set(it->second);
      }
      out.subacts.emplace(name, Subact::make(out.act, bits));
    }
  }
  return out;
}

ActFile load_act_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return parse_act_file(j);
}

json monoid_json(const Monoid& m) {
  json table = json::array();
  for (int s = 0; s < m.size(); ++s) {
    json row = json::array();
    for (int t = 0; t < m.size(); ++t) row.push_back(m.label(m.mul(s, t)));
    table.push_back(row);
  }
  return json{{"elements", m.labels()},
              {"identity", m.label(m.identity())},
              {"table", table}};
}

json act_file_json(const Act& act, const std::map<std::string, Bitset>& named) {
  json action = json::array();
  for (int a = 0; a < act.size(); ++a) {
    json row = json::array();
    for (int s = 0; s < act.monoid().size(); ++s)
      row.push_back(act.label(act.apply(a, s)));
    action.push_back(row);
  }
  json out{{"monoid", monoid_json(act.monoid())},
           {"act", json{{"elements", act.labels()}, {"action", action}}}};
  if (!named.empty()) {
    json subacts = json::object();
    for (const auto& [name, bits] : named) subacts[name] = subset_json(act, bits);
    out["subacts"] = subacts;
  }
  return out;
}

json subset_json(const Act& act, const Bitset& b) {
  json out = json::array();
  for (int a : b.members()) out.push_back(act.label(a));
  return out;
}

json witness_json(const Act& act, const Witness& w) {
  json out{{"kind", w.kind}};
  if (!w.subsets.empty()) {
    json subs = json::array();
    for (const Bitset& b : w.subsets) subs.push_back(subset_json(act, b));
    out["subsets"] = subs;
  }
  if (!w.elements.empty()) {
    json elems = json::array();
    for (int a : w.elements) elems.push_back(act.label(a));
    out["elements"] = elems;
  }
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

json verdict_json(const Act& act, const PropertyVerdict& v) {
  json out{{"holds", v.holds}};
  if (v.witness) out["witness"] = witness_json(act, *v.witness);
  return out;
}

}  // namespace actlab
