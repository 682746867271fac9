#pragma once

#include <map>
#include <string>

#include "actlab/act.hpp"
#include "actlab/predicates.hpp"

#include "json.hpp"

namespace actlab {

/// A parsed act definition file: monoid block, act block, optional named
/// subacts. Labels are resolved to indices at parse time.
struct ActFile {
  MonoidPtr monoid;
  ActPtr act;
  std::map<std::string, Subact> subacts;
};

/// Schema:
///   {"monoid": {"elements": [...], "identity": "...", "table": [[...]]},
///    "act":    {"elements": [...], "action": [[...]]},   // rows = act
///    "subacts": {"name": ["label", ...], ...}}           // optional
/// The act block may be omitted, in which case the act is the monoid
/// acting on itself. Throws ParseError on malformed input.
ActFile parse_act_file(const nlohmann::json& j);
ActFile load_act_file(const std::string& path);

nlohmann::json monoid_json(const Monoid& m);
nlohmann::json act_file_json(const Act& act,
                             const std::map<std::string, Bitset>& named = {});

/// Subsets are emitted as arrays of element labels in index order.
nlohmann::json subset_json(const Act& act, const Bitset& b);
nlohmann::json witness_json(const Act& act, const Witness& w);
nlohmann::json verdict_json(const Act& act, const PropertyVerdict& v);

}  // namespace actlab
