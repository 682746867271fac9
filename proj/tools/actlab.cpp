// actlab — a command-line workbench for finite right acts over finite
// monoids: property checks, constructions, act enumeration and the
// exhaustive claim suite.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "actlab/catalog.hpp"
#include "actlab/check.hpp"
#include "actlab/claims.hpp"
#include "actlab/enumerate.hpp"
#include "actlab/errors.hpp"
#include "actlab/io.hpp"
#include "actlab/ops.hpp"
#include "actlab/predicates.hpp"

using namespace actlab;
using nlohmann::json;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

Reading parse_reading(const std::string& s) {
  if (s == "strict") return Reading::strict;
  if (s == "relaxed") return Reading::relaxed;
  throw ParseError("reading must be strict or relaxed");
}

const Subact& named_subact(const ActFile& file, const std::string& name) {
  auto it = file.subacts.find(name);
  if (it == file.subacts.end())
    throw ParseError("file defines no subact named " + name);
  return it->second;
}

std::string labels_of(const Act& act, const Bitset& b) {
  std::string out = "{";
  bool first = true;
  for (int a : b.members()) {
    if (!first) out += ", ";
    first = false;
    out += act.label(a);
  }
  return out + "}";
}

void print_witness(const Act& act, const Witness& w) {
  if (!w.note.empty()) std::cout << "  " << w.note << "\n";
  for (const Bitset& b : w.subsets)
    std::cout << "  witness subset: " << labels_of(act, b) << "\n";
  if (!w.elements.empty()) {
    std::cout << "  witness elements:";
    for (int a : w.elements) std::cout << " " << act.label(a);
    std::cout << "\n";
  }
}

int run_check(const std::string& path, const std::string& property,
              const std::vector<std::string>& subact_names,
              const std::string& reading_name, const std::string& target_path,
              const std::vector<std::string>& map_labels, bool as_json) {
  ActFile file = load_act_file(path);
  PropertyVerdict v;
  json spec{{"file", path}, {"property", property}};

  if (property == "cover") {
    if (target_path.empty())
      throw ParseError("property cover needs --target and --map");
    ActFile target = load_act_file(target_path);
    if (static_cast<int>(map_labels.size()) != file.act->size())
      throw ParseError("--map must list one target label per source element");
    std::map<std::string, int> tidx;
    for (int a = 0; a < target.act->size(); ++a)
      tidx[target.act->label(a)] = a;
    std::vector<int> map;
    for (const std::string& l : map_labels) {
      auto it = tidx.find(l);
      if (it == tidx.end()) throw ParseError("unknown target label: " + l);
      map.push_back(it->second);
    }
    v = is_cover(Hom::make(file.act, target.act, map));
  } else {
    std::vector<Subact> args;
    for (const std::string& name : subact_names)
      args.push_back(named_subact(file, name));
    v = check_property(file.act, property, args, parse_reading(reading_name));
    spec["subacts"] = subact_names;
  }

  if (as_json) {
    json out = spec;
    out["verdict"] = verdict_json(*file.act, v);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << property << ": " << (v.holds ? "holds" : "fails") << "\n";
    if (v.witness) print_witness(*file.act, *v.witness);
  }
  return v.holds ? kExitHolds : kExitFails;
}

void write_act_file(const std::string& path, const Act& act,
                    const std::map<std::string, Bitset>& named = {}) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << act_file_json(act, named).dump(2) << "\n";
}

int run_compute(const std::string& path, const std::string& what,
                const std::vector<std::string>& subact_names,
                const std::vector<std::string>& extra_files,
                const std::string& reading_name, const std::string& out_path,
                bool as_json) {
  ActFile file = load_act_file(path);
  const ActPtr& act = file.act;
  json out{{"file", path}, {"compute", what}};

  auto subset_list = [&](const std::vector<Subact>& subs) {
    json arr = json::array();
    for (const Subact& b : subs) arr.push_back(subset_json(*act, b.members()));
    return arr;
  };

  if (what == "subacts") {
    out["subacts"] = subset_list(all_subacts(act));
  } else if (what == "maximals") {
    out["maximals"] = subset_list(maximal_subacts(act));
  } else if (what == "radical") {
    RadicalResult r = radical(act);
    out["radical"] = subset_json(*act, r.subset);
    out["is_whole"] = r.is_whole;
    out["maximals"] = subset_list(r.maximals);
  } else if (what == "decompose") {
    out["components"] = subset_list(decompose(act));
  } else if (what == "min-gens") {
    json arr = json::array();
    for (const auto& set : minimal_generating_sets(act)) {
      json one = json::array();
      for (int a : set) one.push_back(act->label(a));
      arr.push_back(one);
    }
    out["minimal_generating_sets"] = arr;
  } else if (what == "supplements") {
    if (subact_names.size() != 1)
      throw ParseError("supplements needs exactly one --subact");
    out["supplements"] = subset_list(supplements_of(
        act, named_subact(file, subact_names[0]), parse_reading(reading_name)));
    out["reading"] = reading_name;
  } else if (what == "quotient") {
    if (subact_names.size() != 1)
      throw ParseError("quotient needs exactly one --subact");
    ReesQuotient q = rees_quotient(act, named_subact(file, subact_names[0]));
    out["quotient"] = act_file_json(*q.act);
    out["zero"] = q.act->label(q.zero);
    if (!out_path.empty()) write_act_file(out_path, *q.act);
  } else if (what == "coproduct") {
    std::vector<ActPtr> parts{act};
    for (const std::string& f : extra_files) parts.push_back(load_act_file(f).act);
    Coproduct cp = coproduct(parts);
    out["coproduct"] = act_file_json(*cp.act);
    if (!out_path.empty()) write_act_file(out_path, *cp.act);
  } else if (what == "amalgam") {
    if (subact_names.size() != 1)
      throw ParseError("amalgam needs exactly one --subact");
    ActPtr am = amalgam(act, named_subact(file, subact_names[0]));
    out["amalgam"] = act_file_json(*am);
    if (!out_path.empty()) write_act_file(out_path, *am);
  } else {
    throw ParseError("unknown computation: " + what);
  }

  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto& [key, value] : out.items()) {
      if (key == "file" || key == "compute") continue;
      std::cout << key << ": " << value.dump() << "\n";
    }
  }
  return kExitHolds;
}

int run_enumerate(const std::string& monoid_spec, int size, bool up_to_iso,
                  bool count_only, bool as_json) {
  MonoidPtr m = monoid_spec.find('.') != std::string::npos ||
                        monoid_spec.find('/') != std::string::npos
                    ? load_act_file(monoid_spec).monoid
                    : monoid_from_spec(monoid_spec);
  std::vector<ActPtr> acts = enumerate_acts(m, size, up_to_iso);
  if (as_json) {
    json out{{"monoid", monoid_spec},
             {"size", size},
             {"up_to_iso", up_to_iso},
             {"count", acts.size()}};
    if (!count_only) {
      json arr = json::array();
      for (const ActPtr& a : acts) arr.push_back(a->rows());
      out["acts"] = arr;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "count: " << acts.size() << "\n";
    if (!count_only)
      for (const ActPtr& a : acts) {
        for (const auto& row : a->rows()) {
          for (std::size_t s = 0; s < row.size(); ++s)
            std::cout << (s ? " " : "") << row[s];
          std::cout << "\n";
        }
        std::cout << "\n";
      }
  }
  return kExitHolds;
}

int run_suite_cmd(const std::vector<std::string>& monoids, int max_size,
                  bool raw, const std::vector<std::string>& claims,
                  const std::string& mode, const std::string& seed_order,
                  const std::string& out_path) {
  SuiteOptions opt;
  for (const std::string& m : monoids) {
    if (m == "catalog") {
      for (const std::string& spec : desk_catalog()) opt.monoid_specs.push_back(spec);
    } else {
      monoid_from_spec(m);  // validate early
      opt.monoid_specs.push_back(m);
    }
  }
  if (opt.monoid_specs.empty()) opt.monoid_specs = desk_catalog();
  opt.max_act_size = max_size;
  opt.up_to_iso = !raw;
  opt.claim_ids = claims;
  opt.mode = mode;
  opt.seed_order = seed_order;

  std::vector<ClaimReport> reports = run_suite(opt);

  std::ofstream out_file;
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) throw ParseError("cannot write report: " + out_path);
  }
  for (const ClaimReport& r : reports) {
    std::cout << r.claim << (r.mode == "-" ? "" : " [" + r.mode + "]") << ": "
              << r.instances_checked << " instances, " << r.failures_total
              << " failures"
              << (r.counts_for_exit ? "" : " (does not gate the exit code)")
              << "\n";
    if (out_file) out_file << report_json(r).dump() << "\n";
  }
  bool ok = suite_passes(reports);
  std::cout << (ok ? "suite: PASS" : "suite: FAIL") << "\n";
  return ok ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebra of finite right acts over finite monoids"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "check a property of an act");
  std::string check_file, check_property_name, check_reading = "relaxed";
  std::string check_target;
  std::vector<std::string> check_subacts, check_map;
  bool check_json_out = false;
  check->add_option("file", check_file, "act definition file")->required();
  check->add_option("--property", check_property_name, "property name")
      ->required();
  check->add_option("--subact", check_subacts,
                    "named subact argument (repeatable)");
  check->add_option("--subact2", check_subacts,
                    "second named subact argument");
  check->add_option("--reading", check_reading,
                    "supplement reading: strict or relaxed");
  check->add_option("--target", check_target, "target act file (cover)");
  check->add_option("--map", check_map,
                    "comma-separated target labels, one per source element")
      ->delimiter(',');
  check->add_flag("--json", check_json_out, "machine-readable verdict");

  // compute
  auto* compute = app.add_subcommand("compute", "run a construction or listing");
  std::string compute_file, compute_what, compute_out, compute_reading = "relaxed";
  std::vector<std::string> compute_subacts, compute_extra;
  bool compute_json_out = false;
  compute->add_option("file", compute_file, "act definition file")->required();
  compute
      ->add_option("what", compute_what,
                   "subacts | maximals | radical | decompose | min-gens | "
                   "supplements | quotient | coproduct | amalgam")
      ->required();
  compute->add_option("--subact", compute_subacts, "named subact argument");
  compute->add_option("files", compute_extra, "additional act files (coproduct)");
  compute->add_option("--reading", compute_reading, "supplement reading");
  compute->add_option("--out", compute_out, "write the constructed act here");
  compute->add_flag("--json", compute_json_out, "machine-readable output");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "enumerate acts over a monoid");
  std::string enum_monoid;
  int enum_size = 1;
  bool enum_iso = false, enum_count = false, enum_json_out = false;
  enumerate->add_option("--monoid", enum_monoid, "monoid spec or file")->required();
  enumerate->add_option("--size", enum_size, "number of act elements")->required();
  enumerate->add_flag("--up-to-iso", enum_iso, "one representative per class");
  enumerate->add_flag("--count", enum_count, "print the count only");
  enumerate->add_flag("--json", enum_json_out, "machine-readable output");

  // suite
  auto* suite = app.add_subcommand("suite", "run the claim verification suite");
  std::vector<std::string> suite_monoids, suite_claims{"all"};
  int suite_max_size = 4;
  bool suite_raw = false;
  std::string suite_mode = "both", suite_out, suite_seed = "lex";
  suite->add_option("--monoids", suite_monoids,
                    "catalog or monoid specs/files (default catalog)");
  suite->add_option("--max-size", suite_max_size, "largest act size");
  suite->add_flag("--raw", suite_raw,
                  "enumerate raw acts instead of isomorphism representatives");
  suite->add_option("--claims", suite_claims, "claim ids or all")->delimiter(',');
  suite->add_option("--mode", suite_mode, "strict | relaxed | both");
  suite->add_option("--seed-order", suite_seed, "lex | revlex instance order");
  suite->add_option("--out", suite_out, "write JSON-lines claim reports here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check)
      return run_check(check_file, check_property_name, check_subacts,
                       check_reading, check_target, check_map, check_json_out);
    if (*compute)
      return run_compute(compute_file, compute_what, compute_subacts,
                         compute_extra, compute_reading, compute_out,
                         compute_json_out);
    if (*enumerate)
      return run_enumerate(enum_monoid, enum_size, enum_iso, enum_count,
                           enum_json_out);
    if (*suite)
      return run_suite_cmd(suite_monoids, suite_max_size, suite_raw,
                           suite_claims, suite_mode, suite_seed, suite_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
