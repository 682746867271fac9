#include "actlab/catalog.hpp"

#include <algorithm>

#include "actlab/errors.hpp"

namespace actlab {

MonoidPtr make_trivial_monoid() {
  return Monoid::make({{0}}, 0, {"1"});
}

MonoidPtr make_cyclic_group(int n) {
  if (n < 1) throw ParseError("cyclic_group needs n >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i));
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return Monoid::make(table, 0, labels);
}

MonoidPtr make_cyclic_monoid(int index, int period) {
  if (index < 1 || period < 1)
    throw ParseError("cyclic_monoid needs index >= 1 and period >= 1");
  const int n = index + period;
  auto reduce = [&](int e) { return e < n ? e : index + (e - index) % period; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : (i == 1 ? "x" : "x" + std::to_string(i));
    for (int j = 0; j < n; ++j) table[i][j] = reduce(i + j);
  }
  return Monoid::make(table, 0, labels);
}

MonoidPtr make_zero_adjoined(const MonoidPtr& base) {
  const int n = base->size();
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = base->mul(i, j);
  std::vector<std::string> labels = base->labels();
  std::string z = "z";
  while (std::find(labels.begin(), labels.end(), z) != labels.end()) z += "_";
  labels.push_back(z);
  return Monoid::make(table, base->identity(), labels);
}

MonoidPtr make_right_zero_identity(int n) {
  if (n < 1) throw ParseError("right_zero_identity needs n >= 1");
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1));
  std::vector<std::string> labels{"1"};
  for (int i = 1; i <= n; ++i) labels.push_back("r" + std::to_string(i));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) table[i][j] = j == 0 ? i : j;
  return Monoid::make(table, 0, labels);
}

MonoidPtr make_left_zero_identity(int n) {
  if (n < 1) throw ParseError("left_zero_identity needs n >= 1");
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1));
  std::vector<std::string> labels{"1"};
  for (int i = 1; i <= n; ++i) labels.push_back("l" + std::to_string(i));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) table[i][j] = i == 0 ? j : (j == 0 ? i : i);
  return Monoid::make(table, 0, labels);
}

MonoidPtr make_min_chain(int n) {
  if (n < 1) throw ParseError("min_chain needs n >= 1");
  // Elements 0..n-1 stand for the naturals 1..n; index n is the adjoined
  // identity eps.
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  labels.push_back("eps");
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == n) table[i][j] = j;
      else if (j == n) table[i][j] = i;
      else table[i][j] = std::min(i, j);
    }
  return Monoid::make(table, n, labels);
}

MonoidPtr make_full_transformation(int n) {
  if (n < 1 || n > 3)
    throw ParseError("full_transformation supports 1 <= n <= 3");
  int count = 1;
  for (int i = 0; i < n; ++i) count *= n;
  // Map k encodes the transformation i ↦ (k / n^i) % n.
  auto image = [&](int k, int i) {
    for (int j = 0; j < i; ++j) k /= n;
    return k % n;
  };
  std::vector<std::vector<int>> table(count, std::vector<int>(count));
  std::vector<std::string> labels(count);
  int identity = 0;
  for (int k = 0; k < count; ++k) {
    std::string l = "t";
    for (int i = 0; i < n; ++i) l += static_cast<char>('0' + image(k, i));
    labels[k] = l;
    bool is_id = true;
    for (int i = 0; i < n; ++i)
      if (image(k, i) != i) is_id = false;
    if (is_id) identity = k;
    for (int j = 0; j < count; ++j) {
      // k·j applies k first, then j.
      int enc = 0, pw = 1;
      for (int i = 0; i < n; ++i) {
        enc += image(j, image(k, i)) * pw;
        pw *= n;
      }
      table[k][j] = enc;
    }
  }
  return Monoid::make(table, identity, labels);
}

namespace {

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("bad integer in monoid spec: " + s);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError("bad integer in monoid spec: " + s);
  }
}

}  // namespace

MonoidPtr monoid_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (kind == "trivial") return make_trivial_monoid();
  if (kind == "cyclic_group") return make_cyclic_group(parse_int(rest));
  if (kind == "cyclic_monoid") {
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw ParseError("cyclic_monoid spec needs index,period");
    return make_cyclic_monoid(parse_int(rest.substr(0, comma)),
                              parse_int(rest.substr(comma + 1)));
  }
  if (kind == "zero_adjoined") return make_zero_adjoined(monoid_from_spec(rest));
  if (kind == "right_zero_identity") return make_right_zero_identity(parse_int(rest));
  if (kind == "left_zero_identity") return make_left_zero_identity(parse_int(rest));
  if (kind == "min_chain") return make_min_chain(parse_int(rest));
  if (kind == "full_transformation") return make_full_transformation(parse_int(rest));
  throw ParseError("unknown monoid spec: " + spec);
}

std::vector<std::string> desk_catalog() {
  return {
      "trivial",
      "cyclic_monoid:1,1",
      "cyclic_group:2",
      "cyclic_group:3",
      "cyclic_group:4",
      "cyclic_monoid:2,1",
      "cyclic_monoid:1,2",
      "cyclic_monoid:3,1",
      "cyclic_monoid:2,2",
      "cyclic_monoid:1,3",
      "zero_adjoined:cyclic_group:2",
      "zero_adjoined:cyclic_monoid:1,1",
      "right_zero_identity:2",
      "left_zero_identity:2",
      "right_zero_identity:3",
      "left_zero_identity:3",
      "min_chain:2",
      "min_chain:3",
      "full_transformation:2",
      "full_transformation:3",
  };
}

ActPtr theta(const MonoidPtr& m, const std::string& label) {
  std::vector<std::vector<int>> action(1, std::vector<int>(m->size(), 0));
  return Act::make(m, action, {label});
}

ActPtr regular_act(const MonoidPtr& m) {
  const int n = m->size();
  std::vector<std::vector<int>> action(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int s = 0; s < n; ++s) action[a][s] = m->mul(a, s);
  return Act::make(m, action, m->labels());
}

ActPtr min_chain_act(int n) {
  MonoidPtr m = make_min_chain(n);
  std::vector<std::vector<int>> action(n, std::vector<int>(n + 1));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a + 1);
    for (int s = 0; s <= n; ++s) action[a][s] = s == n ? a : std::min(a, s);
  }
  return Act::make(m, action, labels);
}

}  // namespace actlab
