#include "actlab/monoid.hpp"

#include <algorithm>

#include "actlab/errors.hpp"

namespace actlab {

MonoidPtr Monoid::make(const std::vector<std::vector<int>>& table, int identity,
                       std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw ParseError("monoid must have at least one element");
  if (identity < 0 || identity >= n) throw ParseError("identity index out of range");

  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    if (static_cast<int>(table[s].size()) != n)
      throw ParseError("monoid table is not square");
    for (int t = 0; t < n; ++t) {
      int v = table[s][t];
      if (v < 0 || v >= n) throw ParseError("monoid table entry out of range");
      flat[static_cast<std::size_t>(s) * n + t] = v;
    }
  }

  for (int s = 0; s < n; ++s)
    if (flat[static_cast<std::size_t>(identity) * n + s] != s ||
        flat[static_cast<std::size_t>(s) * n + identity] != s)
      throw IdentityLawFails(s);

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u) {
        int st = flat[static_cast<std::size_t>(s) * n + t];
        int tu = flat[static_cast<std::size_t>(t) * n + u];
        if (flat[static_cast<std::size_t>(st) * n + u] !=
            flat[static_cast<std::size_t>(s) * n + tu])
          throw NotAssociative(s, t, u);
      }

  if (labels.empty()) {
    labels.resize(n);
    for (int s = 0; s < n; ++s) labels[s] = "s" + std::to_string(s);
  } else if (static_cast<int>(labels.size()) != n) {
    throw ParseError("monoid label count does not match size");
  }

  return MonoidPtr(new Monoid(n, identity, std::move(flat), std::move(labels)));
}

bool Monoid::right_invertible(int s) const {
  for (int t = 0; t < n_; ++t)
    if (mul(s, t) == identity_) return true;
  return false;
}

Bitset Monoid::non_right_invertible() const {
  Bitset out(n_);
  for (int s = 0; s < n_; ++s)
    if (!right_invertible(s)) out.set(s);
  return out;
}

bool Monoid::is_group() const {
  for (int s = 0; s < n_; ++s) {
    bool inv = false;
    for (int t = 0; t < n_; ++t)
      if (mul(s, t) == identity_ && mul(t, s) == identity_) {
        inv = true;
        break;
      }
    if (!inv) return false;
  }
  return true;
}

std::vector<int> Monoid::idempotents() const {
  std::vector<int> out;
  for (int s = 0; s < n_; ++s)
    if (mul(s, s) == s) out.push_back(s);
  return out;
}

namespace {

// Closure of {identity} under right multiplication by gens.
bool generates(const Monoid& m, const std::vector<int>& gens) {
  std::vector<bool> seen(m.size(), false);
  std::vector<int> queue{m.identity()};
  seen[m.identity()] = true;
  int reached = 1;
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int g : gens) {
      int y = m.mul(x, g);
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  return reached == m.size();
}

}  // namespace

std::vector<int> Monoid::generating_set() const {
  std::vector<int> gens;
  for (int s = 0; s < n_; ++s)
    if (s != identity_) gens.push_back(s);
  // Drop redundant generators in index order.
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<int> trial = gens;
    trial.erase(trial.begin() + static_cast<long>(i));
    if (generates(*this, trial))
      gens = std::move(trial);
    else
      ++i;
  }
  return gens;
}

}  // namespace actlab
