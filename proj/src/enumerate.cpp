#include "actlab/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "actlab/errors.hpp"

namespace actlab {

namespace {

using Transf = std::vector<int>;  // a map carrier → carrier

Transf compose(const Transf& first, const Transf& then) {
  Transf out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

// BFS layering of the monoid by generator prefixes: after level j the
// known elements are the submonoid generated by gens[0..j-1], each fresh
// element carrying a derivation (parent, generator index). Elements are
// appended in discovery order, so each level's known list extends the
// previous one as a prefix.
struct Layering {
  struct Node {
    int element;
    int parent;  // monoid element, -1 for the identity
    int gen;     // generator index used from the parent
  };
  std::vector<std::vector<Node>> new_at_level;
  std::vector<std::vector<int>> known_at_level;
};

Layering layer_monoid(const Monoid& m, const std::vector<int>& gens) {
  Layering lay;
  std::vector<bool> seen(m.size(), false);
  std::vector<int> known{m.identity()};
  seen[m.identity()] = true;
  lay.new_at_level.push_back({{m.identity(), -1, -1}});
  lay.known_at_level.push_back(known);

  for (std::size_t j = 0; j < gens.size(); ++j) {
    std::vector<Layering::Node> fresh;
    std::size_t head = 0;
    std::vector<int> queue = known;
    while (head < queue.size()) {
      int x = queue[head++];
      for (std::size_t g = 0; g <= j; ++g) {
        int y = m.mul(x, gens[g]);
        if (!seen[y]) {
          seen[y] = true;
          fresh.push_back({y, x, static_cast<int>(g)});
          known.push_back(y);
          queue.push_back(y);
        }
      }
    }
    lay.new_at_level.push_back(fresh);
    lay.known_at_level.push_back(known);
  }
  return lay;
}

// Candidate images for one generator: all transformations t satisfying
// the generator's power relation g^q = g^r (a necessary condition that
// prunes the search; full consistency is enforced level by level).
std::vector<Transf> candidate_images(const Monoid& m, int g, int size) {
  std::vector<int> powers{m.identity()};
  int q = 0, r = 0;
  int x = m.identity();
  while (true) {
    x = m.mul(x, g);
    auto it = std::find(powers.begin(), powers.end(), x);
    if (it != powers.end()) {
      r = static_cast<int>(it - powers.begin());
      q = static_cast<int>(powers.size());
      break;
    }
    powers.push_back(x);
  }

  std::vector<Transf> out;
  Transf t(size, 0), id(size);
  std::iota(id.begin(), id.end(), 0);
  while (true) {
    Transf tq = id, tr = id;
    for (int i = 0; i < q; ++i) tq = compose(tq, t);
    for (int i = 0; i < r; ++i) tr = compose(tr, t);
    if (tq == tr) out.push_back(t);

    int i = size - 1;
    while (i >= 0 && t[i] == size - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

}  // namespace

std::vector<ActPtr> enumerate_acts(const MonoidPtr& m, int size, bool up_to_iso) {
  if (size < 1) throw ParseError("act size must be at least 1");
  const std::vector<int> gens = m->generating_set();
  const Layering lay = layer_monoid(*m, gens);
  const int n = m->size();

  std::vector<std::vector<Transf>> cands(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    cands[j] = candidate_images(*m, gens[j], size);

  // phi[s] = the transformation by which monoid element s acts.
  std::vector<Transf> phi(n, Transf(size));
  std::iota(phi[m->identity()].begin(), phi[m->identity()].end(), 0);

  std::set<std::vector<int>> tables;

  // The homomorphism condition phi[s]·phi[t] = phi[st] on every pair not
  // already verified at an earlier level (old×old pairs are skipped: the
  // known list grows by appending, so old elements form a prefix).
  auto level_consistent = [&](std::size_t level) {
    const auto& known = lay.known_at_level[level];
    const std::size_t old = lay.known_at_level[level - 1].size();
    for (std::size_t si = 0; si < known.size(); ++si)
      for (std::size_t ti = 0; ti < known.size(); ++ti) {
        if (si < old && ti < old) continue;
        const Transf& fs = phi[known[si]];
        const Transf& ft = phi[known[ti]];
        const Transf& fst = phi[m->mul(known[si], known[ti])];
        for (int i = 0; i < size; ++i)
          if (ft[fs[i]] != fst[i]) return false;
      }
    return true;
  };

  std::function<void(std::size_t)> search = [&](std::size_t j) {
    if (j == gens.size()) {
      std::vector<int> flat(static_cast<std::size_t>(size) * n);
      for (int a = 0; a < size; ++a)
        for (int s = 0; s < n; ++s)
          flat[static_cast<std::size_t>(a) * n + s] = phi[s][a];
      if (up_to_iso) {
        std::vector<std::vector<int>> rows(size, std::vector<int>(n));
        for (int a = 0; a < size; ++a)
          for (int s = 0; s < n; ++s)
            rows[a][s] = flat[static_cast<std::size_t>(a) * n + s];
        tables.insert(canonical_form(*Act::make(m, rows)));
      } else {
        tables.insert(std::move(flat));
      }
      return;
    }
    for (const Transf& t : cands[j]) {
      phi[gens[j]] = t;
      for (const auto& node : lay.new_at_level[j + 1]) {
        if (node.parent < 0) continue;
        const Transf& fp = phi[node.parent];
        const Transf& fg = phi[gens[node.gen]];
        Transf& out = phi[node.element];
        for (int i = 0; i < size; ++i) out[i] = fg[fp[i]];
      }
      if (level_consistent(j + 1)) search(j + 1);
    }
  };
  search(0);

  std::vector<ActPtr> out;
  out.reserve(tables.size());
  for (const auto& flat : tables) {
    std::vector<std::vector<int>> rows(size, std::vector<int>(n));
    for (int a = 0; a < size; ++a)
      for (int s = 0; s < n; ++s)
        rows[a][s] = flat[static_cast<std::size_t>(a) * n + s];
    out.push_back(Act::make(m, rows));
  }
  return out;
}

std::vector<int> canonical_form(const Act& a) {
  const int m = a.size();
  const int n = a.monoid().size();
  std::vector<int> perm(m), best;
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> inv(m);
  std::vector<int> cur(static_cast<std::size_t>(m) * n);
  do {
    // perm[i] = source element placed at position i; inv is its inverse.
    for (int i = 0; i < m; ++i) inv[perm[i]] = i;
    bool worse = false, better = best.empty();
    for (int i = 0; i < m && !worse; ++i) {
      int src = perm[i];
      for (int s = 0; s < n; ++s) {
        int v = inv[a.apply(src, s)];
        std::size_t pos = static_cast<std::size_t>(i) * n + s;
        cur[pos] = v;
        if (!better) {
          if (v > best[pos]) {
            worse = true;
            break;
          }
          if (v < best[pos]) better = true;
        }
      }
    }
    if (better && !worse) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool act_isomorphic(const Act& a, const Act& b) {
  if (!a.monoid().same_structure(b.monoid())) throw MixedMonoids();
  if (a.size() != b.size()) return false;
  if (a.same_table(b)) return true;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace actlab
