#include "actlab/claims.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>

#include "actlab/catalog.hpp"
#include "actlab/check.hpp"
#include "actlab/enumerate.hpp"
#include "actlab/errors.hpp"
#include "actlab/io.hpp"
#include "actlab/ops.hpp"

namespace actlab {

using nlohmann::json;

namespace {

constexpr int kHomPairCap = 20;      // |source|·|target| cap for hom-quantified claims
constexpr int kCoproductSumCap = 6;  // |A1|+|A2| cap for coproduct instances
constexpr int kFailuresKept = 25;

// ---------------------------------------------------------------------------
// Sub-lattice helpers. `subs` is the full subact list of the parent act;
// the subacts of X are exactly the members contained in X, so every
// within-X predicate runs on the parent lattice directly.

const Bitset* sup_witness_in(const std::vector<Subact>& subs, const Bitset& x,
                             const Bitset& b) {
  for (const Subact& c : subs) {
    if (!x.contains(c.members()) || c.members() == x) continue;
    if ((b | c.members()) == x) return &c.members();
  }
  return nullptr;
}

bool superfluous_in(const std::vector<Subact>& subs, const Bitset& x,
                    const Bitset& b) {
  return sup_witness_in(subs, x, b) == nullptr;
}

// Empty-set convention: the empty subset is superfluous.
bool superfluous_subset_in(const std::vector<Subact>& subs, const Bitset& x,
                           const Bitset& b) {
  if (b.none()) return true;
  return superfluous_in(subs, x, b);
}

const Bitset* coess_witness_in(const std::vector<Subact>& subs, const Bitset& x,
                               const Bitset& b) {
  for (const Subact& c : subs) {
    if (!x.contains(c.members()) || c.members() == x) continue;
    if (c.members().intersects(b) && (b | c.members()) == x) return &c.members();
  }
  return nullptr;
}

bool coessential_in(const std::vector<Subact>& subs, const Bitset& x,
                    const Bitset& b) {
  return coess_witness_in(subs, x, b) == nullptr;
}

// Union of the proper superfluous subacts of X.
Bitset proper_radical_in(const std::vector<Subact>& subs, const Bitset& x) {
  Bitset acc(x.universe());
  for (const Subact& b : subs) {
    if (!x.contains(b.members()) || b.members() == x) continue;
    if (superfluous_in(subs, x, b.members())) acc |= b.members();
  }
  return acc;
}

bool subact_hollow(const std::vector<Subact>& subs, const Bitset& b) {
  for (const Subact& c : subs) {
    if (!b.contains(c.members()) || c.members() == b) continue;
    if (sup_witness_in(subs, b, c.members()) != nullptr) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Per-act context: the lattice plus the predicate values claims consult.

struct QuotCtx {
  ReesQuotient rq;
  std::vector<Subact> subs;
  Bitset full;

  Bitset img(const Bitset& b) const { return image_of(rq.projection, b); }
};

struct ActCtx {
  ActPtr act;
  std::vector<Subact> subs;
  Bitset full;
  std::vector<Bitset> maximals;
  Cyclicity cyc;
  RadicalResult rad;
  std::vector<Subact> components;
  bool hollow = false;
  bool couniform = false;
  bool indec = false;
  bool local = false;

  mutable std::map<Bitset, std::unique_ptr<QuotCtx>> quot_cache;

  const QuotCtx& quotient(const Bitset& by) const {
    auto it = quot_cache.find(by);
    if (it == quot_cache.end()) {
      ReesQuotient rq = quotient_by_subset(act, by);
      std::vector<Subact> subs = all_subacts(rq.act);
      Bitset full = Bitset::full(rq.act->size());
      it = quot_cache
               .emplace(by, std::make_unique<QuotCtx>(QuotCtx{
                                std::move(rq), std::move(subs), full}))
               .first;
    }
    return *it->second;
  }

  bool superfluous(const Bitset& b) const { return superfluous_in(subs, full, b); }
  bool coessential(const Bitset& b) const { return coessential_in(subs, full, b); }

  bool subact_simple(const Bitset& b) const {
    for (int a : b.members())
      if (act->cyclic(a) != b) return false;
    return true;
  }
  bool subact_cyclic(const Bitset& b) const {
    for (int a : b.members())
      if (act->cyclic(a) == b) return true;
    return false;
  }
};

ActCtx make_ctx(ActPtr act) {
  ActCtx ctx;
  ctx.act = std::move(act);
  ctx.subs = all_subacts(ctx.act);
  ctx.full = Bitset::full(ctx.act->size());
  for (const Subact& m : maximal_subacts(ctx.act)) ctx.maximals.push_back(m.members());
  ctx.cyc = cyclicity(ctx.act);
  ctx.rad = radical(ctx.act);
  ctx.components = decompose(ctx.act);
  ctx.indec = ctx.components.size() == 1;
  ctx.local = ctx.maximals.size() == 1;
  ctx.hollow = true;
  ctx.couniform = true;
  for (const Subact& b : ctx.subs) {
    if (b.is_whole()) continue;
    if (ctx.hollow && sup_witness_in(ctx.subs, ctx.full, b.members()) != nullptr)
      ctx.hollow = false;
    if (ctx.couniform &&
        coess_witness_in(ctx.subs, ctx.full, b.members()) != nullptr)
      ctx.couniform = false;
  }
  return ctx;
}

struct MonoidEntry {
  std::string spec;
  MonoidPtr monoid;
  std::vector<ActCtx> acts;
};

struct Corpus {
  std::vector<MonoidEntry> entries;
  SuiteOptions opt;
  mutable std::map<std::pair<const Act*, const Act*>, std::vector<Hom>> hom_cache;

  const std::vector<Hom>& homs(const ActPtr& a, const ActPtr& b) const {
    auto key = std::make_pair(a.get(), b.get());
    auto it = hom_cache.find(key);
    if (it == hom_cache.end())
      it = hom_cache.emplace(key, homomorphisms(a, b)).first;
    return it->second;
  }
};

Corpus build_corpus(const SuiteOptions& opt) {
  Corpus corpus;
  corpus.opt = opt;
  for (const std::string& spec : opt.monoid_specs) {
    MonoidEntry entry;
    entry.spec = spec;
    entry.monoid = monoid_from_spec(spec);
    for (int size = 1; size <= opt.max_act_size; ++size)
      for (ActPtr act : enumerate_acts(entry.monoid, size, opt.up_to_iso))
        entry.acts.push_back(make_ctx(std::move(act)));
    if (opt.seed_order == "revlex")
      std::reverse(entry.acts.begin(), entry.acts.end());
    corpus.entries.push_back(std::move(entry));
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// Failure payloads. Every failure embeds one or more concrete checks:
// an act file with named subacts, a property name and the verdict
// computed here through the same dispatch the CLI uses, so replaying the
// check through the CLI reproduces the verdict bit for bit.

json property_check(const ActPtr& act,
                    const std::map<std::string, Bitset>& named,
                    const std::string& property,
                    const std::vector<std::string>& args,
                    Reading reading = Reading::relaxed,
                    bool record_reading = false) {
  std::vector<Subact> resolved;
  for (const std::string& name : args)
    resolved.push_back(Subact::unchecked(act, named.at(name)));
  PropertyVerdict expect = check_property(act, property, resolved, reading);
  json out{{"actfile", act_file_json(*act, named)},
           {"property", property},
           {"subacts", args},
           {"expect", verdict_json(*act, expect)}};
  if (record_reading)
    out["reading"] = reading == Reading::strict ? "strict" : "relaxed";
  return out;
}

json cover_check(const Hom& h) {
  std::vector<std::string> map_labels;
  for (int v : h.map()) map_labels.push_back(h.target()->label(v));
  return json{{"actfile", act_file_json(*h.source())},
              {"property", "cover"},
              {"subacts", json::array()},
              {"target", act_file_json(*h.target())},
              {"map", map_labels},
              {"expect", verdict_json(*h.source(), is_cover(h))}};
}

json fail_payload(const std::string& spec, const std::string& note,
                  std::vector<json> checks) {
  return json{{"monoid_spec", spec}, {"note", note}, {"checks", checks}};
}

struct Sink {
  ClaimReport* rep;
  void instance(long long k = 1) { rep->instances_checked += k; }
  void fail(json payload) {
    ++rep->failures_total;
    if (static_cast<int>(rep->failures.size()) < kFailuresKept)
      rep->failures.push_back(std::move(payload));
  }
};

// Shorthand: payload with a single property check on one act.
json one_check(const MonoidEntry& e, const ActPtr& act, const std::string& note,
               const std::map<std::string, Bitset>& named,
               const std::string& property, const std::vector<std::string>& args,
               Reading reading = Reading::relaxed, bool record_reading = false) {
  return fail_payload(
      e.spec, note, {property_check(act, named, property, args, reading, record_reading)});
}

// ---------------------------------------------------------------------------
// Claim implementations.

using ClaimFn = std::function<void(const Corpus&, Reading, ClaimReport&)>;

void claim_L1_1(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts)
      for (const Bitset& m : A.maximals) {
        sink.instance();
        const QuotCtx& q = A.quotient(m);
        if (minimal_generating_sets(q.rq.act).empty())
          sink.fail(one_check(e, q.rq.act,
                              "factor act by a maximal subact has no finite "
                              "generating set",
                              {}, "cyclic", {}));
      }
}

void claim_L2_2(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts)
      for (const Subact& b : A.subs) {
        sink.instance();
        bool crit = A.coessential(b.members());
        bool def = is_coessential_def(Subact::unchecked(A.act, b.members())).holds;
        if (crit != def)
          sink.fail(one_check(e, A.act,
                              "criterion and cover-definition of coessential "
                              "disagree",
                              {{"B", b.members()}}, "coessential", {"B"}));
      }
}

void claim_L2_3(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      if (!A.indec) continue;
      for (const Subact& b : A.subs) {
        sink.instance();
        if (A.coessential(b.members()) && !A.superfluous(b.members()))
          sink.fail(one_check(e, A.act,
                              "coessential subact of an indecomposable act is "
                              "not superfluous",
                              {{"B", b.members()}}, "superfluous", {"B"}));
      }
    }
}

void claim_L2_4(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      // (i) B superfluous iff C superfluous and B/C superfluous in A/C.
      for (const Subact& c : A.subs)
        for (const Subact& b : A.subs) {
          if (!b.members().contains(c.members())) continue;
          sink.instance();
          const QuotCtx& q = A.quotient(c.members());
          bool lhs = A.superfluous(b.members());
          bool rhs = A.superfluous(c.members()) &&
                     superfluous_in(q.subs, q.full, q.img(b.members()));
          if (lhs != rhs)
            sink.fail(one_check(e, A.act, "part (i) fails on a chain",
                                {{"B", b.members()}, {"C", c.members()}},
                                "superfluous", {"B"}));
        }
      // (ii) C proper in B and superfluous in B implies superfluous in A.
      for (const Subact& b : A.subs)
        for (const Subact& c : A.subs) {
          if (!b.members().contains(c.members()) || c.members() == b.members())
            continue;
          sink.instance();
          if (superfluous_in(A.subs, b.members(), c.members()) &&
              !A.superfluous(c.members()))
            sink.fail(one_check(e, A.act,
                                "part (ii): superfluous in the subact, not in "
                                "the act",
                                {{"C", c.members()}, {"B", b.members()}},
                                "superfluous", {"C"}));
        }
      // (iii) superfluous iff every hom image joining with B to A is onto;
      // hom images are exactly subacts, and corpus homs are spot-checked.
      for (const Subact& b : A.subs) {
        sink.instance();
        bool lhs = A.superfluous(b.members());
        bool rhs = true;
        for (const Subact& c : A.subs)
          if (!c.is_whole() && (b.members() | c.members()).is_full()) {
            rhs = false;
            break;
          }
        bool hom_side = true;
        for (const ActCtx& X : e.acts) {
          if (X.act->size() * A.act->size() > kHomPairCap) continue;
          for (const Hom& h : corpus.homs(X.act, A.act)) {
            Bitset img = image_of(h, Bitset::full(X.act->size()));
            if (lhs && (img | b.members()).is_full() && !img.is_full())
              hom_side = false;
          }
        }
        if (lhs != rhs || !hom_side)
          sink.fail(one_check(e, A.act, "part (iii) hom-image condition fails",
                              {{"B", b.members()}}, "superfluous", {"B"}));
      }
      // (iv) B/D superfluous iff B/C and C/D are.
      for (const Subact& d : A.subs)
        for (const Subact& c : A.subs) {
          if (!c.members().contains(d.members())) continue;
          for (const Subact& b : A.subs) {
            if (!b.members().contains(c.members())) continue;
            sink.instance();
            const QuotCtx& qd = A.quotient(d.members());
            const QuotCtx& qc = A.quotient(c.members());
            bool lhs = superfluous_in(qd.subs, qd.full, qd.img(b.members()));
            bool rhs = superfluous_in(qc.subs, qc.full, qc.img(b.members())) &&
                       superfluous_in(qd.subs, qd.full, qd.img(c.members()));
            if (lhs != rhs)
              sink.fail(one_check(e, qd.rq.act, "part (iv) fails on a chain",
                                  {{"BD", qd.img(b.members())}}, "superfluous",
                                  {"BD"}));
          }
        }
    }
}

void claim_L2_5(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries) {
    for (const ActCtx& A : e.acts) {
      // (i) coessential in a subact implies coessential in the act.
      for (const Subact& b : A.subs)
        for (const Subact& c : A.subs) {
          if (!b.members().contains(c.members())) continue;
          sink.instance();
          if (coessential_in(A.subs, b.members(), c.members()) &&
              !A.coessential(c.members()))
            sink.fail(one_check(e, A.act,
                                "part (i): coessential in the subact, not in "
                                "the act",
                                {{"C", c.members()}, {"B", b.members()}},
                                "coessential", {"C"}));
        }
      // (ii) B coessential implies C coessential and B/C coessential in A/C.
      for (const Subact& b : A.subs) {
        if (!A.coessential(b.members())) continue;
        for (const Subact& c : A.subs) {
          if (!b.members().contains(c.members())) continue;
          sink.instance();
          const QuotCtx& q = A.quotient(c.members());
          if (!A.coessential(c.members()) ||
              !coessential_in(q.subs, q.full, q.img(b.members())))
            sink.fail(one_check(e, A.act,
                                "part (ii) fails below a coessential subact",
                                {{"B", b.members()}, {"C", c.members()}},
                                "coessential", {"C"}));
        }
      }
    }
    // (iii) monomorphism transport. The superfluous half is restricted to
    // proper subacts: a simple act is superfluous in itself, yet its image
    // under an embedding need not be superfluous in a larger act.
    for (const ActCtx& A : e.acts)
      for (const ActCtx& C : e.acts) {
        if (A.act->size() * C.act->size() > kHomPairCap) continue;
        for (const Hom& f : corpus.homs(A.act, C.act)) {
          if (!is_mono(f)) continue;
          for (const Subact& b : A.subs) {
            sink.instance();
            Bitset img = image_of(f, b.members());
            if (A.coessential(b.members()) && !coessential_in(C.subs, C.full, img))
              sink.fail(one_check(e, C.act,
                                  "part (iii): image of a coessential subact "
                                  "under a monomorphism is not coessential",
                                  {{"fB", img}}, "coessential", {"fB"}));
            if (!b.is_whole() && A.superfluous(b.members()) &&
                !superfluous_in(C.subs, C.full, img))
              sink.fail(one_check(e, C.act,
                                  "part (iii): image of a proper superfluous "
                                  "subact under a monomorphism is not superfluous",
                                  {{"fB", img}}, "superfluous", {"fB"}));
          }
        }
      }
  }
}

void claim_L2_6(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts)
      for (const Subact& b : A.subs) {
        if (b.is_whole()) continue;
        for (const Subact& c : A.subs) {
          if (c.is_whole()) continue;
          sink.instance();
          Bitset u = b.members() | c.members();
          bool lhs = A.superfluous(u);
          bool rhs = A.superfluous(b.members()) && A.superfluous(c.members());
          if (lhs != rhs)
            sink.fail(one_check(
                e, A.act, "union of proper subacts breaks the equivalence",
                {{"B", b.members()}, {"C", c.members()}, {"U", u}}, "superfluous",
                {"U"}));
        }
      }
}

void claim_L2_7(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries) {
    const auto& acts = e.acts;
    // (i)/(ii) over coproducts of two corpus acts with proper subacts.
    for (std::size_t i = 0; i < acts.size(); ++i)
      for (std::size_t j = i; j < acts.size(); ++j) {
        const ActCtx& A1 = acts[i];
        const ActCtx& A2 = acts[j];
        if (A1.act->size() + A2.act->size() > kCoproductSumCap) continue;
        Coproduct cp = coproduct({A1.act, A2.act});
        ActCtx P = make_ctx(cp.act);
        const int off = A1.act->size();
        for (const Subact& b1 : A1.subs) {
          if (b1.is_whole()) continue;
          for (const Subact& b2 : A2.subs) {
            if (b2.is_whole()) continue;
            sink.instance();
            Bitset u(P.act->size());
            for (int a : b1.members().members()) u.set(a);
            for (int a : b2.members().members()) u.set(off + a);
            bool lhs = P.superfluous(u);
            bool rhs = A1.superfluous(b1.members()) && A2.superfluous(b2.members());
            if (lhs != rhs)
              sink.fail(one_check(e, P.act,
                                  "part (i): coproduct equivalence fails",
                                  {{"B", u}}, "superfluous", {"B"}));
            if (P.coessential(u) &&
                !(A1.coessential(b1.members()) && A2.coessential(b2.members())))
              sink.fail(one_check(e, P.act,
                                  "part (ii): coproduct implication fails",
                                  {{"B", u}}, "coessential", {"B"}));
          }
        }
      }
    // (iii) finite unions inside one act, over premise-satisfying pairs.
    for (const ActCtx& A : acts) {
      std::vector<std::pair<Bitset, Bitset>> sup_pairs, coess_pairs;
      for (const Subact& x : A.subs)
        for (const Subact& b : A.subs) {
          if (!x.members().contains(b.members()) || b.members() == x.members())
            continue;
          if (superfluous_in(A.subs, x.members(), b.members()))
            sup_pairs.emplace_back(x.members(), b.members());
          if (coessential_in(A.subs, x.members(), b.members()))
            coess_pairs.emplace_back(x.members(), b.members());
        }
      for (const auto& [x1, b1] : sup_pairs)
        for (const auto& [x2, b2] : sup_pairs) {
          sink.instance();
          if (!superfluous_in(A.subs, x1 | x2, b1 | b2))
            sink.fail(one_check(e, A.act,
                                "part (iii): union of superfluous subacts is "
                                "not superfluous in the union of the acts",
                                {{"B1", b1}, {"B2", b2}, {"X1", x1}, {"X2", x2}},
                                "superfluous", {"B1"}));
        }
      for (const auto& [x1, b1] : coess_pairs)
        for (const auto& [x2, b2] : coess_pairs) {
          sink.instance();
          if (!coessential_in(A.subs, x1 | x2, b1 | b2))
            sink.fail(one_check(e, A.act,
                                "part (iii): union of coessential subacts is "
                                "not coessential in the union of the acts",
                                {{"B1", b1}, {"B2", b2}, {"X1", x1}, {"X2", x2}},
                                "coessential", {"B1"}));
        }
    }
  }
}

void claim_P3_2(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts)
      for (const ActCtx& C : e.acts) {
        if (A.act->size() * C.act->size() > kHomPairCap) continue;
        for (const Hom& f : corpus.homs(A.act, C.act)) {
          if (!is_epi(f)) continue;
          sink.instance();
          if (A.hollow && !C.hollow)
            sink.fail(one_check(e, C.act,
                                "factor act of a hollow act is not hollow", {},
                                "hollow", {}));
          if (A.couniform && !C.couniform)
            sink.fail(one_check(e, C.act,
                                "factor act of a co-uniform act is not co-uniform",
                                {}, "co-uniform", {}));
        }
      }
}

void claim_P3_3(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      sink.instance();
      if ((A.cyc.is_locally_cyclic || A.cyc.is_cyclic) && !A.hollow)
        sink.fail(one_check(e, A.act, "locally cyclic act is not hollow", {},
                            "hollow", {}));
    }
}

void claim_T3_4(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      sink.instance();
      if (A.hollow != (A.indec && A.couniform))
        sink.fail(one_check(e, A.act,
                            "hollow differs from indecomposable plus co-uniform",
                            {}, "hollow", {}));
    }
}

void claim_P3_5(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      if (!A.couniform) continue;
      sink.instance();
      bool ok = A.indec;
      if (!ok && A.components.size() == 2)
        ok = A.subact_simple(A.components[0].members()) &&
             A.subact_simple(A.components[1].members());
      if (!ok)
        sink.fail(one_check(e, A.act,
                            "co-uniform act is neither indecomposable nor a "
                            "coproduct of two simple acts",
                            {}, "co-uniform", {}));
    }
}

void claim_T3_6(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      sink.instance();
      bool i1 = is_uniserial(A.act).holds;
      bool i2 = is_uniserial_via_hollow_subacts(A.act).holds;
      bool i3 = is_uniserial_via_two_generated(A.act).holds;
      if (i1 != i2 || i2 != i3)
        sink.fail(one_check(e, A.act, "uniserial characterizations disagree", {},
                            "uniserial", {}));
    }
}

void claim_P3_7(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      sink.instance();
      bool has_mgs = !minimal_generating_sets(A.act).empty();
      bool bad_i = A.indec && A.couniform && has_mgs && !A.cyc.is_cyclic;
      bool bad_ii = A.hollow && has_mgs && !A.cyc.is_cyclic;
      bool bad_iii = A.hollow && !A.cyc.is_cyclic;  // finite acts are f.g.
      if (bad_i || bad_ii || bad_iii)
        sink.fail(one_check(e, A.act,
                            "hollow act with a minimal generating set is not "
                            "cyclic",
                            {}, "cyclic", {}));
    }
}

void claim_L3_8(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& D : e.acts)
      for (const ActCtx& A : e.acts) {
        if (D.act->size() * A.act->size() > kHomPairCap) continue;
        if (!A.hollow) continue;
        for (const Hom& f : corpus.homs(D.act, A.act)) {
          if (!is_cover(f).holds) continue;
          sink.instance();
          if (!D.indec)
            sink.fail(fail_payload(
                e.spec, "cover of a hollow act is decomposable",
                {cover_check(f),
                 property_check(D.act, {}, "indecomposable", {})}));
        }
      }
}

void claim_L4_2(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      if (!A.cyc.is_cyclic) continue;
      sink.instance();
      if (!A.cyc.is_simple && !A.local)
        sink.fail(one_check(e, A.act, "cyclic act is neither simple nor local",
                            {}, "local", {}));
    }
}

void claim_R4(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries) {
    sink.instance();
    const Monoid& m = *e.monoid;
    Bitset n = m.non_right_invertible();
    bool ok = true;
    std::string why;
    if (n.none()) {
      ok = m.is_group();
      why = "no non-right-invertible elements but the monoid is not a group";
    } else {
      for (int s : n.members())
        for (int t = 0; t < m.size() && ok; ++t)
          if (!n.test(m.mul(s, t))) ok = false;
      ActPtr reg = regular_act(e.monoid);
      std::vector<Subact> maxs = maximal_subacts(reg);
      if (!(maxs.size() == 1 && maxs[0].members() == n)) ok = false;
      why = "non-right-invertible elements do not form the unique maximal "
            "right ideal";
    }
    if (!ok)
      sink.fail(one_check(e, regular_act(e.monoid), why, {{"N", n}}, "local", {}));
  }
}

void claim_T4_4(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      sink.instance();
      bool b1 = A.hollow && !A.maximals.empty();
      bool b2 = A.cyc.is_cyclic && A.local;
      bool b3 = A.local;  // finite acts are finitely generated
      bool in_max = true;
      for (const Subact& b : A.subs) {
        if (b.is_whole()) continue;
        bool covered = false;
        for (const Bitset& m : A.maximals)
          if (m.contains(b.members())) covered = true;
        if (!covered) in_max = false;
      }
      bool b4 = in_max && A.local;
      bool b5 = false;
      for (const Bitset& m : A.maximals)
        if (A.superfluous(m)) b5 = true;
      bool b6 = false;
      if (A.maximals.size() == 1) {
        bool maximum = true;
        for (const Subact& b : A.subs)
          if (!b.is_whole() && !A.maximals[0].contains(b.members()))
            maximum = false;
        b6 = maximum && A.superfluous(A.maximals[0]);
      }
      if (!(b1 == b2 && b2 == b3 && b3 == b4 && b4 == b5 && b5 == b6))
        sink.fail(one_check(e, A.act, "six-way local characterization splits",
                            {}, "local", {}));
    }
}

void claim_L4_5(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts)
      for (int a = 0; a < A.act->size(); ++a) {
        Bitset as = A.act->cyclic(a);
        for (const Subact& c : A.subs) {
          if (!(as | c.members()).is_full()) continue;
          sink.instance();
          if (c.is_whole()) continue;
          bool found = false;
          for (const Bitset& m : A.maximals)
            if (m.contains(c.members()) && !m.test(a)) found = true;
          if (!found)
            sink.fail(one_check(e, A.act,
                                "no maximal subact separates the generator "
                                "from the subact",
                                {{"C", c.members()}}, "superfluous", {"C"}));
        }
      }
}

void claim_P4_6(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      sink.instance();
      if (A.rad.subset != radical_as_union(A.act))
        sink.fail(one_check(e, A.act,
                            "radical as intersection of maximals differs from "
                            "the union of superfluous subacts",
                            {}, "simple", {}));
    }
}

void claim_C4_7(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries) {
    for (const ActCtx& A : e.acts) {
      // (i) cyclic subacts of radical elements are superfluous.
      for (int a : A.rad.subset.members()) {
        sink.instance();
        Bitset as = A.act->cyclic(a);
        if (!A.superfluous(as))
          sink.fail(one_check(e, A.act,
                              "part (i): cyclic subact of a radical element is "
                              "not superfluous",
                              {{"aS", as}}, "superfluous", {"aS"}));
      }
      // (iii) the radical is the whole act iff every subact is superfluous.
      sink.instance();
      bool all_sup = true;
      for (const Subact& b : A.subs)
        if (!A.superfluous(b.members())) all_sup = false;
      if (A.rad.is_whole != all_sup)
        sink.fail(one_check(e, A.act, "part (iii): whole-radical mismatch", {},
                            "simple", {}));
    }
    // (ii) monomorphisms carry the radical into the radical. The union is
    // over proper superfluous subacts: a simple act is superfluous in
    // itself, but its embedded image can escape the target's radical.
    for (const ActCtx& A : e.acts)
      for (const ActCtx& B : e.acts) {
        if (A.act->size() * B.act->size() > kHomPairCap) continue;
        for (const Hom& f : corpus.homs(A.act, B.act)) {
          if (!is_mono(f)) continue;
          sink.instance();
          Bitset img = image_of(f, proper_radical_in(A.subs, A.full));
          if (!B.rad.subset.contains(img))
            sink.fail(one_check(e, B.act,
                                "part (ii): image of the radical escapes the "
                                "target radical",
                                {{"img", img}, {"Rad", B.rad.subset}}, "simple",
                                {}));
        }
      }
  }
}

void claim_C4_8(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts)
      for (const Subact& b : A.subs) {
        sink.instance();
        if (subact_hollow(A.subs, b.members()) && !A.subact_cyclic(b.members()) &&
            !A.rad.subset.contains(b.members()))
          sink.fail(one_check(e, A.act,
                              "non-cyclic hollow subact escapes the radical",
                              {{"B", b.members()}}, "superfluous", {"B"}));
      }
}

void claim_T4_9(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      sink.instance();
      bool lhs = A.rad.subset.none() || A.superfluous(A.rad.subset);
      bool rhs = true;
      for (const Subact& b : A.subs) {
        if (b.is_whole()) continue;
        bool covered = false;
        for (const Bitset& m : A.maximals)
          if (m.contains(b.members())) covered = true;
        if (!covered) rhs = false;
      }
      if (lhs != rhs)
        sink.fail(one_check(e, A.act,
                            "superfluous radical does not match the "
                            "maximal-cover condition",
                            {}, "simple", {}));
    }
}

void claim_P4_10(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      sink.instance();
      const QuotCtx& q = A.quotient(A.rad.subset);
      bool rhs = !minimal_generating_sets(q.rq.act).empty() &&
                 (A.rad.subset.none() || A.superfluous(A.rad.subset));
      if (!rhs)  // finite acts are finitely generated, so the lhs holds
        sink.fail(one_check(e, A.act,
                            "finitely generated act whose radical conditions "
                            "fail",
                            {}, "cyclic", {}));
    }
}

void claim_L5_2(const Corpus& corpus, Reading reading, ClaimReport& rep) {
  Sink sink{&rep};
  long long with_hyp = 0, without_hyp = 0, with_fail = 0, without_fail = 0;
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts)
      for (const Subact& b : A.subs) {
        if (b.is_whole()) continue;
        for (const Subact& c : A.subs) {
          if (reading == Reading::strict && c.is_whole()) continue;
          if (!(b.members() | c.members()).is_full()) continue;
          sink.instance();
          bool def = detail::supplement_minimal(A.subs, b.members(), c.members(),
                                                A.act->size());
          Bitset meet = b.members() & c.members();
          bool crit = meet.none() || superfluous_in(A.subs, c.members(), meet);
          ++without_hyp;
          bool hyp = meet.any();
          if (hyp) ++with_hyp;
          if (def != crit) {
            ++without_fail;
            if (hyp) ++with_fail;
            sink.fail(one_check(e, A.act,
                                "supplement definition and criterion disagree",
                                {{"B", b.members()}, {"C", c.members()}},
                                "supplement", {"B", "C"}, reading, true));
          }
        }
      }
  rep.notes["with_hypothesis_instances"] = with_hyp;
  rep.notes["with_hypothesis_failures"] = with_fail;
  rep.notes["without_hypothesis_instances"] = without_hyp;
  rep.notes["without_hypothesis_failures"] = without_fail;
  rep.notes["comment"] =
      "The stated hypothesis (nonempty intersection) makes the empty-"
      "intersection disjunct unreachable; the equivalence is checked both "
      "with and without the hypothesis.";
}

void claim_P5_3(const Corpus& corpus, Reading reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      if (!A.couniform) continue;
      sink.instance();
      if (!is_supplemented(A.act, reading).holds)
        sink.fail(one_check(e, A.act,
                            "co-uniform act is not supplemented under this "
                            "reading",
                            {}, "supplemented", {}, reading, true));
    }
}

// Supplement pairs (B, C), both proper, for the P5.4/P5.5 instance loops.
std::vector<std::pair<Bitset, Bitset>> supplement_pairs(const ActCtx& A) {
  std::vector<std::pair<Bitset, Bitset>> out;
  for (const Subact& b : A.subs) {
    if (b.is_whole()) continue;
    for (const Subact& c : A.subs) {
      if (c.is_whole()) continue;
      if (!(b.members() | c.members()).is_full()) continue;
      if (detail::supplement_minimal(A.subs, b.members(), c.members(),
                                     A.act->size()))
        out.emplace_back(b.members(), c.members());
    }
  }
  return out;
}

void claim_P5_4(const Corpus& corpus, ClaimReport& rep, int part) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts)
      for (const auto& [b, c] : supplement_pairs(A)) {
        switch (part) {
          case 1:  // a smaller D in B with D ∪ C = A keeps C a supplement
            for (const Subact& d : A.subs) {
              if (!b.contains(d.members()) || d.members() == b) continue;
              if (!(d.members() | c).is_full()) continue;
              sink.instance();
              if (!detail::supplement_minimal(A.subs, d.members(), c,
                                              A.act->size()))
                sink.fail(one_check(e, A.act,
                                    "part (i): candidate stops being a "
                                    "supplement of the smaller subact",
                                    {{"D", d.members()}, {"C", c}}, "supplement",
                                    {"D", "C"}));
            }
            break;
          case 2: {  // supplements of finitely generated acts are f.g.
            sink.instance();
            SubactAct sc = subact_act(Subact::unchecked(A.act, c));
            if (minimal_generating_sets(sc.act).empty())
              sink.fail(one_check(e, sc.act,
                                  "part (ii): supplement with no finite "
                                  "generating set",
                                  {}, "cyclic", {}));
            break;
          }
          case 3:  // subacts of C superfluous in A are superfluous in C
            for (const Subact& x : A.subs) {
              if (!c.contains(x.members())) continue;
              sink.instance();
              if (!x.is_whole() && A.superfluous(x.members()) &&
                  !superfluous_in(A.subs, c, x.members()))
                sink.fail(one_check(e, A.act,
                                    "part (iii): superfluous in the act, not "
                                    "in the supplement",
                                    {{"E", x.members()}, {"C", c}},
                                    "superfluous", {"E"}));
            }
            break;
          case 4:  // superfluous N meets C superfluously
            for (const Subact& x : A.subs) {
              sink.instance();
              if (!A.superfluous(x.members())) continue;
              Bitset meet = x.members() & c;
              if (!superfluous_subset_in(A.subs, c, meet))
                sink.fail(one_check(e, A.act,
                                    "part (iv): intersection with a superfluous "
                                    "subact is not superfluous in the supplement",
                                    {{"N", x.members()}, {"C", c}},
                                    "superfluous", {"N"}));
            }
            break;
          case 5:  // C stays a supplement of N ∪ B for superfluous proper N
            for (const Subact& x : A.subs) {
              if (x.is_whole() || !A.superfluous(x.members())) continue;
              sink.instance();
              Bitset nb = x.members() | b;
              if (nb.is_full())
                sink.fail(one_check(e, A.act,
                                    "part (v): enlarging by a superfluous "
                                    "subact reached the whole act",
                                    {{"N", x.members()}}, "superfluous", {"N"}));
              else if (!detail::supplement_minimal(A.subs, nb, c, A.act->size()))
                sink.fail(one_check(e, A.act,
                                    "part (v): candidate is not a supplement "
                                    "of the enlarged subact",
                                    {{"NB", nb}, {"C", c}}, "supplement",
                                    {"NB", "C"}));
            }
            break;
          case 6: {  // Rad(C) = C ∩ Rad(A), radicals as proper unions
            sink.instance();
            Bitset lhs = proper_radical_in(A.subs, c);
            Bitset rhs = c & proper_radical_in(A.subs, A.full);
            if (lhs != rhs)
              sink.fail(one_check(e, A.act, "part (vi): radical mismatch",
                                  {{"B", b}, {"C", c}}, "supplement",
                                  {"B", "C"}));
            break;
          }
        }
      }
  if (part == 6)
    rep.notes["comment"] =
        "Radicals are compared as unions of proper superfluous subacts; "
        "under the whole-act convention a simple supplement (for instance a "
        "coproduct complement of one element) would break the literal "
        "equation.";
}

void claim_P5_5(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      if (!is_projective(A.act).holds) continue;
      for (const auto& [b, c] : supplement_pairs(A)) {
        sink.instance();
        SubactAct sc = subact_act(Subact::unchecked(A.act, c));
        if (is_projective(sc.act).holds) continue;
        bool found = false;
        std::vector<Subact> subs_c = all_subacts(sc.act);
        Bitset full_c = Bitset::full(sc.act->size());
        for (const Hom& f : homomorphisms(A.act, sc.act)) {
          if (!is_epi(f)) continue;
          if (superfluous_subset_in(subs_c, full_c, image_of(f, b))) {
            found = true;
            break;
          }
        }
        if (!found)
          sink.fail(fail_payload(
              e.spec,
              "projective act has a supplement that is neither projective nor "
              "the target of an epimorphism carrying the subact superfluously",
              {property_check(sc.act, {}, "projective", {})}));
      }
    }
}

void claim_T5_6(const Corpus& corpus, Reading reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      bool rad_sup = A.rad.subset.none() || A.superfluous(A.rad.subset);
      if (!rad_sup) continue;
      sink.instance();
      // (i) the union of all hollow subacts is the whole act.
      Bitset hollow_union(A.act->size());
      for (const Subact& b : A.subs)
        if (subact_hollow(A.subs, b.members())) hollow_union |= b.members();
      bool i1 = hollow_union.is_full();
      // (ii) every proper subact has a supplement (factor acts of finite
      // acts are always finitely generated).
      bool i2 = is_supplemented(A.act, reading).holds;
      // (iii) every maximal subact has a supplement.
      bool i3 = true;
      for (const Bitset& m : A.maximals)
        if (supplements_of(A.act, Subact::unchecked(A.act, m), reading).empty())
          i3 = false;
      if (i1 != i2 || i2 != i3)
        sink.fail(one_check(e, A.act,
                            "union-of-hollow equivalence splits under this "
                            "reading",
                            {}, "supplemented", {}, reading, true));
    }
}

void claim_EQ_superfluous(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts)
      for (const Subact& b : A.subs) {
        sink.instance();
        Subact sb = Subact::unchecked(A.act, b.members());
        if (is_superfluous(sb).holds != is_superfluous_fast(sb).holds)
          sink.fail(one_check(e, A.act,
                              "definitional and maximal-subact superfluous "
                              "tests disagree",
                              {{"B", b.members()}}, "superfluous", {"B"}));
      }
}

void claim_EQ_hollow(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      sink.instance();
      bool via_dec = is_hollow_via_decomposition(A.act).holds;
      bool via_loc = is_hollow_via_local(A.act).holds;
      if (A.hollow != via_dec || A.hollow != via_loc)
        sink.fail(one_check(e, A.act, "hollow characterizations disagree", {},
                            "hollow", {}));
    }
}

void claim_EQ_supplement(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts)
      for (const Subact& b : A.subs) {
        if (b.is_whole()) continue;
        for (const Subact& c : A.subs) {
          if (!(b.members() | c.members()).is_full()) continue;
          sink.instance();
          bool def = detail::supplement_minimal(A.subs, b.members(), c.members(),
                                                A.act->size());
          Bitset meet = b.members() & c.members();
          bool crit = meet.none() || superfluous_in(A.subs, c.members(), meet);
          if (def != crit)
            sink.fail(one_check(e, A.act,
                                "supplement minimality and criterion disagree",
                                {{"B", b.members()}, {"C", c.members()}},
                                "supplement", {"B", "C"}));
        }
      }
}

void claim_EQ_cyclic(const Corpus& corpus, Reading, ClaimReport& rep) {
  Sink sink{&rep};
  for (const auto& e : corpus.entries)
    for (const ActCtx& A : e.acts) {
      sink.instance();
      if (A.cyc.is_cyclic != A.cyc.is_locally_cyclic)
        sink.fail(one_check(e, A.act,
                            "finite act separates cyclic from locally cyclic",
                            {}, "cyclic", {}));
    }
  rep.notes["comment"] =
      "On finite acts locally cyclic and cyclic coincide; the claim records "
      "the coincidence rather than assuming it.";
}

// ---------------------------------------------------------------------------
// Strictness witness search.

void run_strictness(const Corpus& corpus, ClaimReport& rep) {
  Sink sink{&rep};
  json results = json::array();

  auto record = [&](const std::string& name, bool expect_witness,
                    const json& witness, const std::string& note) {
    json entry{{"implication", name},
               {"status",
                witness.is_null() ? "no finite witness in corpus" : "witness"},
               {"witness_expected", expect_witness}};
    if (!witness.is_null()) entry["witness"] = witness;
    if (!note.empty()) entry["note"] = note;
    results.push_back(entry);
    if (expect_witness && witness.is_null())
      sink.fail(json{{"note", "expected a corpus witness for: " + name}});
  };

  // coessential without superfluous needs an act-plus-subact witness.
  json w1;
  for (const auto& e : corpus.entries) {
    for (const ActCtx& A : e.acts) {
      for (const Subact& b : A.subs) {
        sink.instance();
        if (A.coessential(b.members()) && !A.superfluous(b.members())) {
          w1 = fail_payload(
              e.spec, "coessential but not superfluous",
              {property_check(A.act, {{"B", b.members()}}, "coessential", {"B"}),
               property_check(A.act, {{"B", b.members()}}, "superfluous", {"B"})});
          break;
        }
      }
      if (!w1.is_null()) break;
    }
    if (!w1.is_null()) break;
  }
  record("coessential => superfluous", true, w1, "");

  auto act_witness = [&](const std::function<bool(const ActCtx&)>& separates,
                         const std::string& note,
                         const std::vector<std::string>& props) -> json {
    for (const auto& e : corpus.entries)
      for (const ActCtx& A : e.acts) {
        sink.instance();
        if (!separates(A)) continue;
        std::vector<json> checks;
        for (const std::string& p : props)
          checks.push_back(property_check(A.act, {}, p, {}, Reading::strict,
                                          p == "supplemented"));
        return fail_payload(e.spec, note, checks);
      }
    return json();
  };

  record("co-uniform => hollow", true,
         act_witness([](const ActCtx& A) { return A.couniform && !A.hollow; },
                     "co-uniform but not hollow", {"co-uniform", "hollow"}),
         "");
  record("indecomposable => hollow", true,
         act_witness([](const ActCtx& A) { return A.indec && !A.hollow; },
                     "indecomposable but not hollow",
                     {"indecomposable", "hollow"}),
         "");
  record("supplemented => co-uniform", true,
         act_witness(
             [](const ActCtx& A) {
               return !A.couniform &&
                      is_supplemented(A.act, Reading::strict).holds;
             },
             "supplemented but not co-uniform", {"supplemented", "co-uniform"}),
         "a strict-reading supplement remains one under the relaxed reading, "
         "so the witness separates under both readings");
  record("hollow => locally cyclic", false,
         act_witness(
             [](const ActCtx& A) { return A.hollow && !A.cyc.is_locally_cyclic; },
             "hollow but not locally cyclic", {"hollow", "locally-cyclic"}),
         "finite hollow acts are cyclic, hence locally cyclic; no finite "
         "witness exists");
  record("locally cyclic => cyclic", false,
         act_witness(
             [](const ActCtx& A) {
               return A.cyc.is_locally_cyclic && !A.cyc.is_cyclic;
             },
             "locally cyclic but not cyclic", {"locally-cyclic", "cyclic"}),
         "finite locally cyclic acts are cyclic; no finite witness exists");

  rep.notes["implications"] = results;
}

// ---------------------------------------------------------------------------
// Registry.

struct ClaimDef {
  ClaimInfo info;
  ClaimFn run;
};

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> defs = [] {
    std::vector<ClaimDef> v;
    auto add = [&](std::string id, std::string title, std::string category,
                   bool mode_sensitive, ClaimFn fn) {
      v.push_back(ClaimDef{ClaimInfo{std::move(id), std::move(title),
                                     std::move(category), mode_sensitive},
                           std::move(fn)});
    };
    add("L1.1", "factor acts by maximal subacts are finitely generated",
        "theorem", false, claim_L1_1);
    add("L2.2",
        "coessential: cover definition matches the intersection criterion",
        "theorem", false, claim_L2_2);
    add("L2.3", "coessential subacts of indecomposable acts are superfluous",
        "theorem", false, claim_L2_3);
    add("L2.4", "superfluous calculus on chains, quotients and hom images",
        "theorem", false, claim_L2_4);
    add("L2.5", "coessential calculus and monomorphism transport", "theorem",
        false, claim_L2_5);
    add("L2.6", "a union of proper subacts is superfluous iff both are",
        "theorem", false, claim_L2_6);
    add("L2.7",
        "superfluous and coessential subacts under coproducts and unions",
        "theorem", false, claim_L2_7);
    add("P3.2",
        "factor acts of hollow (co-uniform) acts are hollow (co-uniform)",
        "theorem", false, claim_P3_2);
    add("P3.3", "locally cyclic acts are hollow", "theorem", false, claim_P3_3);
    add("T3.4", "hollow equals indecomposable plus co-uniform", "theorem", false,
        claim_T3_4);
    add("P3.5", "co-uniform acts are indecomposable or two simple components",
        "theorem", false, claim_P3_5);
    add("T3.6",
        "uniserial equals all subacts hollow equals two-generated hollow",
        "theorem", false, claim_T3_6);
    add("P3.7", "hollow acts with minimal generating sets are cyclic", "theorem",
        false, claim_P3_7);
    add("L3.8", "covers of hollow acts are indecomposable", "theorem", false,
        claim_L3_8);
    add("L4.2", "cyclic acts are simple or local", "theorem", false, claim_L4_2);
    add("R4", "every monoid is a group or local", "theorem", false, claim_R4);
    add("T4.4", "six-way characterization of hollow acts with maximal subacts",
        "theorem", false, claim_T4_4);
    add("L4.5", "maximal subacts separate generators from proper complements",
        "theorem", false, claim_L4_5);
    add("P4.6", "radical equals the union of superfluous subacts", "theorem",
        false, claim_P4_6);
    add("C4.7", "radical corollaries: cyclic subacts, monomorphisms, whole case",
        "theorem", false, claim_C4_7);
    add("C4.8", "non-cyclic hollow subacts lie in the radical", "theorem", false,
        claim_C4_8);
    add("T4.9", "radical superfluous iff proper subacts lie under maximals",
        "theorem", false, claim_T4_9);
    add("P4.10", "finitely generated iff radical factor f.g. and radical small",
        "theorem", false, claim_P4_10);
    add("L5.2", "supplement criterion, with and without its hypothesis",
        "open_question", true, claim_L5_2);
    add("P5.3", "co-uniform acts are supplemented", "theorem", true, claim_P5_3);
    for (int part = 1; part <= 6; ++part) {
      static const char* roman[] = {"", "i", "ii", "iii", "iv", "v", "vi"};
      add(std::string("P5.4.") + roman[part],
          std::string("supplement property (") + roman[part] + ")",
          part == 1 ? "open_question" : "theorem", false,
          [part](const Corpus& c, Reading, ClaimReport& r) {
            claim_P5_4(c, r, part);
          });
    }
    add("P5.5", "supplements in projective acts are projective or epi targets",
        "theorem", false, claim_P5_5);
    add("T5.6", "acts with small radical: union-of-hollow characterization",
        "theorem", true, claim_T5_6);
    add("EQ.superfluous",
        "superfluous: definition matches the maximal-subact test", "equivalence",
        false, claim_EQ_superfluous);
    add("EQ.hollow", "hollow: definition matches both characterizations",
        "equivalence", false, claim_EQ_hollow);
    add("EQ.supplement", "supplement: minimality matches the criterion",
        "equivalence", false, claim_EQ_supplement);
    add("EQ.cyclic", "finite coincidence of cyclic and locally cyclic",
        "equivalence", false, claim_EQ_cyclic);
    add("strictness", "witness search for the strict implications",
        "witness_search", false,
        [](const Corpus& c, Reading, ClaimReport& r) { run_strictness(c, r); });
    return v;
  }();
  return defs;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> v;
    for (const ClaimDef& d : registry()) v.push_back(d.info);
    return v;
  }();
  return infos;
}

std::vector<ClaimReport> run_suite(const SuiteOptions& opt) {
  // Resolve the claim filter: exact ids, or a dotted prefix like "P5.4".
  std::vector<const ClaimDef*> selected;
  if (opt.claim_ids.empty() ||
      (opt.claim_ids.size() == 1 && opt.claim_ids[0] == "all")) {
    for (const ClaimDef& d : registry()) selected.push_back(&d);
  } else {
    for (const std::string& id : opt.claim_ids) {
      bool found = false;
      for (const ClaimDef& d : registry())
        if (d.info.id == id ||
            (d.info.id.size() > id.size() &&
             d.info.id.compare(0, id.size(), id) == 0 &&
             d.info.id[id.size()] == '.')) {
          selected.push_back(&d);
          found = true;
        }
      if (!found) throw UnknownClaim(id);
    }
  }
  if (opt.mode != "strict" && opt.mode != "relaxed" && opt.mode != "both")
    throw ParseError("mode must be strict, relaxed or both");
  if (opt.seed_order != "lex" && opt.seed_order != "revlex")
    throw ParseError("seed order must be lex or revlex");

  Corpus corpus = build_corpus(opt);
  json corpus_desc{{"monoids", opt.monoid_specs},
                   {"max_act_size", opt.max_act_size},
                   {"up_to_iso", opt.up_to_iso},
                   {"seed_order", opt.seed_order}};

  std::vector<ClaimReport> reports;
  for (const ClaimDef* d : selected) {
    std::vector<std::pair<Reading, std::string>> runs;
    if (!d->info.mode_sensitive) {
      runs.emplace_back(Reading::relaxed, "-");
    } else {
      if (opt.mode == "strict" || opt.mode == "both")
        runs.emplace_back(Reading::strict, "strict");
      if (opt.mode == "relaxed" || opt.mode == "both")
        runs.emplace_back(Reading::relaxed, "relaxed");
    }
    for (const auto& [reading, mode_name] : runs) {
      ClaimReport rep;
      rep.claim = d->info.id;
      rep.title = d->info.title;
      rep.category = d->info.category;
      rep.mode = mode_name;
      rep.corpus = corpus_desc;
      rep.counts_for_exit =
          d->info.category != "open_question" && mode_name != "strict";
      auto start = std::chrono::steady_clock::now();
      d->run(corpus, reading, rep);
      rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
      reports.push_back(std::move(rep));
    }
  }

  std::sort(reports.begin(), reports.end(),
            [](const ClaimReport& a, const ClaimReport& b) {
              if (a.claim != b.claim) return a.claim < b.claim;
              return a.mode < b.mode;
            });
  return reports;
}

bool suite_passes(const std::vector<ClaimReport>& reports) {
  for (const ClaimReport& r : reports)
    if (r.counts_for_exit && r.failures_total > 0) return false;
  return true;
}

json report_json(const ClaimReport& r) {
  json out{{"claim", r.claim},
           {"title", r.title},
           {"category", r.category},
           {"mode", r.mode},
           {"counts_for_exit", r.counts_for_exit},
           {"instances_checked", r.instances_checked},
           {"failures_total", r.failures_total},
           {"failures", r.failures},
           {"elapsed_ms", r.elapsed_ms},
           {"corpus", r.corpus}};
  if (!r.notes.is_null()) out["notes"] = r.notes;
  return out;
}

}  // namespace actlab
