#include "krasner/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "krasner/instance_io.hpp"
#include "krasner/iterate.hpp"

namespace krasner {

namespace {

uint64_t splitmix64(uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t rnd_below(uint64_t& s, uint64_t n) { return n ? splitmix64(s) % n : 0; }

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

long long count_multisets(int carrier, int len) {
  // C(carrier + len - 1, len), saturating at a large sentinel.
  long long r = 1;
  for (int i = 1; i <= len; ++i) {
    r = r * (carrier + len - i) / i;
    if (r > (1ll << 50)) return 1ll << 50;
  }
  return r;
}

long long count_subsets(int w, int u) {
  long long r = 1;
  for (int i = 1; i <= u; ++i) r = r * (w - u + i) / i;
  return r;
}

// Colex unrank of the sorted tuple with the given rank.
std::vector<ElementId> unrank_multiset(long long rank, int carrier, int len) {
  std::vector<ElementId> out(static_cast<size_t>(len));
  for (int i = len; i-- > 0;) {
    // largest c with C(c + i, i + 1) <= rank
    int c = 0;
    long long binom = 0;
    for (int cand = carrier - 1; cand >= 0; --cand) {
      long long b = 1;
      for (int j = 1; j <= i + 1; ++j) b = b * (cand + i + 1 - j + 1) / j;  // C(cand+i, i+1)
      if (b <= rank) {
        c = cand;
        binom = b;
        break;
      }
    }
    rank -= binom;
    out[static_cast<size_t>(i)] = c;
  }
  return out;
}

// Deterministic index sample of [0, total): exhaustive below the cap,
// otherwise `cap` distinct hash-selected indices in ascending order.
struct ConfigSample {
  std::vector<long long> indices;
  double coverage = 1.0;

  ConfigSample(long long total, long long cap, uint64_t seed) {
    if (total <= cap) {
      indices.resize(static_cast<size_t>(total));
      std::iota(indices.begin(), indices.end(), 0);
      return;
    }
    std::set<long long> chosen;
    uint64_t state = seed;
    while (static_cast<long long>(chosen.size()) < cap)
      chosen.insert(static_cast<long long>(rnd_below(state, static_cast<uint64_t>(total))));
    indices.assign(chosen.begin(), chosen.end());
    coverage = static_cast<double>(cap) / static_cast<double>(total);
  }
};

// Per-ring working state: lattice, expansions, verdict caches, and links
// back to the structures a derived ring came from.
struct Ctx {
  std::string id;
  RingPtr ring;
  IdealLattice lattice;
  std::vector<Expansion> deltas;
  bool classifiable = false;  // has a scalar identity

  std::shared_ptr<ProductRing> product;
  std::vector<Ctx*> factor_ctx;
  std::vector<std::vector<int>> delta_factors;  // product delta -> factor delta indices

  std::shared_ptr<QuotientRing> quotient;
  Ctx* base_ctx = nullptr;
  std::vector<int> delta_base;  // quotient delta -> base delta index

  std::map<std::tuple<int, int, int>, bool> semi_cache, weak_cache;
  std::map<std::pair<int, int>, bool> absorb_cache;
  std::map<int, bool> prime_cache;
  std::map<int, int> rad_cache;
  std::map<int, bool> p_property_cache, inter_pres_cache;
  std::string instance_json;  // lazily serialized for violation records

  const Hyperideal& ideal(int qi) const { return lattice[static_cast<size_t>(qi)]; }
  int n() const { return ring->n(); }

  long long verdict_cost(int t) const {
    AbsorbingParams p{t, ring->n()};
    return count_multisets(ring->size(), p.full_width()) *
           count_subsets(p.full_width(), p.sub_width());
  }

  bool semi(int qi, int di, int t) {
    auto key = std::make_tuple(qi, di, t);
    auto it = semi_cache.find(key);
    if (it != semi_cache.end()) return it->second;
    bool v = is_tn_absorbing_delta_semiprimary(ideal(qi), t, deltas[static_cast<size_t>(di)]).passed;
    semi_cache.emplace(key, v);
    return v;
  }
  bool weakly(int qi, int di, int t) {
    auto key = std::make_tuple(qi, di, t);
    auto it = weak_cache.find(key);
    if (it != weak_cache.end()) return it->second;
    bool v = is_weakly_tn_absorbing_delta_semiprimary(ideal(qi), t, deltas[static_cast<size_t>(di)]).passed;
    weak_cache.emplace(key, v);
    return v;
  }
  bool absorbing(int qi, int t) {
    auto key = std::make_pair(qi, t);
    auto it = absorb_cache.find(key);
    if (it != absorb_cache.end()) return it->second;
    bool v = is_tn_absorbing(ideal(qi), t).passed;
    absorb_cache.emplace(key, v);
    return v;
  }
  bool prime(int qi) {
    auto it = prime_cache.find(qi);
    if (it != prime_cache.end()) return it->second;
    bool v = is_prime(ideal(qi)).passed;
    prime_cache.emplace(qi, v);
    return v;
  }
  int radical_index(int qi) {
    auto it = rad_cache.find(qi);
    if (it != rad_cache.end()) return it->second;
    int v = lattice.index_of(radical(lattice, ideal(qi)).members());
    rad_cache.emplace(qi, v);
    return v;
  }
  bool p_property(int di) {
    auto it = p_property_cache.find(di);
    if (it != p_property_cache.end()) return it->second;
    bool v = has_P_property(lattice, deltas[static_cast<size_t>(di)]);
    p_property_cache.emplace(di, v);
    return v;
  }
  bool intersection_preserving(int di) {
    auto it = inter_pres_cache.find(di);
    if (it != inter_pres_cache.end()) return it->second;
    bool v = is_intersection_preserving(lattice, deltas[static_cast<size_t>(di)]).passed;
    inter_pres_cache.emplace(di, v);
    return v;
  }
  const std::string& instance() {
    if (instance_json.empty()) instance_json = serialize_instance(*ring);
    return instance_json;
  }
};

struct HomCfg {
  Homomorphism map;
  Ctx* src;
  Ctx* tgt;
  std::string desc;
};

struct TheoremDef {
  const char* id;
  const char* statement;
};

const TheoremDef kTheorems[] = {
    {"THM-AZAD",
     "Q weakly-semi(t,d), 0 != k(Q_1..Q_w) <= Q, Q free of d-(t,n)-zeros on it => some u of the "
     "Q_i have k-product-set <= d(Q)"},
    {"THM-CART",
     "n=2: Q1 x Q2 semi(t+1,d1 x d2) => [Q1 semi(t+1,d1) and d2(Q2)=G2] or [Q2 semi(t+1,d2) "
     "and d1(Q1)=G1] or [Q1 semi(t,d1) and Q2 semi(t,d2)]"},
    {"THM-CART-FULL-FACTOR",
     "Q = Q1 x G2 weakly-semi(t, d1 x d2), |G2| > 1 => Q semi(t, d1 x d2)"},
    {"THM-CART-WEAKLY",
     "n=2: w_t factors, every d_i with (P), Q = prod Q_i != 0 weakly-semi(t+1) => [some Q_u "
     "semi(t+1,d_u), Q_i = G_i else] or [Q_u,Q_v semi(t,.), Q_i = G_i else]"},
    {"THM-CART2",
     "w_t factors, every d_i with (P), Q = prod Q_i != 0 weakly-semi(t) => Q semi(t)"},
    {"THM-CART3",
     "n=2: w_t factors, Q = prod Q_i semi(t+1) => [some Q_u semi(t+1,d_u), d_i(Q_i) = G_i "
     "else] or [Q_u,Q_v semi(t,.), d_i(Q_i) = G_i else]"},
    {"THM-EXPANSION-ABSORBING",
     "d(Q) proper (weakly) (t,n)-absorbing => Q (weakly) semi(t,d)"},
    {"THM-EXPANSION-IDEMPOTENT-EQUIV",
     "d(d(Q)) = d(Q), d(Q) proper => [d(Q) (weakly) (t,n)-absorbing <=> d(Q) (weakly) semi(t,d)]"},
    {"THM-HOME-IMAGE",
     "f dd'-epimorphism, ker f <= Q1 proper, Q1 (weakly) semi(t,d) => f(Q1) (weakly) semi(t,d')"},
    {"THM-HOME-PREIMAGE",
     "f dd'-homomorphism, Q2 semi(t,d'), f^-1(Q2) proper => f^-1(Q2) semi(t,d)"},
    {"THM-HOME-PREIMAGE-WEAKLY",
     "f dd'-homomorphism, Q2 weakly-semi(t,d'), ker f proper weakly-semi(t,d), f^-1(Q2) proper "
     "=> f^-1(Q2) weakly-semi(t,d)"},
    {"THM-INTERSECTION",
     "d intersection-preserving, Q_i semi(t,d) with d(Q_i) = P for all i => meet semi(t,d) and "
     "d(meet) = P"},
    {"THM-PRINCIPAL-CRITERION",
     "[every proper ideal semi(t,d)] <=> [every proper principal ideal semi(t,d)]"},
    {"THM-QUOTIENT", "P <= Q proper, Q semi(t,d) => Q/P semi(t,d_q) in G/P"},
    {"THM-RADICAL",
     "Q semi(t,d), rad(d(Q)) <= d(rad(Q)), rad(Q) proper => rad(Q) semi(t,d)"},
    {"THM-RADICAL-ABSORBING",
     "Q semi(t,delta1), rad(Q) proper => rad(Q) (t,n)-absorbing"},
    {"THM-REDUCED", "rad(0) = 0, Q != 0 weakly-semi(t,d) => Q semi(t,d)"},
    {"THM-STR",
     "n=2: Q weakly-semi(2,d), k(Q1,x,y) <= Q, k(x,y) not in d(Q), no (q,x,y) is a d-(2,2)-zero "
     "=> k(Q1,x) <= d(Q) or k(Q1,y) <= d(Q)"},
    {"THM-STR2",
     "n=2: Q weakly-semi(2,d), k(Q1,Q2,x) <= Q, no (q1,q2,x) is a d-(2,2)-zero => k(Q1,x) <= "
     "d(Q) or k(Q2,x) <= d(Q) or k(Q1,Q2) <= d(Q)"},
    {"THM-STR3",
     "n=2: Q weakly-semi(2,d), 0 != k(Q1,Q2,Q3) <= Q, Q free of d-(2,2)-zeros on it => some "
     "pair product-set <= d(Q)"},
    {"THM-STR4",
     "Q weakly-semi(t,d), k(elems, Q_1..Q_s) <= Q, no element-only u-sub-product in d(Q), no "
     "choice tuple is a d-(t,n)-zero => some u of the items incl. an ideal have product-set <= "
     "d(Q)"},
    {"THM-SUBIDEAL-SAME-EXPANSION",
     "Q (weakly) semi(t,d), P <= Q proper, d(P) = d(Q) => P (weakly) semi(t,d)"},
    {"THM-SUBRING",
     "Q semi(t,d), G' subhyperring not inside Q, restriction-compatible d' => Q & G' semi(t,d') "
     "in G'"},
    {"THM-T-MONOTONE", "Q (weakly) semi(t,d) => Q (weakly) semi(t+1,d)"},
    {"THM-ZERO-ANNIHILATION",
     "(a_1..a_w) d-(t,n)-zero of weakly-semi Q => k(a minus any s positions, Q^(s)) = 0 for "
     "1 <= s <= u"},
    {"THM-ZERO-EQUIV",
     "d(Q) = d(0), Q weakly-semi(t,d) => [Q not semi(t,d) <=> some d-(t,n)-zero of 0 exists]"},
    {"THM-ZERO-PRODUCT",
     "Q weakly-semi(t,d) but not semi(t,d) => k(Q^(w)) = 0 and Q <= rad(0)"},
};

class Harness {
 public:
  Harness(const HarnessOptions& opts) : opts_(opts) {
    for (const TheoremDef& def : kTheorems) {
      TheoremOutcome out;
      out.id = def.id;
      out.statement = def.statement;
      outcomes_.emplace(def.id, std::move(out));
    }
  }

  void add_base(const CorpusEntry& entry) {
    auto ctx = make_ctx(entry.id, entry.ring, entry.extra_expansions);
    base_.push_back(ctx.get());
    own_.push_back(std::move(ctx));
  }

  void add_random(const CorpusEntry& entry) {
    auto ctx = make_ctx(entry.id, entry.ring, {});
    random_.push_back(ctx.get());
    own_.push_back(std::move(ctx));
  }

  TheoremReport run() {
    if (opts_.build_derived) build_derived();
    collect_all();
    check_per_ring_theorems();
    check_quotient_theorem();
    check_home_theorems();
    check_cart_theorems();
    check_subring_theorem();
    sweep_strictness();

    TheoremReport report;
    for (auto& [id, out] : outcomes_) report.outcomes.push_back(std::move(out));
    report.strictness = std::move(strictness_);
    report.generator_candidates = generator_candidates_;
    report.generator_valid = generator_valid_;
    return report;
  }

  long long generator_candidates_ = 0;
  long long generator_valid_ = 0;

 private:
  HarnessOptions opts_;
  std::map<std::string, TheoremOutcome> outcomes_;
  std::vector<std::unique_ptr<Ctx>> own_;
  std::vector<Ctx*> base_;     // corpus entries
  std::vector<Ctx*> random_;   // generator survivors
  std::vector<Ctx*> products_; // derived products
  std::vector<Ctx*> quotients_;
  std::vector<Ctx*> all_;      // every ctx, deterministic order
  std::vector<HomCfg> homs_;
  std::vector<std::string> strictness_;

  static constexpr int kViolationKeep = 25;

  std::unique_ptr<Ctx> make_ctx(std::string id, RingPtr ring, std::vector<Expansion> extras) {
    auto ctx = std::make_unique<Ctx>();
    ctx->id = std::move(id);
    ctx->ring = ring;
    ctx->lattice = IdealLattice::enumerate(ring);
    ctx->classifiable = ring->one().has_value();
    ctx->deltas.push_back(builtin_expansion(BuiltinExpansion::kIdentity, ctx->lattice));
    ctx->deltas.push_back(builtin_expansion(BuiltinExpansion::kRadical, ctx->lattice));
    ctx->deltas.push_back(builtin_expansion(BuiltinExpansion::kWholeRing, ctx->lattice));
    for (Expansion& e : extras) ctx->deltas.push_back(std::move(e));
    return ctx;
  }

  uint64_t sweep_seed(const char* theorem, const Ctx& ctx) const {
    return opts_.seed ^ fnv1a(theorem) ^ (fnv1a(ctx.id) << 1);
  }

  void record(const char* id, Ctx& ctx, bool hypothesis, bool conclusion,
              const std::string& config, const std::string& detail) {
    TheoremOutcome& out = outcomes_.at(id);
    ++out.cases;
    if (!hypothesis) return;
    ++out.hypothesis_met;
    if (conclusion) {
      ++out.conclusion_held;
    } else if (static_cast<int>(out.violations.size()) < kViolationKeep) {
      out.violations.push_back(TheoremViolation{config, detail, ctx.instance()});
    }
  }

  void set_coverage(const char* id, double coverage) {
    TheoremOutcome& out = outcomes_.at(id);
    out.coverage = std::min(out.coverage, coverage);
  }

  void note(const char* id, const std::string& text) {
    TheoremOutcome& out = outcomes_.at(id);
    if (std::find(out.notes.begin(), out.notes.end(), text) == out.notes.end())
      out.notes.push_back(text);
  }

  bool feasible(Ctx& ctx, int t) const { return ctx.verdict_cost(t) <= opts_.verdict_work_cap; }

  std::string cfg(const Ctx& ctx, int qi, int di, int t) const {
    std::ostringstream os;
    os << ctx.id << " Q=" << ctx.ring->render_subset(ctx.ideal(qi).members());
    if (di >= 0) os << " delta=" << ctx.deltas[static_cast<size_t>(di)].name();
    if (t > 0) os << " t=" << t;
    return os.str();
  }

  // ---- derived structures -------------------------------------------------

  void build_derived() {
    // Small unital base rings, grouped by (m, n), feed the product list.
    std::vector<Ctx*> smalls;
    for (Ctx* c : base_)
      if (c->classifiable && c->ring->size() >= 2 && c->ring->size() <= 6) smalls.push_back(c);

    auto add_product = [&](std::vector<Ctx*> factors) {
      long long size = 1;
      for (Ctx* f : factors) size *= f->ring->size();
      if (size > 24) return;
      std::vector<RingPtr> rings;
      std::string id = "prod(";
      for (size_t i = 0; i < factors.size(); ++i) {
        rings.push_back(factors[i]->ring);
        id += (i ? "," : "") + factors[i]->id;
      }
      id += ")";
      auto prod = std::make_shared<ProductRing>(ProductRing::build(rings));
      auto ctx = make_ctx(id, prod->product(), {});
      ctx->product = prod;
      ctx->factor_ctx = factors;
      // Componentwise expansions: uniform builtins, plus delta0 x delta1 on
      // two-factor products.
      std::vector<std::vector<int>> combos = {{}, {}, {}};
      for (size_t i = 0; i < factors.size(); ++i)
        for (int b = 0; b < 3; ++b) combos[static_cast<size_t>(b)].push_back(b);
      if (factors.size() == 2) combos.push_back({0, 1});
      ctx->deltas.clear();
      for (const auto& combo : combos) {
        std::vector<const Expansion*> parts;
        for (size_t i = 0; i < combo.size(); ++i)
          parts.push_back(&factors[i]->deltas[static_cast<size_t>(combo[static_cast<size_t>(i)])]);
        ctx->deltas.push_back(product_expansion(parts, *prod, ctx->lattice));
        ctx->delta_factors.push_back(combo);
      }
      products_.push_back(ctx.get());
      own_.push_back(std::move(ctx));
    };

    for (size_t i = 0; i < smalls.size(); ++i)
      for (size_t j = i; j < smalls.size(); ++j)
        if (smalls[i]->ring->m() == smalls[j]->ring->m() &&
            smalls[i]->ring->n() == smalls[j]->ring->n())
          add_product({smalls[i], smalls[j]});
    // Three- and four-factor products for the width-indexed product
    // theorems; only the tiniest (2,2) rings keep these tractable.
    std::vector<Ctx*> tiny;
    for (Ctx* c : smalls)
      if (c->ring->size() <= 3 && c->ring->n() == 2 && c->ring->m() == 2) tiny.push_back(c);
    if (!tiny.empty()) {
      Ctx* a = tiny[0];
      Ctx* b = tiny.size() > 1 ? tiny[1] : tiny[0];
      add_product({a, a, a});
      add_product({a, a, b});
      add_product({a, a, a, a});
    }

    // Quotients by every proper ideal of small unital bases.
    for (Ctx* c : base_) {
      if (!c->classifiable || c->ring->size() > 12) continue;
      for (size_t pi = 0; pi < c->lattice.size(); ++pi) {
        if (!c->lattice[pi].is_proper()) continue;
        auto q = std::make_shared<QuotientRing>(QuotientRing::build(c->lattice[pi]));
        auto ctx = make_ctx(c->id + "/" + c->ring->render_subset(c->lattice[pi].members()),
                            q->quotient(), {});
        ctx->quotient = q;
        ctx->base_ctx = c;
        ctx->deltas.clear();
        for (size_t di = 0; di < c->deltas.size(); ++di) {
          ctx->deltas.push_back(quotient_expansion(c->deltas[di], *q, ctx->lattice));
          ctx->delta_base.push_back(static_cast<int>(di));
        }
        quotients_.push_back(ctx.get());
        own_.push_back(std::move(ctx));
      }
    }

    // Homomorphism pool: identities, coset maps, projections.
    for (Ctx* c : base_)
      if (c->classifiable)
        homs_.push_back(HomCfg{identity_map(c->ring), c, c, "id(" + c->id + ")"});
    for (Ctx* qc : quotients_)
      homs_.push_back(
          HomCfg{coset_map(*qc->quotient), qc->base_ctx, qc, "coset(" + qc->id + ")"});
    for (Ctx* pc : products_) {
      if (pc->factor_ctx.size() != 2) continue;
      for (size_t f = 0; f < 2; ++f)
        homs_.push_back(HomCfg{projection_map(*pc->product, f), pc, pc->factor_ctx[f],
                               "proj" + std::to_string(f) + "(" + pc->id + ")"});
    }
  }

  void collect_all() {
    for (Ctx* c : base_) all_.push_back(c);
    for (Ctx* c : products_) all_.push_back(c);
    for (Ctx* c : quotients_) all_.push_back(c);
    for (Ctx* c : random_) all_.push_back(c);
  }

  // ---- per-ring theorem sweeps --------------------------------------------

  void check_per_ring_theorems() {
    for (Ctx* ctx : all_) {
      if (!ctx->classifiable) continue;
      check_radical(*ctx);
      check_t_monotone(*ctx);
      check_expansion_theorems(*ctx);
      check_subideal(*ctx);
      check_principal(*ctx);
      check_intersection(*ctx);
      check_zero_family(*ctx);
      check_str_family(*ctx);
    }
  }

  void check_radical(Ctx& ctx) {
    for (int t : opts_.t_values) {
      if (!feasible(ctx, t)) continue;
      for (size_t qi = 0; qi < ctx.lattice.size(); ++qi) {
        if (!ctx.lattice[qi].is_proper()) continue;
        for (size_t di = 0; di < ctx.deltas.size(); ++di) {
          const Expansion& d = ctx.deltas[di];
          int rad_qi = ctx.radical_index(static_cast<int>(qi));
          int dq_idx = ctx.lattice.index_of(d.apply(ctx.ideal(static_cast<int>(qi)).members()));
          int rad_dq = ctx.radical_index(dq_idx);
          bool rad_proper = ctx.ideal(rad_qi).is_proper();
          bool hyp = ctx.semi(static_cast<int>(qi), static_cast<int>(di), t) && rad_proper &&
                     d.apply(ctx.ideal(rad_qi).members())
                         .contains(ctx.ideal(rad_dq).members());
          bool concl = hyp && ctx.semi(rad_qi, static_cast<int>(di), t);
          record("THM-RADICAL", ctx, hyp, concl, cfg(ctx, static_cast<int>(qi), static_cast<int>(di), t),
                 "rad(Q) is not (t,n)-absorbing delta-semiprimary");
          if (d.name() == "delta1") {
            bool hyp2 = ctx.semi(static_cast<int>(qi), static_cast<int>(di), t) && rad_proper;
            bool concl2 = hyp2 && ctx.absorbing(rad_qi, t);
            record("THM-RADICAL-ABSORBING", ctx, hyp2, concl2,
                   cfg(ctx, static_cast<int>(qi), static_cast<int>(di), t),
                   "rad(Q) is not (t,n)-absorbing");
          }
        }
      }
    }
  }

  void check_t_monotone(Ctx& ctx) {
    for (int t : opts_.t_values) {
      if (!feasible(ctx, t) || !feasible(ctx, t + 1)) continue;
      for (size_t qi = 0; qi < ctx.lattice.size(); ++qi) {
        if (!ctx.lattice[qi].is_proper()) continue;
        for (size_t di = 0; di < ctx.deltas.size(); ++di) {
          bool hyp_s = ctx.semi(static_cast<int>(qi), static_cast<int>(di), t);
          record("THM-T-MONOTONE", ctx, hyp_s,
                 !hyp_s || ctx.semi(static_cast<int>(qi), static_cast<int>(di), t + 1),
                 cfg(ctx, static_cast<int>(qi), static_cast<int>(di), t) + " variant=plain",
                 "semiprimary at t but not at t+1");
          bool hyp_w = ctx.weakly(static_cast<int>(qi), static_cast<int>(di), t);
          record("THM-T-MONOTONE", ctx, hyp_w,
                 !hyp_w || ctx.weakly(static_cast<int>(qi), static_cast<int>(di), t + 1),
                 cfg(ctx, static_cast<int>(qi), static_cast<int>(di), t) + " variant=weakly",
                 "weakly semiprimary at t but not at t+1");
          // The literal all-v>n form is logged, not asserted.
          if (hyp_s) {
            for (int v = ctx.n() + 1; v <= opts_.t_values.back() + 1; ++v) {
              if (v == t || !feasible(ctx, v)) continue;
              if (!ctx.semi(static_cast<int>(qi), static_cast<int>(di), v))
                note("THM-T-MONOTONE", "literal v>n reading fails at " +
                                           cfg(ctx, static_cast<int>(qi), static_cast<int>(di), t) +
                                           " v=" + std::to_string(v));
            }
          }
        }
      }
    }
  }

  void check_expansion_theorems(Ctx& ctx) {
    for (int t : opts_.t_values) {
      if (!feasible(ctx, t)) continue;
      for (size_t qi = 0; qi < ctx.lattice.size(); ++qi) {
        if (!ctx.lattice[qi].is_proper()) continue;
        for (size_t di = 0; di < ctx.deltas.size(); ++di) {
          const Expansion& d = ctx.deltas[di];
          int dq = ctx.lattice.index_of(d.apply(ctx.ideal(static_cast<int>(qi)).members()));
          bool dq_proper = ctx.ideal(dq).is_proper();
          // delta(Q) (weakly) absorbing => Q (weakly) semi. Weakly-absorbing
          // is the weakly-semiprimary predicate under the identity expansion.
          bool habs = dq_proper && ctx.absorbing(dq, t);
          record("THM-EXPANSION-ABSORBING", ctx, habs,
                 !habs || ctx.semi(static_cast<int>(qi), static_cast<int>(di), t),
                 cfg(ctx, static_cast<int>(qi), static_cast<int>(di), t) + " variant=plain",
                 "delta(Q) absorbing but Q not semiprimary");
          bool wabs = dq_proper && ctx.weakly(dq, 0, t);
          record("THM-EXPANSION-ABSORBING", ctx, wabs,
                 !wabs || ctx.weakly(static_cast<int>(qi), static_cast<int>(di), t),
                 cfg(ctx, static_cast<int>(qi), static_cast<int>(di), t) + " variant=weakly",
                 "delta(Q) weakly absorbing but Q not weakly semiprimary");
          // Idempotent biconditional on delta(Q).
          bool idem = d.apply(ctx.ideal(dq).members()) == ctx.ideal(dq).members();
          bool hyp_eq = idem && dq_proper;
          bool concl_eq =
              !hyp_eq || ((ctx.absorbing(dq, t) == ctx.semi(dq, static_cast<int>(di), t)) &&
                          (ctx.weakly(dq, 0, t) == ctx.weakly(dq, static_cast<int>(di), t)));
          record("THM-EXPANSION-IDEMPOTENT-EQUIV", ctx, hyp_eq, concl_eq,
                 cfg(ctx, static_cast<int>(qi), static_cast<int>(di), t),
                 "absorbing and delta-semiprimary verdicts disagree on delta(Q)");
        }
      }
    }
  }

  void check_subideal(Ctx& ctx) {
    for (int t : opts_.t_values) {
      if (!feasible(ctx, t)) continue;
      for (size_t qi = 0; qi < ctx.lattice.size(); ++qi) {
        if (!ctx.lattice[qi].is_proper()) continue;
        for (size_t pi = 0; pi < ctx.lattice.size(); ++pi) {
          if (!ctx.lattice[pi].is_proper()) continue;
          if (!ctx.ideal(static_cast<int>(qi)).members().contains(ctx.ideal(static_cast<int>(pi)).members()))
            continue;
          for (size_t di = 0; di < ctx.deltas.size(); ++di) {
            const Expansion& d = ctx.deltas[di];
            if (d.apply(ctx.ideal(static_cast<int>(pi)).members()) !=
                d.apply(ctx.ideal(static_cast<int>(qi)).members()))
              continue;
            std::string c = cfg(ctx, static_cast<int>(qi), static_cast<int>(di), t) + " P=" +
                            ctx.ring->render_subset(ctx.ideal(static_cast<int>(pi)).members());
            bool hyp_s = ctx.semi(static_cast<int>(qi), static_cast<int>(di), t);
            record("THM-SUBIDEAL-SAME-EXPANSION", ctx, hyp_s,
                   !hyp_s || ctx.semi(static_cast<int>(pi), static_cast<int>(di), t),
                   c + " variant=plain", "P inherits delta(P)=delta(Q) but not semiprimary");
            bool hyp_w = ctx.weakly(static_cast<int>(qi), static_cast<int>(di), t);
            record("THM-SUBIDEAL-SAME-EXPANSION", ctx, hyp_w,
                   !hyp_w || ctx.weakly(static_cast<int>(pi), static_cast<int>(di), t),
                   c + " variant=weakly", "P inherits delta(P)=delta(Q) but not weakly semiprimary");
          }
        }
      }
    }
  }

  void check_principal(Ctx& ctx) {
    // Principal ideals <g>.
    std::vector<int> principal;
    for (ElementId g = 0; g < ctx.ring->size(); ++g) {
      int idx = ctx.lattice.index_of(
          generated_ideal(ctx.ring, Subset::single(ctx.ring->size(), g)).members());
      if (idx >= 0 && ctx.ideal(idx).is_proper()) principal.push_back(idx);
    }
    for (int t : opts_.t_values) {
      if (!feasible(ctx, t)) continue;
      for (size_t di = 0; di < ctx.deltas.size(); ++di) {
        bool all_proper = true, all_principal = true;
        for (size_t qi = 0; qi < ctx.lattice.size(); ++qi)
          if (ctx.lattice[qi].is_proper() && !ctx.semi(static_cast<int>(qi), static_cast<int>(di), t))
            all_proper = false;
        for (int qi : principal)
          if (!ctx.semi(qi, static_cast<int>(di), t)) all_principal = false;
        std::ostringstream os;
        os << ctx.id << " delta=" << ctx.deltas[di].name() << " t=" << t;
        record("THM-PRINCIPAL-CRITERION", ctx, true, all_proper == all_principal, os.str(),
               "principal-ideal criterion disagrees with the full lattice");
      }
    }
  }

  void check_intersection(Ctx& ctx) {
    auto proper = ctx.lattice.proper_ideals();
    if (proper.empty()) return;
    int L = static_cast<int>(proper.size());
    auto index_in_lattice = [&](const Hyperideal* h) { return ctx.lattice.index_of(h->members()); };
    for (int t : opts_.t_values) {
      if (!feasible(ctx, t)) continue;
      for (size_t di = 0; di < ctx.deltas.size(); ++di) {
        if (!ctx.intersection_preserving(static_cast<int>(di))) continue;
        const Expansion& d = ctx.deltas[di];
        // Families of size 2 and 3 (multisets of proper ideals).
        for (int fam_size : {2, 3}) {
          for_all_multisets(L, fam_size, [&](std::span<const ElementId> fam) {
            std::vector<int> members;
            for (ElementId f : fam) members.push_back(index_in_lattice(proper[static_cast<size_t>(f)]));
            Subset shared = d.apply(ctx.ideal(members[0]).members());
            bool hyp = true;
            Subset meet = ctx.ideal(members[0]).members();
            for (int qi : members) {
              if (!ctx.semi(qi, static_cast<int>(di), t)) hyp = false;
              if (d.apply(ctx.ideal(qi).members()) != shared) hyp = false;
              meet &= ctx.ideal(qi).members();
            }
            std::ostringstream os;
            os << ctx.id << " delta=" << d.name() << " t=" << t << " family=";
            for (size_t i = 0; i < members.size(); ++i)
              os << (i ? "&" : "") << ctx.ring->render_subset(ctx.ideal(members[i]).members());
            bool concl = true;
            if (hyp) {
              int mi = ctx.lattice.index_of(meet);
              concl = mi >= 0 && ctx.semi(mi, static_cast<int>(di), t) && d.apply(meet) == shared;
            }
            record("THM-INTERSECTION", ctx, hyp, concl, os.str(),
                   "intersection fails to be semiprimary with the shared delta-image");
          });
        }
      }
    }
  }

  // Zero-product, reduced, zero-equivalence and zero-annihilation sweeps.
  void check_zero_family(Ctx& ctx) {
    int N = ctx.ring->size();
    bool reduced = false;
    int zero_idx = ctx.lattice.index_of(Subset::single(N, ctx.ring->zero()));
    if (N > 1) reduced = ctx.ideal(ctx.radical_index(zero_idx)).is_zero_ideal();

    for (int t : opts_.t_values) {
      if (!feasible(ctx, t)) continue;
      AbsorbingParams params{t, ctx.n()};
      int w = params.full_width();
      int u = params.sub_width();
      for (size_t qi = 0; qi < ctx.lattice.size(); ++qi) {
        if (!ctx.lattice[qi].is_proper()) continue;
        const Hyperideal& Q = ctx.ideal(static_cast<int>(qi));
        for (size_t di = 0; di < ctx.deltas.size(); ++di) {
          const Expansion& d = ctx.deltas[di];
          bool wk = ctx.weakly(static_cast<int>(qi), static_cast<int>(di), t);
          bool sm = ctx.semi(static_cast<int>(qi), static_cast<int>(di), t);
          std::string c = cfg(ctx, static_cast<int>(qi), static_cast<int>(di), t);

          // Zero product: weakly but not semiprimary forces Q^(w) = 0 and
          // Q inside rad(0).
          bool hyp_zp = wk && !sm;
          bool concl_zp = true;
          if (hyp_zp) {
            std::vector<Subset> copies(static_cast<size_t>(w), Q.members());
            Subset prod = ctx.ring->iterated_mul_sets(copies);
            bool is_zero = prod == Subset::single(N, ctx.ring->zero());
            bool in_rad0 =
                ctx.ideal(ctx.radical_index(zero_idx)).members().contains(Q.members());
            concl_zp = is_zero && in_rad0;
          }
          record("THM-ZERO-PRODUCT", ctx, hyp_zp, concl_zp, c,
                 "k(Q^(w)) is nonzero or Q escapes rad(0)");

          // Reduced ring: weakly collapses to plain for nonzero ideals
          // (the underlying zero-product argument only forces Q = 0).
          bool hyp_red = reduced && wk && !Q.is_zero_ideal();
          record("THM-REDUCED", ctx, hyp_red, !hyp_red || sm, c,
                 "weakly semiprimary but not semiprimary in a reduced ring");

          // delta(Q) = delta(0) equivalence with zeros of the zero ideal.
          if (N > 1) {
            bool hyp_eq = wk && d.apply(Q.members()) == d.apply(ctx.ideal(zero_idx).members());
            bool concl_eq = true;
            if (hyp_eq) {
              bool zeros_of_zero =
                  !find_delta_tn_zeros(ctx.ideal(zero_idx), t, d).empty();
              concl_eq = (!sm) == zeros_of_zero;
            }
            record("THM-ZERO-EQUIV", ctx, hyp_eq, concl_eq, c,
                   "non-semiprimary does not match existence of a delta-(t,n)-zero of 0");
          }

          // Zero annihilation over every found delta-zero.
          if (wk) {
            auto zeros = find_delta_tn_zeros(Q, t, d);
            for (const auto& tuple : zeros) {
              bool ok = true;
              std::string where;
              for (int s = 1; s <= u && ok; ++s) {
                for_all_position_subsets(w, s, [&](std::span<const int> drop) {
                  if (!ok) return;
                  std::vector<Subset> sets;
                  size_t next = 0;
                  for (int i = 0; i < w; ++i) {
                    if (next < drop.size() && drop[next] == i) {
                      ++next;
                      continue;
                    }
                    sets.push_back(Subset::single(N, tuple[static_cast<size_t>(i)]));
                  }
                  for (int i = 0; i < s; ++i) sets.push_back(Q.members());
                  Subset prod = ctx.ring->iterated_mul_sets(sets);
                  if (prod != Subset::single(N, ctx.ring->zero())) {
                    ok = false;
                    std::ostringstream os;
                    os << "s=" << s << " dropped=[";
                    for (size_t i = 0; i < drop.size(); ++i) os << (i ? "," : "") << drop[i];
                    os << "] product=" << ctx.ring->render_subset(prod);
                    where = os.str();
                  }
                });
              }
              record("THM-ZERO-ANNIHILATION", ctx, true, ok,
                     c + " zero=" + ctx.ring->render_tuple(tuple), where);
            }
          }
        }
      }
    }
  }

  // ---- str family ----------------------------------------------------------

  void check_str_family(Ctx& ctx) {
    if (ctx.n() == 2) {
      check_str(ctx);
      check_str2(ctx);
      check_str3(ctx);
    }
    check_str4(ctx);
    check_azad(ctx);
  }

  // Weakly-semiprimary (Q, delta) pairs at the given t.
  std::vector<std::pair<int, int>> weakly_configs(Ctx& ctx, int t) {
    std::vector<std::pair<int, int>> out;
    if (!feasible(ctx, t)) return out;
    for (size_t qi = 0; qi < ctx.lattice.size(); ++qi) {
      if (!ctx.lattice[qi].is_proper()) continue;
      for (size_t di = 0; di < ctx.deltas.size(); ++di)
        if (ctx.weakly(static_cast<int>(qi), static_cast<int>(di), t))
          out.emplace_back(static_cast<int>(qi), static_cast<int>(di));
    }
    return out;
  }

  void check_str(Ctx& ctx) {
    int N = ctx.ring->size();
    int L = static_cast<int>(ctx.lattice.size());
    for (auto [qi, di] : weakly_configs(ctx, 2)) {
      const Hyperideal& Q = ctx.ideal(qi);
      const Expansion& d = ctx.deltas[static_cast<size_t>(di)];
      const Subset& dQ = d.apply(Q.members());
      long long pairs = static_cast<long long>(N) * (N + 1) / 2;
      long long total = L * pairs;
      ConfigSample sample(total, N <= opts_.exhaustive_cap ? total : opts_.sample_size,
                          sweep_seed("THM-STR", ctx));
      set_coverage("THM-STR", sample.coverage);
      for (long long index : sample.indices) {
        int ideal_idx = static_cast<int>(index / pairs);
        long long pair_rank = index % pairs;
        std::vector<ElementId> xy = unrank_multiset(pair_rank, N, 2);
        ElementId x = xy[0], y = xy[1];
        const Hyperideal& Q1 = ctx.ideal(ideal_idx);
        std::vector<Subset> q1xy = {Q1.members(), ctx.ring->singleton(x), ctx.ring->singleton(y)};
        bool hyp = Q.members().contains(ctx.ring->iterated_mul_sets(q1xy)) &&
                   !dQ.test(ctx.ring->mul(std::vector<ElementId>{x, y}));
        if (hyp) {
          // no (q, x, y) may be a delta-(2,2)-zero
          for (int q : Q1.members().elements()) {
            if (ctx.ring->iterated_mul(std::vector<ElementId>{q, x, y}) != ctx.ring->zero())
              continue;
            if (!dQ.test(ctx.ring->mul(std::vector<ElementId>{q, x})) &&
                !dQ.test(ctx.ring->mul(std::vector<ElementId>{q, y}))) {
              hyp = false;
              break;
            }
          }
        }
        bool concl = true;
        if (hyp) {
          std::vector<Subset> q1x = {Q1.members(), ctx.ring->singleton(x)};
          std::vector<Subset> q1y = {Q1.members(), ctx.ring->singleton(y)};
          concl = dQ.contains(ctx.ring->mul_sets(q1x)) || dQ.contains(ctx.ring->mul_sets(q1y));
        }
        record("THM-STR", ctx, hyp, concl,
               cfg(ctx, qi, di, 2) + " Q1=" + ctx.ring->render_subset(Q1.members()) + " x=" +
                   ctx.ring->label(x) + " y=" + ctx.ring->label(y),
               "neither k(Q1,x) nor k(Q1,y) lies in delta(Q)");
      }
    }
  }

  void check_str2(Ctx& ctx) {
    int N = ctx.ring->size();
    int L = static_cast<int>(ctx.lattice.size());
    for (auto [qi, di] : weakly_configs(ctx, 2)) {
      const Hyperideal& Q = ctx.ideal(qi);
      const Expansion& d = ctx.deltas[static_cast<size_t>(di)];
      const Subset& dQ = d.apply(Q.members());
      long long ideal_pairs = static_cast<long long>(L) * (L + 1) / 2;
      long long total = ideal_pairs * N;
      ConfigSample sample(total, N <= opts_.exhaustive_cap ? total : opts_.sample_size,
                          sweep_seed("THM-STR2", ctx));
      set_coverage("THM-STR2", sample.coverage);
      for (long long index : sample.indices) {
        ElementId x = static_cast<ElementId>(index % N);
        std::vector<ElementId> ij = unrank_multiset(index / N, L, 2);
        const Hyperideal& Q1 = ctx.ideal(ij[0]);
        const Hyperideal& Q2 = ctx.ideal(ij[1]);
        std::vector<Subset> prod3 = {Q1.members(), Q2.members(), ctx.ring->singleton(x)};
        bool hyp = Q.members().contains(ctx.ring->iterated_mul_sets(prod3));
        if (hyp) {
          for (int q1 : Q1.members().elements()) {
            for (int q2 : Q2.members().elements()) {
              if (ctx.ring->iterated_mul(std::vector<ElementId>{q1, q2, x}) != ctx.ring->zero())
                continue;
              if (!dQ.test(ctx.ring->mul(std::vector<ElementId>{q1, q2})) &&
                  !dQ.test(ctx.ring->mul(std::vector<ElementId>{q1, x})) &&
                  !dQ.test(ctx.ring->mul(std::vector<ElementId>{q2, x}))) {
                hyp = false;
                break;
              }
            }
            if (!hyp) break;
          }
        }
        bool concl = true;
        if (hyp) {
          std::vector<Subset> a = {Q1.members(), ctx.ring->singleton(x)};
          std::vector<Subset> b = {Q2.members(), ctx.ring->singleton(x)};
          std::vector<Subset> c = {Q1.members(), Q2.members()};
          concl = dQ.contains(ctx.ring->mul_sets(a)) || dQ.contains(ctx.ring->mul_sets(b)) ||
                  dQ.contains(ctx.ring->mul_sets(c));
        }
        record("THM-STR2", ctx, hyp, concl,
               cfg(ctx, qi, di, 2) + " Q1=" + ctx.ring->render_subset(Q1.members()) + " Q2=" +
                   ctx.ring->render_subset(Q2.members()) + " x=" + ctx.ring->label(x),
               "none of k(Q1,x), k(Q2,x), k(Q1,Q2) lies in delta(Q)");
      }
    }
  }

  void check_str3(Ctx& ctx) {
    int L = static_cast<int>(ctx.lattice.size());
    Subset zero_single = ctx.ring->singleton(ctx.ring->zero());
    for (auto [qi, di] : weakly_configs(ctx, 2)) {
      const Hyperideal& Q = ctx.ideal(qi);
      const Expansion& d = ctx.deltas[static_cast<size_t>(di)];
      const Subset& dQ = d.apply(Q.members());
      for_all_multisets(L, 3, [&](std::span<const ElementId> ids) {
        std::vector<Hyperideal> tri = {ctx.ideal(ids[0]), ctx.ideal(ids[1]), ctx.ideal(ids[2])};
        Subset prod = ideal_product(ctx.ring, tri);
        bool hyp = prod != zero_single && Q.members().contains(prod) &&
                   is_free_delta_tn_zero(Q, 2, d, tri);
        bool concl = true;
        if (hyp) {
          concl = false;
          for (int a = 0; a < 3 && !concl; ++a)
            for (int b = a + 1; b < 3 && !concl; ++b) {
              std::vector<Subset> pair = {tri[static_cast<size_t>(a)].members(),
                                          tri[static_cast<size_t>(b)].members()};
              if (dQ.contains(ctx.ring->mul_sets(pair))) concl = true;
            }
        }
        std::ostringstream os;
        os << cfg(ctx, qi, di, 2) << " ideals=(" << ctx.ring->render_subset(tri[0].members())
           << "," << ctx.ring->render_subset(tri[1].members()) << ","
           << ctx.ring->render_subset(tri[2].members()) << ")";
        record("THM-STR3", ctx, hyp, concl, os.str(),
               "no pairwise ideal product-set lies in delta(Q)");
      });
    }
  }

  void check_str4(Ctx& ctx) {
    int N = ctx.ring->size();
    int L = static_cast<int>(ctx.lattice.size());
    for (int t : opts_.t_values) {
      AbsorbingParams params{t, ctx.n()};
      int w = params.full_width();
      int u = params.sub_width();
      for (auto [qi, di] : weakly_configs(ctx, t)) {
        const Hyperideal& Q = ctx.ideal(qi);
        const Expansion& d = ctx.deltas[static_cast<size_t>(di)];
        const Subset& dQ = d.apply(Q.members());
        for (int s = 1; s <= u; ++s) {
          int e = w - s;  // fixed elements
          long long elem_count = count_multisets(N, e);
          long long ideal_count = count_multisets(L, s);
          long long total = elem_count * ideal_count;
          ConfigSample sample(total, N <= opts_.exhaustive_cap ? total : opts_.sample_size,
                              sweep_seed("THM-STR4", ctx) + static_cast<uint64_t>(s));
          set_coverage("THM-STR4", sample.coverage);
          for (long long index : sample.indices) {
            std::vector<ElementId> elems = unrank_multiset(index % elem_count, N, e);
            std::vector<ElementId> ideal_ids = unrank_multiset(index / elem_count, L, s);
            std::vector<Subset> sets;
            for (ElementId el : elems) sets.push_back(ctx.ring->singleton(el));
            std::vector<std::vector<int>> choice_lists;
            for (ElementId el : elems) choice_lists.push_back({el});
            for (ElementId ii : ideal_ids) {
              sets.push_back(ctx.ideal(ii).members());
              choice_lists.push_back(ctx.ideal(ii).members().elements());
            }
            bool hyp = Q.members().contains(ctx.ring->iterated_mul_sets(sets));
            if (hyp && e >= u) {
              // element-only sub-products in delta(Q) fall outside the
              // theorem's contradiction frame
              std::vector<ElementId> elem_chosen(static_cast<size_t>(u));
              for_all_position_subsets(e, u, [&](std::span<const int> pos) {
                if (!hyp) return;
                for (int i = 0; i < u; ++i)
                  elem_chosen[static_cast<size_t>(i)] = elems[static_cast<size_t>(pos[static_cast<size_t>(i)])];
                if (dQ.test(ctx.ring->iterated_mul(elem_chosen))) hyp = false;
              });
            }
            if (hyp) {
              // no choice tuple may be a delta-(t,n)-zero
              std::vector<ElementId> chosen(static_cast<size_t>(u));
              for_all_choices(choice_lists, [&](std::span<const ElementId> tuple) -> bool {
                if (ctx.ring->iterated_mul(tuple) != ctx.ring->zero()) return true;
                bool any = false;
                for_all_position_subsets(w, u, [&](std::span<const int> pos) {
                  if (any) return;
                  for (int i = 0; i < u; ++i)
                    chosen[static_cast<size_t>(i)] = tuple[static_cast<size_t>(pos[static_cast<size_t>(i)])];
                  if (dQ.test(ctx.ring->iterated_mul(chosen))) any = true;
                });
                if (!any) {
                  hyp = false;
                  return false;
                }
                return true;
              });
            }
            bool concl = true;
            if (hyp) {
              concl = false;
              std::vector<Subset> chosen_sets(static_cast<size_t>(u));
              for_all_position_subsets(w, u, [&](std::span<const int> pos) {
                if (concl) return;
                bool has_ideal = false;
                for (int i = 0; i < u; ++i)
                  if (pos[static_cast<size_t>(i)] >= e) has_ideal = true;
                if (!has_ideal) return;
                for (int i = 0; i < u; ++i)
                  chosen_sets[static_cast<size_t>(i)] = sets[static_cast<size_t>(pos[static_cast<size_t>(i)])];
                if (dQ.contains(ctx.ring->iterated_mul_sets(chosen_sets))) concl = true;
              });
            }
            std::ostringstream os;
            os << cfg(ctx, qi, di, t) << " elems=" << ctx.ring->render_tuple(elems) << " ideals=(";
            for (size_t i = 0; i < ideal_ids.size(); ++i)
              os << (i ? "," : "")
                 << ctx.ring->render_subset(ctx.ideal(ideal_ids[i]).members());
            os << ")";
            record("THM-STR4", ctx, hyp, concl, os.str(),
                   "no ideal-including sub-product set lies in delta(Q)");
          }
        }
      }
    }
  }

  void check_azad(Ctx& ctx) {
    int L = static_cast<int>(ctx.lattice.size());
    Subset zero_single = ctx.ring->singleton(ctx.ring->zero());
    for (int t : opts_.t_values) {
      AbsorbingParams params{t, ctx.n()};
      int w = params.full_width();
      int u = params.sub_width();
      if (count_multisets(L, w) > 20000) continue;
      for (auto [qi, di] : weakly_configs(ctx, t)) {
        const Hyperideal& Q = ctx.ideal(qi);
        const Expansion& d = ctx.deltas[static_cast<size_t>(di)];
        const Subset& dQ = d.apply(Q.members());
        for_all_multisets(L, w, [&](std::span<const ElementId> ids) {
          std::vector<Hyperideal> tuple;
          for (ElementId ii : ids) tuple.push_back(ctx.ideal(ii));
          Subset prod = ideal_product(ctx.ring, tuple);
          bool hyp = prod != zero_single && Q.members().contains(prod) &&
                     is_free_delta_tn_zero(Q, t, d, tuple);
          bool concl = true;
          if (hyp) {
            concl = false;
            std::vector<Subset> chosen(static_cast<size_t>(u));
            for_all_position_subsets(w, u, [&](std::span<const int> pos) {
              if (concl) return;
              for (int i = 0; i < u; ++i)
                chosen[static_cast<size_t>(i)] = tuple[static_cast<size_t>(pos[static_cast<size_t>(i)])].members();
              if (dQ.contains(ctx.ring->iterated_mul_sets(chosen))) concl = true;
            });
          }
          std::ostringstream os;
          os << cfg(ctx, qi, di, t) << " ideals=(";
          for (size_t i = 0; i < tuple.size(); ++i)
            os << (i ? "," : "") << ctx.ring->render_subset(tuple[i].members());
          os << ")";
          record("THM-AZAD", ctx, hyp, concl, os.str(),
                 "no u-subset of the ideals has product-set in delta(Q)");
        });
      }
    }
  }

  // ---- quotient / homomorphism / product / subring transfers ---------------

  void check_quotient_theorem() {
    for (Ctx* qc : quotients_) {
      Ctx& base = *qc->base_ctx;
      if (!qc->classifiable) continue;
      int pi = base.lattice.index_of(qc->quotient->modulus().members());
      for (int t : opts_.t_values) {
        if (!feasible(base, t) || !feasible(*qc, t)) continue;
        for (size_t qi = 0; qi < base.lattice.size(); ++qi) {
          if (!base.lattice[qi].is_proper()) continue;
          if (!base.ideal(static_cast<int>(qi)).members().contains(base.ideal(pi).members()))
            continue;
          for (size_t di = 0; di < base.deltas.size(); ++di) {
            bool hyp = base.semi(static_cast<int>(qi), static_cast<int>(di), t);
            bool concl = true;
            if (hyp) {
              Subset image = qc->quotient->image_subset(base.ideal(static_cast<int>(qi)).members());
              int img_idx = qc->lattice.index_of(image);
              concl = img_idx >= 0 && qc->semi(img_idx, static_cast<int>(di), t);
            }
            record("THM-QUOTIENT", *qc, hyp, concl,
                   cfg(base, static_cast<int>(qi), static_cast<int>(di), t) + " P=" +
                       base.ring->render_subset(base.ideal(pi).members()),
                   "Q/P is not (t,n)-absorbing delta_q-semiprimary in G/P");
          }
        }
      }
    }
  }

  void check_home_theorems() {
    for (HomCfg& hom : homs_) {
      Ctx& src = *hom.src;
      Ctx& tgt = *hom.tgt;
      if (!src.classifiable || !tgt.classifiable) continue;
      int src_kernel = src.lattice.index_of(hom.map.kernel());
      bool kernel_proper = src_kernel >= 0 && src.ideal(src_kernel).is_proper();
      bool epi = hom.map.surjective();
      for (size_t di = 0; di < src.deltas.size(); ++di) {
        for (size_t dj = 0; dj < tgt.deltas.size(); ++dj) {
          bool dd = is_delta_deltaprime_homomorphism(hom.map, src.deltas[di], tgt.deltas[dj],
                                                     tgt.lattice)
                        .passed;
          for (int t : opts_.t_values) {
            if (!feasible(src, t) || !feasible(tgt, t)) continue;
            std::string base_cfg = hom.desc + " delta=" + src.deltas[di].name() +
                                   " delta'=" + tgt.deltas[dj].name() + " t=" + std::to_string(t);
            // (i) and (ii): preimages of target ideals.
            for (size_t q2 = 0; q2 < tgt.lattice.size(); ++q2) {
              if (!tgt.lattice[q2].is_proper()) continue;
              int pre = src.lattice.index_of(hom.map.preimage(tgt.ideal(static_cast<int>(q2)).members()));
              bool pre_proper = pre >= 0 && src.ideal(pre).is_proper();
              std::string c = base_cfg + " Q2=" + tgt.ring->render_subset(tgt.ideal(static_cast<int>(q2)).members());
              bool hyp1 = dd && pre_proper && tgt.semi(static_cast<int>(q2), static_cast<int>(dj), t);
              record("THM-HOME-PREIMAGE", src, hyp1,
                     !hyp1 || src.semi(pre, static_cast<int>(di), t), c,
                     "preimage fails to be (t,n)-absorbing delta-semiprimary");
              bool hyp2 = dd && pre_proper && kernel_proper &&
                          tgt.weakly(static_cast<int>(q2), static_cast<int>(dj), t) &&
                          src.weakly(src_kernel, static_cast<int>(di), t);
              record("THM-HOME-PREIMAGE-WEAKLY", src, hyp2,
                     !hyp2 || src.weakly(pre, static_cast<int>(di), t), c,
                     "preimage fails to be weakly (t,n)-absorbing delta-semiprimary");
            }
            // (iii): images of kernel-containing source ideals.
            if (epi && src_kernel >= 0) {
              for (size_t q1 = 0; q1 < src.lattice.size(); ++q1) {
                if (!src.lattice[q1].is_proper()) continue;
                if (!src.ideal(static_cast<int>(q1)).members().contains(src.ideal(src_kernel).members()))
                  continue;
                int img = tgt.lattice.index_of(hom.map.image(src.ideal(static_cast<int>(q1)).members()));
                std::string c = base_cfg + " Q1=" + src.ring->render_subset(src.ideal(static_cast<int>(q1)).members());
                bool img_proper = img >= 0 && tgt.ideal(img).is_proper();
                bool hyp_s = dd && src.semi(static_cast<int>(q1), static_cast<int>(di), t);
                record("THM-HOME-IMAGE", src, hyp_s,
                       !hyp_s || (img_proper && tgt.semi(img, static_cast<int>(dj), t)),
                       c + " variant=plain", "image fails to be delta'-semiprimary");
                bool hyp_w = dd && src.weakly(static_cast<int>(q1), static_cast<int>(di), t);
                record("THM-HOME-IMAGE", src, hyp_w,
                       !hyp_w || (img_proper && tgt.weakly(img, static_cast<int>(dj), t)),
                       c + " variant=weakly", "image fails to be weakly delta'-semiprimary");
              }
            }
          }
        }
      }
    }
  }

  void check_cart_theorems() {
    for (Ctx* pc : products_) {
      Ctx& prod = *pc;
      if (!prod.classifiable) continue;
      size_t nf = prod.factor_ctx.size();
      for (size_t di = 0; di < prod.deltas.size(); ++di) {
        const std::vector<int>& dfac = prod.delta_factors[di];
        for (int t : opts_.t_values) {
          AbsorbingParams params{t, prod.n()};
          bool width_match = static_cast<int>(nf) == params.full_width();
          bool tp1_ok = feasible(prod, t + 1);
          bool t_ok = feasible(prod, t);
          for (size_t qi = 0; qi < prod.lattice.size(); ++qi) {
            if (!prod.lattice[qi].is_proper()) continue;
            std::vector<Subset> comps;
            if (!prod.product->decompose(prod.ideal(static_cast<int>(qi)).members(), &comps))
              throw Error(ErrorCode::kInternal, "product ideal failed to decompose");
            std::vector<int> fidx(nf);
            std::vector<bool> fproper(nf), ffull(nf);
            for (size_t f = 0; f < nf; ++f) {
              fidx[f] = prod.factor_ctx[f]->lattice.index_of(comps[f]);
              fproper[f] = prod.factor_ctx[f]->ideal(fidx[f]).is_proper();
              ffull[f] = !fproper[f];
            }
            auto factor_semi = [&](size_t f, int tt) {
              return fproper[f] &&
                     prod.factor_ctx[f]->semi(fidx[f], dfac[f], tt);
            };
            auto factor_delta_full = [&](size_t f) {
              return prod.factor_ctx[f]
                  ->deltas[static_cast<size_t>(dfac[f])]
                  .apply(comps[f]) == prod.factor_ctx[f]->ring->full_set();
            };
            std::string c = cfg(prod, static_cast<int>(qi), static_cast<int>(di), t);

            // Two-factor trichotomy (binary k only).
            if (nf == 2 && prod.n() == 2 && tp1_ok && t_ok) {
              bool hyp = prod.semi(static_cast<int>(qi), static_cast<int>(di), t + 1);
              bool concl = true;
              if (hyp) {
                bool d1 = factor_semi(0, t + 1) && factor_delta_full(1);
                bool d2 = factor_semi(1, t + 1) && factor_delta_full(0);
                bool d3 = factor_semi(0, t) && factor_semi(1, t);
                concl = d1 || d2 || d3;
              }
              record("THM-CART", prod, hyp, concl, c, "no branch of the trichotomy holds");
            }

            // Width-indexed product theorems (tn-t+1 factors, binary k).
            if (width_match && prod.n() == 2 && tp1_ok) {
              bool hyp3 = prod.semi(static_cast<int>(qi), static_cast<int>(di), t + 1);
              bool concl3 = true;
              if (hyp3) concl3 = cart3_disjunction(prod, nf, fidx, dfac, t, factor_semi,
                                                   factor_delta_full);
              record("THM-CART3", prod, hyp3, concl3, c,
                     "neither branch of the width-indexed disjunction holds");
            }
            if (width_match && t_ok) {
              bool all_p = true;
              for (size_t f = 0; f < nf; ++f)
                if (!prod.factor_ctx[f]->p_property(dfac[f])) all_p = false;
              bool nonzero = !prod.ideal(static_cast<int>(qi)).is_zero_ideal();
              bool hyp2 = all_p && nonzero &&
                          prod.weakly(static_cast<int>(qi), static_cast<int>(di), t);
              record("THM-CART2", prod, hyp2,
                     !hyp2 || prod.semi(static_cast<int>(qi), static_cast<int>(di), t), c,
                     "weakly semiprimary product with (P) factors is not semiprimary");
              if (tp1_ok && prod.n() == 2) {
                bool hyp_w = all_p && nonzero &&
                             prod.weakly(static_cast<int>(qi), static_cast<int>(di), t + 1);
                bool concl_w = true;
                if (hyp_w) {
                  auto q_full = [&](size_t f) { return ffull[f]; };
                  concl_w = cart_weakly_disjunction(prod, nf, fidx, dfac, t, factor_semi, q_full);
                }
                record("THM-CART-WEAKLY", prod, hyp_w, concl_w, c,
                       "neither branch of the weakly product disjunction holds");
              }
            }

            // Q1 x G2 collapses weakly to plain.
            if (nf == 2 && t_ok && ffull[1] && prod.factor_ctx[1]->ring->size() > 1) {
              bool hyp = prod.weakly(static_cast<int>(qi), static_cast<int>(di), t);
              record("THM-CART-FULL-FACTOR", prod, hyp,
                     !hyp || prod.semi(static_cast<int>(qi), static_cast<int>(di), t), c,
                     "Q1 x G2 weakly semiprimary but not semiprimary");
            }
          }
        }
      }
    }
  }

  template <typename SemiF, typename DeltaFullF>
  bool cart3_disjunction(Ctx&, size_t nf, const std::vector<int>&, const std::vector<int>&,
                         int t, SemiF&& factor_semi, DeltaFullF&& factor_delta_full) {
    for (size_t u = 0; u < nf; ++u) {
      bool ok = factor_semi(u, t + 1);
      for (size_t i = 0; i < nf && ok; ++i)
        if (i != u && !factor_delta_full(i)) ok = false;
      if (ok) return true;
    }
    for (size_t u = 0; u < nf; ++u)
      for (size_t v = u + 1; v < nf; ++v) {
        bool ok = factor_semi(u, t) && factor_semi(v, t);
        for (size_t i = 0; i < nf && ok; ++i)
          if (i != u && i != v && !factor_delta_full(i)) ok = false;
        if (ok) return true;
      }
    return false;
  }

  template <typename SemiF, typename FullF>
  bool cart_weakly_disjunction(Ctx&, size_t nf, const std::vector<int>&, const std::vector<int>&,
                               int t, SemiF&& factor_semi, FullF&& q_full) {
    for (size_t u = 0; u < nf; ++u) {
      bool ok = factor_semi(u, t + 1);
      for (size_t i = 0; i < nf && ok; ++i)
        if (i != u && !q_full(i)) ok = false;
      if (ok) return true;
    }
    for (size_t u = 0; u < nf; ++u)
      for (size_t v = u + 1; v < nf; ++v) {
        bool ok = factor_semi(u, t) && factor_semi(v, t);
        for (size_t i = 0; i < nf && ok; ++i)
          if (i != u && i != v && !q_full(i)) ok = false;
        if (ok) return true;
      }
    return false;
  }

  void check_subring_theorem() {
    for (Ctx* bc : base_) {
      Ctx& ctx = *bc;
      if (!ctx.classifiable || ctx.ring->size() > 8) continue;
      for (const Subset& carrier : enumerate_subhyperrings(ctx.ring)) {
        if (carrier.count() < 2) continue;
        SubringView view = build_subring(ctx.ring, carrier);
        if (!view.subring->one()) continue;  // classifier family needs 1 in G'
        IdealLattice sub_lattice = IdealLattice::enumerate(view.subring);
        Expansion sub_d0 = builtin_expansion(BuiltinExpansion::kIdentity, sub_lattice);
        Expansion sub_d1 = builtin_expansion(BuiltinExpansion::kRadical, sub_lattice);
        for (int t : opts_.t_values) {
          if (!feasible(ctx, t)) continue;
          for (size_t qi = 0; qi < ctx.lattice.size(); ++qi) {
            if (!ctx.lattice[qi].is_proper()) continue;
            const Hyperideal& Q = ctx.ideal(static_cast<int>(qi));
            if (carrier.contains(Q.members()) && Q.members().contains(carrier)) continue;
            if (Q.members().contains(carrier)) continue;  // G' inside Q
            // restrict Q to the subring carrier
            Subset restricted(view.subring->size());
            Q.members().for_each([&](int e) {
              if (view.from_base[static_cast<size_t>(e)] >= 0)
                restricted.set(view.from_base[static_cast<size_t>(e)]);
            });
            int sub_qi = sub_lattice.index_of(restricted);
            for (int pairing = 0; pairing < 2; ++pairing) {
              int di = pairing;  // delta0 with delta0, delta1 with radical-in-G'
              const Expansion& sub_delta = pairing == 0 ? sub_d0 : sub_d1;
              bool compatible = true;
              if (pairing == 1) {
                // radical pairing is checked only where restriction commutes
                // with the radical on this ideal
                int rad_q = ctx.radical_index(static_cast<int>(qi));
                Subset rad_restricted(view.subring->size());
                ctx.ideal(rad_q).members().for_each([&](int e) {
                  if (view.from_base[static_cast<size_t>(e)] >= 0)
                    rad_restricted.set(view.from_base[static_cast<size_t>(e)]);
                });
                int sub_rad = sub_qi >= 0 ? sub_lattice.index_of(
                                                radical(sub_lattice, sub_lattice[static_cast<size_t>(sub_qi)])
                                                    .members())
                                          : -1;
                compatible = sub_qi >= 0 && sub_rad >= 0 &&
                             sub_lattice[static_cast<size_t>(sub_rad)].members() == rad_restricted;
              }
              bool hyp = compatible && ctx.semi(static_cast<int>(qi), di, t);
              bool concl = true;
              if (hyp) {
                concl = sub_qi >= 0 &&
                        is_tn_absorbing_delta_semiprimary(sub_lattice[static_cast<size_t>(sub_qi)], t,
                                                          sub_delta)
                            .passed;
              }
              record("THM-SUBRING", ctx, hyp, concl,
                     cfg(ctx, static_cast<int>(qi), di, t) + " G'=" +
                         ctx.ring->render_subset(carrier) + " pairing=" + sub_delta.name(),
                     "Q & G' fails to be semiprimary in the subhyperring");
            }
          }
        }
      }
    }
  }

  void sweep_strictness() {
    for (Ctx* c : all_) {
      if (!c->classifiable) continue;
      for (int t : opts_.t_values) {
        if (!feasible(*c, t)) continue;
        for (size_t qi = 0; qi < c->lattice.size(); ++qi) {
          if (!c->lattice[qi].is_proper()) continue;
          for (size_t di = 0; di < c->deltas.size(); ++di) {
            if (c->semi(static_cast<int>(qi), static_cast<int>(di), t) &&
                !c->prime(static_cast<int>(qi))) {
              if (strictness_.size() < 50)
                strictness_.push_back(cfg(*c, static_cast<int>(qi), static_cast<int>(di), t));
            }
          }
        }
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Random instance generation

RingTables trivial_ring_tables(int d, const std::string& prefix) {
  RingTables t;
  t.m = 2;
  t.n = 2;
  for (int i = 0; i < d; ++i) t.labels.push_back(prefix + std::to_string(i));
  t.zero = 0;
  t.h = HyperOpTable(2, d);
  t.k = NaryOpTable(2, d);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      std::vector<ElementId> key{a, b};
      t.h.set_entry(key, Subset::single(d, (a + b) % d));
      t.k.set_entry(key, (a * b) % d);
    }
  return t;
}

// Z_d collapsed along a subgroup H of its unit group: carrier = orbits
// x -> xH, hyperaddition = orbit image of +, multiplication by orbit
// representatives.
RingTables unit_orbit_tables(int d, uint64_t& rng) {
  std::vector<int> units;
  for (int x = 1; x < d; ++x)
    if (std::gcd(x, d) == 1) units.push_back(x);
  // subgroup generated by a random subset of units
  std::set<int> H{1};
  int picks = 1 + static_cast<int>(rnd_below(rng, 2));
  for (int i = 0; i < picks; ++i) H.insert(units[rnd_below(rng, units.size())]);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(H.begin(), H.end());
    for (int a : cur)
      for (int b : cur)
        if (H.insert(a * b % d).second) grew = true;
  }
  std::vector<int> orbit_of(static_cast<size_t>(d), -1);
  std::vector<std::vector<int>> orbits;
  for (int x = 0; x < d; ++x) {
    if (orbit_of[static_cast<size_t>(x)] >= 0) continue;
    std::set<int> orbit;
    for (int h : H) orbit.insert(x * h % d);
    int id = static_cast<int>(orbits.size());
    for (int v : orbit) orbit_of[static_cast<size_t>(v)] = id;
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  int N = static_cast<int>(orbits.size());
  RingTables t;
  t.m = 2;
  t.n = 2;
  for (int c = 0; c < N; ++c) t.labels.push_back("c" + std::to_string(orbits[static_cast<size_t>(c)][0]));
  t.zero = orbit_of[0];
  t.h = HyperOpTable(2, N);
  t.k = NaryOpTable(2, N);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      Subset sum(N);
      for (int x : orbits[static_cast<size_t>(a)])
        for (int y : orbits[static_cast<size_t>(b)]) sum.set(orbit_of[static_cast<size_t>((x + y) % d)]);
      std::vector<ElementId> key{a, b};
      t.h.set_entry(key, sum);
      t.k.set_entry(key, orbit_of[static_cast<size_t>(orbits[static_cast<size_t>(a)][0] *
                                                      orbits[static_cast<size_t>(b)][0] % d)]);
    }
  return t;
}

RingTables random_tables(int max_carrier, uint64_t& rng) {
  int N = 2 + static_cast<int>(rnd_below(rng, static_cast<uint64_t>(std::max(1, max_carrier - 1))));
  RingTables t;
  t.m = 2;
  t.n = 2;
  for (int i = 0; i < N; ++i) t.labels.push_back("r" + std::to_string(i));
  t.zero = 0;
  t.h = HyperOpTable(2, N);
  t.k = NaryOpTable(2, N);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      Subset entry(N);
      entry.set(static_cast<int>(rnd_below(rng, static_cast<uint64_t>(N))));
      if (rnd_below(rng, 3) == 0) entry.set(static_cast<int>(rnd_below(rng, static_cast<uint64_t>(N))));
      std::vector<ElementId> key{a, b};
      t.h.set_entry(key, entry);
      t.k.set_entry(key, static_cast<int>(rnd_below(rng, static_cast<uint64_t>(N))));
    }
  return t;
}

RingTables perturbed_trivial_tables(int max_carrier, uint64_t& rng) {
  int d = 2 + static_cast<int>(rnd_below(rng, static_cast<uint64_t>(std::max(1, max_carrier - 1))));
  RingTables t = trivial_ring_tables(d, "p");
  int a = static_cast<int>(rnd_below(rng, static_cast<uint64_t>(d)));
  int b = static_cast<int>(rnd_below(rng, static_cast<uint64_t>(d)));
  std::vector<ElementId> key{std::min(a, b), std::max(a, b)};
  Subset entry(d);
  entry.set(static_cast<int>(rnd_below(rng, static_cast<uint64_t>(d))));
  t.h.set_entry(key, entry);
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------

long long TheoremReport::total_violations() const {
  long long v = 0;
  for (const auto& out : outcomes) v += out.hypothesis_met - out.conclusion_held;
  return v;
}

std::string TheoremReport::render_text() const {
  std::ostringstream os;
  os << "theorem-suite report\n";
  os << "generator: candidates=" << generator_candidates << " valid=" << generator_valid << "\n";
  os << "strictness witnesses (semiprimary but not prime): " << strictness.size() << "\n";
  for (const auto& s : strictness) os << "  " << s << "\n";
  for (const auto& out : outcomes) {
    os << "== " << out.id << "\n";
    os << "   statement: " << out.statement << "\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", out.coverage);
    os << "   cases=" << out.cases << " hypothesis-met=" << out.hypothesis_met
       << " conclusion-held=" << out.conclusion_held
       << " violations=" << (out.hypothesis_met - out.conclusion_held) << " coverage=" << buf
       << "\n";
    for (const auto& n : out.notes) os << "   note: " << n << "\n";
    for (const auto& v : out.violations) os << "   VIOLATION: " << v.config << " :: " << v.detail << "\n";
  }
  os << "total violations: " << total_violations() << "\n";
  return os.str();
}

std::string TheoremReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["generator"] = {{"candidates", generator_candidates}, {"valid", generator_valid}};
  doc["strictness"] = strictness;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& out : outcomes) {
    nlohmann::ordered_json j;
    j["id"] = out.id;
    j["statement"] = out.statement;
    j["cases"] = out.cases;
    j["hypothesis_met"] = out.hypothesis_met;
    j["conclusion_held"] = out.conclusion_held;
    j["violations"] = out.hypothesis_met - out.conclusion_held;
    j["coverage"] = out.coverage;
    j["notes"] = out.notes;
    nlohmann::ordered_json viols = nlohmann::ordered_json::array();
    for (const auto& v : out.violations)
      viols.push_back({{"config", v.config}, {"detail", v.detail}, {"instance", v.instance}});
    j["violation_records"] = std::move(viols);
    list.push_back(std::move(j));
  }
  doc["theorems"] = std::move(list);
  doc["total_violations"] = total_violations();
  return doc.dump(1) + "\n";
}

TheoremReport run_theorem_suite(const std::vector<CorpusEntry>& corpus,
                                const HarnessOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Harness harness(opts);
  for (const CorpusEntry& entry : corpus) harness.add_base(entry);

  if (opts.random_budget > 0) {
    uint64_t rng = opts.seed ^ 0xabcddcba12344321ull;
    GeneratorConfig gc;
    for (long long i = 0; i < opts.random_budget; ++i) {
      uint64_t kind = rnd_below(rng, 4);
      RingTables tables;
      const char* kind_name = "";
      switch (kind) {
        case 0:
          tables = trivial_ring_tables(
              1 + static_cast<int>(rnd_below(rng, static_cast<uint64_t>(gc.max_carrier))), "t");
          kind_name = "triv";
          break;
        case 1:
          tables = unit_orbit_tables(4 + static_cast<int>(rnd_below(rng, 9)), rng);
          kind_name = "unitq";
          break;
        case 2:
          tables = random_tables(gc.max_carrier, rng);
          kind_name = "table";
          break;
        default:
          tables = perturbed_trivial_tables(gc.max_carrier, rng);
          kind_name = "perturb";
          break;
      }
      ++harness.generator_candidates_;
      AxiomReport report;
      RingPtr ring = Ring::create(std::move(tables), &report);
      if (!ring || ring->size() > 12) continue;
      ++harness.generator_valid_;
      harness.add_random(CorpusEntry{
          "rnd-" + std::to_string(i) + "-" + kind_name, ring, {}});
    }
  }

  TheoremReport report = harness.run();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

TheoremReport counterexample_search(const GeneratorConfig& config, long long budget,
                                    uint64_t seed) {
  HarnessOptions opts;
  opts.seed = seed;
  opts.random_budget = budget;
  opts.build_derived = false;
  (void)config;
  return run_theorem_suite({}, opts);
}

}  // namespace krasner
