#include "krasner/core.hpp"

#include <algorithm>
#include <sstream>

namespace krasner {

namespace {

std::vector<ElementId> sorted_tuple(std::span<const ElementId> tuple) {
  std::vector<ElementId> t(tuple.begin(), tuple.end());
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// TupleIndex

TupleIndex::TupleIndex(int arity, int carrier) : arity_(arity), carrier_(carrier) {
  if (arity < 2) throw Error(ErrorCode::kInvalidInput, "table arity must be >= 2");
  if (carrier < 1) throw Error(ErrorCode::kInvalidInput, "carrier must be nonempty");
  // binom_[x][y] = C(x, y) for x < carrier + arity, y <= arity.
  int rows = carrier + arity;
  binom_.assign(static_cast<size_t>(rows), std::vector<uint64_t>(static_cast<size_t>(arity) + 1, 0));
  for (int x = 0; x < rows; ++x) {
    binom_[static_cast<size_t>(x)][0] = 1;
    for (int y = 1; y <= std::min(x, arity); ++y)
      binom_[static_cast<size_t>(x)][static_cast<size_t>(y)] =
          binom_[static_cast<size_t>(x - 1)][static_cast<size_t>(y - 1)] +
          binom_[static_cast<size_t>(x - 1)][static_cast<size_t>(y)];
  }
  size_ = binom_[static_cast<size_t>(carrier + arity - 1)][static_cast<size_t>(arity)];
}

size_t TupleIndex::rank(std::span<const ElementId> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_)
    throw Error(ErrorCode::kArity, "expected tuple of arity " + std::to_string(arity_) +
                                       ", got " + std::to_string(tuple.size()));
  std::vector<ElementId> t = sorted_tuple(tuple);
  if (t.front() < 0 || t.back() >= carrier_)
    throw Error(ErrorCode::kInvalidInput, "element index out of carrier range");
  // Multiset -> strictly increasing combination -> colex rank.
  uint64_t r = 0;
  for (int i = 0; i < arity_; ++i)
    r += binom_[static_cast<size_t>(t[static_cast<size_t>(i)] + i)][static_cast<size_t>(i) + 1];
  return static_cast<size_t>(r);
}

std::vector<ElementId> TupleIndex::unrank(size_t r) const {
  uint64_t rest = r;
  std::vector<ElementId> t(static_cast<size_t>(arity_));
  for (int i = arity_ - 1; i >= 0; --i) {
    int c = i;  // smallest value with C(c, i+1) defined
    while (c + 1 < carrier_ + arity_ &&
           binom_[static_cast<size_t>(c) + 1][static_cast<size_t>(i) + 1] <= rest)
      ++c;
    rest -= binom_[static_cast<size_t>(c)][static_cast<size_t>(i) + 1];
    t[static_cast<size_t>(i)] = c - i;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Tables

HyperOpTable::HyperOpTable(int arity, int carrier)
    : index_(arity, carrier),
      entries_(index_.table_size(), Subset(carrier)),
      assigned_(index_.table_size(), 0) {}

const Subset& HyperOpTable::at(std::span<const ElementId> tuple) const {
  return entries_[index_.rank(tuple)];
}

void HyperOpTable::set_entry(std::span<const ElementId> tuple, Subset value) {
  if (value.empty())
    throw Error(ErrorCode::kInvalidInput, "hyperoperation entries must be nonempty");
  size_t r = index_.rank(tuple);
  entries_[r] = std::move(value);
  assigned_[r] = 1;
}

bool HyperOpTable::entry_assigned(std::span<const ElementId> tuple) const {
  return assigned_[index_.rank(tuple)] != 0;
}

std::optional<std::vector<ElementId>> HyperOpTable::first_incomplete() const {
  for (size_t r = 0; r < entries_.size(); ++r)
    if (!assigned_[r] || entries_[r].empty()) return index_.unrank(r);
  return std::nullopt;
}

NaryOpTable::NaryOpTable(int arity, int carrier)
    : index_(arity, carrier), entries_(index_.table_size(), -1) {}

ElementId NaryOpTable::at(std::span<const ElementId> tuple) const {
  return entries_[index_.rank(tuple)];
}

void NaryOpTable::set_entry(std::span<const ElementId> tuple, ElementId value) {
  if (value < 0 || value >= index_.carrier())
    throw Error(ErrorCode::kInvalidInput, "operation value out of carrier range");
  entries_[index_.rank(tuple)] = value;
}

bool NaryOpTable::entry_assigned(std::span<const ElementId> tuple) const {
  return entries_[index_.rank(tuple)] >= 0;
}

std::optional<std::vector<ElementId>> NaryOpTable::first_incomplete() const {
  for (size_t r = 0; r < entries_.size(); ++r)
    if (entries_[r] < 0) return index_.unrank(r);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subset extension

Subset extend_hyperop_to_subsets(const HyperOpTable& h, std::span<const Subset> args) {
  int m = h.arity();
  if (static_cast<int>(args.size()) != m)
    throw Error(ErrorCode::kArity, "hyperoperation extension needs exactly " +
                                       std::to_string(m) + " argument subsets");
  std::vector<std::vector<int>> choices;
  choices.reserve(args.size());
  for (const Subset& s : args) {
    if (s.empty())
      throw Error(ErrorCode::kEmptyArgument, "hyperoperation extension over an empty subset");
    if (s.universe() != h.carrier())
      throw Error(ErrorCode::kInvalidInput, "argument subset over a different carrier");
    choices.push_back(s.elements());
  }
  Subset out(h.carrier());
  std::vector<ElementId> tuple(static_cast<size_t>(m));
  std::vector<size_t> odo(static_cast<size_t>(m), 0);
  while (true) {
    for (int i = 0; i < m; ++i)
      tuple[static_cast<size_t>(i)] = choices[static_cast<size_t>(i)][odo[static_cast<size_t>(i)]];
    out |= h.at(tuple);
    int pos = m - 1;
    while (pos >= 0 && ++odo[static_cast<size_t>(pos)] == choices[static_cast<size_t>(pos)].size())
      odo[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return out;
}

namespace {

// Elementwise image of k over all choice tuples (no memo; table form).
Subset nary_image(const NaryOpTable& k, std::span<const Subset> args) {
  int n = k.arity();
  if (static_cast<int>(args.size()) != n)
    throw Error(ErrorCode::kArity, "operation image needs exactly " + std::to_string(n) +
                                       " argument subsets");
  std::vector<std::vector<int>> choices;
  for (const Subset& s : args) {
    if (s.empty())
      throw Error(ErrorCode::kEmptyArgument, "operation image over an empty subset");
    choices.push_back(s.elements());
  }
  Subset out(k.carrier());
  std::vector<ElementId> tuple(static_cast<size_t>(n));
  std::vector<size_t> odo(static_cast<size_t>(n), 0);
  while (true) {
    for (int i = 0; i < n; ++i)
      tuple[static_cast<size_t>(i)] = choices[static_cast<size_t>(i)][odo[static_cast<size_t>(i)]];
    out.set(k.at(tuple));
    int pos = n - 1;
    while (pos >= 0 && ++odo[static_cast<size_t>(pos)] == choices[static_cast<size_t>(pos)].size())
      odo[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return out;
}

// Enumerates all tuples over [0, carrier)^len, calling f(tuple).
template <typename F>
void for_all_tuples(int carrier, int len, F&& f) {
  std::vector<ElementId> tuple(static_cast<size_t>(len), 0);
  while (true) {
    f(std::span<const ElementId>(tuple));
    int pos = len - 1;
    while (pos >= 0 && ++tuple[static_cast<size_t>(pos)] == carrier) tuple[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) return;
  }
}

// Enumerates all sorted tuples (multisets) of the given length.
template <typename F>
void for_all_multisets(int carrier, int len, F&& f) {
  std::vector<ElementId> tuple(static_cast<size_t>(len), 0);
  while (true) {
    f(std::span<const ElementId>(tuple));
    int pos = len - 1;
    while (pos >= 0 && tuple[static_cast<size_t>(pos)] == carrier - 1) --pos;
    if (pos < 0) return;
    ElementId v = ++tuple[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < len; ++i) tuple[static_cast<size_t>(i)] = v;
  }
}

std::string render_plain_subset(const Subset& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](int e) {
    if (!first) os << ',';
    os << e;
    first = false;
  });
  os << '}';
  return os.str();
}

struct CheckBuilder {
  AxiomReport& report;

  AxiomCheck& add(const std::string& name) {
    report.checks.push_back(AxiomCheck{name, CheckVerdict::kPass, std::nullopt});
    return report.checks.back();
  }
  void fail(AxiomCheck& c, Witness w) {
    if (c.verdict == CheckVerdict::kPass) {
      c.verdict = CheckVerdict::kFail;
      c.witness = std::move(w);
    }
  }
  void skip(AxiomCheck& c, const std::string& why) {
    c.verdict = CheckVerdict::kSkipped;
    c.witness = Witness{{}, {}, "", "", why};
  }
};

// Nest the hyperoperation at `pos` inside a (2m-1)-tuple and extend.
Subset nested_h(const HyperOpTable& h, std::span<const ElementId> tuple, int pos) {
  int m = h.arity();
  std::vector<Subset> args;
  args.reserve(static_cast<size_t>(m));
  std::vector<ElementId> inner(tuple.begin() + pos, tuple.begin() + pos + m);
  for (int i = 0; i < pos; ++i) args.push_back(Subset::single(h.carrier(), tuple[static_cast<size_t>(i)]));
  args.push_back(h.at(inner));
  for (int i = pos + m; i < 2 * m - 1; ++i)
    args.push_back(Subset::single(h.carrier(), tuple[static_cast<size_t>(i)]));
  return extend_hyperop_to_subsets(h, args);
}

}  // namespace

// ---------------------------------------------------------------------------
// Canonical hypergroup audit

AxiomReport validate_canonical_hypergroup(const HyperOpTable& h, ElementId zero) {
  AxiomReport report;
  CheckBuilder cb{report};
  int N = h.carrier();
  int m = h.arity();

  auto& completeness = cb.add("h-table-complete");
  if (auto missing = h.first_incomplete()) {
    cb.fail(completeness, Witness{*missing, {}, "", "", "missing or empty entry"});
    return report;  // nothing else is meaningful on a partial table
  }

  // Commutativity holds structurally: entries are stored on sorted tuples
  // and every lookup canonicalizes its arguments.
  cb.add("h-commutativity");

  auto& assoc = cb.add("h-associativity");
  for_all_tuples(N, 2 * m - 1, [&](std::span<const ElementId> tuple) {
    if (assoc.verdict != CheckVerdict::kPass) return;
    Subset base = nested_h(h, tuple, 0);
    for (int pos = 1; pos < m; ++pos) {
      Subset other = nested_h(h, tuple, pos);
      if (other != base) {
        cb.fail(assoc, Witness{std::vector<ElementId>(tuple.begin(), tuple.end()),
                               {0, pos},
                               render_plain_subset(base),
                               render_plain_subset(other),
                               "nesting positions disagree"});
        return;
      }
    }
  });

  auto& neutral = cb.add("h-neutral-zero");
  std::vector<ElementId> tup(static_cast<size_t>(m), zero);
  for (ElementId x = 0; x < N; ++x) {
    tup[0] = x;
    const Subset& got = h.at(tup);
    if (got.count() != 1 || !got.test(x)) {
      cb.fail(neutral, Witness{{x}, {}, "{" + std::to_string(x) + "}",
                               render_plain_subset(got), "h(x, 0^(m-1)) must equal {x}"});
      break;
    }
  }
  // the neutral must be unique
  if (neutral.verdict == CheckVerdict::kPass) {
    for (ElementId e = 0; e < N && neutral.verdict == CheckVerdict::kPass; ++e) {
      if (e == zero) continue;
      bool acts_neutral = true;
      std::vector<ElementId> probe(static_cast<size_t>(m), e);
      for (ElementId x = 0; x < N && acts_neutral; ++x) {
        probe[0] = x;
        const Subset& got = h.at(probe);
        acts_neutral = got.count() == 1 && got.test(x);
      }
      if (acts_neutral)
        cb.fail(neutral, Witness{{e}, {}, "one neutral", "two neutrals",
                                 "a second element acts as the hyperaddition neutral"});
    }
  }

  auto& inverses = cb.add("h-unique-inverses");
  std::vector<ElementId> negs(static_cast<size_t>(N), -1);
  for (ElementId x = 0; x < N && inverses.verdict == CheckVerdict::kPass; ++x) {
    std::vector<ElementId> found;
    std::vector<ElementId> probe(static_cast<size_t>(m), zero);
    probe[0] = x;
    for (ElementId y = 0; y < N; ++y) {
      probe[1] = y;
      if (h.at(probe).test(zero)) found.push_back(y);
    }
    if (found.size() != 1) {
      cb.fail(inverses, Witness{{x}, {}, "1 inverse",
                                std::to_string(found.size()) + " inverses",
                                "0 must lie in h(x, y, 0^(m-2)) for exactly one y"});
    } else {
      negs[static_cast<size_t>(x)] = found[0];
    }
  }

  auto& rev = cb.add("h-reversibility");
  if (inverses.verdict != CheckVerdict::kPass) {
    cb.skip(rev, "depends on h-unique-inverses");
  } else {
    for_all_multisets(N, m, [&](std::span<const ElementId> tuple) {
      if (rev.verdict != CheckVerdict::kPass) return;
      const Subset& sum = h.at(tuple);
      sum.for_each([&](int y) {
        if (rev.verdict != CheckVerdict::kPass) return;
        for (int i = 0; i < m; ++i) {
          std::vector<ElementId> rest;
          rest.reserve(static_cast<size_t>(m));
          rest.push_back(y);
          for (int j = 0; j < m; ++j)
            if (j != i) rest.push_back(negs[static_cast<size_t>(tuple[static_cast<size_t>(j)])]);
          if (!h.at(rest).test(tuple[static_cast<size_t>(i)])) {
            cb.fail(rev, Witness{std::vector<ElementId>(tuple.begin(), tuple.end()),
                                 {i, y},
                                 "x_i in h(y, -x_1, ..)",
                                 render_plain_subset(h.at(rest)),
                                 "reversibility fails at position " + std::to_string(i) +
                                     " for y=" + std::to_string(y)});
            return;
          }
        }
      });
    });
  }

  return report;
}

// ---------------------------------------------------------------------------
// Krasner audit

AxiomReport validate_krasner(const RingTables& tables) {
  AxiomReport report = validate_canonical_hypergroup(tables.h, tables.zero);
  CheckBuilder cb{report};
  int N = tables.size();
  int n = tables.n;
  int m = tables.m;

  auto& completeness = cb.add("k-table-complete");
  if (auto missing = tables.k.first_incomplete()) {
    cb.fail(completeness, Witness{*missing, {}, "", "", "missing entry"});
    return report;
  }

  cb.add("k-commutativity");  // structural, as for h

  auto& assoc = cb.add("k-associativity");
  for_all_tuples(N, 2 * n - 1, [&](std::span<const ElementId> tuple) {
    if (assoc.verdict != CheckVerdict::kPass) return;
    auto nest = [&](int pos) {
      std::vector<ElementId> args;
      args.reserve(static_cast<size_t>(n));
      for (int i = 0; i < pos; ++i) args.push_back(tuple[static_cast<size_t>(i)]);
      std::vector<ElementId> inner(tuple.begin() + pos, tuple.begin() + pos + n);
      args.push_back(tables.k.at(inner));
      for (int i = pos + n; i < 2 * n - 1; ++i) args.push_back(tuple[static_cast<size_t>(i)]);
      return tables.k.at(args);
    };
    ElementId base = nest(0);
    for (int pos = 1; pos < n; ++pos) {
      ElementId other = nest(pos);
      if (other != base) {
        cb.fail(assoc, Witness{std::vector<ElementId>(tuple.begin(), tuple.end()),
                               {0, pos},
                               std::to_string(base),
                               std::to_string(other),
                               "nesting positions disagree"});
        return;
      }
    }
  });

  auto& zero_abs = cb.add("k-zero-absorption");
  for_all_multisets(N, n - 1, [&](std::span<const ElementId> rest) {
    if (zero_abs.verdict != CheckVerdict::kPass) return;
    std::vector<ElementId> args(rest.begin(), rest.end());
    args.push_back(tables.zero);
    ElementId got = tables.k.at(args);
    if (got != tables.zero)
      cb.fail(zero_abs, Witness{args, {}, std::to_string(tables.zero), std::to_string(got),
                                "k with a zero argument must be zero"});
  });

  auto& distrib = cb.add("k-distributivity");
  for_all_multisets(N, n - 1, [&](std::span<const ElementId> g) {
    if (distrib.verdict != CheckVerdict::kPass) return;
    for_all_multisets(N, m, [&](std::span<const ElementId> x) {
      if (distrib.verdict != CheckVerdict::kPass) return;
      const Subset& sum = tables.h.at(x);
      // Elementwise products of the hyper-sum.
      Subset lhs(N);
      std::vector<ElementId> args(g.begin(), g.end());
      args.push_back(0);
      sum.for_each([&](int y) {
        args.back() = y;
        lhs.set(tables.k.at(args));
      });
      // Hyper-sum of the products.
      std::vector<ElementId> prods;
      prods.reserve(static_cast<size_t>(m));
      for (int j = 0; j < m; ++j) {
        args.back() = x[static_cast<size_t>(j)];
        prods.push_back(tables.k.at(args));
      }
      const Subset& rhs = tables.h.at(prods);
      if (lhs != rhs) {
        std::vector<ElementId> wit(g.begin(), g.end());
        wit.insert(wit.end(), x.begin(), x.end());
        cb.fail(distrib, Witness{wit,
                                 {static_cast<int>(g.size())},
                                 render_plain_subset(lhs),
                                 render_plain_subset(rhs),
                                 "k over a hyper-sum differs from the hyper-sum of products"});
      }
    });
  });

  if (tables.one.has_value()) {
    auto& ident = cb.add("scalar-identity");
    std::vector<ElementId> args(static_cast<size_t>(n), *tables.one);
    for (ElementId g = 0; g < N; ++g) {
      args[0] = g;
      ElementId got = tables.k.at(args);
      if (got != g) {
        cb.fail(ident, Witness{{g}, {}, std::to_string(g), std::to_string(got),
                               "declared scalar identity does not act as identity"});
        break;
      }
    }
  }

  return report;
}

std::optional<ElementId> find_scalar_identity(const RingTables& tables) {
  int N = tables.size();
  int n = tables.n;
  for (ElementId e = 0; e < N; ++e) {
    bool ok = true;
    std::vector<ElementId> args(static_cast<size_t>(n), e);
    for (ElementId g = 0; g < N && ok; ++g) {
      args[0] = g;
      ok = tables.k.at(args) == g;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(RingTables tables) : tables_(std::move(tables)), labels_(tables_.labels) {
  int N = size();
  for (ElementId e = 0; e < N; ++e) label_index_[labels_[static_cast<size_t>(e)]] = e;
  negs_.assign(static_cast<size_t>(N), -1);
  std::vector<ElementId> probe(static_cast<size_t>(tables_.m), tables_.zero);
  for (ElementId x = 0; x < N; ++x) {
    probe[0] = x;
    for (ElementId y = 0; y < N; ++y) {
      probe[1] = y;
      if (tables_.h.at(probe).test(tables_.zero)) {
        negs_[static_cast<size_t>(x)] = y;
        break;
      }
    }
  }
}

RingPtr Ring::create(RingTables tables, AxiomReport* report) {
  if (static_cast<int>(tables.labels.size()) != tables.h.carrier() ||
      tables.h.carrier() != tables.k.carrier())
    throw Error(ErrorCode::kInvalidInput, "table carrier sizes disagree with label list");
  AxiomReport local = validate_krasner(tables);
  if (report) *report = local;
  if (!local.passed()) return nullptr;
  if (!tables.one.has_value()) tables.one = find_scalar_identity(tables);
  return RingPtr(new Ring(std::move(tables)));
}

ElementId Ring::element(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end())
    throw Error(ErrorCode::kInvalidInput, "unknown element label '" + label + "'");
  return it->second;
}

Subset Ring::add_sets(std::span<const Subset> args) const {
  std::vector<Subset> key(args.begin(), args.end());
  std::sort(key.begin(), key.end(), [](const Subset& a, const Subset& b) {
    return subset_order_less(a, b);
  });
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = add_memo_.find(key);
    if (it != add_memo_.end()) return it->second;
  }
  Subset out = extend_hyperop_to_subsets(tables_.h, key);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  add_memo_.emplace(std::move(key), out);
  return out;
}

Subset Ring::mul_sets(std::span<const Subset> args) const {
  std::vector<Subset> key(args.begin(), args.end());
  std::sort(key.begin(), key.end(), [](const Subset& a, const Subset& b) {
    return subset_order_less(a, b);
  });
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = mul_memo_.find(key);
    if (it != mul_memo_.end()) return it->second;
  }
  Subset out = nary_image(tables_.k, key);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  mul_memo_.emplace(std::move(key), out);
  return out;
}

ElementId Ring::iterated_mul(std::span<const ElementId> elems) const {
  if (!admissible_length(elems.size()))
    throw Error(ErrorCode::kArity,
                "iterated product length must be of the form l(n-1)+1, got " +
                    std::to_string(elems.size()));
  if (elems.size() == 1) return elems[0];
  int n = tables_.n;
  std::vector<ElementId> acc(elems.begin(), elems.begin() + n);
  ElementId cur = tables_.k.at(acc);
  size_t pos = static_cast<size_t>(n);
  while (pos < elems.size()) {
    acc.assign(1, cur);
    acc.insert(acc.end(), elems.begin() + static_cast<long>(pos),
               elems.begin() + static_cast<long>(pos) + n - 1);
    cur = tables_.k.at(acc);
    pos += static_cast<size_t>(n - 1);
  }
  return cur;
}

Subset Ring::iterated_mul_sets(std::span<const Subset> sets) const {
  if (!admissible_length(sets.size()))
    throw Error(ErrorCode::kArity,
                "iterated product length must be of the form l(n-1)+1, got " +
                    std::to_string(sets.size()));
  if (sets.size() == 1) return sets[0];
  int n = tables_.n;
  std::vector<Subset> acc(sets.begin(), sets.begin() + n);
  Subset cur = mul_sets(acc);
  size_t pos = static_cast<size_t>(n);
  while (pos < sets.size()) {
    acc.assign(1, cur);
    acc.insert(acc.end(), sets.begin() + static_cast<long>(pos),
               sets.begin() + static_cast<long>(pos) + n - 1);
    cur = mul_sets(acc);
    pos += static_cast<size_t>(n - 1);
  }
  return cur;
}

ElementId Ring::pad_mul(std::span<const ElementId> elems) const {
  ElementId e1 = require_one("pad_mul");
  int n = tables_.n;
  if (elems.empty() || static_cast<int>(elems.size()) > n)
    throw Error(ErrorCode::kArity, "padded product takes between 1 and n elements");
  std::vector<ElementId> args(elems.begin(), elems.end());
  args.resize(static_cast<size_t>(n), e1);
  return tables_.k.at(args);
}

ElementId Ring::require_one(const char* op) const {
  if (!tables_.one.has_value())
    throw Error(ErrorCode::kMissingIdentity,
                std::string(op) + " requires a ring with a scalar identity");
  return *tables_.one;
}

std::string Ring::render_subset(const Subset& s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](int e) {
    if (!first) os << ',';
    os << labels_[static_cast<size_t>(e)];
    first = false;
  });
  os << '}';
  return os.str();
}

std::string Ring::render_tuple(std::span<const ElementId> tuple) const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) os << ',';
    os << labels_[static_cast<size_t>(tuple[i])];
  }
  os << ')';
  return os.str();
}

}  // namespace krasner
