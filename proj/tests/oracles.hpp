#pragma once

// Brute-force oracles for the test suite. These deliberately avoid the
// library's Subset/lattice machinery: everything is plain loops over
// std::set<int>, reading only the validated tables through the element
// operations. Expected values in the tests are frozen from these.

#include <set>
#include <vector>

#include "krasner/core.hpp"

namespace oracle {

using krasner::ElementId;
using krasner::Ring;

inline std::set<int> hyper_sum(const Ring& ring, const std::vector<int>& tuple) {
  std::set<int> out;
  ring.add(std::vector<ElementId>(tuple.begin(), tuple.end())).for_each([&](int e) {
    out.insert(e);
  });
  return out;
}

// Direct closure/absorption check of the hyperideal invariants.
inline bool is_ideal(const Ring& ring, const std::set<int>& S) {
  if (!S.count(ring.zero())) return false;
  for (int a : S)
    if (!S.count(ring.neg(a))) return false;
  // h-closure over all member tuples (m = 2 or 3 in the fixtures)
  int m = ring.m();
  std::vector<int> members(S.begin(), S.end());
  std::vector<size_t> odo(static_cast<size_t>(m), 0);
  while (true) {
    std::vector<int> tuple;
    for (int i = 0; i < m; ++i) tuple.push_back(members[odo[static_cast<size_t>(i)]]);
    for (int y : hyper_sum(ring, tuple))
      if (!S.count(y)) return false;
    int pos = m - 1;
    while (pos >= 0 && ++odo[static_cast<size_t>(pos)] == members.size())
      odo[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  // absorption with the member in every position
  int n = ring.n();
  std::vector<int> outer(static_cast<size_t>(n - 1), 0);
  while (true) {
    for (int q : S) {
      for (int slot = 0; slot < n; ++slot) {
        std::vector<ElementId> args;
        for (int i = 0, oi = 0; i < n; ++i)
          args.push_back(i == slot ? q : outer[static_cast<size_t>(oi++)]);
        if (!S.count(ring.mul(args))) return false;
      }
    }
    int pos = n - 2;
    while (pos >= 0 && ++outer[static_cast<size_t>(pos)] == ring.size())
      outer[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return true;
}

// Every hyperideal, by filtering all subsets containing zero.
inline std::vector<std::set<int>> enumerate_ideals(const Ring& ring) {
  std::vector<std::set<int>> out;
  int N = ring.size();
  for (uint64_t mask = 1; mask < (uint64_t{1} << N); ++mask) {
    std::set<int> S;
    for (int e = 0; e < N; ++e)
      if (mask & (uint64_t{1} << e)) S.insert(e);
    if (is_ideal(ring, S)) out.push_back(S);
  }
  return out;
}

// Left-nested iterated product via plain table lookups.
inline int iterated(const Ring& ring, const std::vector<int>& elems) {
  int n = ring.n();
  if (elems.size() == 1) return elems[0];
  std::vector<ElementId> acc(elems.begin(), elems.begin() + n);
  int cur = ring.mul(acc);
  for (size_t pos = static_cast<size_t>(n); pos < elems.size(); pos += static_cast<size_t>(n - 1)) {
    std::vector<ElementId> args{cur};
    args.insert(args.end(), elems.begin() + static_cast<long>(pos),
                elems.begin() + static_cast<long>(pos) + n - 1);
    cur = ring.mul(args);
  }
  return cur;
}

// (t,n)-absorbing delta-semiprimary over ALL ordered tuples (not just
// multisets), against an explicit delta image. Cross-checks the sorted
// enumeration inside the library.
inline bool semiprimary_ordered(const Ring& ring, const std::set<int>& Q,
                                const std::set<int>& deltaQ, int t, bool weakly) {
  int n = ring.n();
  int w = t * (n - 1) + 1;
  int u = (t - 1) * (n - 1) + 1;
  std::vector<int> tuple(static_cast<size_t>(w), 0);
  while (true) {
    int full = iterated(ring, tuple);
    bool hyp = Q.count(full) && !(weakly && full == ring.zero());
    if (hyp) {
      // all u-subsets of positions
      bool found = false;
      std::vector<int> pos(static_cast<size_t>(u));
      for (int i = 0; i < u; ++i) pos[static_cast<size_t>(i)] = i;
      while (!found) {
        std::vector<int> chosen;
        for (int p : pos) chosen.push_back(tuple[static_cast<size_t>(p)]);
        if (deltaQ.count(iterated(ring, chosen))) found = true;
        int i = u - 1;
        while (i >= 0 && pos[static_cast<size_t>(i)] == w - u + i) --i;
        if (i < 0) break;
        ++pos[static_cast<size_t>(i)];
        for (int j = i + 1; j < u; ++j) pos[static_cast<size_t>(j)] = pos[static_cast<size_t>(j - 1)] + 1;
      }
      if (!found) return false;
    }
    int p = w - 1;
    while (p >= 0 && ++tuple[static_cast<size_t>(p)] == ring.size()) tuple[static_cast<size_t>(p--)] = 0;
    if (p < 0) break;
  }
  return true;
}

// z12modH class arithmetic from the representatives.
struct Z12ModH {
  // carrier order 0,1,2,3,4,6 as in the fixture
  static int class_of(int x) {
    static const int table[12] = {0, 1, 2, 3, 4, 1, 5, 1, 4, 3, 2, 1};
    return table[((x % 12) + 12) % 12];
  }
  static const std::vector<int>& members(int cls) {
    static const std::vector<int> reps[6] = {{0}, {1, 5, 7, 11}, {2, 10}, {3, 9}, {4, 8}, {6}};
    return reps[cls];
  }
  static std::set<int> sum(int a, int b) {
    std::set<int> out;
    for (int x : members(a))
      for (int y : members(b)) out.insert(class_of(x + y));
    return out;
  }
  static int product(int a, int b) {
    return class_of(members(a)[0] * members(b)[0]);
  }
};

}  // namespace oracle
