// Deliberately naive reimplementations used as test oracles. Nothing here
// shares code with the library beyond Subset and the container types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "nesto/buildset.hpp"
#include "nesto/graph.hpp"
#include "nesto/poly.hpp"

namespace oracle {

using nesto::Subset;

inline std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// f(t) = h(t + 1), expanded coefficient by coefficient.
inline std::vector<std::int64_t> f_from_h(const std::vector<std::int64_t>& h) {
  std::vector<std::int64_t> f(h.size(), 0);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) f[j] += h[i] * binom(static_cast<int>(i), static_cast<int>(j));
  return f;
}

// sum gamma_i t^i (1 + t)^(d - 2i)
inline std::vector<std::int64_t> h_from_gamma(const std::vector<std::int64_t>& g, int d) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(d + 1), 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (int j = 0; j <= d - 2 * static_cast<int>(i); ++j) h[i + static_cast<std::size_t>(j)] += g[i] * binom(d - 2 * static_cast<int>(i), j);
  return h;
}

inline std::vector<std::int64_t> coeffs(const nesto::IntPolynomial& p, int d) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) v[static_cast<std::size_t>(i)] = p[i];
  return v;
}

inline bool graph_connected_on(const nesto::LabeledGraph& g, Subset s) {
  if (s.empty()) return false;
  std::vector<int> stack{s.min_label()};
  Subset seen = Subset::single(s.min_label());
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : s.labels())
      if (!seen.contains(u) && g.adjacent(u, v)) {
        seen |= Subset::single(u);
        stack.push_back(u);
      }
  }
  return seen == s;
}

// Every nonempty vertex subset inducing a connected subgraph.
inline std::set<std::uint64_t> graphical(const nesto::LabeledGraph& g) {
  std::set<std::uint64_t> out;
  const std::vector<int> v = g.vertices().labels();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << v.size()); ++m) {
    Subset s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if ((m >> i) & 1U) s |= Subset::single(v[i]);
    if (graph_connected_on(g, s)) out.insert(s.bits());
  }
  return out;
}

inline std::set<std::uint64_t> as_set(const nesto::BuildingSet& b) {
  std::set<std::uint64_t> out;
  for (Subset s : b.elements()) out.insert(s.bits());
  return out;
}

// B/I = { J - (J & I) : J in B, J not inside I }
inline std::set<std::uint64_t> contraction(const nesto::BuildingSet& b, Subset i) {
  std::set<std::uint64_t> out;
  for (Subset j : b.elements())
    if (!j.subset_of(i)) out.insert((j - i).bits());
  return out;
}

inline bool flag(const nesto::BuildingSet& b) {
  for (Subset s : b.elements()) {
    if (s.size() < 2) continue;
    bool split = false;
    for (Subset a : b.elements())
      if (a.proper_subset_of(s) && b.contains(s - a)) split = true;
    if (!split) return false;
  }
  return true;
}

// Counts nested sets by size straight from the definition: test every subset
// of B - B_max, every pair for nestedness, and every subfamily of pairwise
// disjoint members of size >= 2 for a union in B. Exponential; small B only.
inline std::vector<std::int64_t> census(const nesto::BuildingSet& b) {
  std::vector<Subset> cand;
  for (Subset s : b.elements())
    if (std::find(b.b_max().begin(), b.b_max().end(), s) == b.b_max().end()) cand.push_back(s);
  const std::size_t m = cand.size();
  std::vector<std::int64_t> counts(m + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Subset> n;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) n.push_back(cand[i]);
    bool ok = true;
    for (std::size_t i = 0; i < n.size() && ok; ++i)
      for (std::size_t j = i + 1; j < n.size() && ok; ++j)
        ok = n[i].subset_of(n[j]) || n[j].subset_of(n[i]) || n[i].disjoint(n[j]);
    for (std::uint64_t sub = 1; ok && sub < (std::uint64_t{1} << n.size()); ++sub) {
      if (std::popcount(sub) < 2) continue;
      Subset u;
      int total = 0;
      for (std::size_t i = 0; i < n.size(); ++i)
        if ((sub >> i) & 1U) {
          u |= n[i];
          total += n[i].size();
        }
      if (u.size() == total && b.contains(u)) ok = false;
    }
    if (ok) ++counts[n.size()];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

}  // namespace oracle
