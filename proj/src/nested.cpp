#include "nesto/nested.hpp"

#include <algorithm>

#include "nesto/errors.hpp"

namespace nesto {
namespace {

// Depth-first enumeration of nested sets. Candidates are visited in
// (cardinality, bits) order, so a new candidate can never be strictly inside
// an already chosen member; it is either a superset of or disjoint from each
// current root of the nested forest.
class NestedEnumerator {
 public:
  NestedEnumerator(const BuildingSet& b, const EnumerationLimits& limits) {
    const auto maxima = b.b_max();
    for (Subset e : b.elements())
      if (std::find(maxima.begin(), maxima.end(), e) == maxima.end()) candidates_.push_back(e);
    if (candidates_.size() > limits.max_candidates && !limits.override_cap)
      throw CapExceeded("building set has " + std::to_string(candidates_.size()) + " non-maximal members; cap is " +
                        std::to_string(limits.max_candidates));
    supersets_.resize(candidates_.size());
    for (std::size_t k = 0; k < candidates_.size(); ++k)
      for (Subset e : b.elements())
        if (candidates_[k].proper_subset_of(e)) supersets_[k].push_back(e);
  }

  template <typename Visit>
  void run(Visit&& visit) {
    chosen_.clear();
    std::vector<Subset> roots;
    recurse(0, roots, visit);
  }

 private:
  // True when adding c keeps the nested-set conditions. Only unions of c
  // with whole roots need testing: if c together with disjoint members lies
  // in B, union-closure lets each member grow into its root.
  bool admissible(Subset c, const std::vector<Subset>& roots, std::size_t k) const {
    Subset outside;
    for (Subset r : roots) {
      if (r.subset_of(c)) continue;
      if (r.intersects(c)) return false;
      outside |= r;
    }
    if (outside.empty()) return true;
    for (Subset u : supersets_[k]) {
      const Subset rest = u - c;
      if (!rest.subset_of(outside)) continue;
      bool whole_roots = true;
      for (Subset r : roots)
        if (r.intersects(rest) && !r.subset_of(rest)) {
          whole_roots = false;
          break;
        }
      if (whole_roots) return false;
    }
    return true;
  }

  template <typename Visit>
  void recurse(std::size_t start, const std::vector<Subset>& roots, Visit& visit) {
    visit(std::span<const Subset>(chosen_));
    std::vector<Subset> next;
    for (std::size_t k = start; k < candidates_.size(); ++k) {
      const Subset c = candidates_[k];
      if (!admissible(c, roots, k)) continue;
      next.clear();
      next.push_back(c);
      for (Subset r : roots)
        if (r.disjoint(c)) next.push_back(r);
      chosen_.push_back(c);
      recurse(k + 1, next, visit);
      chosen_.pop_back();
    }
  }

  std::vector<Subset> candidates_;
  std::vector<std::vector<Subset>> supersets_;
  std::vector<Subset> chosen_;
};

std::vector<std::int64_t> convolve(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  return (IntPolynomial(a) * IntPolynomial(b)).coeffs();
}

}  // namespace

FaceCensus enumerate_nested_sets(const BuildingSet& b, const EnumerationLimits& limits) {
  FaceCensus census;
  census.dimension = b.dimension();
  census.counts_by_size.assign(static_cast<std::size_t>(census.dimension) + 1, 0);
  NestedEnumerator en(b, limits);
  en.run([&](std::span<const Subset> n) {
    if (n.size() >= census.counts_by_size.size())
      throw InternalError("nested set larger than the dimension of " + b.to_string());
    ++census.counts_by_size[n.size()];
  });
  return census;
}

void visit_nested_sets(const BuildingSet& b, const NestedSetVisitor& visit, const EnumerationLimits& limits) {
  NestedEnumerator en(b, limits);
  en.run(visit);
}

IntPolynomial f_polynomial(const FaceCensus& census) {
  const int d = census.dimension;
  std::vector<std::int64_t> f(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) f[static_cast<std::size_t>(k)] = census.counts_by_size[static_cast<std::size_t>(d - k)];
  return IntPolynomial(std::move(f));
}

IntPolynomial f_polynomial(const BuildingSet& b, const EnumerationLimits& limits) {
  return f_polynomial(enumerate_nested_sets(b, limits));
}

IntPolynomial gamma_oracle(const BuildingSet& b, const EnumerationLimits& limits) {
  const int d = b.dimension();
  return h_to_gamma(f_to_h(f_polynomial(b, limits), d), d);
}

bool facet_f_identity_check(const BuildingSet& b, Subset i, const EnumerationLimits& limits) {
  const auto maxima = b.b_max();
  if (!b.contains(i) || std::find(maxima.begin(), maxima.end(), i) != maxima.end())
    throw DomainError("facet check needs a non-maximal member, got " + i.to_string());

  std::vector<std::int64_t> through(static_cast<std::size_t>(b.dimension()) + 1, 0);
  visit_nested_sets(
      b,
      [&](std::span<const Subset> n) {
        if (std::find(n.begin(), n.end(), i) != n.end()) ++through[n.size()];
      },
      limits);

  const auto left = enumerate_nested_sets(restriction(b, i), limits).counts_by_size;
  const auto right = enumerate_nested_sets(contraction(b, i), limits).counts_by_size;
  std::vector<std::int64_t> expected{0};
  const auto prod = convolve(left, right);
  expected.insert(expected.end(), prod.begin(), prod.end());
  return IntPolynomial(through) == IntPolynomial(expected);
}

}  // namespace nesto
