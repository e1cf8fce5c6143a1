#include "nesto/buildset.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_set>

#include "nesto/errors.hpp"

namespace nesto {
namespace {

constexpr int kBitmapMaxLabel = 16;

void canonicalize(std::vector<Subset>& elements) {
  std::sort(elements.begin(), elements.end(), canonical_less);
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
}

}  // namespace

std::shared_ptr<const BuildingSet::Data> BuildingSet::build(Subset ground, std::vector<Subset> elements) {
  auto d = std::make_shared<Data>();
  d->ground = ground;
  canonicalize(elements);
  d->elements = std::move(elements);

  // Largest-first sweep: a member disjoint from everything already taken is
  // maximal, because the axioms make maximal members pairwise disjoint.
  Subset covered;
  for (auto it = d->elements.rbegin(); it != d->elements.rend(); ++it) {
    if (it->disjoint(covered)) {
      d->b_max.push_back(*it);
      covered |= *it;
    }
  }
  std::sort(d->b_max.begin(), d->b_max.end());

  if (ground.max_label() <= kBitmapMaxLabel) {
    const std::size_t words = std::max<std::size_t>(1, (std::size_t{1} << ground.max_label()) / 64);
    d->bitmap.assign(words, 0);
    for (Subset e : d->elements) d->bitmap[e.bits() >> 6] |= std::uint64_t{1} << (e.bits() & 63);
  } else {
    d->by_bits = d->elements;
    std::sort(d->by_bits.begin(), d->by_bits.end());
  }
  return d;
}

BuildingSet::BuildingSet(Subset ground, std::vector<Subset> elements) {
  if (!is_building_set(elements, ground))
    throw DomainError("not a building set on " + ground.to_string());
  d_ = build(ground, std::move(elements));
}

BuildingSet BuildingSet::trusted(Subset ground, std::vector<Subset> elements) {
  return BuildingSet(build(ground, std::move(elements)));
}

bool BuildingSet::contains(Subset s) const {
  if (!s.subset_of(d_->ground) || s.empty()) return false;
  if (!d_->bitmap.empty()) return (d_->bitmap[s.bits() >> 6] >> (s.bits() & 63)) & 1U;
  return std::binary_search(d_->by_bits.begin(), d_->by_bits.end(), s);
}

bool BuildingSet::is_flag() const {
  const signed char cached = d_->flag.load(std::memory_order_acquire);
  if (cached >= 0) return cached == 1;
  bool flag = true;
  const auto& els = d_->elements;
  for (std::size_t k = 0; k < els.size() && flag; ++k) {
    const Subset whole = els[k];
    if (whole.size() == 1) continue;
    bool split = false;
    for (std::size_t j = 0; j < k && els[j].size() < whole.size() && !split; ++j)
      split = els[j].subset_of(whole) && contains(whole - els[j]);
    flag = split;
  }
  // Racing writers store the same value.
  d_->flag.store(flag ? 1 : 0, std::memory_order_release);
  return flag;
}

bool BuildingSet::is_minimal_flag() const {
  return connected() && size() == static_cast<std::size_t>(2 * ground_size() - 1) && is_flag();
}

std::vector<std::uint64_t> BuildingSet::compact_key() const {
  std::vector<std::uint64_t> key;
  key.reserve(size() + 1);
  key.push_back(static_cast<std::uint64_t>(ground_size()));
  for (Subset e : elements()) key.push_back(compact_bits(e.bits(), ground().bits()));
  return key;
}

std::string BuildingSet::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < size(); ++k) s += (k ? "," : "") + elements()[k].to_string();
  return s + "}";
}

bool is_building_set(std::span<const Subset> candidate, Subset ground) {
  for (Subset s : candidate)
    if (s.empty() || !s.subset_of(ground)) return false;
  std::vector<Subset> list(candidate.begin(), candidate.end());
  canonicalize(list);
  std::vector<std::uint64_t> bitmap;
  std::unordered_set<Subset> hashed;
  if (ground.max_label() <= kBitmapMaxLabel) {
    bitmap.assign(std::max<std::size_t>(1, (std::size_t{1} << ground.max_label()) / 64), 0);
    for (Subset e : list) bitmap[e.bits() >> 6] |= std::uint64_t{1} << (e.bits() & 63);
  } else {
    hashed.insert(list.begin(), list.end());
  }
  auto member = [&](Subset s) {
    return bitmap.empty() ? hashed.count(s) > 0 : ((bitmap[s.bits() >> 6] >> (s.bits() & 63)) & 1U) != 0;
  };
  bool singletons = true;
  ground.for_each_label([&](int l) { singletons = singletons && member(Subset::single(l)); });
  if (!singletons) return false;
  for (std::size_t a = 0; a < list.size(); ++a)
    for (std::size_t b = a + 1; b < list.size(); ++b)
      if (list[a].intersects(list[b]) && !member(list[a] | list[b])) return false;
  return true;
}

BuildingSet graphical_building_set(const LabeledGraph& g) {
  // Grow connected sets one neighbor at a time; every connected set is
  // reachable from each of its vertices this way.
  std::unordered_set<Subset> seen;
  std::vector<Subset> stack;
  g.vertices().for_each_label([&](int v) {
    const Subset s = Subset::single(v);
    if (seen.insert(s).second) stack.push_back(s);
  });
  while (!stack.empty()) {
    const Subset s = stack.back();
    stack.pop_back();
    Subset frontier;
    s.for_each_label([&](int v) { frontier |= g.neighbors(v); });
    frontier -= s;
    frontier.for_each_label([&](int u) {
      const Subset t = s | Subset::single(u);
      if (seen.insert(t).second) stack.push_back(t);
    });
  }
  return BuildingSet::trusted(g.vertices(), std::vector<Subset>(seen.begin(), seen.end()));
}

BuildingSet restriction(const BuildingSet& b, Subset i) {
  if (i.empty() || !i.subset_of(b.ground()))
    throw DomainError("restriction to " + i.to_string() + " outside ground " + b.ground().to_string());
  std::vector<Subset> out;
  for (Subset e : b.elements())
    if (e.subset_of(i)) out.push_back(e);
  return BuildingSet::trusted(i, std::move(out));
}

BuildingSet contraction(const BuildingSet& b, Subset i) {
  if (!b.contains(i)) throw DomainError("contraction by non-member " + i.to_string());
  std::vector<Subset> out;
  for (Subset e : b.elements())
    if (!e.subset_of(i)) out.push_back(e - i);
  return BuildingSet::trusted(b.ground() - i, std::move(out));
}

std::vector<Subset> DecompositionTree::nodes() const {
  std::vector<Subset> out{root};
  for (const auto& [node, kids] : splits) {
    out.push_back(kids.first);
    out.push_back(kids.second);
  }
  canonicalize(out);
  return out;
}

bool DecompositionTree::contains(Subset s) const {
  const auto all = nodes();
  return std::find(all.begin(), all.end(), s) != all.end();
}

void DecompositionTree::validate(const BuildingSet& ambient) const {
  auto fail = [&](const std::string& why) {
    throw InternalError("invalid decomposition of " + root.to_string() + ": " + why);
  };
  if (!ambient.contains(root)) fail("root not in building set");
  std::size_t reached = 0;
  std::function<void(Subset)> walk = [&](Subset node) {
    ++reached;
    if (node.size() == 1) {
      if (splits.count(node)) fail("singleton " + node.to_string() + " has children");
      return;
    }
    auto it = splits.find(node);
    if (it == splits.end()) fail(node.to_string() + " has no split");
    const auto [a, b] = it->second;
    if (a.empty() || b.empty() || !a.disjoint(b) || (a | b) != node)
      fail(node.to_string() + " is not the disjoint union of its children");
    if (!ambient.contains(a) || !ambient.contains(b)) fail("child of " + node.to_string() + " not in building set");
    walk(a);
    walk(b);
  };
  walk(root);
  if (reached != static_cast<std::size_t>(2 * root.size() - 1) || splits.size() != static_cast<std::size_t>(root.size() - 1))
    fail("node count is not 2n-1");
}

BuildingSet DecompositionTree::as_building_set() const { return BuildingSet(root, nodes()); }

namespace {

// Orients a split as (smaller part, larger part); equal sizes fall back on
// lex_less.
std::pair<Subset, Subset> oriented(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size() ? std::pair{a, b} : std::pair{b, a};
  return lex_less(a, b) ? std::pair{a, b} : std::pair{b, a};
}

// Best split of `whole` among those accepted by `keep`, ordered so that the
// first component holds `anchor` when one is given.
template <typename Keep>
std::optional<std::pair<Subset, Subset>> choose_split(const BuildingSet& b, Subset whole, Keep&& keep) {
  std::optional<std::pair<Subset, Subset>> best;
  for (Subset part : b.elements()) {
    if (part.size() >= whole.size()) break;
    if (!part.subset_of(whole) || !b.contains(whole - part)) continue;
    const auto cand = oriented(part, whole - part);
    if (!keep(cand)) continue;
    if (!best || lex_less(cand.first, best->first)) best = cand;
  }
  return best;
}

void decompose_into(const BuildingSet& b, Subset node, DecompositionTree& tree) {
  if (node.size() == 1) return;
  const auto split = choose_split(b, node, [](const auto&) { return true; });
  if (!split) throw NotFlag(node.to_string() + " has no split into two disjoint members");
  tree.splits[node] = *split;
  decompose_into(b, split->first, tree);
  decompose_into(b, split->second, tree);
}

}  // namespace

DecompositionTree binary_decomposition(const BuildingSet& b, Subset i) {
  if (!b.contains(i)) throw DomainError(i.to_string() + " is not a member of the building set");
  DecompositionTree tree{i, {}};
  decompose_into(b, i, tree);
  return tree;
}

DecompositionTree decomposition_containing(const BuildingSet& b, Subset i, Subset j) {
  if (!b.contains(i) || !b.contains(j)) throw DomainError("decomposition_containing needs members of the building set");
  if (!j.proper_subset_of(i)) throw DomainError(j.to_string() + " is not a proper subset of " + i.to_string());
  if (!b.is_flag()) throw DomainError("decomposition_containing needs a flag building set");
  DecompositionTree tree{i, {}};
  // Group {j} and the singletons of i - j into two blocks whose unions are
  // members, keeping j whole; recurse into the block that holds j.
  Subset node = i;
  while (node != j) {
    const auto split = choose_split(b, node, [&](const auto& c) { return j.subset_of(c.first) || j.subset_of(c.second); });
    if (!split) throw InternalError("no split of " + node.to_string() + " keeps " + j.to_string() + " whole");
    tree.splits[node] = *split;
    const Subset with_j = j.subset_of(split->first) ? split->first : split->second;
    decompose_into(b, with_j == split->first ? split->second : split->first, tree);
    node = with_j;
  }
  decompose_into(b, j, tree);
  return tree;
}

BuildingSet product_building_set(const BuildingSet& b, std::span<const BuildingSet> parts) {
  if (parts.size() != static_cast<std::size_t>(b.ground_size()))
    throw DomainError("product needs one part per ground element");
  int total = 0;
  for (const auto& p : parts) {
    if (!p.connected()) throw DomainError("product parts must be connected");
    total += p.ground_size();
  }
  if (total > kMaxLabel) throw GroundSetTooLarge("product ground set of size " + std::to_string(total) + " exceeds 64");

  std::vector<Subset> blocks;
  std::vector<Subset> out;
  int offset = 0;
  for (const auto& p : parts) {
    for (Subset e : p.elements()) out.emplace_back(compact_bits(e.bits(), p.ground().bits()) << offset);
    blocks.push_back(Subset(Subset::range(p.ground_size()).bits() << offset));
    offset += p.ground_size();
  }
  for (Subset e : b.elements()) {
    Subset u;
    Subset(compact_bits(e.bits(), b.ground().bits())).for_each_label([&](int k) { u |= blocks[static_cast<std::size_t>(k - 1)]; });
    out.push_back(u);
  }
  return BuildingSet(Subset::range(total), std::move(out));
}

}  // namespace nesto
