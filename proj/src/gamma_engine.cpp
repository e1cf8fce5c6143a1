#include "nesto/gamma_engine.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "nesto/errors.hpp"
#include "nesto/nested.hpp"

namespace nesto {

std::size_t MemoKeyHash::operator()(const MemoKey& k) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t w : k) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

std::optional<IntPolynomial> GammaMemo::find(const MemoKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void GammaMemo::insert(const MemoKey& key, const IntPolynomial& value) {
  std::unique_lock lock(mutex_);
  map_.try_emplace(key, value);
}

std::size_t GammaMemo::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

std::vector<std::pair<MemoKey, IntPolynomial>> GammaMemo::entries() const {
  std::shared_lock lock(mutex_);
  std::vector<std::pair<MemoKey, IntPolynomial>> out(map_.begin(), map_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

BuildingSet from_compact_key(const MemoKey& key) {
  if (key.empty()) throw DomainError("empty memo key");
  std::vector<Subset> els;
  for (std::size_t i = 1; i < key.size(); ++i) els.emplace_back(key[i]);
  return BuildingSet::trusted(Subset::range(static_cast<int>(key[0])), std::move(els));
}

namespace {

void require_connected_flag(const BuildingSet& b, const char* what) {
  if (!b.connected() || !b.is_flag())
    throw DomainError(std::string(what) + " needs a connected flag building set, got " + b.to_string());
}

}  // namespace

BuildingSet initial_comb(const BuildingSet& b) {
  require_connected_flag(b, "initial_comb");
  const Subset ground = b.ground();
  std::vector<Subset> comb;
  ground.for_each_label([&](int l) { comb.push_back(Subset::single(l)); });

  Subset prefix = Subset::single(ground.min_label());
  while (prefix != ground) {
    Subset grown;
    for (Subset rest = ground - prefix; !rest.empty(); rest -= Subset::single(rest.min_label())) {
      const Subset cand = prefix | Subset::single(rest.min_label());
      if (b.contains(cand)) {
        grown = cand;
        break;
      }
    }
    if (grown.empty()) return binary_decomposition(b, ground).as_building_set();
    prefix = grown;
    comb.push_back(prefix);
  }
  return BuildingSet::trusted(ground, std::move(comb));
}

FlagChain flag_chain(const BuildingSet& base, const BuildingSet& target, ScanOrder order) {
  require_connected_flag(base, "flag_chain");
  require_connected_flag(target, "flag_chain");
  if (base.ground() != target.ground()) throw DomainError("flag_chain needs a common ground set");
  for (Subset e : base.elements())
    if (!target.contains(e)) throw DomainError("flag_chain base member " + e.to_string() + " not in target");

  std::unordered_set<Subset> current(base.elements().begin(), base.elements().end());
  std::vector<Subset> members(base.elements().begin(), base.elements().end());
  std::vector<Subset> remaining;
  for (Subset e : target.elements())
    if (!base.contains(e)) remaining.push_back(e);
  if (order == ScanOrder::reverse) std::reverse(remaining.begin(), remaining.end());

  auto acceptable = [&](Subset add) {
    bool split = false;
    for (Subset j : members) {
      if (!j.intersects(add) || j.subset_of(add)) {
        if (!split && j.proper_subset_of(add) && current.count(add - j)) split = true;
        continue;
      }
      if (!add.subset_of(j) && !current.count(j | add)) return false;
    }
    return split;
  };

  FlagChain chain{base, {}, target};
  while (!remaining.empty()) {
    auto it = std::find_if(remaining.begin(), remaining.end(), acceptable);
    if (it == remaining.end())
      throw InternalError("flag_chain found no admissible member to add towards " + target.to_string());
    chain.additions.push_back(*it);
    current.insert(*it);
    members.push_back(*it);
    remaining.erase(it);
  }
  return chain;
}

bool flag_chain_valid(const FlagChain& chain) {
  for (Subset e : chain.base.elements())
    if (!chain.target.contains(e)) return false;
  std::vector<Subset> prefix(chain.base.elements().begin(), chain.base.elements().end());
  for (Subset add : chain.additions) {
    if (chain.base.contains(add) || !chain.target.contains(add)) return false;
    prefix.push_back(add);
    if (!is_building_set(prefix, chain.target.ground())) return false;
    if (!BuildingSet::trusted(chain.target.ground(), prefix).is_flag()) return false;
  }
  return prefix.size() == chain.target.size();
}

IntPolynomial gamma_incremental(const BuildingSet& b, GammaMemo& memo, const EngineOptions& options) {
  if (!b.is_flag()) return gamma_oracle(b);
  if (!b.connected()) {
    IntPolynomial g = IntPolynomial::one();
    for (Subset block : b.b_max())
      if (block.size() > 1) g *= gamma_incremental(restriction(b, block), memo, options);
    return g;
  }
  const int n = b.ground_size();
  if (n == 1 || b.size() == static_cast<std::size_t>(2 * n - 1)) return IntPolynomial::one();

  const MemoKey key = b.compact_key();
  if (auto hit = memo.find(key)) return *hit;

  const FlagChain chain = flag_chain(initial_comb(b), b, options.order);
  std::vector<Subset> current(chain.base.elements().begin(), chain.base.elements().end());
  IntPolynomial gamma = IntPolynomial::one();
  for (Subset add : chain.additions) {
    std::vector<Subset> inside, outside;
    for (Subset j : current) {
      if (j.subset_of(add))
        inside.push_back(j);
      else
        outside.push_back(j - add);
    }
    const IntPolynomial step =
        (gamma_incremental(BuildingSet::trusted(add, std::move(inside)), memo, options) *
         gamma_incremental(BuildingSet::trusted(b.ground() - add, std::move(outside)), memo, options))
            .shifted(1);
    if (!step.nonnegative())
      throw InternalError("negative gamma increment " + step.to_string() + " adding " + add.to_string());
    gamma += step;
    current.push_back(add);
  }
  memo.insert(key, gamma);
  return gamma;
}

IntPolynomial gamma_incremental(const BuildingSet& b, const EngineOptions& options) {
  GammaMemo memo;
  return gamma_incremental(b, memo, options);
}

}  // namespace nesto
