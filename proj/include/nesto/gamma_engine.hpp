#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nesto/buildset.hpp"
#include "nesto/poly.hpp"

namespace nesto {

enum class ScanOrder { forward, reverse };

/// base plus additions, in order, yields target; every prefix is a flag
/// building set.
struct FlagChain {
  BuildingSet base;
  std::vector<Subset> additions;
  BuildingSet target;
};

using MemoKey = std::vector<std::uint64_t>;

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept;
};

/// gamma values of connected flag building sets keyed by
/// BuildingSet::compact_key(). Safe for concurrent use: lookups share a lock,
/// inserts keep the first value written.
class GammaMemo {
 public:
  std::optional<IntPolynomial> find(const MemoKey& key) const;
  void insert(const MemoKey& key, const IntPolynomial& value);
  std::size_t size() const;
  std::vector<std::pair<MemoKey, IntPolynomial>> entries() const;

  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<MemoKey, IntPolynomial, MemoKeyHash> map_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

/// Rebuilds the building set a memo key describes (ground 1..m).
BuildingSet from_compact_key(const MemoKey& key);

/// Minimal flag building set inside a connected flag b: singletons plus the
/// prefixes of a vertex order in which every prefix is a member, growing from
/// the smallest label by the smallest admissible label. Falls back to the
/// binary decomposition of the ground set when no such order exists.
BuildingSet initial_comb(const BuildingSet& b);

/// Greedy chain from base to target: repeatedly take the first remaining
/// member (in scan order) whose addition keeps the set union-closed and flag.
FlagChain flag_chain(const BuildingSet& base, const BuildingSet& target, ScanOrder order = ScanOrder::forward);

/// Checks base subset of target, base + additions == target, and that every
/// prefix is a flag building set.
bool flag_chain_valid(const FlagChain& chain);

struct EngineOptions {
  ScanOrder order = ScanOrder::forward;
};

/// gamma via the face-shaving recursion
///   gamma(B + I) = gamma(B) + t gamma(B|_I) gamma(B/I)
/// along flag_chain(initial_comb(b), b). Disconnected sets multiply over
/// their blocks; non-flag sets are handed to the nested-set oracle.
/// Throws InternalError if an increment ever has a negative coefficient.
IntPolynomial gamma_incremental(const BuildingSet& b, GammaMemo& memo, const EngineOptions& options = {});
IntPolynomial gamma_incremental(const BuildingSet& b, const EngineOptions& options = {});

}  // namespace nesto
