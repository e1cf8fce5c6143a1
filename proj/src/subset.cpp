#include "nesto/subset.hpp"

#include "nesto/errors.hpp"

namespace nesto {

Subset::Subset(std::initializer_list<int> labels) {
  for (int l : labels) bits_ |= std::uint64_t{1} << (l - 1);
}

Subset Subset::from_labels(const std::vector<int>& labels) {
  Subset s;
  for (int l : labels) {
    if (l < 1 || l > kMaxLabel) throw GroundSetTooLarge("label " + std::to_string(l) + " outside 1..64");
    s |= single(l);
  }
  return s;
}

std::vector<int> Subset::labels() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_label([&](int l) { out.push_back(l); });
  return out;
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each_label([&](int l) {
    if (!first) s += ',';
    s += std::to_string(l);
    first = false;
  });
  return s + "}";
}

std::uint64_t compact_bits(std::uint64_t s, std::uint64_t ground) {
  std::uint64_t out = 0;
  int rank = 0;
  for (std::uint64_t g = ground; g; g &= g - 1, ++rank) {
    const std::uint64_t low = g & (~g + 1);
    if (s & low) out |= std::uint64_t{1} << rank;
  }
  return out;
}

}  // namespace nesto
