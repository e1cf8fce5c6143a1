#include <doctest.h>

#include <random>

#include "nesto/errors.hpp"
#include "nesto/subset.hpp"

using nesto::Subset;

TEST_CASE("labels map to bits") {
  const Subset s{1, 3};
  CHECK(s.bits() == 0b101);
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.min_label() == 1);
  CHECK(s.max_label() == 3);
  CHECK(s.to_string() == "{1,3}");
  CHECK(Subset().to_string() == "{}");
  CHECK(Subset::range(64).size() == 64);
  CHECK(Subset::single(64).max_label() == 64);
}

TEST_CASE("set algebra") {
  const Subset a{1, 2}, b{2, 3};
  CHECK((a | b) == Subset{1, 2, 3});
  CHECK((a & b) == Subset{2});
  CHECK((a - b) == Subset{1});
  CHECK(a.intersects(b));
  CHECK(Subset{1}.disjoint(Subset{3}));
  CHECK(Subset{1}.proper_subset_of(a));
  CHECK_FALSE(a.proper_subset_of(a));
}

TEST_CASE("out of range labels") {
  CHECK_THROWS_AS(Subset::from_labels({0}), nesto::GroundSetTooLarge);
  CHECK_THROWS_AS(Subset::from_labels({65}), nesto::GroundSetTooLarge);
}

TEST_CASE("canonical order is by size then bits") {
  CHECK(nesto::canonical_less(Subset{3}, Subset{1, 2}));
  CHECK(nesto::canonical_less(Subset{1, 2}, Subset{1, 3}));
  CHECK_FALSE(nesto::canonical_less(Subset{1, 2}, Subset{1, 2}));
}

TEST_CASE("lex order compares characteristic vectors from label 1") {
  // (1,1,0) > (1,0,1): the set missing the first differing label is smaller.
  CHECK(nesto::lex_less(Subset{1, 3}, Subset{1, 2}));
  CHECK(nesto::lex_less(Subset{2, 3}, Subset{1}));
  CHECK_FALSE(nesto::lex_less(Subset{1}, Subset{1}));

  std::mt19937_64 rng(7);
  for (int k = 0; k < 1000; ++k) {
    const Subset a(rng() & 0xff), b(rng() & 0xff);
    std::vector<int> va(8), vb(8);
    for (int i = 0; i < 8; ++i) {
      va[i] = a.contains(i + 1);
      vb[i] = b.contains(i + 1);
    }
    CHECK(nesto::lex_less(a, b) == (va < vb));
  }
}

TEST_CASE("compaction relabels by rank") {
  CHECK(nesto::compact_bits(Subset{3, 5}.bits(), Subset{2, 3, 5}.bits()) == 0b110);
  CHECK(nesto::compact_bits(0, Subset{2}.bits()) == 0);
}
