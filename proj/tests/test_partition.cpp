#include "doctest.h"

#include "lesq/partition.hpp"

#include <algorithm>
#include <limits>
#include <random>

using namespace lesq;

TEST_CASE("partition construction normalizes trailing zeros") {
  CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
  CHECK(Partition{0}.empty());
  CHECK(Partition{3, 1}.size() == 4);
  CHECK(Partition{3, 1}[5] == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, -1}), std::invalid_argument);
  CHECK(Partition{2, 1}.padded(4) == IntSeq{2, 1, 0, 0});
  CHECK_THROWS_AS((void)Partition({2, 1, 1}).padded(2), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{5}) == Partition{1, 1, 1, 1, 1});

  // Involution, and the box count is preserved, on every partition in a 12x12 box.
  long checked = 0;
  for (const Partition& p : partitions_in_box(12, 12)) {
    const Partition c = conjugate(p);
    REQUIRE(conjugate(c) == p);
    REQUIRE(c.size() == p.size());
    REQUIRE(static_cast<long>(c.length()) == p[0]);
    ++checked;
  }
  CHECK(checked == 2704156);  // binomial(24, 12)
}

TEST_CASE("lambda of a subset") {
  CHECK(lambda_of_subset(Subset(5, {1, 2, 3})) == Partition{});
  CHECK(lambda_of_subset(Subset(5, {2, 5})) == Partition{3, 1});
  CHECK(lambda_of_subset(Subset(2, {2})) == Partition{1});
  CHECK(lambda_of_subset(Subset(4, {})) == Partition{});
  // λ(I) fits in an |I| x (n - |I|) box, and for fixed |I| every such
  // partition arises exactly once.
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::pair<std::size_t, Partition>> seen;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      const Subset s = Subset::from_mask(n, mask);
      const Partition p = lambda_of_subset(s);
      CHECK(p.length() <= s.size());
      CHECK(p[0] <= n - static_cast<long>(s.size()));
      seen.emplace_back(s.size(), p);
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    CHECK(seen.size() == (1u << n));
  }
}

TEST_CASE("subset and subset tuple validation") {
  CHECK(Subset(5, {5, 2}).elements() == std::vector<int>{2, 5});
  CHECK_THROWS_AS(Subset(3, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Subset(3, {4}), std::invalid_argument);
  CHECK_THROWS_AS(Subset(3, {0}), std::invalid_argument);
  CHECK(Subset(5, {2, 5}).mask() == 0b10010u);
  CHECK(Subset::from_mask(5, 0b10010u) == Subset(5, {2, 5}));
  CHECK_THROWS_AS(SubsetTuple(3, {Subset(3, {}), Subset(2, {})}), std::invalid_argument);
  const SubsetTuple t(2, {Subset(2, {1}), Subset(2, {2}), Subset(2, {})});
  CHECK(t.at(2) == Subset(2, {2}));
  CHECK_THROWS_AS((void)t.at(0), std::out_of_range);
  CHECK_THROWS_AS((void)t.at(4), std::out_of_range);
}

TEST_CASE("underline lambda") {
  SUBCASE("even index is the padded conjugate") {
    const SubsetTuple t(3, {Subset(3, {2}), Subset(3, {3}), Subset(3, {1})});
    // λ({3}) = (2), conjugate (1,1), padded to 3 - 1 = 2 entries.
    CHECK(underline_lambda(t, 2) == IntSeq{1, 1});
  }
  SUBCASE("odd interior index is lowered") {
    const Subset one(2, {1});
    const SubsetTuple t(2, {one, one, one, one, one});
    CHECK(underline_lambda(t, 3) == IntSeq{1});
  }
  SUBCASE("full subset gives the empty sequence") {
    const Subset all(2, {1, 2});
    const SubsetTuple t(2, {all, all, all, all, all});
    CHECK(underline_lambda(t, 3).empty());
  }
  SUBCASE("end positions are not lowered") {
    const SubsetTuple t(3, {Subset(3, {3}), Subset(3, {}), Subset(3, {})});
    CHECK(underline_lambda(t, 1) == IntSeq{1, 1});
    CHECK(underline_lambda(t, 3) == IntSeq{0, 0, 0});
  }
  const SubsetTuple t(2, {Subset(2, {}), Subset(2, {}), Subset(2, {})});
  CHECK_THROWS_AS(underline_lambda(t, 0), std::out_of_range);
  CHECK_THROWS_AS(underline_lambda(t, 4), std::out_of_range);
}

TEST_CASE("pad_add") {
  CHECK(pad_add({2, 1}, {}) == IntSeq{2, 1});
  CHECK(pad_add({2, 1}, {1}) == IntSeq{3, 1});
  CHECK(pad_add({1, 1}, {1, 1}) == IntSeq{2, 2});

  std::mt19937 rng(7);
  std::uniform_int_distribution<long> value(-5, 5);
  std::uniform_int_distribution<int> len(0, 5);
  auto draw = [&] {
    IntSeq s(static_cast<std::size_t>(len(rng)));
    for (long& x : s) x = value(rng);
    return s;
  };
  for (int k = 0; k < 500; ++k) {
    const IntSeq a = draw(), b = draw(), c = draw();
    CHECK(pad_add(a, b) == pad_add(b, a));
    CHECK(pad_add(pad_add(a, b), c) == pad_add(a, pad_add(b, c)));
  }
}

TEST_CASE("scale") {
  CHECK(scale(Partition{3, 2}, 1) == Partition{3, 2});
  CHECK(scale(Partition{3, 1}, 2) == Partition{6, 2});
  CHECK(scale(Partition{}, 3) == Partition{});
  CHECK_THROWS_AS(scale(Partition{1}, 0), std::invalid_argument);
  CHECK_THROWS(scale(Partition{std::numeric_limits<long>::max() / 2 + 1}, 2));
  CHECK(scale(RatSeq{Rational(1, 2), 3}, Rational(2, 3)) == RatSeq{Rational(1, 3), 2});
}

TEST_CASE("is_partition and is_weakly_decreasing") {
  CHECK(is_partition({2, 1, 0}));
  CHECK_FALSE(is_partition({1, 2}));
  CHECK_FALSE(is_partition({1, -1}));
  CHECK(is_partition({}));
  const RatSeq ok{Rational(3, 2), 1, 1};
  const RatSeq bad{1, Rational(3, 2)};
  CHECK(is_weakly_decreasing(ok));
  CHECK_FALSE(is_weakly_decreasing(bad));
}

TEST_CASE("partition enumeration") {
  // Independent count: p(n) for n <= 10.
  const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (long s = 0; s <= 10; ++s)
    CHECK(partitions_of(s, static_cast<int>(s), s).size() == static_cast<std::size_t>(expected[s]));

  const auto box = partitions_in_box(2, 3);
  CHECK(box.size() == 10);
  CHECK(std::is_sorted(box.begin(), box.end()));
  for (const Partition& p : box) CHECK((p.length() <= 2 && p[0] <= 3));

  const auto limited = partitions_of(4, 2, 3);
  CHECK(limited == std::vector<Partition>{{2, 2}, {3, 1}});
  CHECK(partitions_of(-1, 3, 3).empty());
  CHECK(partitions_of(0, 0, 0) == std::vector<Partition>{Partition{}});
}

TEST_CASE("dominance") {
  CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
  CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
  CHECK(dominates(Partition{2, 2}, Partition{2, 1, 1}));
  CHECK(dominates(Partition{2, 1}, Partition{2, 1}));
  CHECK_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
}

TEST_CASE("containment") {
  CHECK(Partition{3, 2}.contains(Partition{2, 2}));
  CHECK_FALSE(Partition{3, 2}.contains(Partition{2, 2, 1}));
  CHECK(Partition{1}.contains(Partition{}));
  CHECK_FALSE(Partition{1}.contains(Partition{2}));
}
