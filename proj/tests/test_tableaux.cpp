#include "doctest.h"

#include "lesq/tableaux.hpp"
#include "support/brute_force.hpp"

#include <algorithm>
#include <numeric>

using namespace lesq;
using lesq::testing::brute_kostka;
using lesq::testing::brute_lr;
using lesq::testing::brute_lr_tableaux;
using lesq::testing::partitions_up_to;

TEST_CASE("lr_coefficient examples") {
  CHECK(lr_coefficient({4, 2, 1}, {4, 2, 1}, {}) == 1);
  CHECK(lr_coefficient({2, 1}, {1}, {1}) == 0);
  CHECK(lr_coefficient({2, 1}, {1, 1}, {1}) == 1);
  CHECK(lr_coefficient({2, 1}, {1}, {1, 1}) == 1);
  CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
  CHECK(lr_coefficient({4, 2}, {2}, {2}) == 0);  // sizes 2 + 2 != 6
  CHECK(lr_coefficient({2}, {1, 1}, {}) == 0);
}

TEST_CASE("lr_coefficient matches brute-force filling for |outer| <= 6") {
  const auto all = partitions_up_to(6);
  for (const Partition& outer : all)
    for (const Partition& left : all) {
      if (!outer.contains(left)) continue;
      for (const Partition& right : partitions_of(outer.size() - left.size(), 6, 6))
        REQUIRE(lr_coefficient(outer, left, right) == brute_lr(outer, left, right));
    }
}

TEST_CASE("a larger coefficient") {
  // Outside the exhaustive range above.
  const Partition outer{4, 3, 2, 1}, left{2, 1}, right{3, 2, 1, 1};
  CHECK(lr_coefficient(outer, left, right) == brute_lr(outer, left, right));
  CHECK(lr_coefficient({4, 2, 2, 1}, {2, 1}, {2, 2, 1, 1}) ==
        brute_lr({4, 2, 2, 1}, {2, 1}, {2, 2, 1, 1}));
}

TEST_CASE("kostka_number examples") {
  CHECK(kostka_number({3, 1}, {3, 1}) == 1);
  CHECK(kostka_number({2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka_number({1, 1}, {2}) == 0);
  CHECK(kostka_number({}, {}) == 1);
  CHECK(kostka_number({2}, {1, 0, 1}) == 1);
  CHECK(kostka_number({3, 2}, {1, 1, 1, 1, 1}) == 5);  // standard tableaux
  CHECK(kostka_number({2}, {1}) == 0);
}

TEST_CASE("kostka_number matches brute force and is permutation invariant") {
  for (long s = 0; s <= 6; ++s)
    for (const Partition& shape : partitions_of(s, 6, 6))
      for (const Partition& content : partitions_of(s, 6, 6)) {
        std::vector<long> c(content.parts());
        const BigInt reference = kostka_number(shape, Composition(c));
        REQUIRE(reference == brute_kostka(shape, c));
        c.push_back(0);
        std::sort(c.begin(), c.end());
        do {
          REQUIRE(kostka_number(shape, Composition(c)) == reference);
        } while (std::next_permutation(c.begin(), c.end()));
      }
}

TEST_CASE("lr_complements") {
  const auto a = lr_complements({2, 1}, {1});
  REQUIRE(a.size() == 2);
  CHECK(a[0].first == Partition{1, 1});
  CHECK(a[0].second == 1);
  CHECK(a[1].first == Partition{2});
  CHECK(a[1].second == 1);

  const auto b = lr_complements({3, 1}, {3, 1});
  REQUIRE(b.size() == 1);
  CHECK(b[0].first == Partition{});
  CHECK(b[0].second == 1);

  CHECK(lr_complements({1}, {2}).empty());

  // Multiplicities add up to the number of LR tableaux of the skew shape,
  // and each entry agrees with lr_coefficient.
  for (const Partition& outer : partitions_up_to(6))
    for (const Partition& left : partitions_up_to(outer.size())) {
      if (!outer.contains(left)) continue;
      const auto list = lr_complements(outer, left);
      CHECK(std::is_sorted(list.begin(), list.end(),
                           [](const auto& x, const auto& y) { return x.first < y.first; }));
      BigInt total = 0;
      for (const auto& [nu, c] : list) {
        CHECK(c > 0);
        CHECK(c == lr_coefficient(outer, left, nu));
        total += c;
      }
      REQUIRE(total == brute_lr_tableaux(outer, left));
    }
}

TEST_CASE("gen_lr") {
  const std::vector<Partition> three{{1, 1}, {2, 1}, {1}};
  CHECK(gen_lr(three) == 1);
  CHECK(gen_lr(three) == lr_coefficient({2, 1}, {1, 1}, {1}));

  // μ(1) = (2,1) is forced by the first factor, and then c^∅_{(2,1),μ(2)} = 0.
  const std::vector<Partition> sandwich{{}, {2, 1}, {}, {2, 1}, {}};
  CHECK(gen_lr(sandwich) == 0);
  // Here μ(1) = μ(2) = ∅ and every factor is one.
  const std::vector<Partition> bracketed{{2, 1}, {2, 1}, {}, {2, 1}, {2, 1}};
  CHECK(gen_lr(bracketed) == 1);

  const std::vector<Partition> two{{1}, {1}};
  CHECK_THROWS_AS(gen_lr(two), std::invalid_argument);
}

namespace {

// f for m = 5 as the explicit double sum over μ(1), μ(2).
BigInt double_sum(const std::vector<Partition>& l) {
  BigInt total = 0;
  const long s1 = l[1].size() - l[0].size();
  const long s2 = l[2].size() - s1;
  if (s1 < 0 || s2 < 0) return 0;
  for (const Partition& mu1 : partitions_of(s1, static_cast<int>(s1), s1))
    for (const Partition& mu2 : partitions_of(s2, static_cast<int>(s2), s2))
      total += lr_coefficient(l[1], l[0], mu1) * lr_coefficient(l[2], mu1, mu2) *
               lr_coefficient(l[3], mu2, l[4]);
  return total;
}

}  // namespace

TEST_CASE("gen_lr at m = 5 equals the explicit double sum") {
  const std::vector<Partition> example{{1}, {2}, {2}, {2}, {1}};
  CHECK(gen_lr(example) == double_sum(example));
  CHECK(gen_lr(example) == 1);

  const std::vector<Partition> richer{{1}, {2, 1}, {2, 2}, {3, 1}, {1, 1}};
  CHECK(gen_lr(richer) == double_sum(richer));

  // Only μ(1) = ∅, μ(2) = (2,1) contributes, with c^{(3,2,1)}_{(2,1),(2,1)} = 2.
  const std::vector<Partition> doubled{{}, {}, {2, 1}, {3, 2, 1}, {2, 1}};
  CHECK(gen_lr(doubled) == double_sum(doubled));
  CHECK(gen_lr(doubled) == 2);

  // Small exhaustive sweep.
  const auto parts = partitions_in_box(2, 2);
  for (const Partition& a : parts)
    for (const Partition& b : parts)
      for (const Partition& c : parts)
        for (const Partition& d : parts) {
          const std::vector<Partition> t{a, b, c, d, Partition{1}};
          REQUIRE(gen_lr(t) == double_sum(t));
        }
}

TEST_CASE("gen_lr at m = 4 equals the explicit single sum") {
  const auto parts = partitions_in_box(2, 2);
  for (const Partition& a : parts)
    for (const Partition& b : parts)
      for (const Partition& c : parts)
        for (const Partition& d : parts) {
          const std::vector<Partition> t{a, b, c, d};
          BigInt expected = 0;
          const long s = b.size() - a.size();
          if (s >= 0)
            for (const Partition& mu : partitions_of(s, static_cast<int>(s), s))
              expected += lr_coefficient(b, a, mu) * lr_coefficient(c, mu, d);
          REQUIRE(gen_lr(t) == expected);
        }
}
