#include "doctest.h"

#include "lesq/text_io.hpp"

using namespace lesq;

TEST_CASE("parse_partition") {
  CHECK(parse_partition("3,1") == Partition{3, 1});
  CHECK(parse_partition(" 2 , 1 , 0 ") == Partition{2, 1});
  CHECK(parse_partition("").empty());
  CHECK(parse_partition("0").empty());

  try {
    (void)parse_partition("3,1,2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token() == "2");
    CHECK(std::string(e.what()).find("'2'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_partition("1,-1"), ParseError);
  CHECK_THROWS_AS(parse_partition("1,x"), ParseError);
  CHECK_THROWS_AS(parse_partition("1,,1"), ParseError);
  CHECK_THROWS_AS(parse_partition("1.5"), ParseError);
  CHECK_THROWS_AS(parse_partition("99999999999999999999"), ParseError);
}

TEST_CASE("parse_composition") {
  CHECK(parse_composition("1,0,2").entries() == std::vector<long>{1, 0, 2});
  CHECK_THROWS_AS(parse_composition("1,-2"), ParseError);
}

TEST_CASE("rational rows and tuples") {
  CHECK(parse_rational_row("3/2,1") == RatSeq{Rational(3, 2), 1});
  CHECK(parse_rational_row("4/2, 0") == RatSeq{2});
  CHECK_THROWS_AS(parse_rational_row("1,3/2"), ParseError);
  CHECK_THROWS_AS(parse_rational_row("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational_row("1/-2"), ParseError);

  const RationalTuple t = parse_rational_tuple("3/2,1;2;0", 2, 3);
  CHECK(t.at(1, 1) == Rational(3, 2));
  CHECK(t.at(3, 2) == 0);
  CHECK(format_rational_tuple(t) == "3/2,1;2,0;0,0");
  CHECK_THROWS_AS(parse_rational_tuple("1;1", 1, 3), ParseError);
  CHECK_THROWS_AS(parse_rational_tuple("1,1;1;1", 1, 3), ParseError);
}

TEST_CASE("partition tuples") {
  const auto t = parse_partition_tuple("3;3;1;2", 1, 4);
  CHECK(t == std::vector<Partition>{{3}, {3}, {1}, {2}});
  CHECK(parse_partition_tuple(" 2,1 ; ; 1 ", 2, 3) == std::vector<Partition>{{2, 1}, {}, {1}});
  CHECK_THROWS_AS(parse_partition_tuple("3;3;1", 1, 4), ParseError);
  try {
    (void)parse_partition_tuple("1;2,1,1;0", 2, 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.token() == "2,1,1");
  }
}

TEST_CASE("subsets") {
  CHECK(parse_subset("{2,5}", 5) == Subset(5, {2, 5}));
  CHECK(parse_subset("{}", 3) == Subset(3, {}));
  CHECK_THROWS_AS(parse_subset("{6}", 5), ParseError);
  CHECK_THROWS_AS(parse_subset("{1,1}", 5), ParseError);
  CHECK_THROWS_AS(parse_subset("2,5", 5), ParseError);
  CHECK(format_subset(Subset(5, {2, 5})) == "{2,5}");
  const SubsetTuple t(2, {Subset(2, {1}), Subset(2, {2}), Subset(2, {2})});
  CHECK(format_subset_tuple(t) == "({1},{2},{2})");
}

TEST_CASE("formatting") {
  CHECK(format_partition(Partition{}) == "0");
  CHECK(format_partition(Partition{3, 1}) == "3,1");
  CHECK(format_bracketed(Partition{}) == "[]");
  CHECK(format_bracketed(Partition{3, 1}) == "[3,1]");
  CHECK(format_chain(WitnessChain{{{}, {3}, {}, {1}, {1}}}) == "[];[3];[];[1];[1]");
  for (const Partition& p : partitions_in_box(3, 4))
    CHECK(parse_partition(format_partition(p)) == p);
}
