#pragma once

#include "lesq/oracle.hpp"
#include "lesq/partition.hpp"
#include "lesq/quiver.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lesq {

/// Malformed textual input; `token` is the offending piece of text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::string token)
      : std::invalid_argument(message + " at token '" + token + "'"), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

/// "3,1", "", "0", " 2 , 1 , 0 ". Whitespace is ignored; trailing zeros are
/// allowed. Throws ParseError unless weakly decreasing and nonnegative.
Partition parse_partition(std::string_view text);

/// Integer-only comma-separated composition such as "1,0,2".
Composition parse_composition(std::string_view text);

/// Comma-separated rationals ("3/2,1"), weakly decreasing and nonnegative.
RatSeq parse_rational_row(std::string_view text);

/// "λ1;...;λm": exactly m partitions, each with at most n parts.
std::vector<Partition> parse_partition_tuple(std::string_view text, int n, int m);
/// Same shape as parse_partition_tuple but with rational entries.
RationalTuple parse_rational_tuple(std::string_view text, int n, int m);

/// "{2,5}" or "{}" as a subset of {1..n}.
Subset parse_subset(std::string_view text, int n);

/// "3,1"; the empty partition prints as "0".
std::string format_partition(const Partition& p);
/// "[3,1]", "[]" for the empty partition.
std::string format_bracketed(const Partition& p);
/// "[];[3];[];[1];[1]"
std::string format_chain(const WitnessChain& chain);
/// "{2,5}"
std::string format_subset(const Subset& s);
/// "({1},{2},{2})"
std::string format_subset_tuple(const SubsetTuple& t);
/// "3/2,1;2;0"
std::string format_rational_tuple(const RationalTuple& t);

}  // namespace lesq
