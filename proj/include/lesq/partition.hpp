#pragma once

#include "lesq/numeric.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace lesq {

/// Integer sequence, possibly negative and not necessarily ordered.
using IntSeq = std::vector<long>;
/// Exact rational sequence.
using RatSeq = std::vector<Rational>;

/// A partition: weakly decreasing nonnegative integers. Trailing zeros are
/// never stored, so two partitions compare equal iff they have the same
/// Young diagram. Ordering is lexicographic on the stored parts.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// nonnegative. Trailing zeros are dropped.
  explicit Partition(std::vector<long> parts);
  Partition(std::initializer_list<long> parts)
      : Partition(std::vector<long>(parts)) {}

  const std::vector<long>& parts() const { return parts_; }

  /// Number of nonzero parts.
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// |λ|
  long size() const;

  /// The i-th part (0-based); zero past the end.
  long operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }

  /// True iff the Young diagram of `inner` fits inside this one.
  bool contains(const Partition& inner) const;

  /// Parts zero-padded (or checked) to exactly `n` entries.
  /// Throws std::invalid_argument if the partition has more than n parts.
  IntSeq padded(std::size_t n) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<long> parts_;
};

/// Sequence of nonnegative integers with significant order.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<long> entries);
  Composition(std::initializer_list<long> entries)
      : Composition(std::vector<long>(entries)) {}

  const std::vector<long>& entries() const { return entries_; }
  long size() const;

 private:
  std::vector<long> entries_;
};

/// A subset {z_1 < ... < z_r} of {1, ..., n}, stored ascending.
class Subset {
 public:
  Subset() = default;
  /// Elements may be given in any order; duplicates or out-of-range
  /// elements throw std::invalid_argument.
  Subset(int n, std::vector<int> elements);

  int ambient() const { return n_; }
  const std::vector<int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(int z) const;

  /// Bit k-1 set iff k is an element.
  unsigned mask() const;
  static Subset from_mask(int n, unsigned mask);

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  int n_ = 0;
  std::vector<int> elements_;
};

/// An m-tuple of subsets of {1, ..., n}.
class SubsetTuple {
 public:
  SubsetTuple() = default;
  /// All subsets must share ambient size `n`.
  SubsetTuple(int n, std::vector<Subset> sets);

  int n() const { return n_; }
  int m() const { return static_cast<int>(sets_.size()); }
  const std::vector<Subset>& sets() const { return sets_; }
  /// 1-based access, matching the usual (I_1, ..., I_m) indexing.
  const Subset& at(int i) const;

  friend bool operator==(const SubsetTuple&, const SubsetTuple&) = default;

 private:
  int n_ = 0;
  std::vector<Subset> sets_;
};

/// λ'
Partition conjugate(const Partition& p);

/// λ(I) = (z_r - r, ..., z_1 - 1).
Partition lambda_of_subset(const Subset& subset);

/// The shifted conjugate attached to position i (1-based) of a subset
/// tuple: λ'(I_i) zero-padded to n - |I_i| entries, and for odd interior i
/// additionally lowered by |I_i| - |I_{i+1}| - |I_{i-1}| in every entry.
/// Throws std::out_of_range for a bad index.
IntSeq underline_lambda(const SubsetTuple& tuple, int i);

/// Componentwise sum after zero-extension to the longer length.
IntSeq pad_add(const IntSeq& a, const IntSeq& b);

/// r·λ for a positive integer r. Throws on r <= 0 or overflow.
Partition scale(const Partition& p, long r);
/// r·λ for a positive rational r.
RatSeq scale(const RatSeq& s, const Rational& r);

/// Weakly decreasing and nonnegative.
bool is_partition(const IntSeq& s);
bool is_weakly_decreasing(std::span<const Rational> s);

/// All partitions with at most `max_parts` parts, each at most `max_part`,
/// in lexicographic order.
std::vector<Partition> partitions_in_box(int max_parts, long max_part);

/// All partitions of `total` with at most `max_parts` parts, each at most
/// `max_part`, in lexicographic order.
std::vector<Partition> partitions_of(long total, int max_parts, long max_part);

/// λ dominates μ (equal sizes assumed by callers that care).
bool dominates(const Partition& lambda, const Partition& mu);

}  // namespace lesq
