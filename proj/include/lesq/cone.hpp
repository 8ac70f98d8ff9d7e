#pragma once

#include "lesq/numeric.hpp"
#include "lesq/partition.hpp"
#include "lesq/quiver.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lesq {

/// Raised for requests the inequality machinery does not cover (even m).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of S(n', m') placed at a recursion level: level k acts on
/// λ(k+1), ..., λ(m-k) of the outermost tuple.
struct HornIndex {
  SubsetTuple tuple;
  int level = 0;
};

enum class Origin { trace, horn, monotone, nonneg, alternating };

std::string to_string(Origin origin);

/// Σ coeffs(i, j) · λ(i)_j <= 0 over the full m x n coordinate grid.
struct Inequality {
  Origin origin = Origin::trace;
  int level = 0;
  /// Set for horn inequalities only; indexed by the level's own positions.
  std::optional<SubsetTuple> subsets;
  /// monotone: (row, col) compares λ(row)_col >= λ(row)_{col+1};
  /// nonneg: (row, n); alternating: first and last position of the sum.
  int row = 0;
  int col = 0;
  /// Row-major m x n.
  std::vector<std::vector<Rational>> coeffs;

  /// Left-hand side Σ coeffs · λ. The inequality holds iff this is <= 0.
  Rational evaluate(const RationalTuple& lambda) const;
  bool holds(const RationalTuple& lambda) const { return evaluate(lambda) <= 0; }
  bool is_trivial() const;
  /// Human-readable "lhs <= rhs" form, e.g. "λ(2)_1 <= λ(1)_1 + λ(3)_1".
  std::string describe() const;
};

struct InequalitySystem {
  int n = 0;
  int m = 0;
  std::vector<Inequality> inequalities;
  /// All-zero horn inequalities dropped from `inequalities`.
  std::size_t suppressed_trivial = 0;
};

struct MembershipVerdict {
  bool member = false;
  /// Violated inequality; evaluates strictly positive on the input.
  std::optional<Inequality> certificate;
  std::string note;
};

/// S(n, m) for odd m >= 3, in canonical order (I_1 most significant, each
/// set ordered by its bit mask). Throws UnsupportedError for even m.
std::vector<SubsetTuple> enumerate_snm(int n, int m, int threads = 1);

/// True iff `tuple` satisfies the defining conditions of S(n, m).
bool in_snm(const SubsetTuple& tuple);

/// The horn inequality of a subset tuple at a recursion level, embedded
/// into the coordinates of an outer tuple with `outer_m` rows.
Inequality horn_inequality(const SubsetTuple& tuple, int level, int outer_m);
/// Σ_even |λ(i)| <= Σ_odd |λ(i)| over the positions of a level.
Inequality trace_inequality(int n, int level, int outer_m);

/// Flattened recursive system for C(n, m), m odd: per level k = 0, 1, ...
/// the trace inequality and one horn inequality per element of
/// S(n, m - 2k), followed by the monotone and nonneg domain constraints.
/// Throws UnsupportedError for even m.
InequalitySystem inequality_system(int n, int m, int threads = 1);

/// Membership in C(n, m) for odd m by direct evaluation of the recursive
/// system. Systems are built once per (n, m) and cached for the process.
MembershipVerdict member_cone(const RationalTuple& lambda);

/// Membership for n = 1 and any m >= 3 via the alternating sums
/// λ_i - λ_{i+1} + ... + λ_j >= 0 over equal-parity pairs i <= j.
MembershipVerdict member_n1(const RationalTuple& lambda);

/// A rational point satisfying every non-trivial inequality of the
/// (n, m) system strictly, found by bounded search; nullopt if none found.
std::optional<RationalTuple> find_interior_point(int n, int m, long max_part = 8);

}  // namespace lesq
