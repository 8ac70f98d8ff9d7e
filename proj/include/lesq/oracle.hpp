#pragma once

#include "lesq/numeric.hpp"
#include "lesq/partition.hpp"
#include "lesq/quiver.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lesq {

/// μ(0), ..., μ(m) with c^{λ(i)}_{μ(i-1),μ(i)} >= 1 for every i: the kernel
/// of the first map, the successive images, and the cokernel of the last
/// map of a long exact sequence of types λ(1), ..., λ(m).
struct WitnessChain {
  std::vector<Partition> mus;
};

struct OracleSearch {
  std::optional<WitnessChain> witness;
  /// (position, partition) states expanded during the search.
  std::uint64_t nodes = 0;
};

/// Exhaustive depth-first search for a witness chain. Candidates are taken
/// in lexicographic order at every position, so the chain returned is the
/// lexicographically smallest one. Throws std::invalid_argument when m < 3
/// or a row has more than n parts.
OracleSearch sigma_search(std::span<const Partition> lambda, int n);

/// Witness for (λ(1), ..., λ(m)) ∈ Σ(n, m), or nullopt if none exists.
std::optional<WitnessChain> sigma_member(std::span<const Partition> lambda, int n);

/// Re-checks sizes and nonvanishing of every LR coefficient along the chain.
bool validate_witness(std::span<const Partition> lambda, const WitnessChain& chain);

struct RationalSearch {
  /// Least common multiple of all denominators.
  BigInt scale = 1;
  std::vector<Partition> scaled;
  OracleSearch search;
};

/// Clears denominators and runs the chain search on the integer multiple.
/// Throws std::invalid_argument for rows that are not weakly decreasing and
/// nonnegative.
RationalSearch rational_search(const RationalTuple& lambda);

/// Membership in C(n, m) via saturation: λ ∈ C iff rλ ∈ Σ for the common
/// denominator r.
bool rational_member(const RationalTuple& lambda);

struct Disagreement {
  std::vector<Partition> tuple;
  std::string against;
  bool oracle = false;
  bool other = false;
};

struct CrossCheckReport {
  int n = 0;
  int m = 0;
  long bound = 0;
  std::uint64_t tuples = 0;
  std::uint64_t members = 0;
  std::vector<std::string> compared_against;
  std::vector<Disagreement> disagreements;
};

/// Runs the oracle over every tuple of partitions with at most n parts,
/// each at most `bound`, comparing with member_cone (odd m) and member_n1
/// (n = 1).
CrossCheckReport cross_check(int n, int m, long bound, int threads = 1);

}  // namespace lesq
