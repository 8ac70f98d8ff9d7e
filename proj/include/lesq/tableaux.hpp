#pragma once

#include "lesq/numeric.hpp"
#include "lesq/partition.hpp"

#include <span>
#include <utility>
#include <vector>

namespace lesq {

/// c^outer_{left,right}: the number of LR tableaux of skew shape
/// outer/left and content right. Zero unless left ⊆ outer, right ⊆ outer
/// and |left| + |right| = |outer|.
BigInt lr_coefficient(const Partition& outer, const Partition& left,
                      const Partition& right);

/// K_{content,shape}: semistandard tableaux of the given shape and content.
BigInt kostka_number(const Partition& shape, const Composition& content);

/// Every ν with c^outer_{left,ν} > 0, paired with that coefficient, in
/// lexicographic order of ν. Empty when left ⊄ outer.
std::vector<std::pair<Partition, BigInt>> lr_complements(const Partition& outer,
                                                         const Partition& left);

/// Generalized LR coefficient
///   f(λ(1), ..., λ(m)) = Σ c^{λ(2)}_{λ(1),μ(1)} c^{λ(3)}_{μ(1),μ(2)} ···
///                          c^{λ(m-1)}_{μ(m-3),λ(m)},
/// summed over all intermediate μ. For m = 3 this is c^{λ(2)}_{λ(1),λ(3)}.
/// Throws std::invalid_argument when fewer than three partitions are given.
BigInt gen_lr(std::span<const Partition> tuple);

}  // namespace lesq
