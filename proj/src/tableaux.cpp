#include "lesq/tableaux.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

namespace lesq {

namespace {

// Depth-first filling of the skew shape outer/inner in reverse reading
// order (rows top to bottom, each row right to left). A filling is an LR
// tableau when rows weakly increase, columns strictly increase, and every
// prefix of the reading word is a lattice word. When `content` is set the
// letter counts are bounded by it; otherwise every lattice content is
// visited and reported through `on_complete`.
//
// Counts are plain 64-bit: each tableau is visited individually, so the
// counter cannot wrap in any feasible run time.
class LrFiller {
 public:
  LrFiller(const Partition& outer, const Partition& inner,
           std::optional<std::vector<long>> content)
      : outer_(outer), inner_(inner), content_(std::move(content)) {
    grid_.resize(outer.length());
    for (std::size_t r = 0; r < outer.length(); ++r)
      grid_[r].assign(static_cast<std::size_t>(outer[r]), 0);
    for (std::size_t r = 0; r < outer.length(); ++r)
      for (long c = outer[r] - 1; c >= inner[r]; --c) cells_.push_back({r, c});
    counts_.assign(cells_.size() + 2, 0);
  }

  template <class OnComplete>
  void run(OnComplete&& on_complete) {
    fill(0, 0, on_complete);
  }

 private:
  struct Cell {
    std::size_t row;
    long col;
  };

  template <class OnComplete>
  void fill(std::size_t k, long max_letter, OnComplete& on_complete) {
    if (k == cells_.size()) {
      on_complete(counts_, max_letter);
      return;
    }
    const Cell cell = cells_[k];
    const auto col = static_cast<std::size_t>(cell.col);
    long lo = 1;
    long hi = max_letter + 1;
    if (cell.row > 0 && cell.col >= inner_[cell.row - 1])
      lo = grid_[cell.row - 1][col] + 1;
    if (cell.col + 1 < outer_[cell.row])
      hi = std::min<long>(hi, grid_[cell.row][col + 1]);
    if (content_) hi = std::min<long>(hi, static_cast<long>(content_->size()));
    for (long v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (v > 1 && counts_[vi] + 1 > counts_[vi - 1]) continue;
      if (content_ && counts_[vi] + 1 > (*content_)[vi - 1]) continue;
      ++counts_[vi];
      grid_[cell.row][col] = v;
      fill(k + 1, std::max(max_letter, v), on_complete);
      --counts_[vi];
    }
    grid_[cell.row][col] = 0;
  }

  const Partition& outer_;
  const Partition& inner_;
  std::optional<std::vector<long>> content_;
  std::vector<std::vector<long>> grid_;
  std::vector<Cell> cells_;
  // counts_[v] = occurrences of letter v so far; index 0 unused.
  std::vector<long> counts_;
};

// Chains of horizontal strips from `current` up to `shape`, one strip per
// content entry.
std::uint64_t count_strip_chains(const Partition& shape, const std::vector<long>& content,
                                 std::size_t step, const std::vector<long>& current) {
  if (step == content.size()) return 1;
  const long add = content[step];
  std::uint64_t total = 0;
  std::vector<long> next(current);
  // Row r may grow from current[r] up to min(shape[r], current[r-1]).
  auto place = [&](auto& self, std::size_t r, long left) -> void {
    if (left == 0) {
      total += count_strip_chains(shape, content, step + 1, next);
      return;
    }
    if (r >= next.size()) return;
    const long cap = std::min(shape[r], r == 0 ? shape[0] : current[r - 1]);
    const long room = cap - current[r];
    for (long take = 0; take <= std::min(room, left); ++take) {
      next[r] = current[r] + take;
      self(self, r + 1, left - take);
    }
    next[r] = current[r];
  };
  place(place, 0, add);
  return total;
}

}  // namespace

BigInt lr_coefficient(const Partition& outer, const Partition& left,
                      const Partition& right) {
  if (left.size() + right.size() != outer.size()) return 0;
  if (!outer.contains(left) || !outer.contains(right)) return 0;
  std::uint64_t count = 0;
  LrFiller filler(outer, left, right.parts());
  filler.run([&](const std::vector<long>&, long) { ++count; });
  return count;
}

BigInt kostka_number(const Partition& shape, const Composition& content) {
  if (content.size() != shape.size()) return 0;
  std::vector<long> start(shape.length(), 0);
  return count_strip_chains(shape, content.entries(), 0, start);
}

std::vector<std::pair<Partition, BigInt>> lr_complements(const Partition& outer,
                                                         const Partition& left) {
  std::vector<std::pair<Partition, BigInt>> out;
  if (!outer.contains(left)) return out;
  std::map<Partition, std::uint64_t> tally;
  LrFiller filler(outer, left, std::nullopt);
  filler.run([&](const std::vector<long>& counts, long max_letter) {
    std::vector<long> parts(counts.begin() + 1, counts.begin() + 1 + max_letter);
    ++tally[Partition(std::move(parts))];
  });
  out.reserve(tally.size());
  for (auto& [nu, c] : tally) out.emplace_back(nu, BigInt(c));
  return out;
}

BigInt gen_lr(std::span<const Partition> tuple) {
  const std::size_t m = tuple.size();
  if (m < 3) throw std::invalid_argument("generalized LR coefficient needs m >= 3");
  std::map<Partition, BigInt> current{{tuple[0], BigInt(1)}};
  long prev_size = tuple[0].size();
  for (std::size_t k = 1; k + 2 < m; ++k) {
    const Partition& outer = tuple[k];
    const long need = outer.size() - prev_size;
    if (need < 0) return 0;
    std::map<Partition, BigInt> next;
    for (const auto& [mu, weight] : current)
      for (const auto& [nu, c] : lr_complements(outer, mu)) next[nu] += weight * c;
    if (next.empty()) return 0;
    current = std::move(next);
    prev_size = need;
  }
  BigInt total = 0;
  for (const auto& [mu, weight] : current)
    total += weight * lr_coefficient(tuple[m - 2], mu, tuple[m - 1]);
  return total;
}

}  // namespace lesq
