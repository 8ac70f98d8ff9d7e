#include "lesq/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lesq {

std::string to_string(const Rational& q) {
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts are not weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

IntSeq Partition::padded(std::size_t n) const {
  if (parts_.size() > n)
    throw std::invalid_argument("partition has more than " + std::to_string(n) +
                                " parts");
  IntSeq out(parts_);
  out.resize(n, 0);
  return out;
}

Composition::Composition(std::vector<long> entries) : entries_(std::move(entries)) {
  for (long e : entries_)
    if (e < 0) throw std::invalid_argument("composition has a negative entry");
}

long Composition::size() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

Subset::Subset(int n, std::vector<int> elements) : n_(n), elements_(std::move(elements)) {
  if (n < 0) throw std::invalid_argument("negative ambient size");
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k] < 1 || elements_[k] > n)
      throw std::invalid_argument("subset element " + std::to_string(elements_[k]) +
                                  " outside {1.." + std::to_string(n) + "}");
    if (k > 0 && elements_[k] == elements_[k - 1])
      throw std::invalid_argument("repeated subset element");
  }
}

bool Subset::contains(int z) const {
  return std::binary_search(elements_.begin(), elements_.end(), z);
}

unsigned Subset::mask() const {
  unsigned bits = 0;
  for (int z : elements_) bits |= 1u << (z - 1);
  return bits;
}

Subset Subset::from_mask(int n, unsigned mask) {
  std::vector<int> elements;
  for (int z = 1; z <= n; ++z)
    if (mask & (1u << (z - 1))) elements.push_back(z);
  return Subset(n, std::move(elements));
}

SubsetTuple::SubsetTuple(int n, std::vector<Subset> sets) : n_(n), sets_(std::move(sets)) {
  for (const Subset& s : sets_)
    if (s.ambient() != n) throw std::invalid_argument("subset ambient size mismatch");
}

const Subset& SubsetTuple::at(int i) const {
  if (i < 1 || i > m()) throw std::out_of_range("subset index " + std::to_string(i));
  return sets_[static_cast<std::size_t>(i - 1)];
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<long> out(static_cast<std::size_t>(p[0]), 0);
  for (long part : p.parts())
    for (long c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

Partition lambda_of_subset(const Subset& subset) {
  const auto& z = subset.elements();
  const long r = static_cast<long>(z.size());
  std::vector<long> parts;
  parts.reserve(z.size());
  // z_r - r, ..., z_1 - 1
  for (long k = r; k >= 1; --k) parts.push_back(z[static_cast<std::size_t>(k - 1)] - k);
  return Partition(std::move(parts));
}

IntSeq underline_lambda(const SubsetTuple& tuple, int i) {
  const int m = tuple.m();
  if (i < 1 || i > m) throw std::out_of_range("underline_lambda index " + std::to_string(i));
  const Subset& set = tuple.at(i);
  const std::size_t width = static_cast<std::size_t>(tuple.n()) - set.size();
  IntSeq out = conjugate(lambda_of_subset(set)).padded(width);
  const bool interior_odd = i > 1 && i < m && i % 2 == 1;
  if (interior_odd) {
    const long shift = static_cast<long>(set.size()) -
                       static_cast<long>(tuple.at(i + 1).size()) -
                       static_cast<long>(tuple.at(i - 1).size());
    for (long& v : out) v -= shift;
  }
  return out;
}

IntSeq pad_add(const IntSeq& a, const IntSeq& b) {
  IntSeq out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

Partition scale(const Partition& p, long r) {
  if (r <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<long> parts(p.parts());
  for (long& v : parts) {
    if (v > std::numeric_limits<long>::max() / r)
      throw std::overflow_error("partition scaling overflows");
    v *= r;
  }
  return Partition(std::move(parts));
}

RatSeq scale(const RatSeq& s, const Rational& r) {
  if (r <= 0) throw std::invalid_argument("scale factor must be positive");
  RatSeq out(s);
  for (Rational& v : out) v *= r;
  return out;
}

bool is_partition(const IntSeq& s) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 0) return false;
    if (k > 0 && s[k] > s[k - 1]) return false;
  }
  return true;
}

bool is_weakly_decreasing(std::span<const Rational> s) {
  for (std::size_t k = 1; k < s.size(); ++k)
    if (s[k] > s[k - 1]) return false;
  return true;
}

namespace {

void collect_partitions(long remaining, int slots, long cap, bool exact,
                        std::vector<long>& prefix, std::vector<Partition>& out) {
  if (!exact || remaining == 0) out.emplace_back(prefix);
  if (slots == 0 || (exact && remaining == 0)) return;
  const long top = exact ? std::min(cap, remaining) : cap;
  for (long part = 1; part <= top; ++part) {
    prefix.push_back(part);
    collect_partitions(exact ? remaining - part : 0, slots - 1, part, exact, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int max_parts, long max_part) {
  std::vector<Partition> out;
  std::vector<long> prefix;
  collect_partitions(0, max_parts, max_part, false, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_of(long total, int max_parts, long max_part) {
  std::vector<Partition> out;
  if (total < 0) return out;
  std::vector<long> prefix;
  collect_partitions(total, max_parts, max_part, true, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  long a = 0, b = 0;
  const std::size_t len = std::max(lambda.length(), mu.length());
  for (std::size_t k = 0; k < len; ++k) {
    a += lambda[k];
    b += mu[k];
    if (a < b) return false;
  }
  return true;
}

}  // namespace lesq
