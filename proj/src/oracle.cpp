#include "lesq/oracle.hpp"

#include "lesq/cone.hpp"
#include "lesq/tableaux.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

namespace lesq {

namespace {

void check_rows(std::span<const Partition> lambda, int n) {
  if (lambda.size() < 3) throw std::invalid_argument("need at least three partitions");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i].length() > static_cast<std::size_t>(n))
      throw std::invalid_argument("partition " + std::to_string(i + 1) + " has more than " +
                                  std::to_string(n) + " parts");
}

class ChainSearch {
 public:
  ChainSearch(std::span<const Partition> lambda) : lambda_(lambda), dead_(lambda.size()) {}

  // Tries to extend the chain from μ(pos - 1) = `prev`; on success the chain
  // μ(pos), ..., μ(m) is appended to `chain`.
  bool extend(std::size_t pos, const Partition& prev, std::vector<Partition>& chain) {
    ++nodes;
    const Partition& outer = lambda_[pos - 1];
    for (auto& [next, coeff] : lr_complements(outer, prev)) {
      if (pos == lambda_.size()) {
        chain.push_back(next);
        return true;
      }
      if (dead_[pos].contains(next)) continue;
      chain.push_back(next);
      if (extend(pos + 1, next, chain)) return true;
      chain.pop_back();
      // Reachability from (pos, next) does not depend on the prefix.
      dead_[pos].insert(next);
    }
    return false;
  }

  std::uint64_t nodes = 0;

 private:
  std::span<const Partition> lambda_;
  std::vector<std::set<Partition>> dead_;
};

}  // namespace

OracleSearch sigma_search(std::span<const Partition> lambda, int n) {
  check_rows(lambda, n);
  OracleSearch result;
  ChainSearch search(lambda);
  const Partition& first = lambda[0];
  for (const Partition& kernel : partitions_in_box(n, first[0])) {
    if (!first.contains(kernel)) continue;
    std::vector<Partition> chain{kernel};
    if (search.extend(1, kernel, chain)) {
      result.witness = WitnessChain{std::move(chain)};
      break;
    }
  }
  result.nodes = search.nodes;
  return result;
}

std::optional<WitnessChain> sigma_member(std::span<const Partition> lambda, int n) {
  return sigma_search(lambda, n).witness;
}

bool validate_witness(std::span<const Partition> lambda, const WitnessChain& chain) {
  if (chain.mus.size() != lambda.size() + 1) return false;
  for (std::size_t i = 1; i <= lambda.size(); ++i) {
    const Partition& outer = lambda[i - 1];
    if (chain.mus[i].size() != outer.size() - chain.mus[i - 1].size()) return false;
    if (lr_coefficient(outer, chain.mus[i - 1], chain.mus[i]) < 1) return false;
  }
  return true;
}

RationalSearch rational_search(const RationalTuple& lambda) {
  RationalSearch result;
  for (const RatSeq& row : lambda.rows()) {
    if (!is_weakly_decreasing(row) || (!row.empty() && row.back() < 0))
      throw std::invalid_argument("rows must be weakly decreasing and nonnegative");
    const BigInt l = denominator_lcm(row);
    result.scale = result.scale / boost::multiprecision::gcd(result.scale, l) * l;
  }
  for (const RatSeq& row : lambda.rows()) {
    std::vector<long> parts;
    for (const Rational& v : row) {
      const BigInt scaled = boost::multiprecision::numerator(Rational(v * result.scale));
      if (scaled > std::numeric_limits<long>::max())
        throw std::overflow_error("scaled tuple does not fit in 64-bit parts");
      parts.push_back(scaled.convert_to<long>());
    }
    result.scaled.emplace_back(std::move(parts));
  }
  result.search = sigma_search(result.scaled, lambda.n());
  return result;
}

bool rational_member(const RationalTuple& lambda) {
  return rational_search(lambda).search.witness.has_value();
}

CrossCheckReport cross_check(int n, int m, long bound, int threads) {
  if (m < 3) throw std::invalid_argument("m must be at least 3");
  CrossCheckReport report;
  report.n = n;
  report.m = m;
  report.bound = bound;
  const bool odd = m % 2 == 1;
  if (odd) report.compared_against.push_back("member_cone");
  if (n == 1) report.compared_against.push_back("member_n1");

  const std::vector<Partition> box = partitions_in_box(n, bound);
  const std::size_t base = box.size();
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) total *= base;

  struct Partial {
    std::uint64_t members = 0;
    std::vector<Disagreement> disagreements;
  };
  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    Partial part;
    std::vector<Partition> tuple(static_cast<std::size_t>(m));
    for (std::uint64_t t = begin; t < end; ++t) {
      std::uint64_t rest = t;
      for (int i = m - 1; i >= 0; --i) {
        tuple[static_cast<std::size_t>(i)] = box[rest % base];
        rest /= base;
      }
      const bool oracle = sigma_member(tuple, n).has_value();
      if (oracle) ++part.members;
      const RationalTuple rational = RationalTuple::from_partitions(n, tuple);
      if (odd) {
        const bool other = member_cone(rational).member;
        if (other != oracle) part.disagreements.push_back({tuple, "member_cone", oracle, other});
      }
      if (n == 1) {
        const bool other = member_n1(rational).member;
        if (other != oracle) part.disagreements.push_back({tuple, "member_n1", oracle, other});
      }
    }
    return part;
  };

  // Build the cached system before any worker needs it.
  if (odd) member_cone(RationalTuple(n, std::vector<RatSeq>(static_cast<std::size_t>(m))));

  const auto workers = static_cast<std::uint64_t>(std::max(1, threads));
  std::vector<Partial> parts(workers);
  if (workers == 1) {
    parts[0] = scan(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(total, w * chunk);
      const std::uint64_t end = std::min(total, begin + chunk);
      pool.emplace_back([&, w, begin, end] { parts[w] = scan(begin, end); });
    }
    for (auto& t : pool) t.join();
  }
  report.tuples = total;
  for (auto& part : parts) {
    report.members += part.members;
    for (auto& d : part.disagreements) report.disagreements.push_back(std::move(d));
  }
  return report;
}

}  // namespace lesq
