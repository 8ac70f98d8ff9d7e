#include "lesq/cone.hpp"

#include "lesq/tableaux.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace lesq {

std::string to_string(Origin origin) {
  switch (origin) {
    case Origin::trace: return "trace";
    case Origin::horn: return "horn";
    case Origin::monotone: return "monotone";
    case Origin::nonneg: return "nonneg";
    case Origin::alternating: return "alternating";
  }
  return "unknown";
}

Rational Inequality::evaluate(const RationalTuple& lambda) const {
  if (static_cast<std::size_t>(lambda.m()) != coeffs.size())
    throw std::invalid_argument("inequality and tuple have different m");
  Rational sum = 0;
  for (int i = 1; i <= lambda.m(); ++i) {
    const auto& row = coeffs[static_cast<std::size_t>(i - 1)];
    if (row.size() != static_cast<std::size_t>(lambda.n()))
      throw std::invalid_argument("inequality and tuple have different n");
    for (int j = 1; j <= lambda.n(); ++j) {
      const Rational& c = row[static_cast<std::size_t>(j - 1)];
      if (c != 0) sum += c * lambda.at(i, j);
    }
  }
  return sum;
}

bool Inequality::is_trivial() const {
  for (const auto& row : coeffs)
    for (const Rational& c : row)
      if (c != 0) return false;
  return true;
}

std::string Inequality::describe() const {
  std::string lhs, rhs;
  auto append = [](std::string& side, const Rational& c, int i, int j) {
    if (!side.empty()) side += " + ";
    if (c != 1) side += to_string(c) + "·";
    side += "λ(" + std::to_string(i) + ")_" + std::to_string(j);
  };
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < coeffs[i].size(); ++j) {
      const Rational& c = coeffs[i][j];
      if (c > 0) append(lhs, c, static_cast<int>(i + 1), static_cast<int>(j + 1));
      if (c < 0) append(rhs, -c, static_cast<int>(i + 1), static_cast<int>(j + 1));
    }
  return (lhs.empty() ? "0" : lhs) + " <= " + (rhs.empty() ? "0" : rhs);
}

namespace {

std::vector<std::vector<Rational>> zero_coeffs(int m, int n) {
  return std::vector<std::vector<Rational>>(static_cast<std::size_t>(m),
                                            std::vector<Rational>(static_cast<std::size_t>(n)));
}

void require_odd(int m) {
  if (m < 3) throw std::invalid_argument("m must be at least 3");
  if (m % 2 == 0)
    throw UnsupportedError("no inequality description is generated for even m; use the oracle");
}

}  // namespace

bool in_snm(const SubsetTuple& tuple) {
  const int n = tuple.n(), m = tuple.m();
  if (m < 3) return false;
  bool some_small = false;
  for (const Subset& s : tuple.sets())
    if (static_cast<int>(s.size()) <= n - 1) some_small = true;
  if (!some_small) return false;
  if (tuple.at(1).size() != tuple.at(2).size()) return false;
  if (tuple.at(m - 1).size() != tuple.at(m).size()) return false;
  std::vector<Partition> shifted;
  shifted.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    IntSeq s = underline_lambda(tuple, i);
    if (!is_partition(s)) return false;
    shifted.emplace_back(std::move(s));
  }
  return gen_lr(shifted) == 1;
}

std::vector<SubsetTuple> enumerate_snm(int n, int m, int threads) {
  require_odd(m);
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n * m >= 63) throw std::invalid_argument("S(n, m) enumeration space too large");
  const unsigned digit_mask = (1u << n) - 1;
  const std::uint64_t total = std::uint64_t{1} << (n * m);

  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<SubsetTuple> found;
    std::vector<unsigned> masks(static_cast<std::size_t>(m));
    for (std::uint64_t t = begin; t < end; ++t) {
      // I_1 is the most significant digit.
      std::uint64_t rest = t;
      for (int i = m - 1; i >= 0; --i) {
        masks[static_cast<std::size_t>(i)] = static_cast<unsigned>(rest) & digit_mask;
        rest >>= n;
      }
      if (std::popcount(masks[0]) != std::popcount(masks[1])) continue;
      if (std::popcount(masks[static_cast<std::size_t>(m - 2)]) !=
          std::popcount(masks[static_cast<std::size_t>(m - 1)]))
        continue;
      std::vector<Subset> sets;
      sets.reserve(masks.size());
      for (unsigned mask : masks) sets.push_back(Subset::from_mask(n, mask));
      SubsetTuple tuple(n, std::move(sets));
      if (in_snm(tuple)) found.push_back(std::move(tuple));
    }
    return found;
  };

  const auto workers = static_cast<std::uint64_t>(std::max(1, threads));
  if (workers == 1) return scan(0, total);
  std::vector<std::vector<SubsetTuple>> parts(workers);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(total, w * chunk);
    const std::uint64_t end = std::min(total, begin + chunk);
    pool.emplace_back([&, w, begin, end] { parts[w] = scan(begin, end); });
  }
  for (auto& t : pool) t.join();
  std::vector<SubsetTuple> out;
  for (auto& part : parts)
    for (auto& tuple : part) out.push_back(std::move(tuple));
  return out;
}

Inequality horn_inequality(const SubsetTuple& tuple, int level, int outer_m) {
  const int n = tuple.n();
  if (tuple.m() + 2 * level != outer_m)
    throw std::invalid_argument("subset tuple does not fit the level");
  Inequality ineq;
  ineq.origin = Origin::horn;
  ineq.level = level;
  ineq.subsets = tuple;
  ineq.coeffs = zero_coeffs(outer_m, n);
  for (int p = 1; p <= tuple.m(); ++p) {
    const int sign = p % 2 == 0 ? 1 : -1;
    for (int z : tuple.at(p).elements())
      ineq.coeffs[static_cast<std::size_t>(p + level - 1)][static_cast<std::size_t>(z - 1)] = sign;
  }
  return ineq;
}

Inequality trace_inequality(int n, int level, int outer_m) {
  Inequality ineq;
  ineq.origin = Origin::trace;
  ineq.level = level;
  ineq.coeffs = zero_coeffs(outer_m, n);
  for (int p = 1; p <= outer_m - 2 * level; ++p) {
    const int sign = p % 2 == 0 ? 1 : -1;
    for (auto& c : ineq.coeffs[static_cast<std::size_t>(p + level - 1)]) c = sign;
  }
  return ineq;
}

namespace {

std::vector<Inequality> domain_constraints(int n, int m) {
  std::vector<Inequality> out;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j < n; ++j) {
      Inequality ineq;
      ineq.origin = Origin::monotone;
      ineq.row = i;
      ineq.col = j;
      ineq.coeffs = zero_coeffs(m, n);
      ineq.coeffs[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = -1;
      ineq.coeffs[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] = 1;
      out.push_back(std::move(ineq));
    }
    Inequality ineq;
    ineq.origin = Origin::nonneg;
    ineq.row = i;
    ineq.col = n;
    ineq.coeffs = zero_coeffs(m, n);
    ineq.coeffs[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(n - 1)] = -1;
    out.push_back(std::move(ineq));
  }
  return out;
}

}  // namespace

InequalitySystem inequality_system(int n, int m, int threads) {
  require_odd(m);
  InequalitySystem system;
  system.n = n;
  system.m = m;
  for (int level = 0; m - 2 * level >= 3; ++level) {
    system.inequalities.push_back(trace_inequality(n, level, m));
    for (const SubsetTuple& tuple : enumerate_snm(n, m - 2 * level, threads)) {
      Inequality ineq = horn_inequality(tuple, level, m);
      if (ineq.is_trivial())
        ++system.suppressed_trivial;
      else
        system.inequalities.push_back(std::move(ineq));
    }
  }
  for (Inequality& ineq : domain_constraints(n, m)) system.inequalities.push_back(std::move(ineq));
  return system;
}

namespace {

std::shared_ptr<const InequalitySystem> cached_system(int n, int m) {
  static std::mutex guard;
  static std::map<std::pair<int, int>, std::shared_ptr<const InequalitySystem>> cache;
  std::lock_guard lock(guard);
  auto& slot = cache[{n, m}];
  if (!slot) slot = std::make_shared<const InequalitySystem>(inequality_system(n, m));
  return slot;
}

std::string level_note(const Inequality& ineq) {
  switch (ineq.origin) {
    case Origin::monotone:
    case Origin::nonneg: return "input is not a tuple of weakly decreasing nonnegative rows";
    default:
      return to_string(ineq.origin) + " inequality violated at recursion level " +
             std::to_string(ineq.level);
  }
}

}  // namespace

MembershipVerdict member_cone(const RationalTuple& lambda) {
  require_odd(lambda.m());
  const auto system = cached_system(lambda.n(), lambda.m());
  MembershipVerdict verdict;
  // Domain constraints first so malformed input gets a domain certificate.
  for (bool domain_pass : {true, false}) {
    for (const Inequality& ineq : system->inequalities) {
      const bool is_domain = ineq.origin == Origin::monotone || ineq.origin == Origin::nonneg;
      if (is_domain != domain_pass) continue;
      if (!ineq.holds(lambda)) {
        verdict.certificate = ineq;
        verdict.note = level_note(ineq);
        return verdict;
      }
    }
  }
  verdict.member = true;
  verdict.note = "all " + std::to_string(system->inequalities.size()) + " inequalities hold";
  return verdict;
}

MembershipVerdict member_n1(const RationalTuple& lambda) {
  if (lambda.n() != 1) throw std::invalid_argument("member_n1 requires n = 1");
  const int m = lambda.m();
  if (m < 3) throw std::invalid_argument("m must be at least 3");
  MembershipVerdict verdict;
  // Even pairs first, then odd pairs.
  for (int parity : {0, 1}) {
    for (int first = 1; first <= m; ++first) {
      if (first % 2 != parity) continue;
      for (int last = first; last <= m; last += 2) {
        Inequality ineq;
        ineq.origin = Origin::alternating;
        ineq.row = first;
        ineq.col = last;
        ineq.coeffs = zero_coeffs(m, 1);
        for (int v = first; v <= last; ++v)
          ineq.coeffs[static_cast<std::size_t>(v - 1)][0] = (v - first) % 2 == 0 ? -1 : 1;
        if (!ineq.holds(lambda)) {
          verdict.note = "alternating sum from " + std::to_string(first) + " to " +
                         std::to_string(last) + " is negative";
          verdict.certificate = std::move(ineq);
          return verdict;
        }
      }
    }
  }
  verdict.member = true;
  verdict.note = "all alternating sums are nonnegative";
  return verdict;
}

std::optional<RationalTuple> find_interior_point(int n, int m, long max_part) {
  const auto system = cached_system(n, m);
  // Integer copies of the coefficients for the search loop.
  std::vector<std::vector<long>> dense;
  for (const Inequality& ineq : system->inequalities) {
    if (ineq.is_trivial()) continue;
    std::vector<long> flat;
    for (const auto& row : ineq.coeffs)
      for (const Rational& c : row) flat.push_back(boost::multiprecision::numerator(c).convert_to<long>());
    dense.push_back(std::move(flat));
  }
  const auto strict = [&](const std::vector<long>& point) {
    for (const auto& row : dense) {
      long s = 0;
      for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * point[k];
      if (s >= 0) return false;
    }
    return true;
  };

  for (long bound = n; bound <= max_part; ++bound) {
    // Strictly decreasing positive rows with parts <= bound, at least one
    // row touching the bound so each radius is searched once.
    std::vector<std::vector<long>> rows;
    for (const Partition& p : partitions_in_box(n, bound)) {
      if (static_cast<int>(p.length()) != n) continue;
      bool distinct = true;
      for (std::size_t k = 1; k < p.length(); ++k) distinct = distinct && p[k] < p[k - 1];
      if (distinct) rows.push_back(p.parts());
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
    while (true) {
      bool touches = false;
      std::vector<long> point;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        const auto& row = rows[pick[i]];
        touches = touches || row.front() == bound;
        point.insert(point.end(), row.begin(), row.end());
      }
      if (touches && strict(point)) {
        std::vector<RatSeq> out;
        for (std::size_t i = 0; i < pick.size(); ++i) {
          RatSeq row;
          for (long v : rows[pick[i]]) row.emplace_back(v);
          out.push_back(std::move(row));
        }
        return RationalTuple(n, std::move(out));
      }
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == rows.size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace lesq
