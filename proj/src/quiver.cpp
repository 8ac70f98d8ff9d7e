#include "lesq/quiver.hpp"

#include <queue>

namespace lesq {

std::string VertexLabel::str() const {
  if (apex) return "0";
  return "(" + std::to_string(j) + "," + std::to_string(i) + ")";
}

std::size_t vertex_index(int n, int m, const VertexLabel& v) {
  if (v.apex) return 0;
  if (v.i < 1 || v.i > m || v.j < 1 || v.j > n)
    throw std::out_of_range("vertex " + v.str() + " not in the star quiver");
  return 1 + static_cast<std::size_t>((v.i - 1) * n + (v.j - 1));
}

Quiver Quiver::star(int n, int m) {
  if (n < 1) throw std::invalid_argument("star quiver needs n >= 1");
  if (m < 3) throw std::invalid_argument("star quiver needs m >= 3");
  Quiver q(n, m);
  q.vertices_.push_back(VertexLabel::zero());
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) q.vertices_.push_back(VertexLabel::flag(j, i));

  auto idx = [&](int j, int i) { return vertex_index(n, m, VertexLabel::flag(j, i)); };
  // Flags point into the central vertex for even i, out of it for odd i.
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j < n; ++j) {
      if (i % 2 == 0)
        q.arrows_.push_back({idx(j, i), idx(j + 1, i), 1});
      else
        q.arrows_.push_back({idx(j + 1, i), idx(j, i), 1});
    }
  // a_i : i+1 -> i for odd i, i -> i+1 for even i.
  for (int i = 1; i < m; ++i) {
    if (i % 2 == 1)
      q.arrows_.push_back({idx(n, i + 1), idx(n, i), 1});
    else
      q.arrows_.push_back({idx(n, i), idx(n, i + 1), 1});
  }
  q.arrows_.push_back({0, idx(n, 1), n});
  if (m % 2 == 1)
    q.arrows_.push_back({0, idx(n, m), n});
  else
    q.arrows_.push_back({idx(n, m), 0, n});
  return q;
}

int Quiver::arrow_count(const VertexLabel& tail, const VertexLabel& head) const {
  const std::size_t t = index_of(tail), h = index_of(head);
  int total = 0;
  for (const Arrow& a : arrows_)
    if (a.tail == t && a.head == h) total += a.multiplicity;
  return total;
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm.
  std::vector<int> indegree(vertex_count(), 0);
  std::vector<std::vector<std::size_t>> out(vertex_count());
  for (const Arrow& a : arrows_) {
    ++indegree[a.head];
    out[a.tail].push_back(a.head);
  }
  std::queue<std::size_t> ready;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (indegree[v] == 0) ready.push(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop();
    ++seen;
    for (std::size_t w : out[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  return seen == vertex_count();
}

RationalTuple::RationalTuple(int n, std::vector<RatSeq> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 1) throw std::invalid_argument("tuple needs n >= 1");
  for (RatSeq& row : rows_) {
    if (row.size() > static_cast<std::size_t>(n))
      throw std::invalid_argument("tuple row has more than n entries");
    row.resize(static_cast<std::size_t>(n), Rational(0));
  }
}

RationalTuple RationalTuple::from_partitions(int n, std::span<const Partition> rows) {
  std::vector<RatSeq> out;
  out.reserve(rows.size());
  for (const Partition& p : rows) {
    RatSeq row;
    for (long v : p.padded(static_cast<std::size_t>(n))) row.emplace_back(v);
    out.push_back(std::move(row));
  }
  return RationalTuple(n, std::move(out));
}

Rational RationalTuple::row_sum(int i) const {
  Rational s = 0;
  for (const Rational& v : rows_[static_cast<std::size_t>(i - 1)]) s += v;
  return s;
}

DimVector beta_star(int n, int m) {
  DimVector beta(n, m);
  beta.at(VertexLabel::zero()) = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) beta.at(VertexLabel::flag(j, i)) = j;
  return beta;
}

DimVector unit_vector(int n, int m, const VertexLabel& x) {
  DimVector e(n, m);
  e.at(x) = 1;
  return e;
}

Weight sigma_of_lambda(const RationalTuple& lambda) {
  const int n = lambda.n(), m = lambda.m();
  if (m < 3) throw std::invalid_argument("sigma_of_lambda needs m >= 3");
  Weight sigma(n, m);
  Rational apex = 0;
  for (int i = 1; i <= m; ++i) {
    const RatSeq& row = lambda.rows()[static_cast<std::size_t>(i - 1)];
    if (!is_weakly_decreasing(row))
      throw std::invalid_argument("row " + std::to_string(i) + " is not weakly decreasing");
    const int sign = i % 2 == 0 ? 1 : -1;
    for (int j = 1; j <= n; ++j) {
      const Rational next = j < n ? lambda.at(i, j + 1) : Rational(0);
      sigma.at(VertexLabel::flag(j, i)) = sign * (lambda.at(i, j) - next);
    }
    apex -= sign * lambda.row_sum(i);
  }
  sigma.at(VertexLabel::zero()) = apex;
  return sigma;
}

RationalTuple lambda_of_sigma(const Weight& sigma) {
  const int n = sigma.n(), m = sigma.m();
  std::vector<RatSeq> rows;
  for (int i = 1; i <= m; ++i) {
    const int sign = i % 2 == 0 ? 1 : -1;
    RatSeq row(static_cast<std::size_t>(n));
    Rational tail = 0;
    for (int j = n; j >= 1; --j) {
      const Rational& s = sigma.at(VertexLabel::flag(j, i));
      if (sign * s < 0)
        throw std::invalid_argument("chamber inequality fails at " +
                                    VertexLabel::flag(j, i).str());
      tail += s;
      row[static_cast<std::size_t>(j - 1)] = sign * tail;
    }
    rows.push_back(std::move(row));
  }
  if (weight_pairing(sigma, beta_star(n, m)) != 0)
    throw std::invalid_argument("weight does not vanish on beta");
  return RationalTuple(n, std::move(rows));
}

DimVector beta_of_subsets(const SubsetTuple& subsets, int at_zero) {
  if (at_zero != 0 && at_zero != 1) throw std::invalid_argument("apex value must be 0 or 1");
  const int n = subsets.n(), m = subsets.m();
  DimVector beta(n, m);
  beta.at(VertexLabel::zero()) = at_zero;
  for (int i = 1; i <= m; ++i) {
    long running = 0;
    for (int k = 1; k <= n; ++k) {
      if (subsets.at(i).contains(k)) ++running;
      beta.at(VertexLabel::flag(k, i)) = running;
    }
  }
  return beta;
}

SubsetTuple subsets_of_beta(const DimVector& beta) {
  const int n = beta.n(), m = beta.m();
  std::vector<Subset> sets;
  for (int i = 1; i <= m; ++i) {
    std::vector<int> jumps;
    long below = 0;
    for (int k = 1; k <= n; ++k) {
      const long v = beta.at(VertexLabel::flag(k, i));
      if (v != below && v != below + 1)
        throw std::invalid_argument("dimension vector jumps by more than one along flag " +
                                    std::to_string(i));
      if (v == below + 1) jumps.push_back(k);
      below = v;
    }
    sets.emplace_back(n, std::move(jumps));
  }
  return SubsetTuple(n, std::move(sets));
}

Rational weight_pairing(const Weight& sigma, const DimVector& beta) {
  if (sigma.n() != beta.n() || sigma.m() != beta.m())
    throw std::invalid_argument("weight_pairing: index sets differ");
  Rational sum = 0;
  for (std::size_t x = 0; x < sigma.size(); ++x) sum += sigma[x] * beta[x];
  return sum;
}

}  // namespace lesq
