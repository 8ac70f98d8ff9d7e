#pragma once

#include "lesq/numeric.hpp"
#include "lesq/partition.hpp"

#include <compare>
#include <span>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lesq {

/// Vertex of the star-flag quiver: either the apex 0, or (j, i) with
/// 1 <= j <= n on flag i. The central vertex i is (n, i).
struct VertexLabel {
  bool apex = true;
  int j = 0;
  int i = 0;

  static VertexLabel zero() { return {}; }
  static VertexLabel flag(int j, int i) { return {false, j, i}; }

  std::string str() const;

  // Canonical order: apex first, then flag by flag, bottom to top.
  friend auto operator<=>(const VertexLabel& a, const VertexLabel& b) {
    if (a.apex != b.apex) return a.apex ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
    if (auto c = a.i <=> b.i; c != 0) return c;
    return a.j <=> b.j;
  }
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// `multiplicity` parallel arrows tail -> head (vertex indices).
struct Arrow {
  std::size_t tail;
  std::size_t head;
  int multiplicity;
};

/// Position of a vertex in the canonical order of the (n, m) star quiver.
std::size_t vertex_index(int n, int m, const VertexLabel& v);

/// The star-flag quiver: m flags of type A_n hanging off central vertices
/// 1..m, main arrows between consecutive centrals, and n parallel arrows
/// joining the apex 0 with the first and last central vertex.
class Quiver {
 public:
  /// Throws std::invalid_argument unless n >= 1 and m >= 3.
  static Quiver star(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<VertexLabel>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t index_of(const VertexLabel& v) const { return vertex_index(n_, m_, v); }

  /// Total number of arrows tail -> head, counted with multiplicity.
  int arrow_count(const VertexLabel& tail, const VertexLabel& head) const;

  bool is_acyclic() const;

 private:
  Quiver(int n, int m) : n_(n), m_(m) {}

  int n_;
  int m_;
  std::vector<VertexLabel> vertices_;
  std::vector<Arrow> arrows_;
};

/// Values indexed by the vertices of the (n, m) star quiver, canonical order.
template <class T>
class VertexVector {
 public:
  VertexVector(int n, int m) : n_(n), m_(m), values_(static_cast<std::size_t>(n * m + 1)) {}
  VertexVector(int n, int m, std::vector<T> values) : n_(n), m_(m), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(n * m + 1))
      throw std::invalid_argument("vertex vector has the wrong number of entries");
  }

  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }

  T& operator[](std::size_t k) { return values_[k]; }
  const T& operator[](std::size_t k) const { return values_[k]; }
  T& at(const VertexLabel& v) { return values_[vertex_index(n_, m_, v)]; }
  const T& at(const VertexLabel& v) const { return values_[vertex_index(n_, m_, v)]; }

  friend bool operator==(const VertexVector&, const VertexVector&) = default;

 private:
  int n_;
  int m_;
  std::vector<T> values_;
};

using DimVector = VertexVector<long>;
using Weight = VertexVector<Rational>;

/// m rows of n exact rationals, λ(1), ..., λ(m). Rows given with fewer than
/// n entries are zero-padded. Ordering of entries is not checked here.
class RationalTuple {
 public:
  RationalTuple(int n, std::vector<RatSeq> rows);
  static RationalTuple from_partitions(int n, std::span<const Partition> rows);

  int n() const { return n_; }
  int m() const { return static_cast<int>(rows_.size()); }
  const std::vector<RatSeq>& rows() const { return rows_; }
  /// λ(i)_j with 1-based i and j.
  const Rational& at(int i, int j) const {
    return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  /// |λ(i)|
  Rational row_sum(int i) const;

  friend bool operator==(const RationalTuple&, const RationalTuple&) = default;

 private:
  int n_;
  std::vector<RatSeq> rows_;
};

/// β(j, i) = j, β(0) = 1.
DimVector beta_star(int n, int m);

/// e_x
DimVector unit_vector(int n, int m, const VertexLabel& x);

/// ⟨a, b⟩ = Σ_x a(x)b(x) - Σ_arrows a(ta)b(ha). Throws on index mismatch.
template <class A, class B>
Rational euler_form(const Quiver& q, const VertexVector<A>& a, const VertexVector<B>& b) {
  if (a.size() != q.vertex_count() || b.size() != q.vertex_count() || a.n() != q.n() ||
      a.m() != q.m() || b.n() != q.n() || b.m() != q.m())
    throw std::invalid_argument("euler_form: vectors not indexed by the quiver's vertices");
  Rational sum = 0;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) sum += Rational(a[x]) * Rational(b[x]);
  for (const Arrow& arrow : q.arrows())
    sum -= Rational(arrow.multiplicity) * Rational(a[arrow.tail]) * Rational(b[arrow.head]);
  return sum;
}

/// σ_λ(j, i) = (-1)^i (λ(i)_j - λ(i)_{j+1}), σ_λ(0) = Σ_odd |λ(i)| - Σ_even |λ(i)|.
/// Throws std::invalid_argument if a row is not weakly decreasing.
Weight sigma_of_lambda(const RationalTuple& lambda);

/// Inverse of sigma_of_lambda: λ(i)_j = (-1)^i Σ_{k >= j} σ(k, i).
/// Throws std::invalid_argument if a chamber inequality (-1)^i σ(j, i) >= 0
/// fails or σ(β) != 0.
RationalTuple lambda_of_sigma(const Weight& sigma);

/// β_I (apex value 0) or β'_I (apex value 1): along flag i the value at
/// (k, i) is |{z ∈ I_i : z <= k}|.
DimVector beta_of_subsets(const SubsetTuple& subsets, int at_zero);

/// Jump sets of a flag-wise weakly increasing vector with steps of at most
/// one. Throws std::invalid_argument otherwise.
SubsetTuple subsets_of_beta(const DimVector& beta);

/// σ(β) = Σ_x σ(x) β(x).
Rational weight_pairing(const Weight& sigma, const DimVector& beta);

}  // namespace lesq
