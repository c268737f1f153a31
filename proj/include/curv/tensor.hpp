#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "curv/matrix.hpp"
#include "curv/rational.hpp"

namespace curv {

/// Dimension of the underlying vector space. The whole theory assumes
/// m >= 4; lower dimensions are rejected at construction.
struct Dim {
  int m;
  explicit Dim(int m_) : m(m_) {
    if (m_ < 4) throw std::invalid_argument("Dim: dimension must satisfy m >= 4");
  }
};

/// A 4-index tensor is either fully covariant (entries T_{ijkl}) or an
/// operator-valued bilinear form whose 4th slot is contravariant
/// (entries T_{ijk}^l). Arithmetic never mixes the two.
enum class Variance { Covariant, Operator };

const char* variance_name(Variance v);

/// Bilinear form on V: entries b_{ij} = b(e_i, e_j). Symmetry,
/// antisymmetry and trace-freeness are predicates, not structure.
class Bilinear {
 public:
  explicit Bilinear(Dim m) : m_(m.m), e_(static_cast<size_t>(m.m) * m.m) {}

  int dim() const { return m_; }
  Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * m_ + j]; }
  const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * m_ + j]; }

  Bilinear& operator+=(const Bilinear& o);
  Bilinear& operator-=(const Bilinear& o);
  friend Bilinear operator+(Bilinear a, const Bilinear& b) { return a += b; }
  friend Bilinear operator-(Bilinear a, const Bilinear& b) { return a -= b; }
  Bilinear scaled(const Rational& c) const;

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;

  std::vector<Rational> flatten() const { return e_; }
  static Bilinear from_flat(Dim m, std::vector<Rational> entries);
  Matrix as_matrix() const;
  static Bilinear from_matrix(const Matrix& m);

  friend bool operator==(const Bilinear&, const Bilinear&) = default;

 private:
  int m_;
  std::vector<Rational> e_;
};

/// Dense 4-index tensor over an m-dimensional space, m^4 rational entries,
/// tagged with its variance.
class QuadTensor {
 public:
  QuadTensor(Dim m, Variance v)
      : m_(m.m), variance_(v), e_(static_cast<size_t>(m.m) * m.m * m.m * m.m) {}

  int dim() const { return m_; }
  Variance variance() const { return variance_; }

  Rational& at(int i, int j, int k, int l) { return e_[flat_index(i, j, k, l)]; }
  const Rational& at(int i, int j, int k, int l) const { return e_[flat_index(i, j, k, l)]; }

  QuadTensor& operator+=(const QuadTensor& o);
  QuadTensor& operator-=(const QuadTensor& o);
  friend QuadTensor operator+(QuadTensor a, const QuadTensor& b) { return a += b; }
  friend QuadTensor operator-(QuadTensor a, const QuadTensor& b) { return a -= b; }
  QuadTensor scaled(const Rational& c) const;

  bool is_zero() const;

  const std::vector<Rational>& flatten() const { return e_; }
  static QuadTensor from_flat(Dim m, Variance v, std::vector<Rational> entries);

  /// Same entries under the other variance tag. Only meaningful where the
  /// metric is the identity; general re-tagging goes through lower/raise.
  QuadTensor retagged(Variance v) const;

  friend bool operator==(const QuadTensor&, const QuadTensor&) = default;

 private:
  size_t flat_index(int i, int j, int k, int l) const {
    return ((static_cast<size_t>(i) * m_ + j) * m_ + k) * m_ + l;
  }
  int m_;
  Variance variance_;
  std::vector<Rational> e_;
};

/// Cubic structure C in S^2(V*) (x) V: entries C_{ij}^k, symmetric in the
/// two lower indices.
class CubicForm {
 public:
  explicit CubicForm(Dim m) : m_(m.m), e_(static_cast<size_t>(m.m) * m.m * m.m) {}

  int dim() const { return m_; }
  const Rational& at(int i, int j, int k) const {
    return e_[(static_cast<size_t>(i) * m_ + j) * m_ + k];
  }
  /// Sets C_{ij}^k and C_{ji}^k together.
  void set(int i, int j, int k, const Rational& v) {
    e_[(static_cast<size_t>(i) * m_ + j) * m_ + k] = v;
    e_[(static_cast<size_t>(j) * m_ + i) * m_ + k] = v;
  }
  bool is_zero() const;

  friend bool operator==(const CubicForm&, const CubicForm&) = default;

 private:
  int m_;
  std::vector<Rational> e_;
};

/// Non-degenerate symmetric bilinear form with its exact inverse and
/// signature (p, q) = (#negative, #positive); p + q = m.
class Metric {
 public:
  static Metric identity(Dim m);
  /// diag of +-1 entries; p entries -1 followed by q entries +1.
  static Metric diagonal_signature(Dim m, int p, int q);
  static Metric from_bilinear(const Bilinear& xi);

  int dim() const { return xi_.dim(); }
  const Bilinear& xi() const { return xi_; }
  const Bilinear& xi_inv() const { return xi_inv_; }
  std::pair<int, int> signature() const { return sig_; }

  friend bool operator==(const Metric&, const Metric&) = default;

 private:
  Metric(Bilinear xi, Bilinear inv, std::pair<int, int> sig)
      : xi_(std::move(xi)), xi_inv_(std::move(inv)), sig_(sig) {}
  Bilinear xi_;
  Bilinear xi_inv_;
  std::pair<int, int> sig_;
};

/// Signature (#negative, #positive, #zero) of a symmetric bilinear form,
/// computed exactly by congruence reduction.
std::tuple<int, int, int> symmetric_signature(const Bilinear& b);

/// R_{ijkw} = sum_l T_{ijk}^l Xi_{lw}; input must be operator variance.
QuadTensor lower(const QuadTensor& t, const Metric& g);

/// T_{ijk}^l = sum_w R_{ijkw} Xi^{wl}; input must be covariant.
QuadTensor raise(const QuadTensor& t, const Metric& g);

/// Covariant: (Psi*T)(x,y,z,w) = T(Psi x, Psi y, Psi z, Psi w).
/// Operator:  (Psi*T)(x,y)z = Psi^{-1}(T(Psi x, Psi y) Psi z).
/// Throws std::domain_error when Psi is singular.
QuadTensor pullback(const Matrix& psi, const QuadTensor& t);

/// (Psi*b)(x,y) = b(Psi x, Psi y).
Bilinear pullback_bilinear(const Matrix& psi, const Bilinear& b);

/// Full metric contraction of two covariant tensors over all four index
/// pairs; symmetric, and positive definite when g is definite.
Rational tensor_inner(const QuadTensor& x, const QuadTensor& y, const Metric& g);

}  // namespace curv
