#pragma once

#include <cstdint>
#include <random>

#include "curv/matrix.hpp"
#include "curv/tensor.hpp"

namespace curv {

/// Deterministic seeded generator. Draws map the engine output directly,
/// so identical seeds reproduce identical sample streams on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform-ish integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

Matrix random_matrix(Rng& rng, int rows, int cols, int lo = -3, int hi = 3);
/// Resamples until the matrix is invertible.
Matrix random_invertible(Rng& rng, int n, int lo = -3, int hi = 3);
Bilinear random_symmetric(Rng& rng, Dim m, int lo = -3, int hi = 3);
Bilinear random_antisymmetric(Rng& rng, Dim m, int lo = -3, int hi = 3);
CubicForm random_cubic(Rng& rng, Dim m, int lo = -3, int hi = 3);

/// Diagonal with distinct positive integer entries (a diagonal
/// general-linear sample).
Matrix random_distinct_diagonal(Rng& rng, int n);

/// Symmetric form of exact signature (p, q): P^T diag(-1 x p, +1 x q, 0) P
/// for random invertible P.
Bilinear random_signature_form(Rng& rng, Dim m, int p, int q);

/// Non-degenerate metric of signature (p, q), p + q = m.
Metric random_metric(Rng& rng, Dim m, int p, int q);

/// Permutation matrix with random +-1 signs; orthogonal for the identity
/// metric and for any diagonal metric whose sign pattern the permutation
/// preserves.
Matrix random_signed_permutation(Rng& rng, int n);

/// Exact element of the orthogonal group of g via the Cayley transform
/// (I - S)(I + S)^{-1} where Xi S is antisymmetric.
Matrix cayley_orthogonal(Rng& rng, const Metric& g);

}  // namespace curv
