#pragma once

#include <array>
#include <optional>

#include "curv/spaces.hpp"
#include "curv/tensor.hpp"

namespace curv {

/// Which slot pair a Ricci-type trace contracts.
enum class RhoSlots { Rho13, Rho14, Rho23, Rho24, Rho34 };

/// Ricci-type traces. Operator variance: Rho14/Rho24/Rho34 are bare
/// operator traces and need no metric; Rho13/Rho23 lower first and
/// need one. Covariant variance always contracts with Xi^{ij}.
Bilinear rho(const QuadTensor& t, RhoSlots which, const std::optional<Metric>& g = std::nullopt);

Bilinear pi_antisym(const Bilinear& b);
Bilinear pi_sym(const Bilinear& b);
/// Trace w.r.t. g: sum Xi^{ij} b_{ij}.
Rational tau(const Bilinear& b, const Metric& g);
/// pi_0 = pi_s - (tau/m) <.,.>; symmetric and trace-free.
Bilinear pi_trace_free(const Bilinear& b, const Metric& g);

/// Lift of a 2-form into the curvature space along the trace map:
/// sigma(omega)(x,y)z = (-1/(1+m)) {2 omega(x,y) z + omega(x,z) y - omega(y,z) x}.
/// Satisfies rho_14(sigma(omega)) = omega.
QuadTensor sigma_gl_antisym(const Bilinear& omega);
/// sigma(psi)(x,y)z = (1/(1-m)) {psi(x,z) y - psi(y,z) x}, psi symmetric;
/// rho_14(sigma(psi)) = psi.
QuadTensor sigma_gl_sym(const Bilinear& psi);

/// GL-equivariant split of a curvature operator into its trace-free part
/// and the two bilinear trace components.
struct GLDecomposition {
  QuadTensor u_part;     // operator variance, rho_14 = 0
  Bilinear lambda_part;  // antisymmetric
  Bilinear s_part;       // symmetric
};
GLDecomposition decompose_gl(const QuadTensor& r);

/// The four equivariant lifts of bilinear forms into covariant curvature
/// tensors (psi symmetric for sigma1/sigma2, omega antisymmetric for
/// sigma3/sigma4). The 2x2 trace matrices [[-1, m-1], [m-1, -1]] and
/// [[-3, 2(m+1)], [1-m, 2]] hold on trace-free symmetric forms.
QuadTensor sigma1(const Bilinear& psi, const Metric& g);
QuadTensor sigma2(const Bilinear& psi, const Metric& g);
QuadTensor sigma3(const Bilinear& omega, const Metric& g);
QuadTensor sigma4(const Bilinear& omega, const Metric& g);

/// Half-normalized product of symmetric forms; lands in the space of
/// algebraic curvature tensors.
QuadTensor wedge(const Bilinear& phi, const Bilinear& psi);

/// Splitting of the trace sequence on algebraic curvature tensors:
/// sigma(psi) = (2/(m-2)) psi ^ Xi - (tau(psi)/((m-1)(m-2))) Xi ^ Xi.
QuadTensor sigma_a_rho14(const Bilinear& psi, const Metric& g);

struct ADecomposition {
  QuadTensor weyl;     // trace-free part, rho_14 = 0
  Bilinear s0_part;    // trace-free Ricci part
  Rational scalar_part;
};
ADecomposition decompose_a(const QuadTensor& a, const Metric& g);

/// Symmetrization of the last two slots.
QuadTensor id_pi_s(const QuadTensor& t);
/// Equivariant lift of Lambda2 (x) S2 back into the curvature space:
/// sigma(S)_{ijkl} = S_{ijkl} + (1/2)(S_{kjil} + S_{ikjl} - S_{ljik} - S_{iljk}).
QuadTensor sigma_id_pi_s(const QuadTensor& s);
/// alpha(S) = sigma_id_pi_s(S) - S; lands in Lambda2 (x) Lambda2.
QuadTensor alpha_map(const QuadTensor& s);

/// The four maps splitting Lambda2 (x) S2_0 into its irreducible pieces.
Bilinear pi_1s(const QuadTensor& theta, const Metric& g);
Bilinear pi_1a(const QuadTensor& theta, const Metric& g);
QuadTensor pi_lambda(const QuadTensor& theta);
QuadTensor sigma_pi_1s(const Bilinear& psi, const Metric& g);
QuadTensor sigma_pi_1a(const Bilinear& omega, const Metric& g);
QuadTensor sigma_pi_lambda(const QuadTensor& t, const Metric& g);

/// The eight orthogonal components of a curvature tensor. Fixed
/// realization: W3 is the antisymmetric-trace lift (so W3 = 0 exactly on
/// the Ricci-symmetric subspace), W2 sits inside the algebraic part, W5
/// inside Lambda2 (x) S2_0. The sum of the components reproduces the
/// input exactly.
struct WDecomposition {
  std::array<QuadTensor, 8> components;
  Metric metric;

  const QuadTensor& w(int which) const { return components.at(which - 1); }
  QuadTensor sum() const;
};
WDecomposition decompose_w(const QuadTensor& r, const Metric& g);

}  // namespace curv
