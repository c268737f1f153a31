#pragma once

#include <optional>
#include <string_view>

#include "curv/matrix.hpp"
#include "curv/tensor.hpp"

namespace curv {

/// The named tensor symmetry spaces. Metric-dependent tags carry their
/// metric inside SpaceId.
enum class SpaceTag {
  RCurv,              // curvature space: antisymmetry + first Bianchi
  AAlg,               // algebraic (Levi-Civita type) curvature tensors
  FAff,               // Ricci-symmetric (affine) curvature tensors, lowered
  UProj,              // trace-free part of the curvature space, ker rho_14
  WWeyl,              // Weyl part: ker rho_14 inside AAlg
  Lambda2,            // antisymmetric bilinear forms
  S2,                 // symmetric bilinear forms
  S2Zero,             // trace-free symmetric bilinear forms
  Lambda2Lambda2,     // antisymmetric pairs of 2-forms
  Lambda2Lambda2Zero, // same, trace-free
  SCal,               // residual module inside Lambda2 (x) S2_0
  L2S20Tensor,        // Lambda2 (x) S2_0 itself
};

bool space_needs_metric(SpaceTag tag);
std::string_view space_cli_name(SpaceTag tag);
std::optional<SpaceTag> space_from_cli_name(std::string_view name);

struct SpaceId {
  SpaceTag tag;
  std::optional<Metric> metric;  // present iff space_needs_metric(tag)
};

/// The fourteen entrywise symmetry identities. Operator-variance family:
/// 1.a 1.b 1.i 1.j 1.k 1.L; covariant family: 1.c 1.d 1.e 1.f 1.n 1.o 1.p 1.q.
enum class TensorIdentity {
  I1a, I1b, I1c, I1d, I1e, I1f, I1i, I1j, I1k, I1L, I1n, I1o, I1p, I1q,
};

std::string_view identity_name(TensorIdentity id);
std::optional<TensorIdentity> identity_from_name(std::string_view name);

/// Exact entrywise check. The metric is required only for 1.p and 1.q
/// (covariant trace identities); all other identities are metric-free.
bool satisfies(const QuadTensor& t, TensorIdentity id,
               const std::optional<Metric>& g = std::nullopt);

/// Basis (as a canonical Subspace of the m^2- or m^4-dimensional
/// coordinate space) cut out by the defining identities of the space.
Subspace basis_of(const SpaceId& s, Dim m);

/// Closed-form dimension of each space.
long long dim_formula(SpaceTag tag, int m);

/// Dimensions of the eight orthogonal components W_1..W_8 of the
/// curvature space.
long long w_component_dim(int which, int m);

/// Certifies that {1.c,1.d,1.e} and {1.c,1.d,1.f} cut out the same
/// subspace, and that it equals the space of algebraic curvature tensors.
bool bianchi_equivalence_certificate(Dim m);

/// {1.i,1.j,1.k} vs {1.i,1.j,1.L} (operator traces, metric-free).
bool trace_equivalence_certificate_operator(Dim m);

/// {1.n,1.o,1.p} vs {1.n,1.o,1.q} (covariant traces w.r.t. g).
bool trace_equivalence_certificate_covariant(Dim m, const Metric& g);

}  // namespace curv
