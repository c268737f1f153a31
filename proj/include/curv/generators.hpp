#pragma once

#include <cstdint>
#include <string>

#include "curv/spaces.hpp"
#include "curv/tensor.hpp"

namespace curv {

/// Result of a seeded span experiment: did the sampled family reach the
/// full dimension of its target space? achieved_dim <= target_dim always;
/// failure means "not yet spanned with this budget", never a refutation.
struct SpanReport {
  std::string target;
  long long target_dim = 0;
  long long achieved_dim = 0;
  long long samples_used = 0;
  std::uint64_t seed = 0;
  bool success = false;
};

/// Default sampling budget: 5 x target dimension.
long long default_max_samples(long long target_dim);

/// Full polarization of the Jacobi operator:
/// T(z;x,y) = (1/2){R(z,x)y + R(z,y)x}, symmetric in (x,y), V-valued.
/// Stored with slots (z,x,y;l), operator variance.
QuadTensor jacobi_form(const QuadTensor& r);

/// Rank of R -> jacobi_form(R) on the curvature space; equals its full
/// dimension (the polarized Jacobi operator determines the curvature).
long long jacobi_injectivity_rank(Dim m);

/// R_h(x,y)z = h(y,z)x - h(x,z)y for symmetric h.
QuadTensor r_h(const Bilinear& h);

/// R_C(w,v)u = C(v,C(w,u)) - C(w,C(v,u)) for a cubic structure C; always
/// torsion-free Ricci-symmetric (rho_34 = 0).
QuadTensor r_c(const CubicForm& c);

/// Span of {phi ^ phi} over random rank-2 symmetric forms inside the
/// space of algebraic curvature tensors.
SpanReport span_wedge_rank2(Dim m, std::uint64_t seed, long long max_samples = -1);

/// Same with forms of fixed signature (p, q), 2 <= p+q <= m.
SpanReport span_wedge_signature(Dim m, int p, int q, std::uint64_t seed,
                                long long max_samples = -1);

/// Span of the metric curvature spaces over random metrics of signature
/// (p, q), p + q = m, inside the Ricci-symmetric operator space.
SpanReport span_metric_curvatures(Dim m, int p, int q, std::uint64_t seed,
                                  long long max_samples = -1);

/// Span of {R_C} over random cubic structures; target is the full
/// Ricci-symmetric operator space.
SpanReport span_rc(Dim m, std::uint64_t seed, long long max_samples = -1);

/// Span of {R_h} over random symmetric forms; target is the lift of the
/// symmetric bilinear forms (dimension m(m+1)/2).
SpanReport span_rh(Dim m, std::uint64_t seed, long long max_samples = -1);

/// Certifies that the general-linear orbit of a nonzero algebraic
/// curvature tensor spans the entire space.
SpanReport orbit_span_certificate(const QuadTensor& a, std::uint64_t seed,
                                  long long max_samples = -1);

}  // namespace curv
