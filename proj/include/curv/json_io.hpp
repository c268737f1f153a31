#pragma once

#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>

#include "curv/decomp.hpp"
#include "curv/generators.hpp"
#include "curv/realize.hpp"
#include "curv/tensor.hpp"

namespace curv {

/// Raised on malformed or inconsistent input documents; the message names
/// the offending field.
class JsonError : public std::runtime_error {
 public:
  explicit JsonError(const std::string& what) : std::runtime_error(what) {}
};

// Tensors: {"m":4, "variance":"covariant"|"operator",
//           "entries":[[i,j,k,l,"p/q"], ...]} with 1-based indices and
// exact fraction strings; omitted entries are zero.
nlohmann::json tensor_to_json(const QuadTensor& t);
QuadTensor tensor_from_json(const nlohmann::json& j);

// Bilinear forms: {"m":4, "entries":[[i,j,"p/q"], ...]}.
nlohmann::json bilinear_to_json(const Bilinear& b);
Bilinear bilinear_from_json(const nlohmann::json& j);

// Metrics additionally carry "signature":[p,q] (checked on load).
nlohmann::json metric_to_json(const Metric& g);
Metric metric_from_json(const nlohmann::json& j);

// {"m":4, "coeffs":[[a,b,d,c,"p/q"], ...]}: coefficient of x_c in
// Gamma_ab^d.
nlohmann::json connection_to_json(const PolyConnection& gamma);
PolyConnection connection_from_json(const nlohmann::json& j);

// {"m":4, "constant":[[a,b,"p/q"],...], "quadratic":[[a,b,c,d,"p/q"],...]}:
// quadratic coefficients Q_{ab,cd} of g_ab = const + sum Q x_c x_d.
nlohmann::json poly_metric_to_json(const PolyMetric& g);
PolyMetric poly_metric_from_json(const nlohmann::json& j);

nlohmann::json wdecomposition_to_json(const WDecomposition& w);
nlohmann::json gl_decomposition_to_json(const GLDecomposition& d);
nlohmann::json span_report_to_json(const SpanReport& r);

QuadTensor tensor_from_json_text(const std::string& text);
std::string to_text(const nlohmann::json& j);

}  // namespace curv
