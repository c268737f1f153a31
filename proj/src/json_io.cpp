#include "curv/json_io.hpp"

#include <nlohmann/json.hpp>

namespace curv {

using nlohmann::json;

namespace {

int read_m(const json& j) {
  if (!j.is_object()) throw JsonError("expected an object");
  if (!j.contains("m") || !j["m"].is_number_integer())
    throw JsonError("missing or non-integer field \"m\"");
  const int m = j["m"].get<int>();
  if (m < 4) throw JsonError("\"m\" must be at least 4");
  return m;
}

Rational read_fraction(const json& v, const char* where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string())
    throw JsonError(std::string(where) + ": fraction must be a \"p/q\" string");
  try {
    return Rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw JsonError(std::string(where) + ": " + e.what());
  }
}

int read_index(const json& v, int m, const char* where) {
  if (!v.is_number_integer())
    throw JsonError(std::string(where) + ": index must be an integer");
  const int i = v.get<int>();
  if (i < 1 || i > m)
    throw JsonError(std::string(where) + ": index " + std::to_string(i) +
                    " out of range 1.." + std::to_string(m));
  return i - 1;
}

json fraction_entry(const Rational& v) { return v.str(); }

}  // namespace

json tensor_to_json(const QuadTensor& t) {
  json entries = json::array();
  const int m = t.dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          if (!t.at(i, j, k, l).is_zero())
            entries.push_back({i + 1, j + 1, k + 1, l + 1, fraction_entry(t.at(i, j, k, l))});
  return json{{"m", m}, {"variance", variance_name(t.variance())}, {"entries", entries}};
}

QuadTensor tensor_from_json(const json& j) {
  const int m = read_m(j);
  if (!j.contains("variance") || !j["variance"].is_string())
    throw JsonError("missing tensor field \"variance\"");
  const std::string var = j["variance"].get<std::string>();
  Variance v;
  if (var == "covariant") v = Variance::Covariant;
  else if (var == "operator") v = Variance::Operator;
  else throw JsonError("\"variance\" must be \"covariant\" or \"operator\"");
  QuadTensor t(Dim(m), v);
  if (!j.contains("entries") || !j["entries"].is_array())
    throw JsonError("missing tensor field \"entries\"");
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 5)
      throw JsonError("tensor entry must be [i,j,k,l,\"p/q\"]");
    const int i = read_index(e[0], m, "tensor entry");
    const int k = read_index(e[1], m, "tensor entry");
    const int l = read_index(e[2], m, "tensor entry");
    const int w = read_index(e[3], m, "tensor entry");
    t.at(i, k, l, w) = read_fraction(e[4], "tensor entry");
  }
  return t;
}

json bilinear_to_json(const Bilinear& b) {
  json entries = json::array();
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      if (!b.at(i, j).is_zero())
        entries.push_back({i + 1, j + 1, fraction_entry(b.at(i, j))});
  return json{{"m", b.dim()}, {"entries", entries}};
}

Bilinear bilinear_from_json(const json& j) {
  const int m = read_m(j);
  Bilinear b((Dim(m)));
  if (!j.contains("entries") || !j["entries"].is_array())
    throw JsonError("missing bilinear field \"entries\"");
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3)
      throw JsonError("bilinear entry must be [i,j,\"p/q\"]");
    const int i = read_index(e[0], m, "bilinear entry");
    const int k = read_index(e[1], m, "bilinear entry");
    b.at(i, k) = read_fraction(e[2], "bilinear entry");
  }
  return b;
}

json metric_to_json(const Metric& g) {
  json j = bilinear_to_json(g.xi());
  j["signature"] = {g.signature().first, g.signature().second};
  return j;
}

Metric metric_from_json(const json& j) {
  const Bilinear xi = bilinear_from_json(j);
  Metric g = [&] {
    try {
      return Metric::from_bilinear(xi);
    } catch (const std::invalid_argument& e) {
      throw JsonError(std::string("metric: ") + e.what());
    }
  }();
  if (j.contains("signature")) {
    const auto& s = j["signature"];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() ||
        !s[1].is_number_integer())
      throw JsonError("metric \"signature\" must be [p,q]");
    if (g.signature() != std::make_pair(s[0].get<int>(), s[1].get<int>()))
      throw JsonError("metric signature does not match its entries");
  }
  return g;
}

json connection_to_json(const PolyConnection& gamma) {
  json coeffs = json::array();
  const int m = gamma.dim();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int d = 0; d < m; ++d)
        for (int c = 0; c < m; ++c)
          if (!gamma.coeff(a, b, d, c).is_zero())
            coeffs.push_back({a + 1, b + 1, d + 1, c + 1, fraction_entry(gamma.coeff(a, b, d, c))});
  return json{{"m", m}, {"coeffs", coeffs}};
}

PolyConnection connection_from_json(const json& j) {
  const int m = read_m(j);
  PolyConnection gamma((Dim(m)));
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw JsonError("missing connection field \"coeffs\"");
  for (const auto& e : j["coeffs"]) {
    if (!e.is_array() || e.size() != 5)
      throw JsonError("connection coefficient must be [a,b,d,c,\"p/q\"]");
    const int a = read_index(e[0], m, "connection coefficient");
    const int b = read_index(e[1], m, "connection coefficient");
    const int d = read_index(e[2], m, "connection coefficient");
    const int c = read_index(e[3], m, "connection coefficient");
    gamma.coeff(a, b, d, c) = read_fraction(e[4], "connection coefficient");
  }
  if (!gamma.is_torsion_free())
    throw JsonError("connection coefficients are not symmetric in the lower indices");
  return gamma;
}

json poly_metric_to_json(const PolyMetric& g) {
  json quad = json::array();
  const int m = g.dim();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          if (!g.quad_coeff(a, b, c, d).is_zero())
            quad.push_back({a + 1, b + 1, c + 1, d + 1, fraction_entry(g.quad_coeff(a, b, c, d))});
  json j = json{{"m", m}, {"quadratic", quad}};
  j["constant"] = bilinear_to_json(g.constant_part())["entries"];
  return j;
}

PolyMetric poly_metric_from_json(const json& j) {
  const int m = read_m(j);
  Bilinear g0((Dim(m)));
  if (!j.contains("constant") || !j["constant"].is_array())
    throw JsonError("missing polynomial-metric field \"constant\"");
  for (const auto& e : j["constant"]) {
    if (!e.is_array() || e.size() != 3)
      throw JsonError("constant entry must be [a,b,\"p/q\"]");
    g0.at(read_index(e[0], m, "constant entry"), read_index(e[1], m, "constant entry")) =
        read_fraction(e[2], "constant entry");
  }
  std::vector<Rational> q(static_cast<size_t>(m) * m * m * m);
  if (!j.contains("quadratic") || !j["quadratic"].is_array())
    throw JsonError("missing polynomial-metric field \"quadratic\"");
  PolyMetric out = [&] {
    for (const auto& e : j["quadratic"]) {
      if (!e.is_array() || e.size() != 5)
        throw JsonError("quadratic entry must be [a,b,c,d,\"p/q\"]");
      const int a = read_index(e[0], m, "quadratic entry");
      const int b = read_index(e[1], m, "quadratic entry");
      const int c = read_index(e[2], m, "quadratic entry");
      const int d = read_index(e[3], m, "quadratic entry");
      q[((static_cast<size_t>(a) * m + b) * m + c) * m + d] =
          read_fraction(e[4], "quadratic entry");
    }
    try {
      return PolyMetric(std::move(g0), std::move(q));
    } catch (const std::invalid_argument& e) {
      throw JsonError(std::string("polynomial metric: ") + e.what());
    }
  }();
  return out;
}

json wdecomposition_to_json(const WDecomposition& w) {
  json j;
  for (int i = 1; i <= 8; ++i) j["W" + std::to_string(i)] = tensor_to_json(w.w(i));
  return j;
}

json gl_decomposition_to_json(const GLDecomposition& d) {
  return json{{"u_part", tensor_to_json(d.u_part)},
              {"lambda_part", bilinear_to_json(d.lambda_part)},
              {"s_part", bilinear_to_json(d.s_part)}};
}

json span_report_to_json(const SpanReport& r) {
  return json{{"target", r.target},       {"target_dim", r.target_dim},
              {"achieved_dim", r.achieved_dim}, {"samples", r.samples_used},
              {"seed", r.seed},           {"success", r.success}};
}

QuadTensor tensor_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw JsonError("malformed JSON document");
  return tensor_from_json(j);
}

std::string to_text(const json& j) { return j.dump(2); }

}  // namespace curv
