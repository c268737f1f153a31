// Python bindings for the exact curvature-tensor toolkit.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "curv/decomp.hpp"
#include "curv/generators.hpp"
#include "curv/json_io.hpp"
#include "curv/realize.hpp"
#include "curv/sampling.hpp"
#include "curv/spaces.hpp"

namespace py = pybind11;
using namespace curv;

namespace {

Rational to_rational(py::handle h) {
  if (py::isinstance<Rational>(h)) return h.cast<Rational>();
  if (py::isinstance<py::int_>(h)) return Rational(py::str(h).cast<std::string>());
  if (py::isinstance<py::str>(h)) return Rational(h.cast<std::string>());
  throw py::type_error("expected int, 'p/q' string, or Rational");
}

SpaceId make_space_id(const std::string& name, const std::optional<Metric>& g) {
  const auto tag = space_from_cli_name(name);
  if (!tag) throw py::value_error("unknown space name: " + name);
  SpaceId id{*tag, std::nullopt};
  if (space_needs_metric(*tag)) {
    if (!g) throw py::value_error("space '" + name + "' requires a metric");
    id.metric = *g;
  }
  return id;
}

TensorIdentity make_identity(const std::string& name) {
  const auto id = identity_from_name(name);
  if (!id) throw py::value_error("unknown identity name: " + name);
  return *id;
}

RhoSlots make_slots(int which) {
  switch (which) {
    case 13: return RhoSlots::Rho13;
    case 14: return RhoSlots::Rho14;
    case 23: return RhoSlots::Rho23;
    case 24: return RhoSlots::Rho24;
    case 34: return RhoSlots::Rho34;
    default: throw py::value_error("rho slots must be one of 13, 14, 23, 24, 34");
  }
}

Matrix matrix_from_rows(const std::vector<std::vector<py::object>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw py::value_error("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = to_rational(rows[i][j]);
  }
  return m;
}

std::vector<std::vector<std::string>> matrix_to_rows(const Matrix& m) {
  std::vector<std::vector<std::string>> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    rows[r].reserve(m.cols());
    for (int c = 0; c < m.cols(); ++c) rows[r].push_back(m.at(r, c).str());
  }
  return rows;
}

std::vector<Rational> vector_from_list(const std::vector<py::object>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_rational(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(pycurv, m) {
  m.doc() = "exact-arithmetic curvature tensor spaces: decompositions, "
            "realizations, and span certificates";

  py::register_exception<JsonError>(m, "JsonError", PyExc_ValueError);

  py::class_<Rational>(m, "Rational")
      .def(py::init([](py::handle h) { return to_rational(h); }))
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__eq__", [](const Rational& a, py::handle b) { return a == to_rational(b); })
      .def("__add__", [](const Rational& a, py::handle b) { return a + to_rational(b); })
      .def("__sub__", [](const Rational& a, py::handle b) { return a - to_rational(b); })
      .def("__mul__", [](const Rational& a, py::handle b) { return a * to_rational(b); })
      .def("__truediv__", [](const Rational& a, py::handle b) { return a / to_rational(b); })
      .def("__neg__", [](const Rational& a) { return -a; })
      .def_property_readonly("numerator", &Rational::numerator_str)
      .def_property_readonly("denominator", &Rational::denominator_str)
      .def("is_zero", &Rational::is_zero);

  py::class_<Matrix>(m, "Matrix")
      .def(py::init(&matrix_from_rows))
      .def_property_readonly("rows", &Matrix::rows)
      .def_property_readonly("cols", &Matrix::cols)
      .def("__getitem__",
           [](const Matrix& mt, std::pair<int, int> rc) {
             return mt.at(rc.first, rc.second);
           })
      .def("to_rows", &matrix_to_rows)
      .def("inverse", &Matrix::inverse)
      .def("transpose", &Matrix::transpose)
      .def("__matmul__", [](const Matrix& a, const Matrix& b) { return a * b; })
      .def_static("identity", &Matrix::identity);

  py::class_<Subspace>(m, "Subspace")
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("ambient_dim", &Subspace::ambient_dim)
      .def("basis", [](const Subspace& s) { return matrix_to_rows(s.basis()); })
      .def("basis_row",
           [](const Subspace& s, int r) {
             std::vector<std::string> out;
             for (int c = 0; c < s.basis().cols(); ++c)
               out.push_back(s.basis().at(r, c).str());
             return out;
           })
      .def("contains",
           [](const Subspace& s, const std::vector<py::object>& v) {
             return s.contains(vector_from_list(v));
           })
      .def("contains_subspace",
           [](const Subspace& s, const Subspace& o) { return s.contains(o); })
      .def("__eq__", [](const Subspace& a, const Subspace& b) { return a == b; });

  m.def("rank", [](const Matrix& mt) { return rank(mt); });
  m.def("null_space", [](const Matrix& mt) { return null_space(mt); });
  m.def("span_union", &span_union);

  py::class_<Bilinear>(m, "Bilinear")
      .def(py::init([](int mm) { return Bilinear(Dim(mm)); }))
      .def_property_readonly("m", &Bilinear::dim)
      .def("__getitem__",
           [](const Bilinear& b, std::pair<int, int> ij) { return b.at(ij.first, ij.second); })
      .def("__setitem__",
           [](Bilinear& b, std::pair<int, int> ij, py::handle v) {
             b.at(ij.first, ij.second) = to_rational(v);
           })
      .def("__eq__", [](const Bilinear& a, const Bilinear& b) { return a == b; })
      .def("__add__", [](const Bilinear& a, const Bilinear& b) { return a + b; })
      .def("__sub__", [](const Bilinear& a, const Bilinear& b) { return a - b; })
      .def("scaled", [](const Bilinear& b, py::handle c) { return b.scaled(to_rational(c)); })
      .def("is_zero", &Bilinear::is_zero)
      .def("is_symmetric", &Bilinear::is_symmetric)
      .def("is_antisymmetric", &Bilinear::is_antisymmetric);

  py::class_<QuadTensor>(m, "QuadTensor")
      .def(py::init([](int mm, const std::string& variance) {
             if (variance == "covariant") return QuadTensor(Dim(mm), Variance::Covariant);
             if (variance == "operator") return QuadTensor(Dim(mm), Variance::Operator);
             throw py::value_error("variance must be 'covariant' or 'operator'");
           }),
           py::arg("m"), py::arg("variance"))
      .def_property_readonly("m", &QuadTensor::dim)
      .def_property_readonly("variance",
                             [](const QuadTensor& t) {
                               return std::string(variance_name(t.variance()));
                             })
      .def("__getitem__",
           [](const QuadTensor& t, std::tuple<int, int, int, int> ix) {
             auto [i, j, k, l] = ix;
             return t.at(i, j, k, l);
           })
      .def("__setitem__",
           [](QuadTensor& t, std::tuple<int, int, int, int> ix, py::handle v) {
             auto [i, j, k, l] = ix;
             t.at(i, j, k, l) = to_rational(v);
           })
      .def("__eq__", [](const QuadTensor& a, const QuadTensor& b) { return a == b; })
      .def("__add__", [](const QuadTensor& a, const QuadTensor& b) { return a + b; })
      .def("__sub__", [](const QuadTensor& a, const QuadTensor& b) { return a - b; })
      .def("scaled", [](const QuadTensor& t, py::handle c) { return t.scaled(to_rational(c)); })
      .def("is_zero", &QuadTensor::is_zero)
      .def("flatten",
           [](const QuadTensor& t) {
             std::vector<std::string> out;
             out.reserve(t.flatten().size());
             for (const auto& v : t.flatten()) out.push_back(v.str());
             return out;
           })
      .def_static("from_flat", [](int mm, const std::string& variance,
                                  const std::vector<py::object>& entries) {
        const Variance v = variance == "operator" ? Variance::Operator : Variance::Covariant;
        return QuadTensor::from_flat(Dim(mm), v, vector_from_list(entries));
      });

  py::class_<CubicForm>(m, "CubicForm")
      .def(py::init([](int mm) { return CubicForm(Dim(mm)); }))
      .def_property_readonly("m", &CubicForm::dim)
      .def("get",
           [](const CubicForm& c, int i, int j, int k) { return c.at(i, j, k); })
      .def("set",
           [](CubicForm& c, int i, int j, int k, py::handle v) {
             c.set(i, j, k, to_rational(v));
           })
      .def("is_zero", &CubicForm::is_zero);

  py::class_<Metric>(m, "Metric")
      .def_static("identity", [](int mm) { return Metric::identity(Dim(mm)); })
      .def_static("diagonal_signature",
                  [](int mm, int p, int q) { return Metric::diagonal_signature(Dim(mm), p, q); })
      .def_static("from_bilinear", &Metric::from_bilinear)
      .def_property_readonly("m", &Metric::dim)
      .def_property_readonly("signature", &Metric::signature)
      .def_property_readonly("xi", &Metric::xi)
      .def_property_readonly("xi_inv", &Metric::xi_inv)
      .def("__eq__", [](const Metric& a, const Metric& b) { return a == b; });

  m.def("lower", &lower, py::arg("tensor"), py::arg("metric"));
  m.def("raise_", &raise, py::arg("tensor"), py::arg("metric"));
  m.def("pullback", &pullback, py::arg("psi"), py::arg("tensor"));
  m.def("pullback_bilinear", &pullback_bilinear, py::arg("psi"), py::arg("form"));
  m.def("tensor_inner", &tensor_inner, py::arg("x"), py::arg("y"), py::arg("metric"));

  m.def(
      "satisfies",
      [](const QuadTensor& t, const std::string& identity, const std::optional<Metric>& g) {
        return satisfies(t, make_identity(identity), g);
      },
      py::arg("tensor"), py::arg("identity"), py::arg("metric") = std::nullopt);
  m.def(
      "basis_of",
      [](const std::string& name, int mm, const std::optional<Metric>& g) {
        return basis_of(make_space_id(name, g), Dim(mm));
      },
      py::arg("space"), py::arg("m"), py::arg("metric") = std::nullopt);
  m.def(
      "dim_formula",
      [](const std::string& name, int mm) {
        const auto tag = space_from_cli_name(name);
        if (!tag) throw py::value_error("unknown space name: " + name);
        return dim_formula(*tag, mm);
      },
      py::arg("space"), py::arg("m"));
  m.def("w_component_dim", &w_component_dim, py::arg("which"), py::arg("m"));
  m.def("bianchi_equivalence_certificate",
        [](int mm) { return bianchi_equivalence_certificate(Dim(mm)); });
  m.def("trace_equivalence_certificate_operator",
        [](int mm) { return trace_equivalence_certificate_operator(Dim(mm)); });
  m.def(
      "trace_equivalence_certificate_covariant",
      [](int mm, const Metric& g) { return trace_equivalence_certificate_covariant(Dim(mm), g); },
      py::arg("m"), py::arg("metric"));

  m.def(
      "rho",
      [](const QuadTensor& t, int which, const std::optional<Metric>& g) {
        return rho(t, make_slots(which), g);
      },
      py::arg("tensor"), py::arg("slots"), py::arg("metric") = std::nullopt);
  m.def("pi_antisym", &pi_antisym);
  m.def("pi_sym", &pi_sym);
  m.def("pi_trace_free", &pi_trace_free, py::arg("form"), py::arg("metric"));
  m.def("tau", &tau, py::arg("form"), py::arg("metric"));
  m.def("sigma_gl_antisym", &sigma_gl_antisym);
  m.def("sigma_gl_sym", &sigma_gl_sym);
  m.def("wedge", &wedge);
  m.def("sigma1", &sigma1);
  m.def("sigma2", &sigma2);
  m.def("sigma3", &sigma3);
  m.def("sigma4", &sigma4);
  m.def("sigma_a_rho14", &sigma_a_rho14);
  m.def("id_pi_s", &id_pi_s);
  m.def("sigma_id_pi_s", &sigma_id_pi_s);
  m.def("alpha_map", &alpha_map);
  m.def("pi_1s", &pi_1s);
  m.def("pi_1a", &pi_1a);
  m.def("pi_lambda", &pi_lambda);
  m.def("sigma_pi_1s", &sigma_pi_1s);
  m.def("sigma_pi_1a", &sigma_pi_1a);
  m.def("sigma_pi_lambda", &sigma_pi_lambda);

  py::class_<GLDecomposition>(m, "GLDecomposition")
      .def_readonly("u_part", &GLDecomposition::u_part)
      .def_readonly("lambda_part", &GLDecomposition::lambda_part)
      .def_readonly("s_part", &GLDecomposition::s_part);
  m.def("decompose_gl", &decompose_gl);

  py::class_<ADecomposition>(m, "ADecomposition")
      .def_readonly("weyl", &ADecomposition::weyl)
      .def_readonly("s0_part", &ADecomposition::s0_part)
      .def_readonly("scalar_part", &ADecomposition::scalar_part);
  m.def("decompose_a", &decompose_a, py::arg("tensor"), py::arg("metric"));

  py::class_<WDecomposition>(m, "WDecomposition")
      .def("w", &WDecomposition::w, py::arg("which"))
      .def("__getitem__", &WDecomposition::w)
      .def("sum", &WDecomposition::sum)
      .def_property_readonly("metric",
                             [](const WDecomposition& d) { return d.metric; });
  m.def("decompose_w", &decompose_w, py::arg("tensor"), py::arg("metric"));

  py::class_<PolyConnection>(m, "PolyConnection")
      .def_property_readonly("m", &PolyConnection::dim)
      .def("coeff",
           [](const PolyConnection& g, int a, int b, int d, int c) {
             return g.coeff(a, b, d, c);
           })
      .def("is_torsion_free", &PolyConnection::is_torsion_free)
      .def("__eq__",
           [](const PolyConnection& a, const PolyConnection& b) { return a == b; });
  m.def("connection_from", &connection_from);
  m.def("curvature_at_origin", &curvature_at_origin);

  py::class_<PolyMetric>(m, "PolyMetric")
      .def_property_readonly("m", &PolyMetric::dim)
      .def_property_readonly("constant_part", &PolyMetric::constant_part)
      .def("quad_coeff",
           [](const PolyMetric& g, int a, int b, int c, int d) {
             return g.quad_coeff(a, b, c, d);
           })
      .def("value_at",
           [](const PolyMetric& g, const std::vector<py::object>& x) {
             return g.value_at(vector_from_list(x));
           })
      .def("__eq__", [](const PolyMetric& a, const PolyMetric& b) { return a == b; });
  m.def("metric_from", &metric_from, py::arg("tensor"), py::arg("g0"));
  m.def("lc_curvature_at_origin", &lc_curvature_at_origin);

  py::class_<SpanReport>(m, "SpanReport")
      .def_readonly("target", &SpanReport::target)
      .def_readonly("target_dim", &SpanReport::target_dim)
      .def_readonly("achieved_dim", &SpanReport::achieved_dim)
      .def_readonly("samples_used", &SpanReport::samples_used)
      .def_readonly("seed", &SpanReport::seed)
      .def_readonly("success", &SpanReport::success)
      .def("__repr__", [](const SpanReport& r) {
        return "SpanReport(target='" + r.target + "', achieved=" +
               std::to_string(r.achieved_dim) + "/" + std::to_string(r.target_dim) +
               ", success=" + (r.success ? "True" : "False") + ")";
      });

  m.def("jacobi_form", &jacobi_form);
  m.def(
      "jacobi_injectivity_rank", [](int mm) { return jacobi_injectivity_rank(Dim(mm)); },
      py::arg("m"));
  m.def("r_h", &r_h);
  m.def("r_c", &r_c);
  m.def(
      "span_wedge_rank2",
      [](int mm, std::uint64_t seed, long long max_samples) {
        return span_wedge_rank2(Dim(mm), seed, max_samples);
      },
      py::arg("m"), py::arg("seed"), py::arg("max_samples") = -1);
  m.def(
      "span_wedge_signature",
      [](int mm, int p, int q, std::uint64_t seed, long long max_samples) {
        return span_wedge_signature(Dim(mm), p, q, seed, max_samples);
      },
      py::arg("m"), py::arg("p"), py::arg("q"), py::arg("seed"), py::arg("max_samples") = -1);
  m.def(
      "span_metric_curvatures",
      [](int mm, int p, int q, std::uint64_t seed, long long max_samples) {
        return span_metric_curvatures(Dim(mm), p, q, seed, max_samples);
      },
      py::arg("m"), py::arg("p"), py::arg("q"), py::arg("seed"), py::arg("max_samples") = -1);
  m.def(
      "span_rc",
      [](int mm, std::uint64_t seed, long long max_samples) {
        return span_rc(Dim(mm), seed, max_samples);
      },
      py::arg("m"), py::arg("seed"), py::arg("max_samples") = -1);
  m.def(
      "span_rh",
      [](int mm, std::uint64_t seed, long long max_samples) {
        return span_rh(Dim(mm), seed, max_samples);
      },
      py::arg("m"), py::arg("seed"), py::arg("max_samples") = -1);
  m.def("orbit_span_certificate", &orbit_span_certificate, py::arg("tensor"), py::arg("seed"),
        py::arg("max_samples") = -1);

  m.def(
      "cayley_orthogonal",
      [](const Metric& g, std::uint64_t seed) {
        Rng rng(seed);
        return cayley_orthogonal(rng, g);
      },
      py::arg("metric"), py::arg("seed"),
      "exact element of the orthogonal group of the metric");
  m.def(
      "random_invertible",
      [](int n, std::uint64_t seed) {
        Rng rng(seed);
        return random_invertible(rng, n);
      },
      py::arg("n"), py::arg("seed"));

  m.def("tensor_to_json",
        [](const QuadTensor& t) { return to_text(tensor_to_json(t)); });
  m.def("tensor_from_json", &tensor_from_json_text);
  m.def("bilinear_to_json",
        [](const Bilinear& b) { return to_text(bilinear_to_json(b)); });
  m.def("metric_to_json", [](const Metric& g) { return to_text(metric_to_json(g)); });
}
