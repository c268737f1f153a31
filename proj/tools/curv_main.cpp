// Command-line front end: exact curvature-space checks, decompositions,
// realizations, and span experiments over JSON tensor files.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "curv/decomp.hpp"
#include "curv/generators.hpp"
#include "curv/json_io.hpp"
#include "curv/realize.hpp"
#include "curv/spaces.hpp"
#include "curv/tensor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

nlohmann::json load_json_file(const std::string& path) {
  nlohmann::json j;
  if (path == "-") {
    j = nlohmann::json::parse(std::cin, nullptr, false);
  } else {
    std::ifstream in(path);
    if (!in) throw curv::JsonError("cannot open file: " + path);
    j = nlohmann::json::parse(in, nullptr, false);
  }
  if (j.is_discarded()) throw curv::JsonError("malformed JSON in " + path);
  return j;
}

struct MetricFlags {
  std::string metric_spec;  // "id" or a file path
  std::string signature;    // "p,q"

  void attach(CLI::App* cmd) {
    cmd->add_option("--metric", metric_spec,
                    "metric: 'id' for the identity form or a JSON file");
    cmd->add_option("--signature", signature,
                    "metric diag(-1 x p, +1 x q) given as p,q");
  }

  std::optional<curv::Metric> resolve(int m) const {
    if (!metric_spec.empty() && !signature.empty())
      throw curv::JsonError("--metric and --signature are mutually exclusive");
    if (!metric_spec.empty()) {
      if (metric_spec == "id") return curv::Metric::identity(curv::Dim(m));
      return curv::metric_from_json(load_json_file(metric_spec));
    }
    if (!signature.empty()) {
      int p = -1, q = -1;
      char comma = 0;
      std::istringstream ss(signature);
      if (!(ss >> p >> comma >> q) || comma != ',' || p < 0 || q < 0)
        throw curv::JsonError("--signature expects p,q");
      return curv::Metric::diagonal_signature(curv::Dim(m), p, q);
    }
    return std::nullopt;
  }
};

long long samples_budget(long long from_flag) {
  if (from_flag > 0) return from_flag;
  if (const char* env = std::getenv("CURV_MAX_SAMPLES")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return -1;  // library default
}

void emit(const nlohmann::json& j, const std::string& format, const std::string& text_form) {
  if (format == "json")
    std::cout << curv::to_text(j) << "\n";
  else
    std::cout << text_form;
}

int run_dims(int m, bool verify, const std::string& format) {
  using curv::SpaceTag;
  const curv::Dim dim(m);
  const SpaceTag table[] = {SpaceTag::RCurv,  SpaceTag::AAlg,
                            SpaceTag::FAff,   SpaceTag::UProj,
                            SpaceTag::WWeyl,  SpaceTag::Lambda2,
                            SpaceTag::S2,     SpaceTag::S2Zero,
                            SpaceTag::Lambda2Lambda2Zero, SpaceTag::SCal,
                            SpaceTag::L2S20Tensor};
  nlohmann::json j;
  j["m"] = m;
  std::ostringstream text;
  text << "space dimensions at m = " << m << "\n";
  bool ok = true;
  for (SpaceTag tag : table) {
    const long long closed = curv::dim_formula(tag, m);
    j["spaces"][std::string(curv::space_cli_name(tag))] = closed;
    text << "  " << curv::space_cli_name(tag) << ": " << closed;
    if (verify) {
      curv::SpaceId id{tag, std::nullopt};
      if (curv::space_needs_metric(tag)) id.metric = curv::Metric::identity(dim);
      const long long computed = curv::basis_of(id, dim).dim();
      if (computed != closed) ok = false;
      text << (computed == closed ? "  (verified)" : "  (MISMATCH: basis gives " +
                                                         std::to_string(computed) + ")");
    }
    text << "\n";
  }
  text << "  W components:";
  for (int i = 1; i <= 8; ++i) {
    j["w_components"].push_back(curv::w_component_dim(i, m));
    text << " " << curv::w_component_dim(i, m);
  }
  text << "\n";
  if (verify) j["verified"] = ok;
  emit(j, format, text.str());
  return ok ? kExitOk : kExitVerificationFailed;
}

int run_check(const std::string& identity, const std::string& input, const MetricFlags& mf,
              const std::string& format) {
  const auto id = curv::identity_from_name(identity);
  if (!id) throw curv::JsonError("unknown identity: " + identity);
  const curv::QuadTensor t = curv::tensor_from_json(load_json_file(input));
  const auto g = mf.resolve(t.dim());
  const bool holds = curv::satisfies(t, *id, g);
  nlohmann::json j{{"identity", identity}, {"holds", holds}};
  emit(j, format,
       std::string("identity ") + identity + (holds ? " holds\n" : " is violated\n"));
  return holds ? kExitOk : kExitVerificationFailed;
}

int run_decompose(const std::string& input, const MetricFlags& mf, const std::string& format) {
  const curv::QuadTensor r = curv::tensor_from_json(load_json_file(input));
  auto g = mf.resolve(r.dim());
  if (!g) g = curv::Metric::identity(curv::Dim(r.dim()));
  const curv::WDecomposition w = curv::decompose_w(r, *g);
  // invariants are checked before anything is printed
  if (w.sum() != r) {
    std::cerr << "internal error: component sum does not reproduce the input\n";
    return kExitVerificationFailed;
  }
  for (int i = 1; i <= 8; ++i) {
    const curv::WDecomposition again = curv::decompose_w(w.w(i), *g);
    for (int k = 1; k <= 8; ++k) {
      const bool expect_self = (k == i);
      if ((expect_self && again.w(k) != w.w(i)) || (!expect_self && !again.w(k).is_zero())) {
        std::cerr << "internal error: decomposition is not idempotent on W"
                  << i << "\n";
        return kExitVerificationFailed;
      }
    }
  }
  const bool in_f = curv::satisfies(curv::raise(r, *g), curv::TensorIdentity::I1k);
  if (w.w(3).is_zero() != in_f) {
    std::cerr << "internal error: W3 does not characterize the Ricci-symmetric space\n";
    return kExitVerificationFailed;
  }
  std::ostringstream text;
  text << "W decomposition (m = " << r.dim() << ")\n";
  for (int i = 1; i <= 8; ++i) {
    int nonzero = 0;
    const auto& flat = w.w(i).flatten();
    for (const auto& v : flat) nonzero += v.is_zero() ? 0 : 1;
    text << "  W" << i << ": " << (w.w(i).is_zero() ? "zero" : std::to_string(nonzero) +
                                                                   " nonzero entries")
         << "\n";
  }
  emit(curv::wdecomposition_to_json(w), format, text.str());
  return kExitOk;
}

int run_decompose_gl(const std::string& input, const std::string& format) {
  const curv::QuadTensor r = curv::tensor_from_json(load_json_file(input));
  const curv::GLDecomposition d = curv::decompose_gl(r);
  std::ostringstream text;
  text << "GL decomposition (m = " << r.dim() << ")\n"
       << "  u_part:      " << (d.u_part.is_zero() ? "zero" : "nonzero") << "\n"
       << "  lambda_part: " << (d.lambda_part.is_zero() ? "zero" : "nonzero") << "\n"
       << "  s_part:      " << (d.s_part.is_zero() ? "zero" : "nonzero") << "\n";
  emit(curv::gl_decomposition_to_json(d), format, text.str());
  return kExitOk;
}

int run_realize_connection(const std::string& input, const std::string& format) {
  const curv::QuadTensor r = curv::tensor_from_json(load_json_file(input));
  const curv::PolyConnection gamma = curv::connection_from(r);
  if (curv::curvature_at_origin(gamma) != r) {
    std::cerr << "verification failed: curvature of the produced connection differs\n";
    return kExitVerificationFailed;
  }
  emit(curv::connection_to_json(gamma), format,
       "torsion-free connection with the requested curvature at 0 (round-trip verified)\n");
  return kExitOk;
}

int run_realize_metric(const std::string& input, const MetricFlags& mf,
                       const std::string& format) {
  const curv::QuadTensor a = curv::tensor_from_json(load_json_file(input));
  auto g0 = mf.resolve(a.dim());
  if (!g0) g0 = curv::Metric::identity(curv::Dim(a.dim()));
  const curv::PolyMetric g = curv::metric_from(a, *g0);
  if (curv::lc_curvature_at_origin(g) != a) {
    std::cerr << "verification failed: curvature of the produced metric differs\n";
    return kExitVerificationFailed;
  }
  emit(curv::poly_metric_to_json(g), format,
       "metric germ with the requested curvature at 0 (round-trip verified)\n");
  return kExitOk;
}

int run_jacobi(int m, const std::string& format) {
  const long long expected = curv::dim_formula(curv::SpaceTag::RCurv, m);
  const long long got = curv::jacobi_injectivity_rank(curv::Dim(m));
  nlohmann::json j{{"m", m}, {"rank", got}, {"dim", expected}, {"injective", got == expected}};
  std::ostringstream text;
  text << "jacobi rank at m = " << m << ": " << got << " of " << expected
       << (got == expected ? " (injective)\n" : " (NOT injective)\n");
  emit(j, format, text.str());
  return got == expected ? kExitOk : kExitVerificationFailed;
}

int report_span(const curv::SpanReport& r, const std::string& format) {
  std::ostringstream text;
  text << "span of " << r.target << ": " << r.achieved_dim << " of " << r.target_dim
       << " after " << r.samples_used << " samples (seed " << r.seed << ") -> "
       << (r.success ? "spanned" : "not spanned") << "\n";
  emit(curv::span_report_to_json(r), format, text.str());
  return r.success ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact curvature-tensor decomposition toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  int m = 4;
  bool verify = false;
  auto* dims = app.add_subcommand("dims", "dimension table of the named spaces");
  dims->add_option("--m", m, "dimension of the underlying space")->required();
  dims->add_flag("--verify", verify, "also compute each space from its identities");

  std::string identity, input;
  MetricFlags check_metric;
  auto* check = app.add_subcommand("check", "test one symmetry identity on a tensor");
  check->add_option("--identity", identity, "identity name, e.g. 1.b")->required();
  check->add_option("--input", input, "tensor JSON file")->required();
  check_metric.attach(check);

  std::string dec_input;
  MetricFlags dec_metric;
  auto* dec = app.add_subcommand("decompose", "full eight-component decomposition");
  dec->add_option("--input", dec_input, "covariant tensor JSON file")->required();
  dec->add_option("--m", m, "expected dimension (validated against the input)");
  dec_metric.attach(dec);

  std::string gl_input;
  auto* dec_gl = app.add_subcommand("decompose-gl", "trace/trace-free split of an operator");
  dec_gl->add_option("--input", gl_input, "operator tensor JSON file")->required();

  std::string conn_input;
  auto* realize_conn =
      app.add_subcommand("realize-connection", "torsion-free connection realizing a curvature");
  realize_conn->add_option("--input", conn_input, "operator tensor JSON file")->required();

  std::string met_input;
  MetricFlags met_metric;
  auto* realize_met =
      app.add_subcommand("realize-metric", "metric germ realizing an algebraic curvature tensor");
  realize_met->add_option("--input", met_input, "covariant tensor JSON file")->required();
  met_metric.attach(realize_met);

  int jm = 4;
  auto* jacobi = app.add_subcommand("jacobi", "injectivity rank of the polarized Jacobi map");
  jacobi->add_option("--m", jm, "dimension")->required();

  std::string span_target, span_sig;
  int span_m = 4;
  std::uint64_t seed = 1;
  long long samples = 0;
  auto* span = app.add_subcommand("span", "seeded span certificate");
  span->add_option("--target", span_target,
                   "wedge-rank2 | wedge-sig | metrics | rc | rh")
      ->required()
      ->check(CLI::IsMember({"wedge-rank2", "wedge-sig", "metrics", "rc", "rh"}));
  span->add_option("--m", span_m, "dimension")->required();
  span->add_option("--signature", span_sig, "p,q for wedge-sig and metrics");
  span->add_option("--seed", seed, "random seed");
  span->add_option("--samples", samples, "sample budget (default 5 x target dim)");

  std::string orbit_input;
  std::uint64_t orbit_seed = 1;
  long long orbit_samples = 0;
  auto* orbit = app.add_subcommand("orbit", "general-linear orbit span certificate");
  orbit->add_option("--input", orbit_input, "algebraic curvature tensor JSON file")->required();
  orbit->add_option("--seed", orbit_seed, "random seed");
  orbit->add_option("--samples", orbit_samples, "sample budget");

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dims->parsed()) return run_dims(m, verify, format);
    if (check->parsed()) return run_check(identity, input, check_metric, format);
    if (dec->parsed()) {
      if (dec->count("--m") > 0) {
        const curv::QuadTensor probe = curv::tensor_from_json(load_json_file(dec_input));
        if (probe.dim() != m) throw curv::JsonError("--m does not match the input tensor");
      }
      return run_decompose(dec_input, dec_metric, format);
    }
    if (dec_gl->parsed()) return run_decompose_gl(gl_input, format);
    if (realize_conn->parsed()) return run_realize_connection(conn_input, format);
    if (realize_met->parsed()) return run_realize_metric(met_input, met_metric, format);
    if (jacobi->parsed()) return run_jacobi(jm, format);
    if (span->parsed()) {
      const curv::Dim dim(span_m);
      const long long cap = samples_budget(samples);
      int p = 0, q = 0;
      if (!span_sig.empty()) {
        char comma = 0;
        std::istringstream ss(span_sig);
        if (!(ss >> p >> comma >> q) || comma != ',')
          throw curv::JsonError("--signature expects p,q");
      }
      curv::SpanReport r;
      if (span_target == "wedge-rank2") r = curv::span_wedge_rank2(dim, seed, cap);
      else if (span_target == "wedge-sig") {
        if (span_sig.empty()) throw curv::JsonError("wedge-sig requires --signature");
        r = curv::span_wedge_signature(dim, p, q, seed, cap);
      } else if (span_target == "metrics") {
        if (span_sig.empty()) throw curv::JsonError("metrics requires --signature");
        r = curv::span_metric_curvatures(dim, p, q, seed, cap);
      } else if (span_target == "rc") r = curv::span_rc(dim, seed, cap);
      else r = curv::span_rh(dim, seed, cap);
      return report_span(r, format);
    }
    if (orbit->parsed()) {
      const curv::QuadTensor a = curv::tensor_from_json(load_json_file(orbit_input));
      return report_span(
          curv::orbit_span_certificate(a, orbit_seed, samples_budget(orbit_samples)), format);
    }
  } catch (const curv::JsonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
