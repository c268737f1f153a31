#include "curv/spaces.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace curv {

bool space_needs_metric(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::FAff:
    case SpaceTag::S2Zero:
    case SpaceTag::WWeyl:
    case SpaceTag::Lambda2Lambda2Zero:
    case SpaceTag::SCal:
    case SpaceTag::L2S20Tensor:
      return true;
    default:
      return false;
  }
}

std::string_view space_cli_name(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::RCurv: return "r";
    case SpaceTag::AAlg: return "a";
    case SpaceTag::FAff: return "f";
    case SpaceTag::UProj: return "u";
    case SpaceTag::WWeyl: return "w";
    case SpaceTag::Lambda2: return "lambda2";
    case SpaceTag::S2: return "s2";
    case SpaceTag::S2Zero: return "s2_0";
    case SpaceTag::Lambda2Lambda2: return "l2l2";
    case SpaceTag::Lambda2Lambda2Zero: return "l2l2_0";
    case SpaceTag::SCal: return "scal";
    case SpaceTag::L2S20Tensor: return "l2s20";
  }
  return "?";
}

std::optional<SpaceTag> space_from_cli_name(std::string_view name) {
  for (SpaceTag tag : {SpaceTag::RCurv, SpaceTag::AAlg, SpaceTag::FAff, SpaceTag::UProj,
                       SpaceTag::WWeyl, SpaceTag::Lambda2, SpaceTag::S2, SpaceTag::S2Zero,
                       SpaceTag::Lambda2Lambda2, SpaceTag::Lambda2Lambda2Zero, SpaceTag::SCal,
                       SpaceTag::L2S20Tensor})
    if (space_cli_name(tag) == name) return tag;
  return std::nullopt;
}

std::string_view identity_name(TensorIdentity id) {
  switch (id) {
    case TensorIdentity::I1a: return "1.a";
    case TensorIdentity::I1b: return "1.b";
    case TensorIdentity::I1c: return "1.c";
    case TensorIdentity::I1d: return "1.d";
    case TensorIdentity::I1e: return "1.e";
    case TensorIdentity::I1f: return "1.f";
    case TensorIdentity::I1i: return "1.i";
    case TensorIdentity::I1j: return "1.j";
    case TensorIdentity::I1k: return "1.k";
    case TensorIdentity::I1L: return "1.L";
    case TensorIdentity::I1n: return "1.n";
    case TensorIdentity::I1o: return "1.o";
    case TensorIdentity::I1p: return "1.p";
    case TensorIdentity::I1q: return "1.q";
  }
  return "?";
}

std::optional<TensorIdentity> identity_from_name(std::string_view name) {
  for (TensorIdentity id :
       {TensorIdentity::I1a, TensorIdentity::I1b, TensorIdentity::I1c, TensorIdentity::I1d,
        TensorIdentity::I1e, TensorIdentity::I1f, TensorIdentity::I1i, TensorIdentity::I1j,
        TensorIdentity::I1k, TensorIdentity::I1L, TensorIdentity::I1n, TensorIdentity::I1o,
        TensorIdentity::I1p, TensorIdentity::I1q})
    if (identity_name(id) == name) return id;
  if (name == "1.l") return TensorIdentity::I1L;
  return std::nullopt;
}

namespace {

bool is_operator_identity(TensorIdentity id) {
  switch (id) {
    case TensorIdentity::I1a:
    case TensorIdentity::I1b:
    case TensorIdentity::I1i:
    case TensorIdentity::I1j:
    case TensorIdentity::I1k:
    case TensorIdentity::I1L:
      return true;
    default:
      return false;
  }
}

bool check_antisym12(const QuadTensor& t) {
  const int m = t.dim();
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          if (t.at(i, j, k, l) != -t.at(j, i, k, l)) return false;
  return true;
}

bool check_cyclic123(const QuadTensor& t) {
  const int m = t.dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          if (!(t.at(i, j, k, l) + t.at(j, k, i, l) + t.at(k, i, j, l)).is_zero())
            return false;
  return true;
}

bool check_pair_sym(const QuadTensor& t) {
  const int m = t.dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          if (t.at(i, j, k, l) != t.at(k, l, i, j)) return false;
  return true;
}

bool check_antisym34(const QuadTensor& t) {
  const int m = t.dim();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = k; l < m; ++l)
          if (t.at(i, j, k, l) != -t.at(i, j, l, k)) return false;
  return true;
}

// operator trace over slots (1,4): b(x,y) = sum_i T_{ixy}^i
bool check_rho14_symmetric_op(const QuadTensor& t) {
  const int m = t.dim();
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      Rational s;
      for (int i = 0; i < m; ++i) s += t.at(i, x, y, i) - t.at(i, y, x, i);
      if (!s.is_zero()) return false;
    }
  return true;
}

bool check_rho34_zero_op(const QuadTensor& t) {
  const int m = t.dim();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      Rational s;
      for (int i = 0; i < m; ++i) s += t.at(x, y, i, i);
      if (!s.is_zero()) return false;
    }
  return true;
}

bool check_rho14_symmetric_cov(const QuadTensor& t, const Metric& g) {
  const int m = t.dim();
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      Rational s;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          const Rational& xi = g.xi_inv().at(i, j);
          if (xi.is_zero()) continue;
          s += xi * (t.at(i, x, y, j) - t.at(i, y, x, j));
        }
      if (!s.is_zero()) return false;
    }
  return true;
}

bool check_trace34_zero_cov(const QuadTensor& t, const Metric& g) {
  const int m = t.dim();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      Rational s;
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const Rational& xi = g.xi_inv().at(k, l);
          if (!xi.is_zero()) s += xi * t.at(x, y, k, l);
        }
      if (!s.is_zero()) return false;
    }
  return true;
}

}  // namespace

namespace {

bool is_trace_identity(TensorIdentity id) {
  return id == TensorIdentity::I1k || id == TensorIdentity::I1L ||
         id == TensorIdentity::I1p || id == TensorIdentity::I1q;
}

const Metric& metric_for_trace(const QuadTensor& t, TensorIdentity id,
                               const std::optional<Metric>& g) {
  if (!g)
    throw std::invalid_argument("satisfies: identity " + std::string(identity_name(id)) +
                                " on a covariant tensor needs a metric");
  if (g->dim() != t.dim()) throw std::invalid_argument("satisfies: metric dimension mismatch");
  return *g;
}

}  // namespace

bool satisfies(const QuadTensor& t, TensorIdentity id, const std::optional<Metric>& g) {
  // The four trace identities make sense in both variances: the bare
  // operator trace needs no metric, the covariant contraction does.
  if (is_trace_identity(id)) {
    const bool sym14 = id == TensorIdentity::I1k || id == TensorIdentity::I1p;
    if (t.variance() == Variance::Operator)
      return sym14 ? check_rho14_symmetric_op(t) : check_rho34_zero_op(t);
    const Metric& m = metric_for_trace(t, id, g);
    return sym14 ? check_rho14_symmetric_cov(t, m) : check_trace34_zero_cov(t, m);
  }
  const bool op = is_operator_identity(id);
  if (op && t.variance() != Variance::Operator)
    throw std::invalid_argument("satisfies: identity " + std::string(identity_name(id)) +
                                " applies to operator variance");
  if (!op && t.variance() != Variance::Covariant)
    throw std::invalid_argument("satisfies: identity " + std::string(identity_name(id)) +
                                " applies to covariant variance");
  switch (id) {
    case TensorIdentity::I1a:
    case TensorIdentity::I1i:
    case TensorIdentity::I1c:
    case TensorIdentity::I1n:
      return check_antisym12(t);
    case TensorIdentity::I1b:
    case TensorIdentity::I1j:
    case TensorIdentity::I1d:
    case TensorIdentity::I1o:
      return check_cyclic123(t);
    case TensorIdentity::I1e:
      return check_pair_sym(t);
    case TensorIdentity::I1f:
      return check_antisym34(t);
    default:
      throw std::logic_error("satisfies: unreachable");
  }
}

namespace {

struct RowSet {
  int ambient;
  std::vector<SparseRow> rows;

  void add(std::vector<std::pair<int, Rational>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow r;
    for (auto& [c, v] : entries) {
      if (!r.empty() && r.back().first == c) {
        r.back().second += v;
        if (r.back().second.is_zero()) r.pop_back();
      } else if (!v.is_zero()) {
        r.emplace_back(c, std::move(v));
      }
    }
    if (!r.empty()) rows.push_back(std::move(r));
  }
};

int idx4(int m, int i, int j, int k, int l) { return ((i * m + j) * m + k) * m + l; }
int idx2(int m, int i, int j) { return i * m + j; }

void add_antisym12(int m, RowSet& rs) {
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          rs.add({{idx4(m, i, j, k, l), 1}, {idx4(m, j, i, k, l), 1}});
}

void add_cyclic123(int m, RowSet& rs) {
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = j; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          rs.add({{idx4(m, i, j, k, l), 1}, {idx4(m, j, k, i, l), 1}, {idx4(m, k, i, j, l), 1}});
          rs.add({{idx4(m, i, k, j, l), 1}, {idx4(m, k, j, i, l), 1}, {idx4(m, j, i, k, l), 1}});
        }
}

void add_pair_sym(int m, RowSet& rs) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          if (idx4(m, i, j, k, l) >= idx4(m, k, l, i, j)) continue;
          rs.add({{idx4(m, i, j, k, l), 1}, {idx4(m, k, l, i, j), -1}});
        }
}

void add_pair_antisym(int m, RowSet& rs) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          if (idx4(m, i, j, k, l) > idx4(m, k, l, i, j)) continue;
          rs.add({{idx4(m, i, j, k, l), 1}, {idx4(m, k, l, i, j), 1}});
        }
}

void add_antisym34(int m, RowSet& rs) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = k; l < m; ++l)
          rs.add({{idx4(m, i, j, k, l), 1}, {idx4(m, i, j, l, k), 1}});
}

void add_sym34(int m, RowSet& rs) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l)
          rs.add({{idx4(m, i, j, k, l), 1}, {idx4(m, i, j, l, k), -1}});
}

// sum_i T_{ixy}^i = 0 (operator trace over slots 1,4)
void add_rho14_op_zero(int m, RowSet& rs) {
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      std::vector<std::pair<int, Rational>> e;
      for (int i = 0; i < m; ++i) e.emplace_back(idx4(m, i, x, y, i), 1);
      rs.add(std::move(e));
    }
}

void add_rho14_op_symmetric(int m, RowSet& rs) {
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      std::vector<std::pair<int, Rational>> e;
      for (int i = 0; i < m; ++i) {
        e.emplace_back(idx4(m, i, x, y, i), 1);
        e.emplace_back(idx4(m, i, y, x, i), -1);
      }
      rs.add(std::move(e));
    }
}

void add_rho34_op_zero(int m, RowSet& rs) {
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      std::vector<std::pair<int, Rational>> e;
      for (int i = 0; i < m; ++i) e.emplace_back(idx4(m, x, y, i, i), 1);
      rs.add(std::move(e));
    }
}

// sum_{ij} Xi^{ij} T_{ixyj} = 0
void add_rho14_cov_zero(int m, const Metric& g, RowSet& rs) {
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      std::vector<std::pair<int, Rational>> e;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          const Rational& xi = g.xi_inv().at(i, j);
          if (!xi.is_zero()) e.emplace_back(idx4(m, i, x, y, j), xi);
        }
      rs.add(std::move(e));
    }
}

void add_rho14_cov_symmetric(int m, const Metric& g, RowSet& rs) {
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      std::vector<std::pair<int, Rational>> e;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          const Rational& xi = g.xi_inv().at(i, j);
          if (xi.is_zero()) continue;
          e.emplace_back(idx4(m, i, x, y, j), xi);
          e.emplace_back(idx4(m, i, y, x, j), -xi);
        }
      rs.add(std::move(e));
    }
}

// sum_{kl} Xi^{kl} T_{xykl} = 0
void add_trace34_cov_zero(int m, const Metric& g, RowSet& rs) {
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      std::vector<std::pair<int, Rational>> e;
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          const Rational& xi = g.xi_inv().at(k, l);
          if (!xi.is_zero()) e.emplace_back(idx4(m, x, y, k, l), xi);
        }
      rs.add(std::move(e));
    }
}

// pi_{1,s}: (1/2) sum_{il} Xi^{il} (T_{ijkl} + T_{ikjl}) = 0
void add_pi1s_zero(int m, const Metric& g, RowSet& rs) {
  for (int j = 0; j < m; ++j)
    for (int k = j; k < m; ++k) {
      std::vector<std::pair<int, Rational>> e;
      for (int i = 0; i < m; ++i)
        for (int l = 0; l < m; ++l) {
          const Rational& xi = g.xi_inv().at(i, l);
          if (xi.is_zero()) continue;
          e.emplace_back(idx4(m, i, j, k, l), xi);
          e.emplace_back(idx4(m, i, k, j, l), xi);
        }
      rs.add(std::move(e));
    }
}

void add_pi1a_zero(int m, const Metric& g, RowSet& rs) {
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      std::vector<std::pair<int, Rational>> e;
      for (int i = 0; i < m; ++i)
        for (int l = 0; l < m; ++l) {
          const Rational& xi = g.xi_inv().at(i, l);
          if (xi.is_zero()) continue;
          e.emplace_back(idx4(m, i, j, k, l), xi);
          e.emplace_back(idx4(m, i, k, j, l), -xi);
        }
      rs.add(std::move(e));
    }
}

// pi_Lambda: T_{kjil} + T_{ikjl} - T_{ljik} - T_{iljk} = 0
void add_pi_lambda_zero(int m, RowSet& rs) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          rs.add({{idx4(m, k, j, i, l), 1},
                  {idx4(m, i, k, j, l), 1},
                  {idx4(m, l, j, i, k), -1},
                  {idx4(m, i, l, j, k), -1}});
}

void add_bilinear_antisym(int m, RowSet& rs) {
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      rs.add({{idx2(m, i, j), 1}, {idx2(m, j, i), 1}});
}

void add_bilinear_sym(int m, RowSet& rs) {
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      rs.add({{idx2(m, i, j), 1}, {idx2(m, j, i), -1}});
}

void add_bilinear_trace_zero(int m, const Metric& g, RowSet& rs) {
  std::vector<std::pair<int, Rational>> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Rational& xi = g.xi_inv().at(i, j);
      if (!xi.is_zero()) e.emplace_back(idx2(m, i, j), xi);
    }
  rs.add(std::move(e));
}

}  // namespace

Subspace basis_of(const SpaceId& s, Dim m) {
  if (space_needs_metric(s.tag) != s.metric.has_value())
    throw std::invalid_argument(space_needs_metric(s.tag)
                                    ? "basis_of: space requires a metric"
                                    : "basis_of: space does not take a metric");
  if (s.metric && s.metric->dim() != m.m)
    throw std::invalid_argument("basis_of: metric dimension mismatch");
  const int n = m.m;
  const bool bilinear_space =
      s.tag == SpaceTag::Lambda2 || s.tag == SpaceTag::S2 || s.tag == SpaceTag::S2Zero;
  RowSet rs{bilinear_space ? n * n : n * n * n * n, {}};
  switch (s.tag) {
    case SpaceTag::RCurv:
      add_antisym12(n, rs);
      add_cyclic123(n, rs);
      break;
    case SpaceTag::AAlg:
      add_antisym12(n, rs);
      add_cyclic123(n, rs);
      add_pair_sym(n, rs);
      add_antisym34(n, rs);
      break;
    case SpaceTag::FAff:
      add_antisym12(n, rs);
      add_cyclic123(n, rs);
      add_rho14_cov_symmetric(n, *s.metric, rs);
      add_trace34_cov_zero(n, *s.metric, rs);
      break;
    case SpaceTag::UProj:
      add_antisym12(n, rs);
      add_cyclic123(n, rs);
      add_rho14_op_zero(n, rs);
      break;
    case SpaceTag::WWeyl:
      add_antisym12(n, rs);
      add_cyclic123(n, rs);
      add_pair_sym(n, rs);
      add_antisym34(n, rs);
      add_rho14_cov_zero(n, *s.metric, rs);
      break;
    case SpaceTag::Lambda2:
      add_bilinear_antisym(n, rs);
      break;
    case SpaceTag::S2:
      add_bilinear_sym(n, rs);
      break;
    case SpaceTag::S2Zero:
      add_bilinear_sym(n, rs);
      add_bilinear_trace_zero(n, *s.metric, rs);
      break;
    case SpaceTag::Lambda2Lambda2:
      add_antisym12(n, rs);
      add_antisym34(n, rs);
      add_pair_antisym(n, rs);
      break;
    case SpaceTag::Lambda2Lambda2Zero:
      add_antisym12(n, rs);
      add_antisym34(n, rs);
      add_pair_antisym(n, rs);
      add_rho14_cov_zero(n, *s.metric, rs);
      break;
    case SpaceTag::SCal:
      add_antisym12(n, rs);
      add_sym34(n, rs);
      add_trace34_cov_zero(n, *s.metric, rs);
      add_pi1s_zero(n, *s.metric, rs);
      add_pi1a_zero(n, *s.metric, rs);
      add_pi_lambda_zero(n, rs);
      break;
    case SpaceTag::L2S20Tensor:
      add_antisym12(n, rs);
      add_sym34(n, rs);
      add_trace34_cov_zero(n, *s.metric, rs);
      break;
  }
  return null_space_of_rows(rs.rows, rs.ambient);
}

long long dim_formula(SpaceTag tag, int m) {
  const long long n = m;
  switch (tag) {
    case SpaceTag::RCurv: return n * n * (n * n - 1) / 3;
    case SpaceTag::AAlg: return n * n * (n * n - 1) / 12;
    case SpaceTag::FAff: return n * (n - 1) * (2 * n * n + 2 * n - 3) / 6;
    case SpaceTag::UProj: return n * n * (n * n - 4) / 3;
    case SpaceTag::WWeyl: return n * (n + 1) * (n + 2) * (n - 3) / 12;
    case SpaceTag::Lambda2: return n * (n - 1) / 2;
    case SpaceTag::S2: return n * (n + 1) / 2;
    case SpaceTag::S2Zero: return (n - 1) * (n + 2) / 2;
    case SpaceTag::Lambda2Lambda2: {
      const long long d = n * (n - 1) / 2;
      return d * (d - 1) / 2;
    }
    case SpaceTag::Lambda2Lambda2Zero: return n * (n - 1) * (n - 3) * (n + 2) / 8;
    case SpaceTag::SCal: return (n - 1) * (n - 2) * (n + 1) * (n + 4) / 8;
    // Product of the factor dimensions. (The source table's /8 is
    // inconsistent with its own component sum; /4 is what the pieces add
    // up to.)
    case SpaceTag::L2S20Tensor: return n * (n - 1) * (n - 1) * (n + 2) / 4;
  }
  throw std::invalid_argument("dim_formula: unknown space");
}

long long w_component_dim(int which, int m) {
  const long long n = m;
  switch (which) {
    case 1: return 1;
    case 2:
    case 5: return (n - 1) * (n + 2) / 2;
    case 3:
    case 4: return n * (n - 1) / 2;
    case 6: return n * (n + 1) * (n - 3) * (n + 2) / 12;
    case 7: return (n - 1) * (n - 2) * (n + 1) * (n + 4) / 8;
    case 8: return n * (n - 1) * (n - 3) * (n + 2) / 8;
    default: throw std::invalid_argument("w_component_dim: component index must be 1..8");
  }
}

bool bianchi_equivalence_certificate(Dim m) {
  const int n = m.m;
  RowSet base{n * n * n * n, {}};
  add_antisym12(n, base);
  add_cyclic123(n, base);
  RowSet with_e = base;
  add_pair_sym(n, with_e);
  RowSet with_f = base;
  add_antisym34(n, with_f);
  const Subspace n1 = null_space_of_rows(with_e.rows, with_e.ambient);
  const Subspace n2 = null_space_of_rows(with_f.rows, with_f.ambient);
  if (n1 != n2) return false;
  return n1 == basis_of({SpaceTag::AAlg, std::nullopt}, m);
}

bool trace_equivalence_certificate_operator(Dim m) {
  const int n = m.m;
  RowSet base{n * n * n * n, {}};
  add_antisym12(n, base);
  add_cyclic123(n, base);
  RowSet with_k = base;
  add_rho14_op_symmetric(n, with_k);
  RowSet with_l = base;
  add_rho34_op_zero(n, with_l);
  return null_space_of_rows(with_k.rows, with_k.ambient) ==
         null_space_of_rows(with_l.rows, with_l.ambient);
}

bool trace_equivalence_certificate_covariant(Dim m, const Metric& g) {
  const int n = m.m;
  if (g.dim() != n) throw std::invalid_argument("certificate: metric dimension mismatch");
  RowSet base{n * n * n * n, {}};
  add_antisym12(n, base);
  add_cyclic123(n, base);
  RowSet with_p = base;
  add_rho14_cov_symmetric(n, g, with_p);
  RowSet with_q = base;
  add_trace34_cov_zero(n, g, with_q);
  return null_space_of_rows(with_p.rows, with_p.ambient) ==
         null_space_of_rows(with_q.rows, with_q.ambient);
}

}  // namespace curv
