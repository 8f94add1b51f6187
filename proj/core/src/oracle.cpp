#include "qmod/oracle.hpp"

namespace qmod {

std::uint64_t trial_seed(std::uint64_t master, int trial) {
  SplitMix64 rng(master);
  std::uint64_t s = 0;
  for (int t = 0; t <= trial; ++t) s = rng.next();
  return s;
}

namespace {

void check_config(const PrimeFieldConfig& cfg, int total) {
  if (cfg.trials <= 0) throw Error("oracle needs at least one trial");
  if (total > cfg.max_total) {
    throw Error("total dimension " + std::to_string(total) + " exceeds the oracle cap of " +
                std::to_string(cfg.max_total));
  }
}

std::vector<int> offsets(const DimVector& dims) {
  std::vector<int> off(dims.size() + 1, 0);
  for (std::size_t v = 0; v < dims.size(); ++v) off[v + 1] = off[v] + dims[v];
  return off;
}

}  // namespace

FiniteFieldRep sample_rep(const Quiver& q, const DimVector& a, const PrimeFieldConfig& cfg) {
  check_same_size(static_cast<std::size_t>(q.num_vertices()), a.size(), "dimension vector");
  const PrimeField field(cfg.modulus);
  SplitMix64 rng(cfg.seed);
  FiniteFieldRep rep{q, a, cfg.modulus, {}};
  for (const Arrow& arr : q.arrows()) {
    rep.matrices.push_back({arr, FpMatrix::random(field, rng, a[arr.second], a[arr.first])});
  }
  return rep;
}

int rep_span_dimension(const FiniteFieldRep& v) {
  const int n = v.dims.total();
  if (n <= 0) throw Error("representation has total dimension 0");
  const PrimeField field(v.modulus);
  const std::vector<int> off = offsets(v.dims);
  std::vector<FpMatrix> gens;
  for (std::size_t vert = 0; vert < v.dims.size(); ++vert) {
    if (v.dims[vert] == 0) continue;
    FpMatrix e(n, n);
    for (int i = off[vert]; i < off[vert + 1]; ++i) e(i, i) = 1;
    gens.push_back(std::move(e));
  }
  for (const ArrowMatrix& am : v.matrices) {
    const auto [s, t] = am.arrow;
    if (am.matrix.rows() != v.dims[t] || am.matrix.cols() != v.dims[s]) {
      throw Error("arrow matrix shape does not match the dimension vector");
    }
    if (am.matrix.rows() == 0 || am.matrix.cols() == 0) continue;
    FpMatrix big(n, n);
    for (int i = 0; i < am.matrix.rows(); ++i) {
      for (int j = 0; j < am.matrix.cols(); ++j) big(off[t] + i, off[s] + j) = am.matrix(i, j);
    }
    gens.push_back(std::move(big));
  }
  return span_closure(field, n, gens).dimension;
}

bool is_simple_rep(const FiniteFieldRep& v) {
  const int n = v.dims.total();
  return rep_span_dimension(v) == n * n;
}

std::string to_string(Verdict v) { return v == Verdict::yes ? "yes" : "probably_no"; }

OracleReport oracle_simple_exists(const Quiver& q, const DimVector& a, const PrimeFieldConfig& cfg) {
  check_same_size(static_cast<std::size_t>(q.num_vertices()), a.size(), "dimension vector");
  const int n = a.total();
  if (n <= 0) throw Error("oracle needs a nonzero dimension vector");
  check_config(cfg, n);
  OracleReport report{Verdict::probably_no, cfg.modulus, n * n, {}};
  for (int t = 0; t < cfg.trials; ++t) {
    PrimeFieldConfig sub = cfg;
    sub.seed = trial_seed(cfg.seed, t);
    const int dim = rep_span_dimension(sample_rep(q, a, sub));
    report.trial_span_dims.push_back(dim);
    if (dim == n * n) {
      report.verdict = Verdict::yes;
      break;
    }
  }
  return report;
}

std::uint64_t default_knot_modulus(int p, int q) {
  if (p <= 0 || q <= 0) throw Error("p and q must be positive");
  return smallest_prime_congruent_one(static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(q), 1000);
}

namespace {

FpMatrix random_invertible(const PrimeField& field, SplitMix64& rng, int n, FpMatrix& inv) {
  while (true) {
    FpMatrix m = FpMatrix::random(field, rng, n, n);
    if (auto i = inverse(field, m)) {
      inv = std::move(*i);
      return m;
    }
  }
}

FpMatrix conjugated_diagonal(const PrimeField& field, SplitMix64& rng, const std::vector<int>& mult,
                             std::uint64_t root, int n) {
  FpMatrix diag(n, n);
  int pos = 0;
  std::uint64_t eig = 1;
  for (int m : mult) {
    for (int r = 0; r < m; ++r, ++pos) diag(pos, pos) = eig;
    eig = field.mul(eig, root);
  }
  FpMatrix inv;
  const FpMatrix p = random_invertible(field, rng, n, inv);
  return multiply(field, multiply(field, p, diag), inv);
}

}  // namespace

OracleReport oracle_torus_knot_irreducible(const TorusKnotDims& d, const PrimeFieldConfig& cfg) {
  const int n = d.n();
  check_config(cfg, n);
  const PrimeField field(cfg.modulus);
  const std::uint64_t zeta = field.root_of_unity(static_cast<std::uint64_t>(d.p()));
  const std::uint64_t xi = field.root_of_unity(static_cast<std::uint64_t>(d.q()));
  OracleReport report{Verdict::probably_no, cfg.modulus, n * n, {}};
  for (int t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng(trial_seed(cfg.seed, t));
    const FpMatrix gens[2] = {conjugated_diagonal(field, rng, d.a(), zeta, n),
                              conjugated_diagonal(field, rng, d.b(), xi, n)};
    const int dim = span_closure(field, n, gens).dimension;
    report.trial_span_dims.push_back(dim);
    if (dim == n * n) {
      report.verdict = Verdict::yes;
      break;
    }
  }
  return report;
}

}  // namespace qmod
