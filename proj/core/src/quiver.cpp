#include "qmod/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qmod {

DimVector::DimVector(std::vector<int> coords) : coords_(std::move(coords)) {
  for (int c : coords_) {
    if (c < 0) throw Error("dimension vector has a negative coordinate: " + to_string(*this));
  }
}

DimVector::DimVector(std::initializer_list<int> coords) : DimVector(std::vector<int>(coords)) {}

DimVector DimVector::unit(std::size_t size, std::size_t vertex) {
  if (vertex >= size) throw Error("unit vector index out of range");
  std::vector<int> c(size, 0);
  c[vertex] = 1;
  return DimVector(std::move(c));
}

int DimVector::total() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

bool DimVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

bool DimVector::leq(const DimVector& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

DimVector DimVector::operator+(const DimVector& other) const {
  check_same_size(size(), other.size(), "dimension vector");
  std::vector<int> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return DimVector(std::move(c));
}

DimVector DimVector::operator-(const DimVector& other) const {
  check_same_size(size(), other.size(), "dimension vector");
  std::vector<int> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coords_[i];
  return DimVector(std::move(c));
}

DimVector DimVector::scaled(int factor) const {
  std::vector<int> c(coords_);
  for (int& x : c) x *= factor;
  return DimVector(std::move(c));
}

std::string to_string(const DimVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

void check_same_size(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) {
    throw Error(std::string(what) + " has length " + std::to_string(actual) + ", expected " +
                std::to_string(expected));
  }
}

Quiver::Quiver(int num_vertices, std::span<const Arrow> arrows) : num_vertices_(num_vertices) {
  if (num_vertices <= 0) throw Error("quiver needs at least one vertex");
  counts_.assign(static_cast<std::size_t>(num_vertices) * num_vertices, 0);
  for (const auto& [s, t] : arrows) {
    if (s < 0 || s >= num_vertices || t < 0 || t >= num_vertices) {
      throw Error("arrow (" + std::to_string(s) + "," + std::to_string(t) +
                  ") has an endpoint outside [0," + std::to_string(num_vertices) + ")");
    }
    ++counts_[static_cast<std::size_t>(s) * num_vertices + t];
  }
}

Quiver::Quiver(int num_vertices, std::initializer_list<Arrow> arrows)
    : Quiver(num_vertices, std::span<const Arrow>(arrows.begin(), arrows.size())) {}

Quiver Quiver::from_counts(int num_vertices, std::vector<int> counts) {
  if (num_vertices <= 0) throw Error("quiver needs at least one vertex");
  check_same_size(static_cast<std::size_t>(num_vertices) * num_vertices, counts.size(),
                  "arrow count matrix");
  if (std::any_of(counts.begin(), counts.end(), [](int c) { return c < 0; })) {
    throw Error("negative arrow count");
  }
  Quiver q;
  q.num_vertices_ = num_vertices;
  q.counts_ = std::move(counts);
  return q;
}

int Quiver::num_arrows() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

int Quiver::out_degree(int vertex) const {
  int d = 0;
  for (int t = 0; t < num_vertices_; ++t) d += arrow_count(vertex, t);
  return d;
}

std::vector<Arrow> Quiver::arrows() const {
  std::vector<Arrow> out;
  for (int s = 0; s < num_vertices_; ++s) {
    for (int t = 0; t < num_vertices_; ++t) {
      for (int m = arrow_count(s, t); m > 0; --m) out.emplace_back(s, t);
    }
  }
  return out;
}

Quiver Quiver::subquiver(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  std::vector<int> counts(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      counts[static_cast<std::size_t>(i) * k + j] = arrow_count(vertices[i], vertices[j]);
    }
  }
  return from_counts(k, std::move(counts));
}

EulerMatrix euler_form(const Quiver& q) {
  const int k = q.num_vertices();
  std::vector<std::int64_t> e(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      e[static_cast<std::size_t>(i) * k + j] = (i == j ? 1 : 0) - q.arrow_count(i, j);
    }
  }
  return EulerMatrix(k, std::move(e));
}

std::int64_t euler_pairing(const EulerMatrix& chi, const DimVector& a, const DimVector& b) {
  const auto k = static_cast<std::size_t>(chi.size());
  check_same_size(k, a.size(), "first dimension vector");
  check_same_size(k, b.size(), "second dimension vector");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      sum += static_cast<std::int64_t>(a[i]) * chi(static_cast<int>(i), static_cast<int>(j)) * b[j];
    }
  }
  return sum;
}

std::int64_t euler_pairing(const Quiver& q, const DimVector& a, const DimVector& b) {
  return euler_pairing(euler_form(q), a, b);
}

std::int64_t theta_pairing(const Weight& theta, const DimVector& b) {
  check_same_size(theta.size(), b.size(), "dimension vector");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < b.size(); ++i) sum += static_cast<std::int64_t>(theta[i]) * b[i];
  return sum;
}

VertexSet support(const DimVector& a) {
  VertexSet s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) s.push_back(static_cast<int>(i));
  }
  return s;
}

namespace {

void check_vertex_set(const Quiver& q, std::span<const int> vertices) {
  if (vertices.empty()) throw Error("vertex set is empty");
  std::vector<char> seen(q.num_vertices(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= q.num_vertices()) throw Error("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw Error("vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
  }
}

// Vertices of the subquiver reachable from local index 0, following arrows
// forwards or backwards.
std::vector<char> reach(const Quiver& sub, bool reverse) {
  const int k = sub.num_vertices();
  std::vector<char> seen(k, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < k; ++w) {
      const int n = reverse ? sub.arrow_count(w, v) : sub.arrow_count(v, w);
      if (n > 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool all_set(const std::vector<char>& flags) {
  return std::all_of(flags.begin(), flags.end(), [](char c) { return c != 0; });
}

}  // namespace

bool is_strongly_connected(const Quiver& q, std::span<const int> vertices) {
  check_vertex_set(q, vertices);
  const Quiver sub = q.subquiver(vertices);
  return all_set(reach(sub, false)) && all_set(reach(sub, true));
}

bool is_cyclic_type(const Quiver& q, std::span<const int> vertices) {
  check_vertex_set(q, vertices);
  const Quiver sub = q.subquiver(vertices);
  const int k = sub.num_vertices();
  for (int v = 0; v < k; ++v) {
    int in = 0;
    for (int u = 0; u < k; ++u) in += sub.arrow_count(u, v);
    if (sub.out_degree(v) != 1 || in != 1) return false;
  }
  // Every vertex has in- and out-degree one, so the arrows form disjoint
  // cycles; one cycle iff connected.
  return all_set(reach(sub, false));
}

Quiver kronecker(int n) {
  if (n <= 0) throw Error("kronecker quiver needs n >= 1");
  return Quiver::from_counts(2, {0, n, 0, 0});
}

Quiver cyclic(int n) {
  if (n <= 0) throw Error("cyclic quiver needs n >= 1");
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i) arrows.emplace_back(i, (i + 1) % n);
  return Quiver(n, arrows);
}

Quiver bipartite(int p, int q) {
  if (p <= 0 || q <= 0) throw Error("bipartite quiver needs p, q >= 1");
  std::vector<Arrow> arrows;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) arrows.emplace_back(i, p + j);
  }
  return Quiver(p + q, arrows);
}

Quiver build_preset(const std::string& name, std::span<const int> params) {
  auto expect = [&](std::size_t n) {
    if (params.size() != n) {
      throw Error("preset '" + name + "' takes " + std::to_string(n) + " parameter(s), got " +
                  std::to_string(params.size()));
    }
  };
  if (name == "kronecker") {
    expect(1);
    return kronecker(params[0]);
  }
  if (name == "cyclic") {
    expect(1);
    return cyclic(params[0]);
  }
  if (name == "bipartite") {
    expect(2);
    return bipartite(params[0], params[1]);
  }
  throw Error("unknown preset '" + name + "' (expected kronecker, cyclic or bipartite)");
}

}  // namespace qmod
