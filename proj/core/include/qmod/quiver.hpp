#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qmod {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exponential algorithm would exceed its lattice-point budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A dimension vector: one nonnegative integer per vertex.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<int> coords);
  DimVector(std::initializer_list<int> coords);

  static DimVector zero(std::size_t size) { return DimVector(std::vector<int>(size, 0)); }
  static DimVector unit(std::size_t size, std::size_t vertex);

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  std::span<const int> coords() const { return coords_; }

  /// Sum of all coordinates.
  int total() const;
  bool is_zero() const;

  /// Componentwise partial order.
  bool leq(const DimVector& other) const;

  DimVector operator+(const DimVector& other) const;
  /// Componentwise difference; throws if any coordinate would become negative.
  DimVector operator-(const DimVector& other) const;
  DimVector scaled(int factor) const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

 private:
  std::vector<int> coords_;
};

std::string to_string(const DimVector& v);

/// An integral weight θ; induces θ(β) = Σ t_i b_i.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  std::span<const int> coords() const { return coords_; }

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<int> coords_;
};

using Arrow = std::pair<int, int>;  // (source, target), 0-based
using VertexSet = std::vector<int>;

/// A finite directed multigraph. Loops and parallel arrows are allowed; arrows
/// are stored as a dense count matrix since only multiplicities enter any formula.
class Quiver {
 public:
  Quiver() = default;
  Quiver(int num_vertices, std::span<const Arrow> arrows);
  Quiver(int num_vertices, std::initializer_list<Arrow> arrows);

  /// Row-major k×k matrix of arrow counts, entry (s,t) = #{arrows s→t}.
  static Quiver from_counts(int num_vertices, std::vector<int> counts);

  int num_vertices() const { return num_vertices_; }
  int arrow_count(int source, int target) const {
    return counts_[static_cast<std::size_t>(source) * num_vertices_ + target];
  }
  int num_arrows() const;
  int out_degree(int vertex) const;
  int loops(int vertex) const { return arrow_count(vertex, vertex); }

  /// All arrows with multiplicity, sorted by (source, target).
  std::vector<Arrow> arrows() const;

  /// Full subquiver on the given vertices, renumbered in the order given.
  Quiver subquiver(std::span<const int> vertices) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int num_vertices_ = 0;
  std::vector<int> counts_;
};

/// χ_ij = δ_ij − #{arrows i→j}.
class EulerMatrix {
 public:
  EulerMatrix() = default;
  EulerMatrix(int size, std::vector<std::int64_t> entries)
      : size_(size), entries_(std::move(entries)) {}

  int size() const { return size_; }
  std::int64_t operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * size_ + j];
  }

  friend bool operator==(const EulerMatrix&, const EulerMatrix&) = default;

 private:
  int size_ = 0;
  std::vector<std::int64_t> entries_;
};

EulerMatrix euler_form(const Quiver& q);

/// aᵀ χ b.
std::int64_t euler_pairing(const EulerMatrix& chi, const DimVector& a, const DimVector& b);
std::int64_t euler_pairing(const Quiver& q, const DimVector& a, const DimVector& b);

std::int64_t theta_pairing(const Weight& theta, const DimVector& b);

/// Vertices with positive coordinate, ascending.
VertexSet support(const DimVector& a);

/// True iff every ordered pair of the given vertices is joined by a directed
/// path inside the full subquiver on them. A single vertex always qualifies.
bool is_strongly_connected(const Quiver& q, std::span<const int> vertices);

/// True iff the full subquiver on the given vertices is one oriented cycle
/// (Ã_n with cyclic orientation; one vertex with exactly one loop is Ã_0).
bool is_cyclic_type(const Quiver& q, std::span<const int> vertices);

// Presets.
Quiver kronecker(int n);
Quiver cyclic(int n);
/// p+q vertices, left vertices first, one arrow from each left vertex to each right vertex.
Quiver bipartite(int p, int q);

/// Builds "kronecker", "cyclic" or "bipartite" from its integer parameters.
Quiver build_preset(const std::string& name, std::span<const int> params);

void check_same_size(std::size_t expected, std::size_t actual, const char* what);

}  // namespace qmod

template <>
struct std::hash<qmod::DimVector> {
  std::size_t operator()(const qmod::DimVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int c : v.coords()) {
      h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
