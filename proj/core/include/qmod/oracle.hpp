#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmod/prime_field.hpp"
#include "qmod/quiver.hpp"
#include "qmod/torus_knot.hpp"

namespace qmod {

inline constexpr std::uint64_t kDefaultQuiverModulus = 1009;

struct PrimeFieldConfig {
  std::uint64_t modulus = kDefaultQuiverModulus;
  std::uint64_t seed = 0;
  int trials = 20;
  /// Largest total dimension the oracle accepts.
  int max_total = 8;
};

/// Seed of trial t: the (t+1)-th output of SplitMix64 started at the master seed.
std::uint64_t trial_seed(std::uint64_t master, int trial);

struct ArrowMatrix {
  Arrow arrow;
  FpMatrix matrix;  // dims[target] × dims[source]
};

/// A representation over F_ℓ: one matrix per arrow (parallel arrows each get
/// their own), listed in the order of Quiver::arrows().
struct FiniteFieldRep {
  Quiver quiver;
  DimVector dims;
  std::uint64_t modulus = 0;
  std::vector<ArrowMatrix> matrices;
};

/// Uniform random matrices from SplitMix64(cfg.seed); reproducible.
FiniteFieldRep sample_rep(const Quiver& q, const DimVector& a, const PrimeFieldConfig& cfg);

/// Dimension of the span of the path algebra's image in End(⊕ V_v), vertex
/// projectors included.
int rep_span_dimension(const FiniteFieldRep& v);

/// Burnside: the representation is absolutely simple iff the span is n².
bool is_simple_rep(const FiniteFieldRep& v);

enum class Verdict { yes, probably_no };

std::string to_string(Verdict v);

/// Evidence, never proof. `yes` certifies that a simple representation exists
/// over the algebraic closure of F_ℓ.
struct OracleReport {
  Verdict verdict = Verdict::probably_no;
  std::uint64_t modulus = 0;
  int target_dim = 0;  // n²
  /// Span dimension of each evaluated trial; stops after the first certificate.
  std::vector<int> trial_span_dims;
};

OracleReport oracle_simple_exists(const Quiver& q, const DimVector& a, const PrimeFieldConfig& cfg);

/// Smallest prime ℓ > 1000 with ℓ ≡ 1 (mod p·q).
std::uint64_t default_knot_modulus(int p, int q);

/// Samples A = P·D_a·P⁻¹ and B = R·D_b·R⁻¹ over F_ℓ, with D_a carrying the
/// i-th power of a primitive p-th root of unity a_i times (likewise D_b), and
/// reports whether some pair generates the full matrix algebra.
OracleReport oracle_torus_knot_irreducible(const TorusKnotDims& d, const PrimeFieldConfig& cfg);

}  // namespace qmod
