#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace skel {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;
using SparseMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

// Hard input/state errors. Recoverable per-separator failures use Reject below.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonManifoldEdge : Error { using Error::Error; };
struct DegenerateFace : Error { using Error::Error; };
struct TooFewPoints : Error { using Error::Error; };
struct FlipLimitExceeded : Error { using Error::Error; };
struct SolverFailure : Error { using Error::Error; };
struct BinMismatch : Error { using Error::Error; };
struct NoRegions : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// Reasons a separator construction can be abandoned. These are expected
// outcomes at pipeline level: the source is consumed and sampling moves on.
enum class Reject {
  None,
  EmptyCutLocus,
  NoSplitFound,
  LocalMinTrap,
  DegenerateLoop,
  ConstraintDisconnects,
  CollapseDetected,
};

inline const char* to_string(Reject r) {
  switch (r) {
    case Reject::None: return "none";
    case Reject::EmptyCutLocus: return "empty_cut_locus";
    case Reject::NoSplitFound: return "no_split_found";
    case Reject::LocalMinTrap: return "local_min_trap";
    case Reject::DegenerateLoop: return "degenerate_loop";
    case Reject::ConstraintDisconnects: return "constraint_disconnects";
    case Reject::CollapseDetected: return "collapse_detected";
  }
  return "unknown";
}

// Deterministic RNG. std::mt19937_64 has a pinned algorithm; the helpers
// below avoid std::*_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t raw() { return state_(); }

  // Uniform in [0, 1) with 53 bits of randomness.
  double uniform01() { return static_cast<double>(state_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  int uniform_int(int n) {
    int v = static_cast<int>(uniform01() * static_cast<double>(n));
    return v < n ? v : n - 1;
  }

  // Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

 private:
  std::mt19937_64 state_;
};

inline double clamp(double x, double lo, double hi) {
  return x < lo ? lo : (x > hi ? hi : x);
}

// Angle between two vectors in [0, pi]; zero-length inputs give 0.
inline double angle_between(const Vec3& a, const Vec3& b) {
  double na = a.norm(), nb = b.norm();
  if (na < 1e-300 || nb < 1e-300) return 0.0;
  return std::acos(clamp(a.dot(b) / (na * nb), -1.0, 1.0));
}

}  // namespace skel
