#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "abeldense/construct.hpp"
#include "abeldense/matrix.hpp"

namespace abeldense {

using FloatMatrix = Matrix<double>;
using FloatVector = std::vector<double>;

FloatMatrix float_matrix(const PolyMatrix& m);
FloatVector float_vector(const std::vector<SymPoly>& v);

enum class PointFlag : std::uint8_t { ok, overflow, underflow };

inline constexpr double kUnderflowNorm = 1e-12;
inline constexpr double kOverflowNorm = 1e12;
inline constexpr double kCommuteTolerance = 1e-10;

struct OrbitCloud {
  std::size_t dimension = 0;
  std::size_t generators = 0;  // k
  std::size_t budget = 0;      // L: max total word length
  std::vector<FloatVector> points;
  std::vector<PointFlag> flags;
  std::size_t overflow_count = 0;
  std::size_t underflow_count = 0;
};

// C(L+k, k): number of multi-exponents with total degree at most L.
std::uint64_t orbit_size(std::size_t k, std::size_t L);

// All M_1^{e_1}...M_k^{e_k} x with sum e_i <= L, in order of total degree.
// Each point is one matrix-vector product from its predecessor (first nonzero
// exponent decremented). Throws InputError if the matrices do not commute to
// the relative tolerance.
OrbitCloud enumerate_orbit(const std::vector<FloatMatrix>& ms, const FloatVector& x, std::size_t L,
                           double commute_tol = kCommuteTolerance);
// Base point rescaled to unit norm.
OrbitCloud enumerate_orbit(const MatrixTuple& t, std::size_t L, double commute_tol = kCommuteTolerance);
FloatVector unit_base_point(const MatrixTuple& t);

struct Box {
  FloatVector lo;
  FloatVector hi;
  static Box cube(std::size_t n, double radius = 1.0);
  std::size_t dimension() const { return lo.size(); }
};

enum class OrbitHint { looks_dense, looks_half_space, looks_somewhere_dense, looks_nowhere_dense };
std::string to_string(OrbitHint h);

struct CoverageOptions {
  double dense_threshold = 0.98;
  double complement_threshold = 0.02;
};

struct CoverageReport {
  Box box;
  std::size_t grid = 0;
  CoverageOptions thresholds;
  std::size_t points_total = 0;
  std::size_t points_in_box = 0;
  double hit_fraction = 0;
  // Over cells lying in {x_n > 0} and {x_n < 0}; middle cells of an odd grid are in neither.
  double hit_fraction_positive_halfspace = 0;
  double hit_fraction_negative_halfspace = 0;
  // Best fraction over half-scale sub-boxes aligned to quarter steps.
  double best_subbox_fraction = 0;
  // Points mapped v -> v/|v| (1 + frac(log|v|)), binned in 2*box over cells
  // whose centers lie in the shell 1 <= |c| < 2.
  double log_rescaled_fraction = 0;
  OrbitHint hint = OrbitHint::looks_nowhere_dense;
};

CoverageReport coverage(const OrbitCloud& cloud, const Box& box, std::size_t g, const CoverageOptions& opts = {});

// "# n=<n> k=<k> L=<L>" then one point per line.
void write_dump(std::ostream& out, const OrbitCloud& cloud);

}  // namespace abeldense
