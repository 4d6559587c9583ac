#include "abeldense/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <unordered_set>

#include "abeldense/error.hpp"

namespace abeldense {

namespace {

double max_abs(const FloatMatrix& m) {
  double r = 0;
  for (double x : m.data()) r = std::max(r, std::abs(x));
  return r;
}

void check_commuting(const std::vector<FloatMatrix>& ms, double tol) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      const FloatMatrix d = ms[i] * ms[j] - ms[j] * ms[i];
      const double scale = std::max(1.0, max_abs(ms[i]) * max_abs(ms[j]));
      if (max_abs(d) > tol * scale)
        throw InputError("generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");
    }
}

double norm(const FloatVector& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Grid cell index of v in box, or -1 outside. Cells are addressed in base g.
std::int64_t cell_of(const FloatVector& v, const Box& box, std::size_t g) {
  std::int64_t idx = 0;
  for (std::size_t d = 0; d < v.size(); ++d) {
    const double t = (v[d] - box.lo[d]) / (box.hi[d] - box.lo[d]);
    if (!(t >= 0 && t <= 1)) return -1;
    auto c = static_cast<std::int64_t>(t * static_cast<double>(g));
    if (c == static_cast<std::int64_t>(g)) c -= 1;
    idx = idx * static_cast<std::int64_t>(g) + c;
  }
  return idx;
}

std::vector<std::size_t> digits(std::int64_t idx, std::size_t n, std::size_t g) {
  std::vector<std::size_t> out(n);
  for (std::size_t d = n; d-- > 0;) {
    out[d] = static_cast<std::size_t>(idx % static_cast<std::int64_t>(g));
    idx /= static_cast<std::int64_t>(g);
  }
  return out;
}

double total_cells(std::size_t n, std::size_t g) { return std::pow(static_cast<double>(g), static_cast<double>(n)); }

double best_subbox(const std::unordered_set<std::int64_t>& hits, std::size_t n, std::size_t g) {
  const std::size_t side = g / 2;
  if (side == 0 || n > 8) return 0;
  const std::size_t q = std::max<std::size_t>(1, g / 4);
  std::vector<std::size_t> starts;
  for (std::size_t s = 0; s + side <= g; s += q) starts.push_back(s);
  if (starts.back() + side < g) starts.push_back(g - side);
  std::size_t combos = 1;
  for (std::size_t d = 0; d < n; ++d) combos *= starts.size();
  std::vector<std::size_t> count(combos, 0);
  for (std::int64_t h : hits) {
    const auto dg = digits(h, n, g);
    // Enumerate sub-boxes containing this cell.
    std::vector<std::vector<std::size_t>> options(n);
    bool any = true;
    for (std::size_t d = 0; d < n && any; ++d) {
      for (std::size_t s = 0; s < starts.size(); ++s)
        if (dg[d] >= starts[s] && dg[d] < starts[s] + side) options[d].push_back(s);
      any = !options[d].empty();
    }
    if (!any) continue;
    std::vector<std::size_t> pos(n, 0);
    while (true) {
      std::size_t id = 0;
      for (std::size_t d = 0; d < n; ++d) id = id * starts.size() + options[d][pos[d]];
      ++count[id];
      std::size_t d = 0;
      while (d < n && ++pos[d] == options[d].size()) pos[d++] = 0;
      if (d == n) break;
    }
  }
  const double cells = total_cells(n, side);
  double best = 0;
  for (std::size_t c : count) best = std::max(best, static_cast<double>(c) / cells);
  return best;
}

double log_rescaled(const OrbitCloud& cloud, const Box& box, std::size_t g) {
  const std::size_t n = box.dimension();
  Box wide = box;
  for (std::size_t d = 0; d < n; ++d) {
    wide.lo[d] *= 2;
    wide.hi[d] *= 2;
  }
  auto in_shell = [&](std::int64_t idx) {
    const auto dg = digits(idx, n, g);
    double s = 0;
    for (std::size_t d = 0; d < n; ++d) {
      const double w = (box.hi[d] - box.lo[d]) / 2;
      const double c = wide.lo[d] + (static_cast<double>(dg[d]) + 0.5) * (wide.hi[d] - wide.lo[d]) / static_cast<double>(g);
      s += (c / w) * (c / w);
    }
    return s >= 1 && s < 4;
  };
  std::unordered_set<std::int64_t> hits;
  for (const auto& p : cloud.points) {
    const double r = norm(p);
    if (!(r > 0) || !std::isfinite(r)) continue;
    const double lr = std::log(r);
    const double f = 1 + (lr - std::floor(lr));
    FloatVector q(p.size());
    for (std::size_t d = 0; d < p.size(); ++d) q[d] = p[d] / r * f;
    const std::int64_t c = cell_of(q, wide, g);
    if (c >= 0 && in_shell(c)) hits.insert(c);
  }
  std::size_t shell = 0;
  const auto cells = static_cast<std::int64_t>(total_cells(n, g));
  for (std::int64_t c = 0; c < cells; ++c)
    if (in_shell(c)) ++shell;
  return shell == 0 ? 0 : static_cast<double>(hits.size()) / static_cast<double>(shell);
}

}  // namespace

FloatMatrix float_matrix(const PolyMatrix& m) {
  FloatMatrix out(m.rows(), m.cols(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = sym_eval(m(i, j));
  return out;
}

FloatVector float_vector(const std::vector<SymPoly>& v) {
  FloatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(sym_eval(x));
  return out;
}

std::uint64_t orbit_size(std::size_t k, std::size_t L) {
  // C(L+k, k) computed incrementally; exact at every step.
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (L + i) / i;
  return c;
}

OrbitCloud enumerate_orbit(const std::vector<FloatMatrix>& ms, const FloatVector& x, std::size_t L, double commute_tol) {
  const std::size_t n = x.size();
  for (const auto& m : ms)
    if (m.rows() != n || m.cols() != n) throw InputError("matrix size does not match the point");
  check_commuting(ms, commute_tol);

  OrbitCloud cloud;
  cloud.dimension = n;
  cloud.generators = ms.size();
  cloud.budget = L;
  const std::size_t k = ms.size();
  const std::uint64_t total = k == 0 ? 1 : orbit_size(k, L);
  cloud.points.reserve(total);
  // first[i]: index of the first nonzero exponent of point i (k for the empty word).
  std::vector<std::uint32_t> first;
  first.reserve(total);
  cloud.points.push_back(x);
  first.push_back(static_cast<std::uint32_t>(k));

  std::size_t level_begin = 0, level_end = 1;
  for (std::size_t deg = 1; deg <= L && k > 0; ++deg) {
    for (std::size_t p = level_begin; p < level_end; ++p) {
      const std::size_t top = std::min<std::size_t>(first[p], k - 1);
      for (std::size_t j = 0; j <= top; ++j) {
        const FloatMatrix& m = ms[j];
        FloatVector v(n, 0.0);
        const FloatVector& src = cloud.points[p];
        for (std::size_t r = 0; r < n; ++r) {
          double s = 0;
          for (std::size_t c = 0; c < n; ++c) s += m(r, c) * src[c];
          v[r] = s;
        }
        cloud.points.push_back(std::move(v));
        first.push_back(static_cast<std::uint32_t>(j));
      }
    }
    level_begin = level_end;
    level_end = cloud.points.size();
  }

  cloud.flags.resize(cloud.points.size(), PointFlag::ok);
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const double r = norm(cloud.points[i]);
    if (!(r <= kOverflowNorm)) {
      cloud.flags[i] = PointFlag::overflow;
      ++cloud.overflow_count;
    } else if (r < kUnderflowNorm) {
      cloud.flags[i] = PointFlag::underflow;
      ++cloud.underflow_count;
    }
  }
  return cloud;
}

FloatVector unit_base_point(const MatrixTuple& t) {
  FloatVector x = float_vector(t.base_point);
  const double r = norm(x);
  if (r > 0)
    for (double& v : x) v /= r;
  return x;
}

OrbitCloud enumerate_orbit(const MatrixTuple& t, std::size_t L, double commute_tol) {
  std::vector<FloatMatrix> ms;
  for (const auto& m : t.matrices) ms.push_back(float_matrix(m));
  return enumerate_orbit(ms, unit_base_point(t), L, commute_tol);
}

Box Box::cube(std::size_t n, double radius) { return {FloatVector(n, -radius), FloatVector(n, radius)}; }

std::string to_string(OrbitHint h) {
  switch (h) {
    case OrbitHint::looks_dense: return "LooksDense";
    case OrbitHint::looks_half_space: return "LooksHalfSpace";
    case OrbitHint::looks_somewhere_dense: return "LooksSomewhereDense";
    case OrbitHint::looks_nowhere_dense: return "LooksNowhereDense";
  }
  return "?";
}

CoverageReport coverage(const OrbitCloud& cloud, const Box& box, std::size_t g, const CoverageOptions& opts) {
  const std::size_t n = box.dimension();
  if (g < 2) throw InputError("grid resolution must be at least 2");
  if (n == 0 || box.hi.size() != n) throw InputError("box must have matching nonempty bounds");
  for (std::size_t d = 0; d < n; ++d)
    if (!(box.hi[d] > box.lo[d])) throw InputError("degenerate box");
  if (total_cells(n, g) > 4e18 / static_cast<double>(g)) throw InputError("grid too fine for this dimension");

  CoverageReport rep;
  rep.box = box;
  rep.grid = g;
  rep.thresholds = opts;
  rep.points_total = cloud.points.size();

  std::unordered_set<std::int64_t> hits;
  for (const auto& p : cloud.points) {
    if (p.size() != n) throw InputError("point dimension does not match the box");
    const std::int64_t c = cell_of(p, box, g);
    if (c < 0) continue;
    ++rep.points_in_box;
    hits.insert(c);
  }
  const double cells = total_cells(n, g);
  rep.hit_fraction = static_cast<double>(hits.size()) / cells;

  // Last-axis cells strictly on one side of x_n = 0.
  std::size_t pos_cells = 0, neg_cells = 0;
  const double lo = box.lo[n - 1], hi = box.hi[n - 1];
  const double step = (hi - lo) / static_cast<double>(g);
  for (std::size_t c = 0; c < g; ++c) {
    const double a = lo + static_cast<double>(c) * step, b = a + step;
    if (a >= 0) ++pos_cells;
    if (b <= 0) ++neg_cells;
  }
  const double slab = total_cells(n - 1, g);
  std::size_t pos_hits = 0, neg_hits = 0;
  for (std::int64_t h : hits) {
    const auto c = static_cast<std::size_t>(h % static_cast<std::int64_t>(g));
    const double a = lo + static_cast<double>(c) * step;
    if (a >= 0) ++pos_hits;
    if (a + step <= 0) ++neg_hits;
  }
  if (pos_cells) rep.hit_fraction_positive_halfspace = static_cast<double>(pos_hits) / (slab * static_cast<double>(pos_cells));
  if (neg_cells) rep.hit_fraction_negative_halfspace = static_cast<double>(neg_hits) / (slab * static_cast<double>(neg_cells));

  rep.best_subbox_fraction = best_subbox(hits, n, g);
  rep.log_rescaled_fraction = n <= 8 ? log_rescaled(cloud, box, g) : 0;

  const double hi_t = opts.dense_threshold, lo_t = opts.complement_threshold;
  const double ph = rep.hit_fraction_positive_halfspace, nh = rep.hit_fraction_negative_halfspace;
  if (rep.hit_fraction >= hi_t)
    rep.hint = OrbitHint::looks_dense;
  else if ((ph >= hi_t && nh <= lo_t) || (nh >= hi_t && ph <= lo_t))
    rep.hint = OrbitHint::looks_half_space;
  else if (rep.best_subbox_fraction >= hi_t)
    rep.hint = OrbitHint::looks_somewhere_dense;
  else
    rep.hint = OrbitHint::looks_nowhere_dense;
  return rep;
}

void write_dump(std::ostream& out, const OrbitCloud& cloud) {
  out << "# n=" << cloud.dimension << " k=" << cloud.generators << " L=" << cloud.budget << '\n';
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& p : cloud.points) {
    for (std::size_t d = 0; d < p.size(); ++d) out << (d ? " " : "") << p[d];
    out << '\n';
  }
  out.precision(old);
}

}  // namespace abeldense
