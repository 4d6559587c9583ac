#include "abeldense/lp.hpp"

#include "abeldense/error.hpp"

namespace abeldense {

namespace {

struct Tableau {
  // rows x (cols + 1); last column is the right-hand side.
  RationalMatrix t;
  std::vector<std::size_t> basis;
  // z_j = c_B . T_j - c_j; last entry is the objective value.
  RationalVector z;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    const std::size_t w = cols + 1;
    const Rational p = t(r, c);
    for (std::size_t j = 0; j < w; ++j) t(r, j) /= p;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      if (i == r || t(i, c) == 0) continue;
      const Rational f = t(i, c);
      for (std::size_t j = 0; j < w; ++j)
        if (t(r, j) != 0) t(i, j) -= f * t(r, j);
    }
    if (z[c] != 0) {
      const Rational f = z[c];
      for (std::size_t j = 0; j < w; ++j)
        if (t(r, j) != 0) z[j] -= f * t(r, j);
    }
    basis[r] = c;
  }

  void set_objective(const RationalVector& c) {
    z.assign(cols + 1, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) z[j] = -c[j];
    for (std::size_t i = 0; i < t.rows(); ++i) {
      const Rational& cb = c[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) z[j] += cb * t(i, j);
    }
  }

  // Returns false when unbounded.
  bool run(const std::vector<bool>& allowed) {
    while (true) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (allowed[j] && z[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols) return true;
      std::size_t leave = t.rows();
      Rational best;
      for (std::size_t i = 0; i < t.rows(); ++i) {
        if (t(i, enter) <= 0) continue;
        Rational ratio = t(i, cols) / t(i, enter);
        if (leave == t.rows() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t.rows()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) throw InputError("LP dimension mismatch");

  Tableau tab;
  tab.cols = n + m;
  tab.t = RationalMatrix(m, n + m + 1, Rational(0));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    tab.t(i, n + i) = 1;
    tab.t(i, n + m) = flip ? Rational(-b[i]) : b[i];
    tab.basis[i] = n + i;
  }

  // Phase 1: maximize -sum(artificials).
  RationalVector phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  tab.set_objective(phase1);
  std::vector<bool> all(n + m, true);
  tab.run(all);
  LpResult out;
  if (tab.z[n + m] != 0) {
    out.status = LpStatus::infeasible;
    return out;
  }

  // Drive artificials out of the basis; rows that cannot be are redundant.
  std::vector<bool> redundant(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.t(i, j) != 0) {
        col = j;
        break;
      }
    if (col == n)
      redundant[i] = true;
    else
      tab.pivot(i, col);
  }

  RationalVector phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  tab.set_objective(phase2);
  std::vector<bool> originals(n + m, false);
  for (std::size_t j = 0; j < n; ++j) originals[j] = true;
  if (!tab.run(originals)) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (!redundant[i] && tab.basis[i] < n) out.x[tab.basis[i]] = tab.t(i, n + m);
  out.value = tab.z[n + m];
  return out;
}

}  // namespace abeldense
