#include "crepant/lp.hpp"

#include <cstddef>
#include <limits>

namespace crepant {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Full-tableau simplex, maximizing. Variables 0..n-1, one basic variable per
// row. Bland's rule on both the entering and the leaving choice.
struct Tableau {
  std::size_t m, n;
  RatMat t;                     // m x (n+1), last column = rhs
  RatVec z;                     // reduced-cost row, length n+1 (last = -objective)
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    Rat inv = 1 / t(r, c);
    for (std::size_t j = 0; j <= n; ++j) t(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t(i, c) == 0) continue;
      Rat f = t(i, c);
      for (std::size_t j = 0; j <= n; ++j) t(i, j) -= f * t(r, j);
    }
    if (z[c] != 0) {
      Rat f = z[c];
      for (std::size_t j = 0; j <= n; ++j) z[j] -= f * t(r, j);
    }
    basis[r] = c;
  }

  // Runs until optimal or unbounded; entering column restricted to [0, limit).
  LpStatus run(std::size_t limit) {
    for (;;) {
      std::size_t c = kNone;
      for (std::size_t j = 0; j < limit; ++j)
        if (z[j] > 0) {
          c = j;
          break;
        }
      if (c == kNone) return LpStatus::Optimal;
      std::size_t r = kNone;
      for (std::size_t i = 0; i < m; ++i) {
        if (t(i, c) <= 0) continue;
        if (r == kNone) {
          r = i;
          continue;
        }
        Rat cur = t(i, n) / t(i, c);
        Rat best = t(r, n) / t(r, c);
        if (cur < best || (cur == best && basis[i] < basis[r])) r = i;
      }
      if (r == kNone) return LpStatus::Unbounded;
      pivot(r, c);
    }
  }
};

}  // namespace

LpResult lp_standard_max(const RatMat& a, const RatVec& b, const RatVec& c) {
  std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m || c.size() != n)
    throw ShapeMismatch("lp_standard_max: shape mismatch");

  // Phase 1 with one artificial per row.
  Tableau tb;
  tb.m = m;
  tb.n = n + m;
  tb.t = RatMat(m, tb.n + 1);
  tb.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    int sgn = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tb.t(i, j) = sgn * a(i, j);
    tb.t(i, n + i) = 1;
    tb.t(i, tb.n) = sgn * b[i];
    tb.basis[i] = n + i;
  }
  // maximize -sum(artificials): z_j = sum_i t(i, j) for the structural part
  tb.z.assign(tb.n + 1, Rat(0));
  for (std::size_t j = 0; j <= tb.n; ++j) {
    if (j >= n && j < tb.n) continue;  // artificial columns start at cost 0
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += tb.t(i, j);
    tb.z[j] = s;
  }
  tb.run(n);  // artificials never re-enter
  if (tb.z[tb.n] != 0) return {LpStatus::Infeasible, Rat(0), {}};

  // Drive leftover artificials out of the basis (degenerate rows).
  for (std::size_t i = 0; i < m; ++i) {
    if (tb.basis[i] < n) continue;
    std::size_t c = kNone;
    for (std::size_t j = 0; j < n; ++j)
      if (tb.t(i, j) != 0) {
        c = j;
        break;
      }
    if (c != kNone) tb.pivot(i, c);
    // else: the row is all-zero over structural columns; harmless.
  }

  // Phase 2 objective.
  tb.z.assign(tb.n + 1, Rat(0));
  for (std::size_t j = 0; j < n; ++j) tb.z[j] = c[j];
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t bi = tb.basis[i];
    if (bi < n && tb.z[bi] != 0) {
      Rat f = tb.z[bi];
      for (std::size_t j = 0; j <= tb.n; ++j) tb.z[j] -= f * tb.t(i, j);
    }
  }
  LpStatus st = tb.run(n);
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};

  RatVec x(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (tb.basis[i] < n) x[tb.basis[i]] = tb.t(i, tb.n);
  Rat value = 0;
  for (std::size_t j = 0; j < n; ++j) value += c[j] * x[j];
  return {LpStatus::Optimal, value, std::move(x)};
}

bool lp_feasible_nonneg(const RatMat& a, const RatVec& b) {
  RatVec c(a.cols(), Rat(0));
  return lp_standard_max(a, b, c).status == LpStatus::Optimal;
}

LpResult lp_max(const RatMat& a_ub, const RatVec& b_ub, const RatMat& a_eq,
                const RatVec& b_eq, const RatVec& c) {
  std::size_t n = c.size();
  std::size_t mu = a_ub.rows(), me = a_eq.rows();
  if ((mu && a_ub.cols() != n) || (me && a_eq.cols() != n))
    throw ShapeMismatch("lp_max: shape mismatch");
  // x = u - w with u, w >= 0, slack per inequality.
  std::size_t nn = 2 * n + mu;
  RatMat a(mu + me, nn);
  RatVec b(mu + me);
  for (std::size_t i = 0; i < mu; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = a_ub(i, j);
      a(i, n + j) = -a_ub(i, j);
    }
    a(i, 2 * n + i) = 1;
    b[i] = b_ub[i];
  }
  for (std::size_t i = 0; i < me; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(mu + i, j) = a_eq(i, j);
      a(mu + i, n + j) = -a_eq(i, j);
    }
    b[mu + i] = b_eq[i];
  }
  RatVec cc(nn, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    cc[j] = c[j];
    cc[n + j] = -c[j];
  }
  LpResult r = lp_standard_max(a, b, cc);
  if (r.status != LpStatus::Optimal) return r;
  RatVec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = r.x[j] - r.x[n + j];
  r.x = std::move(x);
  return r;
}

}  // namespace crepant
