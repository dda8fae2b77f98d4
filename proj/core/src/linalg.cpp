#include "crepant/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace crepant {

Int exact_det(const IntMat& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("exact_det: non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rat exact_det(const RatMat& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("exact_det: non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  RatMat a = m;
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      det = -det;
    }
    det *= a(k, k);
    Rat inv = 1 / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

namespace {

// Row echelon over Q in place; returns pivot columns.
std::vector<std::size_t> echelon(RatMat& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const IntMat& m) {
  RatMat a = to_rat(m);
  return echelon(a).size();
}

RatSolve solve_rational(const RatMat& a, const RatVec& b) {
  if (a.rows() != b.size())
    throw ShapeMismatch("solve_rational: rhs length mismatch");
  RatMat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = echelon(aug);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] == a.cols()) return {SolveStatus::Inconsistent, {}};
  if (pivots.size() < a.cols()) return {SolveStatus::Underdetermined, {}};
  RatVec x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return {SolveStatus::Unique, std::move(x)};
}

RatSolve solve_rational(const IntMat& a, const RatVec& b) {
  return solve_rational(to_rat(a), b);
}

std::optional<AffineSolutionSet> solve_affine(const RatMat& a, const RatVec& b) {
  RatMat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = echelon(aug);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] == a.cols()) return std::nullopt;
  AffineSolutionSet sol;
  sol.particular.assign(a.cols(), Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    sol.particular[pivots[i]] = aug(i, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec k(a.cols());
    k[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -aug(i, f);
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

namespace {

struct SmithWork {
  IntMat a, u, v;

  void row_swap(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  void row_add(std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) += f * a(src, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += f * u(src, c);
  }
  void col_add(std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) += f * a(r, src);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) += f * v(r, src);
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
};

}  // namespace

// Smith normal form by pivoting on the minimal nonzero absolute value; desk
// scale only, no modular shortcuts.
SmithDecomposition smith_decomposition(const IntMat& m) {
  SmithWork w{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // minimal |entry| in the trailing block as pivot
      std::size_t pi = k, pj = k;
      bool found = false;
      for (std::size_t i = k; i < w.a.rows(); ++i)
        for (std::size_t j = k; j < w.a.cols(); ++j)
          if (w.a(i, j) != 0 &&
              (!found || cmp(abs(w.a(i, j)), abs(w.a(pi, pj))) < 0)) {
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) {
        // trailing block zero; done
        return {w.a, w.u, w.v};
      }
      if (pi != k) w.row_swap(pi, k);
      if (pj != k) w.col_swap(pj, k);
      bool clean = true;
      for (std::size_t i = k + 1; i < w.a.rows(); ++i) {
        if (w.a(i, k) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.a(i, k).get_mpz_t(), w.a(k, k).get_mpz_t());
        w.row_add(i, k, -q);
        if (w.a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < w.a.cols(); ++j) {
        if (w.a(k, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.a(k, j).get_mpz_t(), w.a(k, k).get_mpz_t());
        w.col_add(j, k, -q);
        if (w.a(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the remaining block by the pivot
      bool divides = true;
      for (std::size_t i = k + 1; i < w.a.rows() && divides; ++i)
        for (std::size_t j = k + 1; j < w.a.cols() && divides; ++j)
          if (w.a(i, j) % w.a(k, k) != 0) {
            w.row_add(k, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (w.a(k, k) < 0) w.row_negate(k);
  }
  return {w.a, w.u, w.v};
}

std::vector<Int> elementary_divisors(const IntMat& m) {
  std::size_t n = std::min(m.rows(), m.cols());
  if (n == 0) return {};
  auto s = smith_decomposition(m);
  std::vector<Int> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = s.d(k, k);
  return d;
}

std::optional<IntVec> solve_integral(const IntMat& a, const IntVec& b) {
  if (a.rows() != b.size())
    throw ShapeMismatch("solve_integral: rhs length mismatch");
  auto s = smith_decomposition(a);
  // a x = b  <=>  d (v^-1 x) = u b
  IntVec ub(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < a.rows(); ++j) acc += s.u(i, j) * b[j];
    ub[i] = acc;
  }
  IntVec y(a.cols(), Int(0));
  std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int di = i < n ? s.d(i, i) : Int(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % di != 0) return std::nullopt;
      y[i] = ub[i] / di;
    }
  }
  IntVec x(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += s.v(i, j) * y[j];
    x[i] = acc;
  }
  return x;
}

std::vector<IntVec> integer_kernel_basis(const IntMat& a) {
  // kernel of a = columns of v beyond the rank (u a v = d)
  auto s = smith_decomposition(a);
  std::size_t n = std::min(a.rows(), a.cols());
  std::size_t r = 0;
  while (r < n && s.d(r, r) != 0) ++r;
  std::vector<IntVec> basis;
  for (std::size_t j = r; j < a.cols(); ++j) {
    IntVec col(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) col[i] = s.v(i, j);
    basis.push_back(primitive_part(col));
  }
  return basis;
}

std::vector<IntVec> saturated_row_lattice(const IntMat& a) {
  if (a.rows() == 0) return {};
  // u a v = d  =>  a = u^-1 d v^-1; the saturation of the row span is
  // spanned by the first r rows of v^-1.
  auto s = smith_decomposition(a);
  std::size_t n = std::min(a.rows(), a.cols());
  std::size_t r = 0;
  while (r < n && s.d(r, r) != 0) ++r;
  IntMat vinv = unimodular_inverse(s.v);
  std::vector<IntVec> basis;
  for (std::size_t i = 0; i < r; ++i) basis.push_back(vinv.row(i));
  return basis;
}

AffineLatticeBasis affine_lattice_basis(const std::vector<IntVec>& points) {
  if (points.empty())
    throw std::invalid_argument("affine_lattice_basis: no points");
  AffineLatticeBasis out;
  out.origin = points.front();
  if (points.size() == 1) return out;
  IntMat diffs(points.size() - 1, out.origin.size());
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.set_row(i - 1, points[i] - out.origin);
  out.basis = saturated_row_lattice(diffs);
  return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("mat_mul shape mismatch");
  IntMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMat unimodular_inverse(const IntMat& u) {
  if (u.rows() != u.cols()) throw ShapeMismatch("unimodular_inverse: non-square");
  std::size_t n = u.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rat(u(i, j));
    aug(i, n + i) = 1;
  }
  auto pivots = echelon(aug);
  if (pivots.size() != n)
    throw std::invalid_argument("unimodular_inverse: singular matrix");
  IntMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat x = aug(i, n + j);
      if (x.get_den() != 1)
        throw std::invalid_argument("unimodular_inverse: input not unimodular");
      inv(i, j) = x.get_num();
    }
  return inv;
}

std::optional<IntVec> to_int(const RatVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) return std::nullopt;
    r[i] = v[i].get_num();
  }
  return r;
}

}  // namespace crepant
