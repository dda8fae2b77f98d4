#include "crepant/ehrhart.hpp"

namespace crepant {

Int binomial(const Int& n, const Int& k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return r;
}

Int count_points(const LatticePolytope& p, const Int& nu) {
  if (nu < 0) throw std::invalid_argument("count_points: nu must be >= 0");
  if (nu == 0) return 1;
  return Int(p.dilate(nu).lattice_points().size());
}

Rat evaluate_polynomial(const RatVec& coefficients, const Int& nu) {
  Rat acc = 0, pw = 1;
  for (const auto& c : coefficients) {
    acc += c * pw;
    pw *= Rat(nu);
  }
  return acc;
}

EhrhartData ehrhart_polynomial(const LatticePolytope& p) {
  std::size_t k = p.dim();
  // Vandermonde interpolation through nu = 0..k
  RatMat a(k + 1, k + 1);
  RatVec b(k + 1);
  for (std::size_t nu = 0; nu <= k; ++nu) {
    Rat pw = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      a(nu, j) = pw;
      pw *= Rat(Int(nu));
    }
    b[nu] = Rat(count_points(p, Int(nu)));
  }
  auto sol = solve_rational(a, b);
  if (sol.status != SolveStatus::Unique)
    throw std::logic_error("ehrhart_polynomial: interpolation failed");
  EhrhartData e;
  e.dim = k;
  e.coefficients = sol.x;
  for (std::size_t nu = k + 1; nu <= k + 2; ++nu) {
    if (evaluate_polynomial(e.coefficients, Int(nu)) !=
        Rat(count_points(p, Int(nu))))
      throw std::logic_error(
          "ehrhart_polynomial: verification nodes disagree (counting bug)");
  }
  e.delta = delta_vector(e.coefficients, k);
  return e;
}

Int ehrhart_nakajima(const ParamSequence& m, const Int& nu) {
  auto adm = is_admissible(m);
  if (!adm.ok)
    throw std::invalid_argument("ehrhart_nakajima: inadmissible sequence");
  if (nu < 0) throw std::invalid_argument("ehrhart_nakajima: nu >= 0");
  if (nu == 0) return 1;
  // x_1 = nu, 0 <= x_{j+1} <= <m_j, x>, counted by nested iteration
  std::size_t d = m.d;
  IntVec x(d, Int(0));
  x[0] = nu;
  Int total = 0;
  // depth-first over the coordinates
  struct Walker {
    const ParamSequence& m;
    IntVec& x;
    Int& total;
    void descend(std::size_t j) {
      if (j == m.d) {
        total += 1;
        return;
      }
      Int hi = dot(m.rows[j - 1], x);
      for (Int t = 0; t <= hi; ++t) {
        x[j] = t;
        descend(j + 1);
      }
      x[j] = 0;
    }
  } walker{m, x, total};
  if (d == 1) return 1;
  walker.descend(1);
  return total;
}

RatVec nakajima_closed_form(const ParamSequence& m) {
  auto at = [&](std::size_t i, std::size_t j) { return Rat(m.rows[i - 1][j - 1]); };
  if (m.d == 2) {
    return {Rat(1), at(1, 1)};
  }
  if (m.d == 3) {
    Rat m11 = at(1, 1), m21 = at(2, 1), m22 = at(2, 2);
    RatVec c(3);
    c[0] = 1;
    c[1] = m11 + Rat(1, 2) * m22 * m11 + m21;
    c[2] = Rat(1, 2) * m22 * m11 * m11 + m21 * m11;
    return c;
  }
  if (m.d == 4) {
    Rat m11 = at(1, 1), m21 = at(2, 1), m22 = at(2, 2);
    Rat m31 = at(3, 1), m32 = at(3, 2), m33 = at(3, 3);
    RatVec c(4);
    c[0] = 1;
    c[1] = Rat(1, 2) * m32 * m11 + m21 + m11 + Rat(1, 2) * m33 * m21 +
           Rat(1, 2) * m22 * m11 + m31 + Rat(1, 12) * m33 * m22 * m22 * m11 +
           Rat(1, 6) * m32 * m22 * m11 + Rat(1, 4) * m33 * m22 * m11;
    c[2] = m21 * m11 + Rat(1, 2) * m33 * m21 * m21 +
           Rat(1, 2) * m31 * m22 * m11 +
           Rat(1, 4) * m33 * m22 * m22 * m11 * m11 + m31 * m21 +
           Rat(1, 2) * m22 * m11 * m11 + Rat(1, 2) * m32 * m11 * m11 +
           Rat(1, 2) * m32 * m22 * m11 * m11 +
           Rat(1, 4) * m33 * m22 * m11 * m11 + Rat(1, 2) * m33 * m21 * m11 +
           m31 * m11 + Rat(1, 2) * m32 * m21 * m11 +
           Rat(1, 2) * m33 * m22 * m21 * m11;
    c[3] = m31 * m21 * m11 + Rat(1, 2) * m32 * m21 * m11 * m11 +
           Rat(1, 2) * m33 * m21 * m21 * m11 +
           Rat(1, 6) * m33 * m22 * m22 * m11 * m11 * m11 +
           Rat(1, 2) * m33 * m22 * m21 * m11 * m11 +
           Rat(1, 2) * m31 * m22 * m11 * m11 +
           Rat(1, 3) * m32 * m22 * m11 * m11 * m11;
    return c;
  }
  throw std::invalid_argument("nakajima_closed_form: only d in {2,3,4}");
}

std::vector<Int> delta_vector(const RatVec& coefficients, std::size_t k) {
  if (coefficients.size() != k + 1)
    throw ShapeMismatch("delta_vector: expected k+1 coefficients");
  std::vector<Int> delta(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    Rat acc = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      Int inner = 0;
      for (std::size_t xi = 0; xi <= j; ++xi) {
        Int base = Int(j) - Int(xi);
        Int pw;  // (j - xi)^i with 0^0 = 1
        if (i == 0)
          pw = 1;
        else {
          mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), i);
        }
        Int term = binomial(Int(k + 1), Int(xi)) * pw;
        if (xi % 2 == 1) term = -term;
        inner += term;
      }
      acc += Rat(inner) * coefficients[i];
    }
    if (acc.get_den() != 1)
      throw std::invalid_argument("delta_vector: non-integral entry");
    delta[j] = acc.get_num();
  }
  return delta;
}

CohomologyProfile cohomology_dims(const LatticePolytope& p) {
  if (!p.is_slice())
    throw std::invalid_argument("cohomology_dims: not a slice polytope");
  auto e = ehrhart_polynomial(p);
  CohomologyProfile c;
  std::size_t d = p.ambient_dim();
  c.dims.assign(d, Int(0));
  for (std::size_t j = 0; j < e.delta.size() && j < d; ++j)
    c.dims[j] = e.delta[j];
  return c;
}

CohomologyProfile hypersurface_cohomology(std::size_t d, const Int& k) {
  if (d < 2 || k < 1)
    throw std::invalid_argument("hypersurface_cohomology: d >= 2, k >= 1");
  CohomologyProfile c;
  c.dims.assign(d, Int(0));
  for (std::size_t j = 0; j < d; ++j) {
    Int acc = 0;
    for (std::size_t i = 0; i <= j; ++i) {
      Int term = binomial(Int(d), Int(i)) *
                 binomial(k * Int(j - i) + Int(d) - 1, Int(d) - 1);
      if (i % 2 == 1) term = -term;
      acc += term;
    }
    c.dims[j] = acc;
  }
  return c;
}

std::vector<Int> elementary_symmetric(const std::vector<Int>& ks) {
  std::vector<Int> s(ks.size() + 1, Int(0));
  s[0] = 1;
  for (const auto& k : ks)
    for (std::size_t i = s.size() - 1; i >= 1; --i) s[i] += k * s[i - 1];
  return s;
}

CohomologyProfile rp_cohomology(const std::vector<Int>& ks) {
  std::size_t d = ks.size() + 1;
  for (const auto& k : ks)
    if (k < 1) throw std::invalid_argument("rp_cohomology: k_i >= 1 required");
  auto s = elementary_symmetric(ks);
  CohomologyProfile c;
  c.dims.assign(d, Int(0));
  for (std::size_t j = 0; j < d; ++j) {
    Int acc = 0;
    for (std::size_t i = 0; i < d; ++i) {
      Int inner = 0;
      for (std::size_t xi = 0; xi <= j; ++xi) {
        Int base = Int(j) - Int(xi);
        Int pw;
        if (i == 0)
          pw = 1;
        else
          mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), i);
        Int term = binomial(Int(d), Int(xi)) * pw;
        if (xi % 2 == 1) term = -term;
        inner += term;
      }
      acc += inner * s[i];
    }
    c.dims[j] = acc;
  }
  return c;
}

}  // namespace crepant
