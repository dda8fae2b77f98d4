#include "crepant/cones.hpp"

#include <algorithm>
#include <set>

#include "crepant/lp.hpp"

namespace crepant {

namespace {

bool lex_less(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// Is g a nonnegative combination of the others?
bool ray_redundant(const IntVec& g, const std::vector<IntVec>& others) {
  if (others.empty()) return false;
  std::size_t d = g.size(), n = others.size();
  RatMat a(d, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(others[j][i]);
  return lp_feasible_nonneg(a, to_rat(g));
}

bool is_pointed(const std::vector<IntVec>& gens) {
  // pointed iff no nonzero nonnegative combination sums to zero; normalize
  // the combination with sum(lambda) = 1.
  std::size_t d = gens.front().size(), n = gens.size();
  RatMat a(d + 1, n);
  RatVec b(d + 1, Rat(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(gens[j][i]);
  for (std::size_t j = 0; j < n; ++j) a(d, j) = 1;
  b[d] = 1;
  return !lp_feasible_nonneg(a, b);
}

IntMat rows_matrix(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] != i + n - k) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Facet normals of a full-dimensional pointed cone, oriented inward
// (nonnegative on every generator).
std::vector<IntVec> facet_normals_fulldim(const std::vector<IntVec>& gens,
                                          std::size_t d) {
  std::vector<IntVec> out;
  if (d == 1) {
    IntVec n(1);
    n[0] = gens.front()[0] > 0 ? 1 : -1;
    out.push_back(n);
    return out;
  }
  std::set<std::vector<Int>> seen;
  std::vector<std::size_t> c(d - 1);
  for (std::size_t i = 0; i < d - 1; ++i) c[i] = i;
  if (gens.size() < d - 1) return out;
  do {
    IntMat m(d - 1, d);
    for (std::size_t i = 0; i < d - 1; ++i) m.set_row(i, gens[c[i]]);
    auto kern = integer_kernel_basis(m);
    if (kern.size() != 1) continue;
    IntVec nrm = kern.front();
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      int s = sgn(dot(nrm, g));
      if (s > 0) pos = true;
      if (s < 0) neg = true;
      if (pos && neg) break;
    }
    if (pos && neg) continue;
    if (!pos && !neg) continue;
    if (neg)
      for (auto& x : nrm) x = -x;
    seen.insert(nrm);
  } while (next_combination(c, gens.size()));
  for (const auto& n : seen) out.push_back(n);
  return out;
}

}  // namespace

RationalCone RationalCone::from_generators(std::vector<IntVec> generators) {
  if (generators.empty())
    throw std::invalid_argument("RationalCone: no generators");
  std::size_t d = generators.front().size();
  std::vector<IntVec> prim;
  for (const auto& g : generators) {
    if (g.size() != d) throw ShapeMismatch("RationalCone: dimension mismatch");
    if (is_zero(g)) throw ZeroVector("RationalCone: zero generator");
    prim.push_back(primitive_part(g));
  }
  std::sort(prim.begin(), prim.end(), lex_less);
  prim.erase(std::unique(prim.begin(), prim.end()), prim.end());
  if (!is_pointed(prim))
    throw std::invalid_argument("RationalCone: cone is not pointed");
  // drop generators that are nonnegative combinations of the rest
  std::vector<IntVec> minimal;
  for (std::size_t i = 0; i < prim.size(); ++i) {
    std::vector<IntVec> others;
    for (std::size_t j = 0; j < prim.size(); ++j) {
      if (j == i) continue;
      bool dropped =
          std::find(minimal.begin(), minimal.end(), prim[j]) == minimal.end() &&
          j < i;
      if (!dropped) others.push_back(prim[j]);
    }
    if (!ray_redundant(prim[i], others)) minimal.push_back(prim[i]);
  }
  return RationalCone(std::move(minimal), d);
}

std::size_t RationalCone::rank() const {
  return crepant::rank(rows_matrix(gens_, ambient_));
}

RationalCone cone_over(const LatticePolytope& p) {
  if (!p.is_slice())
    throw std::invalid_argument("cone_over: not a slice polytope");
  return RationalCone::from_generators(p.vertices());
}

RationalCone dual_cone(const RationalCone& c) {
  if (!c.full_dimensional())
    throw std::invalid_argument("dual_cone: cone is not full-dimensional");
  auto normals = facet_normals_fulldim(c.generators(), c.ambient_dim());
  return RationalCone::from_generators(std::move(normals));
}

DualDescription dual_description(const RationalCone& c) {
  DualDescription out;
  IntMat g = rows_matrix(c.generators(), c.ambient_dim());
  out.lineality = integer_kernel_basis(g);
  if (c.full_dimensional()) {
    out.rays = dual_cone(c).generators();
    return out;
  }
  // work inside the saturated span, then lift the rays back
  auto basis = saturated_row_lattice(g);
  std::size_t k = basis.size(), d = c.ambient_dim();
  IntMat bmat = rows_matrix(basis, d);
  RatMat bt(d, k);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < k; ++j) bt(i, j) = Rat(basis[j][i]);
  std::vector<IntVec> down;
  for (const auto& gen : c.generators()) {
    auto sol = solve_rational(bt, to_rat(gen));
    auto iv = to_int(sol.x);
    if (sol.status != SolveStatus::Unique || !iv)
      throw std::logic_error("dual_description: chart solve failed");
    down.push_back(*iv);
  }
  auto chart_cone = RationalCone::from_generators(std::move(down));
  auto chart_dual = dual_cone(chart_cone);
  for (const auto& ray : chart_dual.generators()) {
    auto lift = solve_integral(bmat, ray);
    if (!lift) throw std::logic_error("dual_description: no integral lift");
    out.rays.push_back(primitive_part(*lift));
  }
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  return out;
}

Int multiplicity(const RationalCone& c) {
  IntMat g = rows_matrix(c.generators(), c.ambient_dim());
  if (crepant::rank(g) != c.generators().size())
    throw std::invalid_argument("multiplicity: cone is not simplicial");
  Int m = 1;
  for (const auto& e : elementary_divisors(g))
    if (e != 0) m *= e;
  return m;
}

std::optional<IntVec> gorenstein_functional(const RationalCone& c) {
  IntMat g = rows_matrix(c.generators(), c.ambient_dim());
  RatVec ones(c.generators().size(), Rat(1));
  if (c.full_dimensional()) {
    auto sol = solve_rational(g, ones);
    if (sol.status != SolveStatus::Unique) return std::nullopt;
    auto m = to_int(sol.x);
    if (!m) return std::nullopt;
    return m;  // <m, g> = 1 with integral m forces m primitive
  }
  IntVec b(c.generators().size(), Int(1));
  return solve_integral(g, b);
}

namespace {

// Lattice points of the half-open parallelepiped spanned by the rows of m
// (one representative per residue class of Z^k / row-lattice, shifted into
// sum lambda_i rows_i with 0 <= lambda_i < 1).
std::vector<IntVec> parallelepiped_points(const IntMat& m) {
  std::size_t k = m.rows();
  // column-style Hermite form of m^T: diagonal bounds the residue odometer
  IntMat mt(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) mt(i, j) = m(j, i);
  // reduce columns of mt to lower-triangular via unimodular column ops
  IntMat h = mt;
  for (std::size_t r = 0; r < k; ++r) {
    for (;;) {
      std::size_t p = k;
      for (std::size_t j = r; j < k; ++j)
        if (h(r, j) != 0 && (p == k || cmp(abs(h(r, j)), abs(h(r, p))) < 0))
          p = j;
      if (p == k) throw std::logic_error("parallelepiped: singular matrix");
      if (p != r)
        for (std::size_t i = 0; i < k; ++i) std::swap(h(i, r), h(i, p));
      bool clean = true;
      for (std::size_t j = r + 1; j < k; ++j) {
        if (h(r, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(r, j).get_mpz_t(), h(r, r).get_mpz_t());
        for (std::size_t i = 0; i < k; ++i) h(i, j) -= q * h(i, r);
        if (h(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, r) < 0)
      for (std::size_t i = 0; i < k; ++i) h(i, r) = -h(i, r);
  }
  // rational inverse of m^T for the lambda coordinates
  RatMat aug(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = Rat(mt(i, j));
    aug(i, k + i) = 1;
  }
  // Gauss-Jordan
  for (std::size_t col = 0, row = 0; col < k && row < k; ++col) {
    std::size_t p = row;
    while (p < k && aug(p, col) == 0) ++p;
    if (p == k) throw std::logic_error("parallelepiped: singular matrix");
    if (p != row)
      for (std::size_t j = 0; j < 2 * k; ++j) std::swap(aug(row, j), aug(p, j));
    Rat inv = 1 / aug(row, col);
    for (std::size_t j = 0; j < 2 * k; ++j) aug(row, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == row || aug(i, col) == 0) continue;
      Rat f = aug(i, col);
      for (std::size_t j = 0; j < 2 * k; ++j) aug(i, j) -= f * aug(row, j);
    }
    ++row;
  }
  std::vector<IntVec> pts;
  IntVec z(k, Int(0));
  for (;;) {
    // representative of the class of z inside the half-open parallelepiped
    RatVec lam(k, Rat(0));
    for (std::size_t j = 0; j < k; ++j) {
      Rat acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc += aug(j, k + i) * Rat(z[i]);
      lam[j] = acc;
    }
    IntVec x = z;
    for (std::size_t j = 0; j < k; ++j) {
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), lam[j].get_num().get_mpz_t(),
                 lam[j].get_den().get_mpz_t());
      if (fl != 0)
        for (std::size_t i = 0; i < k; ++i) x[i] -= fl * m(j, i);
    }
    pts.push_back(std::move(x));
    std::size_t j = 0;
    while (j < k) {
      ++z[j];
      if (z[j] < h(j, j)) break;
      z[j] = 0;
      ++j;
    }
    if (j == k) break;
  }
  return pts;
}

}  // namespace

std::vector<IntVec> hilbert_basis(const RationalCone& c) {
  std::size_t d = c.ambient_dim();
  IntMat g = rows_matrix(c.generators(), d);
  std::size_t k = crepant::rank(g);

  // pass to the saturated span so the cone is full-dimensional
  std::vector<IntVec> basis;
  std::vector<IntVec> gens_k;
  IntMat bmat(0, 0);
  if (k == d) {
    gens_k = c.generators();
  } else {
    basis = saturated_row_lattice(g);
    bmat = rows_matrix(basis, d);
    RatMat bt(d, k);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < k; ++j) bt(i, j) = Rat(basis[j][i]);
    for (const auto& gen : c.generators()) {
      auto sol = solve_rational(bt, to_rat(gen));
      auto iv = to_int(sol.x);
      if (sol.status != SolveStatus::Unique || !iv)
        throw std::logic_error("hilbert_basis: chart solve failed");
      gens_k.push_back(*iv);
    }
  }

  auto dual_rays = facet_normals_fulldim(gens_k, k);
  auto in_cone = [&](const IntVec& x) {
    for (const auto& n : dual_rays)
      if (dot(n, x) < 0) return false;
    return true;
  };
  IntVec degree(k, Int(0));
  for (const auto& n : dual_rays) degree = degree + n;

  // candidates: generators plus the half-open parallelepiped points of every
  // maximal linearly independent generator subset (Caratheodory covers every
  // irreducible element with one of these)
  std::set<std::vector<Int>> cand_set;
  for (const auto& gk : gens_k) cand_set.insert(gk);
  std::size_t ng = gens_k.size();
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  if (ng >= k) do {
      IntMat sub(k, k);
      for (std::size_t i = 0; i < k; ++i) sub.set_row(i, gens_k[comb[i]]);
      if (exact_det(sub) == 0) continue;
      for (auto& p : parallelepiped_points(sub))
        if (!is_zero(p)) cand_set.insert(std::move(p));
    } while (next_combination(comb, ng));

  std::vector<IntVec> cands(cand_set.begin(), cand_set.end());
  std::sort(cands.begin(), cands.end(), [&](const IntVec& a, const IntVec& b) {
    int cdeg = cmp(dot(degree, a), dot(degree, b));
    if (cdeg != 0) return cdeg < 0;
    return lex_less(a, b);
  });

  // ascending by degree: a candidate is reducible iff subtracting some
  // already-confirmed irreducible lands back in the cone
  std::vector<IntVec> hilb;
  for (const auto& x : cands) {
    bool reducible = false;
    for (const auto& h : hilb) {
      IntVec rest = x - h;
      if (!is_zero(rest) && in_cone(rest)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hilb.push_back(x);
  }

  if (k != d) {
    std::vector<IntVec> lifted;
    for (const auto& x : hilb) {
      IntVec p(d, Int(0));
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < d; ++i) p[i] += x[j] * basis[j][i];
      lifted.push_back(std::move(p));
    }
    hilb = std::move(lifted);
  }
  std::sort(hilb.begin(), hilb.end(), lex_less);
  return hilb;
}

std::size_t embedding_dimension(const RationalCone& c) {
  if (!c.full_dimensional())
    throw std::invalid_argument("embedding_dimension: cone not full-dimensional");
  return hilbert_basis(dual_cone(c)).size();
}

}  // namespace crepant
