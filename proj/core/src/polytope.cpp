#include "crepant/polytope.hpp"

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

// p in conv(others)? Exact feasibility of the convex-combination system.
bool in_hull_of(const IntVec& p, const std::vector<IntVec>& others) {
  if (others.empty()) return false;
  std::size_t d = p.size(), n = others.size();
  RatMat a(d + 1, n);
  RatVec b(d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(others[j][i]);
    b[i] = Rat(p[i]);
  }
  for (std::size_t j = 0; j < n; ++j) a(d, j) = 1;
  b[d] = 1;
  return lp_feasible_nonneg(a, b);
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

IntVec chart_coords_impl(const AffineLatticeBasis& ab, const IntVec& p) {
  std::size_t k = ab.basis.size(), d = ab.origin.size();
  IntVec rhs = p - ab.origin;
  if (k == 0) {
    if (!is_zero(rhs))
      throw std::invalid_argument("chart_coords: point off the affine hull");
    return {};
  }
  RatMat a(d, k);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = Rat(ab.basis[j][i]);
  auto sol = solve_rational(a, to_rat(rhs));
  if (sol.status != SolveStatus::Unique)
    throw std::invalid_argument("chart_coords: point off the affine hull");
  auto c = to_int(sol.x);
  if (!c)
    throw std::invalid_argument("chart_coords: point not in the affine lattice");
  return *c;
}

}  // namespace

std::vector<IntVec> hull_vertices(const std::vector<IntVec>& points) {
  if (points.empty()) throw std::invalid_argument("hull_vertices: no points");
  std::size_t d = points.front().size();
  for (const auto& p : points)
    if (p.size() != d) throw ShapeMismatch("hull_vertices: dimension mismatch");
  std::vector<IntVec> uniq = points;
  std::sort(uniq.begin(), uniq.end(), lex_less);
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<IntVec> verts;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    std::vector<IntVec> others;
    others.reserve(uniq.size() - 1);
    for (std::size_t j = 0; j < uniq.size(); ++j)
      if (j != i) others.push_back(uniq[j]);
    if (!in_hull_of(uniq[i], others)) verts.push_back(uniq[i]);
  }
  return verts;
}

std::vector<std::pair<IntVec, Int>> facet_inequalities_fulldim(
    const std::vector<IntVec>& pts) {
  std::vector<std::pair<IntVec, Int>> out;
  if (pts.empty()) return out;
  std::size_t k = pts.front().size();
  std::size_t n = pts.size();
  if (k == 0 || n < k) return out;
  std::set<std::pair<std::vector<Int>, Int>> seen;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  do {
    IntMat diffs(k - 1, k);
    for (std::size_t i = 1; i < k; ++i)
      diffs.set_row(i - 1, pts[c[i]] - pts[c[0]]);
    auto kern = integer_kernel_basis(diffs);
    if (kern.size() != 1) continue;
    IntVec nrm = kern.front();
    Int rhs = dot(nrm, pts[c[0]]);
    bool below = false, above = false;
    for (const auto& p : pts) {
      int s = cmp(dot(nrm, p), rhs);
      if (s < 0) below = true;
      if (s > 0) above = true;
      if (below && above) break;
    }
    if (below && above) continue;  // not supporting
    if (!below && !above) continue;  // all tight: degenerate input
    if (above) {
      for (auto& x : nrm) x = -x;
      rhs = -rhs;
    }
    seen.insert({std::move(nrm), std::move(rhs)});
  } while (next_combination(c, n));
  for (const auto& [nn, rr] : seen) out.push_back({nn, rr});
  return out;
}

struct LatticePolytope::Cache {
  std::once_flag chart_once, facets_once;
  AffineLatticeBasis chart;
  std::vector<IntVec> chart_verts;
  std::vector<Facet> facets;
};

LatticePolytope::LatticePolytope(std::vector<IntVec> verts, std::size_t ambient)
    : ambient_(ambient), verts_(std::move(verts)), cache_(std::make_shared<Cache>()) {
  std::sort(verts_.begin(), verts_.end(), lex_less);
}

LatticePolytope LatticePolytope::from_points(std::vector<IntVec> points) {
  std::size_t ambient = points.empty() ? 0 : points.front().size();
  auto verts = hull_vertices(points);
  return LatticePolytope(std::move(verts), ambient);
}

LatticePolytope LatticePolytope::from_vertices(std::vector<IntVec> vertices) {
  if (vertices.empty())
    throw std::invalid_argument("from_vertices: no vertices");
  std::size_t ambient = vertices.front().size();
  return LatticePolytope(std::move(vertices), ambient);
}

const AffineLatticeBasis& LatticePolytope::chart() const {
  std::call_once(cache_->chart_once, [&] {
    cache_->chart = affine_lattice_basis(verts_);
    cache_->chart_verts.reserve(verts_.size());
    for (const auto& v : verts_)
      cache_->chart_verts.push_back(chart_coords_impl(cache_->chart, v));
  });
  return cache_->chart;
}

IntVec LatticePolytope::chart_coords(const IntVec& p) const {
  return chart_coords_impl(chart(), p);
}

IntVec LatticePolytope::from_chart(const IntVec& c) const {
  const auto& ab = chart();
  IntVec p = ab.origin;
  for (std::size_t j = 0; j < ab.basis.size(); ++j)
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += c[j] * ab.basis[j][i];
  return p;
}

std::size_t LatticePolytope::dim() const { return chart().basis.size(); }

bool LatticePolytope::is_slice() const {
  for (const auto& v : verts_)
    if (v.empty() || v[0] != 1) return false;
  return true;
}

const std::vector<Facet>& LatticePolytope::facets() const {
  chart();
  std::call_once(cache_->facets_once, [&] {
    std::size_t k = cache_->chart.basis.size();
    if (k == 0) return;
    auto ineqs = facet_inequalities_fulldim(cache_->chart_verts);
    IntMat bmat(k, ambient_);
    for (std::size_t j = 0; j < k; ++j) bmat.set_row(j, cache_->chart.basis[j]);
    for (auto& [nrm, rhs] : ineqs) {
      Facet f;
      f.chart_normal = nrm;
      f.chart_rhs = rhs;
      for (std::size_t i = 0; i < verts_.size(); ++i)
        if (dot(nrm, cache_->chart_verts[i]) == rhs) f.tight.push_back(i);
      auto lift = solve_integral(bmat, nrm);
      if (!lift)
        throw std::logic_error("facets: no integral lift of a chart normal");
      f.ambient.normal = *lift;
      f.ambient.rhs = dot(*lift, cache_->chart.origin) + rhs;
      cache_->facets.push_back(std::move(f));
    }
  });
  return cache_->facets;
}

std::vector<Halfspace> LatticePolytope::facet_halfspaces() const {
  std::vector<Halfspace> hs;
  for (const auto& f : facets()) hs.push_back(f.ambient);
  return hs;
}

bool LatticePolytope::contains(const IntVec& p) const {
  IntVec c;
  try {
    c = chart_coords(p);
  } catch (const std::invalid_argument&) {
    return false;
  }
  for (const auto& f : facets())
    if (dot(f.chart_normal, c) > f.chart_rhs) return false;
  return true;
}

bool LatticePolytope::strictly_contains(const IntVec& p) const {
  IntVec c;
  try {
    c = chart_coords(p);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (dim() == 0) return true;
  for (const auto& f : facets())
    if (dot(f.chart_normal, c) >= f.chart_rhs) return false;
  return true;
}

std::vector<IntVec> LatticePolytope::lattice_points() const {
  chart();
  std::size_t k = dim();
  if (k == 0) return {verts_.front()};
  const auto& cv = cache_->chart_verts;
  IntVec lo = cv.front(), hi = cv.front();
  for (const auto& c : cv)
    for (std::size_t j = 0; j < k; ++j) {
      if (c[j] < lo[j]) lo[j] = c[j];
      if (c[j] > hi[j]) hi[j] = c[j];
    }
  const auto& fs = facets();
  std::vector<IntVec> out;
  IntVec cur = lo;
  for (;;) {
    bool inside = true;
    for (const auto& f : fs)
      if (dot(f.chart_normal, cur) > f.chart_rhs) {
        inside = false;
        break;
      }
    if (inside) out.push_back(from_chart(cur));
    std::size_t j = 0;
    while (j < k) {
      ++cur[j];
      if (cur[j] <= hi[j]) break;
      cur[j] = lo[j];
      ++j;
    }
    if (j == k) break;
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<IntVec> LatticePolytope::interior_lattice_points() const {
  std::vector<IntVec> out;
  for (const auto& p : lattice_points())
    if (strictly_contains(p)) out.push_back(p);
  return out;
}

std::vector<IntVec> LatticePolytope::exceptional_points() const {
  if (!is_slice())
    throw std::invalid_argument("exceptional_points: not a slice polytope");
  std::vector<IntVec> out;
  for (const auto& p : lattice_points())
    if (!std::binary_search(verts_.begin(), verts_.end(), p, lex_less))
      out.push_back(p);
  return out;
}

LatticePolytope LatticePolytope::dilate(const Int& nu) const {
  if (nu <= 0) throw std::invalid_argument("dilate: nu must be positive");
  std::vector<IntVec> vs;
  vs.reserve(verts_.size());
  for (const auto& v : verts_) vs.push_back(scaled(v, nu));
  return from_vertices(std::move(vs));
}

std::vector<std::vector<IntVec>> LatticePolytope::fan_triangulation() const {
  std::size_t k = dim();
  if (verts_.size() == k + 1) return {verts_};
  const IntVec& apex = verts_.front();
  std::vector<std::vector<IntVec>> out;
  for (const auto& f : facets()) {
    bool apex_tight = false;
    for (auto i : f.tight)
      if (verts_[i] == apex) {
        apex_tight = true;
        break;
      }
    if (apex_tight) continue;
    std::vector<IntVec> fverts;
    for (auto i : f.tight) fverts.push_back(verts_[i]);
    auto sub = LatticePolytope::from_vertices(std::move(fverts));
    for (auto s : sub.fan_triangulation()) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

Int LatticePolytope::normalized_volume() const {
  std::size_t k = dim();
  if (k == 0) return 1;
  Int vol = 0;
  for (const auto& s : fan_triangulation()) {
    IntMat m(k, k);
    IntVec c0 = chart_coords(s.front());
    for (std::size_t i = 1; i < s.size(); ++i)
      m.set_row(i - 1, chart_coords(s[i]) - c0);
    vol += abs(exact_det(m));
  }
  return vol;
}

bool is_elementary_simplex(const LatticePolytope& s) {
  if (s.vertices().size() != s.dim() + 1)
    throw std::invalid_argument("is_elementary_simplex: not a simplex");
  return s.lattice_points().size() == s.vertices().size();
}

bool is_basic_simplex(const LatticePolytope& s) {
  if (s.vertices().size() != s.dim() + 1)
    throw std::invalid_argument("is_basic_simplex: not a simplex");
  return s.normalized_volume() == 1;
}

LatticePolytope apply_affine_map(const LatticePolytope& p, const IntMat& u,
                                 const IntVec& t) {
  std::vector<IntVec> vs;
  for (const auto& v : p.vertices()) {
    IntVec w = t;
    for (std::size_t i = 0; i < u.rows(); ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < u.cols(); ++j) acc += u(i, j) * v[j];
      w[i] += acc;
    }
    vs.push_back(std::move(w));
  }
  return LatticePolytope::from_vertices(std::move(vs));
}

}  // namespace crepant
