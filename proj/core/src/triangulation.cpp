#include "crepant/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace crepant {

namespace {

bool lex_less(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

// Affine chart of a configuration: integer coordinates of every point in
// the saturated lattice of its affine hull.
struct Chart {
  AffineLatticeBasis ab;
  std::vector<IntVec> coords;
  std::size_t k = 0;
};

Chart make_chart(const std::vector<IntVec>& points) {
  Chart c;
  c.ab = affine_lattice_basis(points);
  c.k = c.ab.basis.size();
  std::size_t d = c.ab.origin.size();
  RatMat bt(d, c.k);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < c.k; ++j) bt(i, j) = Rat(c.ab.basis[j][i]);
  for (const auto& p : points) {
    if (c.k == 0) {
      c.coords.push_back({});
      continue;
    }
    auto sol = solve_rational(bt, to_rat(p - c.ab.origin));
    auto iv = sol.status == SolveStatus::Unique ? to_int(sol.x) : std::nullopt;
    if (!iv) throw std::logic_error("configuration chart solve failed");
    c.coords.push_back(*iv);
  }
  return c;
}

// Affine functional on chart coordinates.
struct Functional {
  RatVec lin;
  Rat off;
  Rat eval(const IntVec& x) const {
    Rat s = off;
    for (std::size_t i = 0; i < lin.size(); ++i) s += lin[i] * Rat(x[i]);
    return s;
  }
};

// Interpolates the heights on the given (affinely spanning) point ids.
Functional interpolate(const Chart& ch, const HeightFunction& w,
                       const std::vector<std::size_t>& vids) {
  std::size_t k = ch.k;
  RatMat a(vids.size(), k + 1);
  RatVec b(vids.size());
  for (std::size_t r = 0; r < vids.size(); ++r) {
    for (std::size_t j = 0; j < k; ++j) a(r, j) = Rat(ch.coords[vids[r]][j]);
    a(r, k) = 1;
    b[r] = w[vids[r]];
  }
  auto sol = solve_rational(a, b);
  if (sol.status != SolveStatus::Unique)
    throw std::logic_error("cell heights do not interpolate affinely");
  Functional f;
  f.lin.assign(sol.x.begin(), sol.x.begin() + k);
  f.off = sol.x[k];
  return f;
}

// Gauss-Jordan inverse; nullopt when singular.
std::optional<RatMat> rat_inverse(const RatMat& m) {
  std::size_t n = m.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && aug(p, col) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != col)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(col, j), aug(p, j));
    Rat inv = 1 / aug(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug(i, col) == 0) continue;
      Rat f = aug(i, col);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(col, j);
    }
  }
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

struct WorkCell {
  std::vector<std::size_t> vids;                // sorted
  std::vector<std::pair<IntVec, Int>> facets;   // chart inequalities n.x <= r
  Functional fn;
};

// Clears denominators of an affine functional and flips it into "<= rhs"
// facet form with a primitive normal.
std::pair<IntVec, Int> facet_from_functional(const RatVec& lin, const Rat& off) {
  Int den = 1;
  for (const auto& q : lin) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                    q.get_den().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), off.get_den().get_mpz_t());
  IntVec n(lin.size());
  for (std::size_t i = 0; i < lin.size(); ++i) {
    Rat v = lin[i] * Rat(den);
    n[i] = -v.get_num();
  }
  Rat o = off * Rat(den);
  Int rhs = o.get_num();
  Int g = content(n);
  if (g > 1 && rhs % g == 0) {
    for (auto& x : n) x /= g;
    rhs /= g;
  }
  return {std::move(n), std::move(rhs)};
}

WorkCell make_cell(const Chart& ch, const HeightFunction& w,
                   std::vector<std::size_t> vids) {
  WorkCell c;
  c.vids = std::move(vids);
  std::sort(c.vids.begin(), c.vids.end());
  std::size_t k = ch.k;
  if (c.vids.size() == k + 1) {
    // simplex: barycentric functionals from one inverse
    RatMat a(k + 1, k + 1);
    for (std::size_t r = 0; r <= k; ++r) {
      for (std::size_t j = 0; j < k; ++j) a(r, j) = Rat(ch.coords[c.vids[r]][j]);
      a(r, k) = 1;
    }
    auto inv = rat_inverse(a);
    if (!inv) throw std::logic_error("make_cell: degenerate simplex");
    c.fn.lin.assign(k, Rat(0));
    c.fn.off = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      const Rat& wj = w[c.vids[j]];
      if (wj == 0) continue;
      for (std::size_t t = 0; t < k; ++t) c.fn.lin[t] += wj * (*inv)(t, j);
      c.fn.off += wj * (*inv)(k, j);
    }
    for (std::size_t j = 0; j <= k; ++j) {
      RatVec lam(k);
      for (std::size_t t = 0; t < k; ++t) lam[t] = (*inv)(t, j);
      c.facets.push_back(facet_from_functional(lam, (*inv)(k, j)));
    }
  } else {
    std::vector<IntVec> pts;
    pts.reserve(c.vids.size());
    for (auto i : c.vids) pts.push_back(ch.coords[i]);
    c.facets = facet_inequalities_fulldim(pts);
    c.fn = interpolate(ch, w, c.vids);
  }
  return c;
}

// Pyramids over the facets of `c` avoiding point v.
std::vector<std::vector<std::size_t>> split_at(const Chart& ch,
                                               const WorkCell& c,
                                               std::size_t v) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& [n, rhs] : c.facets) {
    if (dot(n, ch.coords[v]) == rhs) continue;  // v on the facet
    std::vector<std::size_t> cell;
    for (auto u : c.vids)
      if (dot(n, ch.coords[u]) == rhs) cell.push_back(u);
    if (cell.empty() || std::find(cell.begin(), cell.end(), v) != cell.end())
      continue;
    cell.push_back(v);
    std::sort(cell.begin(), cell.end());
    out.push_back(std::move(cell));
  }
  return out;
}

std::vector<std::size_t> hull_ids(const std::vector<IntVec>& points,
                                  const std::vector<std::size_t>& ids) {
  std::vector<IntVec> pts;
  for (auto i : ids) pts.push_back(points[i]);
  auto verts = hull_vertices(pts);
  std::vector<std::size_t> out;
  for (auto i : ids)
    if (std::find(verts.begin(), verts.end(), points[i]) != verts.end())
      out.push_back(i);
  return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

LatticePolytope cell_polytope(const Subdivision& s, std::size_t cell) {
  std::vector<IntVec> pts;
  for (auto i : s.cells[cell]) pts.push_back(s.points[i]);
  return LatticePolytope::from_vertices(std::move(pts));
}

LatticePolytope simplex_polytope(const Triangulation& t, std::size_t cell) {
  std::vector<IntVec> pts;
  for (auto i : t.simplices[cell]) pts.push_back(t.points[i]);
  return LatticePolytope::from_vertices(std::move(pts));
}

Subdivision regular_subdivision(const std::vector<IntVec>& points,
                                const HeightFunction& heights) {
  if (points.size() != heights.size())
    throw ShapeMismatch("regular_subdivision: heights/points mismatch");
  Subdivision s;
  s.points = points;
  Chart ch = make_chart(points);
  std::size_t n = points.size(), k = ch.k;
  if (k == 0) {
    s.cells.push_back({0});
    return s;
  }
  std::set<std::vector<std::size_t>> contact_sets;
  std::vector<std::size_t> c(k + 1);
  for (std::size_t i = 0; i <= k; ++i) c[i] = i;
  auto advance = [&]() {
    for (std::size_t i = k + 1; i-- > 0;) {
      if (c[i] != i + n - (k + 1)) {
        ++c[i];
        for (std::size_t j = i + 1; j <= k; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    RatMat a(k + 1, k + 1);
    RatVec b(k + 1);
    for (std::size_t r = 0; r <= k; ++r) {
      for (std::size_t j = 0; j < k; ++j) a(r, j) = Rat(ch.coords[c[r]][j]);
      a(r, k) = 1;
      b[r] = heights[c[r]];
    }
    auto sol = solve_rational(a, b);
    if (sol.status != SolveStatus::Unique) continue;  // affinely dependent
    Functional f{RatVec(sol.x.begin(), sol.x.begin() + k), sol.x[k]};
    bool lower = true;
    std::vector<std::size_t> contact;
    for (std::size_t u = 0; u < n; ++u) {
      Rat hv = f.eval(ch.coords[u]);
      int s3 = cmp(hv, heights[u]);
      if (s3 > 0) {
        lower = false;
        break;
      }
      if (s3 == 0) contact.push_back(u);
    }
    if (lower) contact_sets.insert(std::move(contact));
  } while (advance());
  for (const auto& e : contact_sets) s.cells.push_back(hull_ids(points, e));
  std::sort(s.cells.begin(), s.cells.end());
  return s;
}

Subdivision pull(const Subdivision& s, std::size_t v) {
  if (v >= s.points.size()) throw std::invalid_argument("pull: point index");
  Chart ch = make_chart(s.points);
  Subdivision out;
  out.points = s.points;
  std::set<std::vector<std::size_t>> cells;
  for (const auto& vids : s.cells) {
    std::vector<IntVec> pts;
    for (auto i : vids) pts.push_back(ch.coords[i]);
    auto facets = facet_inequalities_fulldim(pts);
    if (facets.empty()) {  // zero-dimensional cell
      cells.insert(vids);
      continue;
    }
    bool has_v = true;
    for (const auto& [n, rhs] : facets)
      if (dot(n, ch.coords[v]) > rhs) {
        has_v = false;
        break;
      }
    if (!has_v) {
      cells.insert(vids);
      continue;
    }
    for (const auto& [n, rhs] : facets) {
      if (dot(n, ch.coords[v]) == rhs) continue;
      std::vector<std::size_t> cell;
      for (auto u : vids)
        if (dot(n, ch.coords[u]) == rhs) cell.push_back(u);
      cell.push_back(v);
      std::sort(cell.begin(), cell.end());
      cells.insert(std::move(cell));
    }
  }
  out.cells.assign(cells.begin(), cells.end());
  return out;
}

HeightFunction pull_heights(const Subdivision& s, const HeightFunction& w,
                            std::size_t v) {
  if (v >= s.points.size())
    throw std::invalid_argument("pull_heights: point index");
  Chart ch = make_chart(s.points);
  const IntVec& xv = ch.coords[v];
  bool have_t0 = false;
  Rat t0;
  std::vector<Rat> values;
  for (const auto& vids : s.cells) {
    Functional f = interpolate(ch, w, vids);
    Rat hv = f.eval(xv);
    values.push_back(hv);
    if (!have_t0 || hv > t0) {
      t0 = hv;
      have_t0 = true;
    }
  }
  if (!have_t0) throw std::invalid_argument("pull_heights: empty subdivision");
  // epsilon: half the minimum strict slack of the cells not containing v
  // (their functionals sit strictly below t0); 1 when every cell contains v.
  bool any = false;
  Rat slack;
  for (const Rat& hv : values) {
    if (hv == t0) continue;
    Rat gap = t0 - hv;
    if (!any || gap < slack) {
      slack = gap;
      any = true;
    }
  }
  Rat eps = any ? slack / 2 : Rat(1);
  HeightFunction out = w;
  out[v] = t0 - eps;
  return out;
}

CertifiedTriangulation pull_all(const Subdivision& s, const HeightFunction& w,
                                const std::vector<std::size_t>& order) {
  std::size_t n = s.points.size();
  if (w.size() != n) throw ShapeMismatch("pull_all: heights/points mismatch");
  {
    std::vector<bool> seen(n, false);
    for (auto i : order) {
      if (i >= n || seen[i])
        throw std::invalid_argument("pull_all: order is not a permutation");
      seen[i] = true;
    }
    for (bool b : seen)
      if (!b) throw std::invalid_argument("pull_all: order misses a point");
  }
  Chart ch = make_chart(s.points);
  CertifiedTriangulation out;
  out.tri.points = s.points;
  if (ch.k == 0) {
    out.tri.simplices.push_back({0});
    out.heights = w;
    out.flags.coherent = verify_coherent(out.tri, out.heights);
    return out;
  }

  HeightFunction h = w;
  std::vector<WorkCell> cells;
  for (const auto& vids : s.cells) cells.push_back(make_cell(ch, h, vids));

  for (auto v : order) {
    const IntVec& xv = ch.coords[v];
    // envelope value at v and the strict slacks (the functional criterion
    // matches geometric incidence while the subdivision stays regular)
    std::vector<Rat> values(cells.size());
    Rat t0 = cells.front().fn.eval(xv);
    values[0] = t0;
    for (std::size_t i = 1; i < cells.size(); ++i) {
      values[i] = cells[i].fn.eval(xv);
      if (values[i] > t0) t0 = values[i];
    }
    bool any = false;
    Rat slack;
    for (const Rat& hv : values) {
      if (hv == t0) continue;
      Rat gap = t0 - hv;
      if (!any || gap < slack) {
        slack = gap;
        any = true;
      }
    }
    h[v] = t0 - (any ? slack / 2 : Rat(1));

    std::vector<WorkCell> next;
    next.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (values[i] != t0) {
        next.push_back(std::move(cells[i]));
        continue;
      }
      for (auto& cvids : split_at(ch, cells[i], v))
        next.push_back(make_cell(ch, h, std::move(cvids)));
    }
    cells = std::move(next);
  }

  for (const auto& c : cells) {
    if (c.vids.size() != ch.k + 1)
      throw std::logic_error("pull_all: a final cell is not a simplex");
    out.tri.simplices.push_back(c.vids);
  }
  std::sort(out.tri.simplices.begin(), out.tri.simplices.end());
  out.heights = std::move(h);
  out.flags.coherent = verify_coherent(out.tri, out.heights);
  return out;
}

std::pair<Subdivision, HeightFunction> prism_subdivision(
    const Triangulation& base, const HeightFunction& base_heights,
    const IntVec& lambda, std::size_t axis) {
  std::size_t d = lambda.size();
  if (base.points.empty() || base.points.front().size() != d)
    throw ShapeMismatch("prism_subdivision: dimension mismatch");
  if (base_heights.size() != base.points.size())
    throw ShapeMismatch("prism_subdivision: heights mismatch");

  std::vector<Int> roof(base.points.size());
  bool nonzero = false;
  for (std::size_t i = 0; i < base.points.size(); ++i) {
    if (base.points[i][axis] != 0)
      throw std::invalid_argument("prism_subdivision: axis not fresh");
    roof[i] = dot(lambda, base.points[i]);
    if (roof[i] < 0)
      throw std::invalid_argument(
          "prism_subdivision: functional negative on the base");
    if (roof[i] > 0) nonzero = true;
  }
  if (!nonzero)
    throw std::invalid_argument(
        "prism_subdivision: functional vanishes on the base");

  Subdivision s;
  HeightFunction w;
  std::map<IntVec, std::size_t, bool (*)(const IntVec&, const IntVec&)> ids(
      lex_less);
  for (std::size_t i = 0; i < base.points.size(); ++i) {
    for (Int t = 0; t <= roof[i]; ++t) {
      IntVec p = base.points[i];
      p[axis] = t;
      if (ids.emplace(p, s.points.size()).second) {
        s.points.push_back(std::move(p));
        w.push_back(base_heights[i]);
      }
    }
  }
  for (const auto& simplex : base.simplices) {
    std::set<std::size_t> cell;
    bool degenerate = true;
    for (auto bi : simplex) {
      cell.insert(ids.at(base.points[bi]));
      if (roof[bi] > 0) degenerate = false;
      IntVec roof_pt = base.points[bi];
      roof_pt[axis] = roof[bi];
      cell.insert(ids.at(roof_pt));
    }
    // a cell whose roof collapses entirely is lower-dimensional and is
    // dropped from the pure subdivision (its points remain in the set)
    if (degenerate) continue;
    s.cells.push_back(std::vector<std::size_t>(cell.begin(), cell.end()));
  }
  std::sort(s.cells.begin(), s.cells.end());
  return {std::move(s), std::move(w)};
}

namespace {

std::vector<std::size_t> make_order(const std::vector<IntVec>& points,
                                    PullOrder policy, std::uint64_t seed) {
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  switch (policy) {
    case PullOrder::Given:
      break;
    case PullOrder::Lex:
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(points[a], points[b]);
      });
      break;
    case PullOrder::Seeded: {
      std::uint64_t state = seed;
      for (std::size_t i = order.size(); i > 1; --i) {
        std::size_t j = splitmix64(state) % i;
        std::swap(order[i - 1], order[j]);
      }
      break;
    }
  }
  return order;
}

}  // namespace

CertifiedTriangulation resolve(const ParamSequence& m, PullOrder order,
                               std::uint64_t seed) {
  auto adm = is_admissible(m);
  if (!adm.ok)
    throw std::invalid_argument("resolve: inadmissible sequence (" +
                                adm.reason + ")");
  std::size_t d = m.d;
  CertifiedTriangulation cur;
  IntVec origin(d, Int(0));
  origin[0] = 1;
  cur.tri.points = {origin};
  cur.tri.simplices = {{0}};
  cur.heights = {Rat(0)};
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    auto [sub, w] = prism_subdivision(cur.tri, cur.heights, m.rows[i], i + 1);
    auto ord = make_order(sub.points, order, seed + i);
    cur = pull_all(sub, w, ord);
    if (!cur.flags.coherent)
      throw std::logic_error("resolve: pulled subdivision lost coherence");
  }
  cur.flags.maximal = verify_maximal(cur.tri);
  cur.flags.basic = verify_basic(cur.tri);
  cur.flags.coherent = verify_coherent(cur.tri, cur.heights);
  return cur;
}

bool verify_maximal(const Triangulation& t) {
  for (std::size_t i = 0; i < t.simplices.size(); ++i) {
    auto sp = simplex_polytope(t, i);
    if (sp.vertices().size() != t.simplices[i].size()) return false;
    if (sp.lattice_points().size() != sp.vertices().size()) return false;
  }
  return true;
}

bool verify_basic(const Triangulation& t) {
  Chart ch = make_chart(t.points);
  std::size_t k = ch.k;
  for (const auto& s : t.simplices) {
    if (s.size() != k + 1) return false;
    IntMat m(k, k);
    for (std::size_t i = 1; i <= k; ++i)
      m.set_row(i - 1, ch.coords[s[i]] - ch.coords[s[0]]);
    if (abs(exact_det(m)) != 1) return false;
  }
  return true;
}

bool verify_coherent(const Triangulation& t, const HeightFunction& w) {
  if (w.size() != t.points.size()) return false;
  Chart ch = make_chart(t.points);
  for (const auto& s : t.simplices) {
    Functional f;
    try {
      f = interpolate(ch, w, s);
    } catch (const std::logic_error&) {
      return false;
    }
    std::set<std::size_t> in(s.begin(), s.end());
    for (std::size_t u = 0; u < t.points.size(); ++u) {
      if (in.count(u)) continue;
      if (f.eval(ch.coords[u]) >= w[u]) return false;
    }
  }
  return true;
}

namespace {

struct CellGeom {
  std::vector<std::size_t> vids;
  Functional fn;
  IntVec lo, hi;  // chart bounding box
};

bool boxes_meet(const CellGeom& a, const CellGeom& b) {
  for (std::size_t j = 0; j < a.lo.size(); ++j)
    if (a.hi[j] < b.lo[j] || b.hi[j] < a.lo[j]) return false;
  return true;
}

// Common-face test for two cells with disjoint interiors: the difference of
// their height functionals separates them and must be tight exactly on the
// shared vertices.
bool common_face_witness(const Chart& ch, const CellGeom& a,
                         const CellGeom& b) {
  std::vector<std::size_t> shared;
  std::set_intersection(a.vids.begin(), a.vids.end(), b.vids.begin(),
                        b.vids.end(), std::back_inserter(shared));
  std::set<std::size_t> ws(shared.begin(), shared.end());
  for (auto u : a.vids) {
    Rat g = a.fn.eval(ch.coords[u]) - b.fn.eval(ch.coords[u]);
    if (g < 0) return false;
    if ((g == 0) != (ws.count(u) > 0)) return false;
  }
  for (auto u : b.vids) {
    Rat g = a.fn.eval(ch.coords[u]) - b.fn.eval(ch.coords[u]);
    if (g > 0) return false;
    if ((g == 0) != (ws.count(u) > 0)) return false;
  }
  return true;
}

bool covering_impl(const std::vector<IntVec>& points,
                   const std::vector<std::vector<std::size_t>>& cells,
                   const HeightFunction& w, const Int& target_volume) {
  Chart ch = make_chart(points);
  std::size_t k = ch.k;
  if (k == 0) return cells.size() == 1 && target_volume == 1;
  std::vector<CellGeom> geo;
  Int total = 0;
  for (const auto& vids : cells) {
    CellGeom g;
    g.vids = vids;
    try {
      g.fn = interpolate(ch, w, vids);
    } catch (const std::logic_error&) {
      return false;
    }
    g.lo = ch.coords[vids.front()];
    g.hi = g.lo;
    for (auto u : vids)
      for (std::size_t j = 0; j < k; ++j) {
        if (ch.coords[u][j] < g.lo[j]) g.lo[j] = ch.coords[u][j];
        if (ch.coords[u][j] > g.hi[j]) g.hi[j] = ch.coords[u][j];
      }
    std::vector<IntVec> pts;
    for (auto u : vids) pts.push_back(points[u]);
    total += LatticePolytope::from_vertices(pts).normalized_volume();
    geo.push_back(std::move(g));
  }
  if (total != target_volume) return false;
  for (std::size_t i = 0; i < geo.size(); ++i)
    for (std::size_t j = i + 1; j < geo.size(); ++j) {
      if (!boxes_meet(geo[i], geo[j])) continue;
      if (!common_face_witness(ch, geo[i], geo[j])) return false;
    }
  return true;
}

}  // namespace

bool verify_covering(const Triangulation& t, const HeightFunction& w) {
  Int target = LatticePolytope::from_points(t.points).normalized_volume();
  return covering_impl(t.points, t.simplices, w, target);
}

bool verify_subdivision(const Subdivision& s, const HeightFunction& w) {
  Int target = LatticePolytope::from_points(s.points).normalized_volume();
  return covering_impl(s.points, s.cells, w, target);
}

std::vector<std::vector<std::size_t>> minimal_nonfaces(const Triangulation& t) {
  std::size_t n = t.points.size();
  Chart ch = make_chart(t.points);
  std::size_t k = ch.k;
  std::vector<std::vector<std::size_t>> out;

  std::vector<bool> used(n, false);
  for (const auto& s : t.simplices)
    for (auto i : s) used[i] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) out.push_back({i});  // cardinality-1 non-face

  // edges of the complex, and adjacency for candidate pruning
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& s : t.simplices)
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        edges.insert({s[a], s[b]});
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());

  for (std::size_t a = 0; a < n; ++a) {
    if (!used[a]) continue;
    for (std::size_t b = a + 1; b < n; ++b)
      if (used[b] && !edges.count({a, b})) out.push_back({a, b});
  }

  // cardinality c in [3, k+1]: a subset of more than k+1 points is affinely
  // dependent, hence never a simplex, so this range is complete.
  std::set<std::vector<std::size_t>> faces_prev;
  for (const auto& [a, b] : edges) faces_prev.insert({a, b});
  for (std::size_t c = 3; c <= k + 1 && !faces_prev.empty(); ++c) {
    std::set<std::vector<std::size_t>> faces_cur;
    for (const auto& s : t.simplices) {
      if (s.size() < c) continue;
      std::vector<std::size_t> comb(c);
      for (std::size_t i = 0; i < c; ++i) comb[i] = i;
      for (;;) {
        std::vector<std::size_t> f(c);
        for (std::size_t i = 0; i < c; ++i) f[i] = s[comb[i]];
        faces_cur.insert(std::move(f));
        bool more = false;
        for (std::size_t i = c; i-- > 0;) {
          if (comb[i] != i + s.size() - c) {
            ++comb[i];
            for (std::size_t j = i + 1; j < c; ++j) comb[j] = comb[j - 1] + 1;
            more = true;
            break;
          }
        }
        if (!more) break;
      }
    }
    // candidates: a (c-1)-face extended by a common neighbor of its points
    for (const auto& bface : faces_prev) {
      std::vector<std::size_t> common = adj[bface[0]];
      for (std::size_t i = 1; i < bface.size() && !common.empty(); ++i) {
        std::vector<std::size_t> tmp;
        std::set_intersection(common.begin(), common.end(),
                              adj[bface[i]].begin(), adj[bface[i]].end(),
                              std::back_inserter(tmp));
        common = std::move(tmp);
      }
      for (auto v : common) {
        if (v <= bface.back()) continue;
        std::vector<std::size_t> cand = bface;
        cand.push_back(v);
        if (faces_cur.count(cand)) continue;
        bool all_faces = true;
        for (std::size_t omit = 0; omit + 1 < cand.size() && all_faces;
             ++omit) {
          std::vector<std::size_t> sub;
          for (std::size_t i = 0; i < cand.size(); ++i)
            if (i != omit) sub.push_back(cand[i]);
          if (!faces_prev.count(sub)) all_faces = false;
        }
        if (!all_faces) continue;
        IntMat diffs(c - 1, k);
        for (std::size_t i = 1; i < c; ++i)
          diffs.set_row(i - 1, ch.coords[cand[i]] - ch.coords[cand[0]]);
        if (rank(diffs) != c - 1) continue;  // not a simplex
        out.push_back(cand);
      }
    }
    faces_prev = std::move(faces_cur);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool koszul_check(const Triangulation& t) {
  for (const auto& nf : minimal_nonfaces(t))
    if (nf.size() != 2) return false;
  return true;
}

namespace {

// Face lattice of a polytope as vertex-index sets (indices into a global
// labelling), face -> dimension.
void collect_faces(const LatticePolytope& p,
                   const std::vector<std::size_t>& global_ids,
                   std::map<std::vector<std::size_t>, std::size_t>& faces) {
  std::vector<std::size_t> all = global_ids;
  std::sort(all.begin(), all.end());
  if (faces.count(all)) return;
  faces[all] = p.dim();
  for (const auto& f : p.facets()) {
    std::vector<IntVec> fverts;
    std::vector<std::size_t> fids;
    for (auto t : f.tight) {
      fverts.push_back(p.vertices()[t]);
      fids.push_back(global_ids[t]);
    }
    auto sub = LatticePolytope::from_vertices(fverts);
    std::vector<std::size_t> sub_ids(sub.vertices().size());
    for (std::size_t i = 0; i < sub.vertices().size(); ++i) {
      const IntVec& v = sub.vertices()[i];
      for (std::size_t j = 0; j < fverts.size(); ++j)
        if (fverts[j] == v) {
          sub_ids[i] = fids[j];
          break;
        }
    }
    collect_faces(sub, sub_ids, faces);
  }
}

}  // namespace

Triangulation full_flag_triangulation(const LatticePolytope& p,
                                      const std::vector<IntVec>& order) {
  if (order.size() != p.vertices().size())
    throw std::invalid_argument(
        "full_flag_triangulation: order must list the vertices");
  std::vector<std::size_t> ids(p.vertices().size());
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const IntVec& v = p.vertices()[i];
    auto it = std::find(order.begin(), order.end(), v);
    if (it == order.end())
      throw std::invalid_argument(
          "full_flag_triangulation: order misses a vertex");
    ids[i] = std::size_t(it - order.begin());
  }
  std::map<std::vector<std::size_t>, std::size_t> faces;
  collect_faces(p, ids, faces);

  std::set<std::vector<std::size_t>> simplices;

  struct Rec {
    const std::map<std::vector<std::size_t>, std::size_t>& faces;
    std::set<std::vector<std::size_t>>& simplices;
    std::vector<std::size_t> labels;

    void descend(const std::vector<std::size_t>& face, std::size_t dim,
                 std::size_t label) {
      labels.push_back(label);
      if (dim == 0) {
        std::vector<std::size_t> s = labels;
        std::sort(s.begin(), s.end());
        simplices.insert(std::move(s));
      } else {
        for (const auto& [sub, sdim] : faces) {
          if (sdim + 1 != dim) continue;
          if (!std::includes(face.begin(), face.end(), sub.begin(), sub.end()))
            continue;
          std::size_t sl = *std::min_element(sub.begin(), sub.end());
          if (sl == label) continue;
          descend(sub, sdim, sl);
        }
      }
      labels.pop_back();
    }
  };

  std::vector<std::size_t> top = ids;
  std::sort(top.begin(), top.end());
  Rec rec{faces, simplices, {}};
  rec.descend(top, p.dim(), *std::min_element(top.begin(), top.end()));

  Triangulation t;
  t.points = order;
  t.simplices.assign(simplices.begin(), simplices.end());
  return t;
}

CertifiedTriangulation fano_canonical(const LatticePolytope& p) {
  if (!is_fano(p))
    throw std::invalid_argument("fano_canonical: not a Fano polytope");
  IntVec center = *fano_center(p);
  Subdivision s;
  s.points = p.lattice_points();
  std::vector<std::size_t> cell;
  for (std::size_t i = 0; i < s.points.size(); ++i)
    if (std::find(p.vertices().begin(), p.vertices().end(), s.points[i]) !=
        p.vertices().end())
      cell.push_back(i);
  s.cells.push_back(cell);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < s.points.size(); ++i)
    if (s.points[i] == center) order.push_back(i);
  for (std::size_t i = 0; i < s.points.size(); ++i)
    if (s.points[i] != center) order.push_back(i);
  HeightFunction w(s.points.size(), Rat(0));
  auto out = pull_all(s, w, order);
  out.flags.maximal = verify_maximal(out.tri);
  out.flags.basic = verify_basic(out.tri);
  if (!out.flags.basic || !out.flags.coherent)
    throw std::logic_error(
        "fano_canonical: join triangulation failed to verify");
  return out;
}

CertifiedTriangulation hd_triangulation(const LatticePolytope& p) {
  if (!is_hd_compatible(p))
    throw std::invalid_argument("hd_triangulation: polytope is not compatible");
  std::size_t d = p.ambient_dim();
  if (p.dim() + 1 != d)
    throw std::invalid_argument(
        "hd_triangulation: polytope not full-dimensional in the slice");
  std::size_t n = d - 1;

  CertifiedTriangulation out;
  out.tri.points = p.lattice_points();
  std::map<IntVec, std::size_t, bool (*)(const IntVec&, const IntVec&)> ids(
      lex_less);
  for (std::size_t i = 0; i < out.tri.points.size(); ++i)
    ids.emplace(out.tri.points[i], i);

  // heights: a convex quadratic adapted to both hyperplane families,
  // sampled on the lattice points; coherence is verified, not assumed
  out.heights.resize(out.tri.points.size());
  for (std::size_t i = 0; i < out.tri.points.size(); ++i) {
    const IntVec& v = out.tri.points[i];
    Int q = 0;
    for (std::size_t a = 1; a < d; ++a) q += v[a] * v[a];
    for (std::size_t a = 1; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b)
        q += (v[a] - v[b]) * (v[a] - v[b]);
    out.heights[i] = Rat(q);
  }

  IntVec lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = p.vertices().front()[j + 1];
    hi[j] = lo[j];
  }
  for (const auto& v : p.vertices())
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j + 1] < lo[j]) lo[j] = v[j + 1];
      if (v[j + 1] > hi[j]) hi[j] = v[j + 1];
    }

  std::vector<std::size_t> identity(n);
  for (std::size_t j = 0; j < n; ++j) identity[j] = j;
  IntVec cell = lo;
  for (;;) {
    std::vector<std::size_t> sigma = identity;
    do {
      std::vector<std::size_t> simplex;
      IntVec cur(d, Int(0));
      cur[0] = 1;
      for (std::size_t j = 0; j < n; ++j) cur[j + 1] = cell[j];
      bool ok = true;
      for (std::size_t step = 0; step <= n; ++step) {
        if (step > 0) cur[sigma[step - 1] + 1] += 1;
        auto it = ids.find(cur);
        if (it == ids.end()) {
          ok = false;
          break;
        }
        simplex.push_back(it->second);
      }
      if (ok) {
        std::sort(simplex.begin(), simplex.end());
        out.tri.simplices.push_back(std::move(simplex));
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::size_t j = 0;
    while (j < n) {
      ++cell[j];
      if (cell[j] < hi[j]) break;
      cell[j] = lo[j];
      ++j;
    }
    if (j == n) break;
  }
  std::sort(out.tri.simplices.begin(), out.tri.simplices.end());
  out.tri.simplices.erase(
      std::unique(out.tri.simplices.begin(), out.tri.simplices.end()),
      out.tri.simplices.end());

  out.flags.coherent = verify_coherent(out.tri, out.heights);
  out.flags.maximal = verify_maximal(out.tri);
  out.flags.basic = verify_basic(out.tri);
  if (!out.flags.coherent)
    throw std::logic_error(
        "hd_triangulation: height certificate failed to verify");
  return out;
}

}  // namespace crepant
