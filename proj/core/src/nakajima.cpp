#include "crepant/nakajima.hpp"

#include <algorithm>

namespace crepant {

ParamSequence ParamSequence::make(std::size_t d, std::vector<IntVec> rows) {
  if (d < 1) throw std::invalid_argument("ParamSequence: d must be >= 1");
  if (rows.size() + 1 != d)
    throw ShapeMismatch("ParamSequence: expected d-1 rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d)
      throw ShapeMismatch("ParamSequence: rows must have length d");
    for (std::size_t j = i + 1; j < d; ++j)
      if (rows[i][j] != 0)
        throw ShapeMismatch(
            "ParamSequence: entries above the diagonal must vanish");
  }
  return ParamSequence{d, std::move(rows)};
}

namespace {

IntVec unit(std::size_t d, std::size_t i) {
  IntVec e(d, Int(0));
  e[i] = 1;
  return e;
}

struct BuildResult {
  LatticePolytope poly;
  Admissibility adm;
};

// The stagewise recursion; stops with a witness at the first violated row.
BuildResult build_stages(const ParamSequence& m) {
  std::size_t d = m.d;
  LatticePolytope p = LatticePolytope::from_vertices({unit(d, 0)});
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    const IntVec& row = m.rows[i];
    if (is_zero(row)) {
      Admissibility a;
      a.ok = false;
      a.row = i + 1;
      a.vertex = {};
      a.reason = "row " + std::to_string(i + 1) + " is zero";
      return {p, a};
    }
    std::vector<IntVec> pts = p.vertices();
    for (const auto& v : p.vertices()) {
      Int h = dot(row, v);
      if (h < 0) {
        Admissibility a;
        a.ok = false;
        a.row = i + 1;
        a.vertex = v;
        a.reason = "row " + std::to_string(i + 1) + " negative at vertex";
        return {p, a};
      }
      IntVec lifted = v;
      lifted[i + 1] = h;
      pts.push_back(std::move(lifted));
    }
    p = LatticePolytope::from_points(std::move(pts));
  }
  return {p, Admissibility{}};
}

}  // namespace

Admissibility is_admissible(const ParamSequence& m) {
  return build_stages(m).adm;
}

LatticePolytope build(const ParamSequence& m) {
  auto r = build_stages(m);
  if (!r.adm.ok)
    throw std::invalid_argument("build: inadmissible sequence (" +
                                r.adm.reason + ")");
  return r.poly;
}

std::vector<Halfspace> hrep(const ParamSequence& m) {
  auto adm = is_admissible(m);
  if (!adm.ok)
    throw std::invalid_argument("hrep: inadmissible sequence (" + adm.reason +
                                ")");
  std::size_t d = m.d;
  std::vector<Halfspace> out;
  out.push_back({unit(d, 0), Int(1), true});  // x_1 = 1
  for (std::size_t j = 0; j < m.rows.size(); ++j) {
    IntVec low(d, Int(0));
    low[j + 1] = -1;
    out.push_back({std::move(low), Int(0), false});  // -x_{j+1} <= 0
    IntVec up(d, Int(0));
    up[j + 1] = 1;
    for (std::size_t t = 0; t < d; ++t) up[t] -= m.rows[j][t];
    out.push_back({std::move(up), Int(0), false});  // x_{j+1} - <m_j, x> <= 0
  }
  return out;
}

Reduction reduce(const ParamSequence& m) {
  if (m.d < 2) throw std::invalid_argument("reduce: d must be >= 2");
  auto adm = is_admissible(m);
  if (!adm.ok)
    throw std::invalid_argument("reduce: inadmissible sequence (" + adm.reason +
                                ")");
  Reduction r;
  std::vector<IntVec> base_rows;
  for (std::size_t i = 0; i + 1 < m.rows.size(); ++i) {
    IntVec row(m.rows[i].begin(), m.rows[i].end() - 1);
    base_rows.push_back(std::move(row));
  }
  r.base = ParamSequence::make(m.d - 1, std::move(base_rows));
  r.lambda = IntVec(m.rows.back().begin(), m.rows.back().end() - 1);
  return r;
}

ParamSequence hypersurface_sequence(std::size_t d, const Int& k) {
  if (d < 2 || k < 1)
    throw std::invalid_argument("hypersurface_sequence: need d >= 2, k >= 1");
  std::vector<IntVec> rows;
  for (std::size_t i = 1; i < d; ++i) {
    IntVec row(d, Int(0));
    if (i == 1)
      row[0] = k;
    else
      row[i - 1] = 1;
    rows.push_back(std::move(row));
  }
  return ParamSequence::make(d, std::move(rows));
}

LatticePolytope hypersurface_simplex(std::size_t d, const Int& k) {
  // conv{e_1, e_1 + k e_2, ..., e_1 + k(e_2 + ... + e_d)}
  std::vector<IntVec> vs;
  IntVec v = unit(d, 0);
  vs.push_back(v);
  for (std::size_t i = 1; i < d; ++i) {
    v[i] += k;
    vs.push_back(v);
  }
  return LatticePolytope::from_vertices(std::move(vs));
}

ParamSequence rp_sequence(const std::vector<Int>& ks) {
  std::size_t d = ks.size() + 1;
  if (ks.empty()) throw std::invalid_argument("rp_sequence: need d >= 2");
  for (const auto& k : ks)
    if (k < 1) throw std::invalid_argument("rp_sequence: k_i >= 1 required");
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    IntVec row(d, Int(0));
    row[0] = ks[i];
    rows.push_back(std::move(row));
  }
  return ParamSequence::make(d, std::move(rows));
}

LatticePolytope rp_polytope(const std::vector<Int>& ks) {
  std::size_t d = ks.size() + 1;
  if (ks.empty()) throw std::invalid_argument("rp_polytope: need d >= 2");
  for (const auto& k : ks)
    if (k < 1) throw std::invalid_argument("rp_polytope: k_i >= 1 required");
  std::vector<IntVec> vs;
  for (std::size_t mask = 0; mask < (std::size_t(1) << (d - 1)); ++mask) {
    IntVec v = unit(d, 0);
    for (std::size_t i = 0; i < d - 1; ++i)
      if (mask & (std::size_t(1) << i)) v[i + 1] = ks[i];
    vs.push_back(std::move(v));
  }
  return LatticePolytope::from_vertices(std::move(vs));
}

LatticePolytope zonotope(std::size_t d) {
  if (d < 2) throw std::invalid_argument("zonotope: need d >= 2");
  std::vector<IntVec> vs;
  for (std::size_t mask = 1; mask < (std::size_t(1) << (d - 1)); ++mask) {
    for (int sign : {1, -1}) {
      IntVec v = unit(d, 0);
      for (std::size_t i = 0; i < d - 1; ++i)
        if (mask & (std::size_t(1) << i)) v[i + 1] = sign;
      vs.push_back(std::move(v));
    }
  }
  return LatticePolytope::from_vertices(std::move(vs));
}

LatticePolytope zonotope_polar(std::size_t d) {
  if (d < 2) throw std::invalid_argument("zonotope_polar: need d >= 2");
  std::vector<IntVec> vs;
  for (std::size_t i = 1; i < d; ++i)
    for (int sign : {1, -1}) {
      IntVec v = unit(d, 0);
      v[i] = sign;
      vs.push_back(std::move(v));
    }
  for (std::size_t i = 1; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (int sign : {1, -1}) {
        IntVec v = unit(d, 0);
        v[i] = sign;
        v[j] = -sign;
        vs.push_back(std::move(v));
      }
  return LatticePolytope::from_vertices(std::move(vs));
}

LatticePolytope del_pezzo_slice(std::size_t d) {
  if (d < 3 || d % 2 == 0)
    throw std::invalid_argument("del_pezzo_slice: need odd d >= 3");
  std::vector<IntVec> vs;
  for (std::size_t i = 1; i < d; ++i)
    for (int sign : {1, -1}) {
      IntVec v = unit(d, 0);
      v[i] = sign;
      vs.push_back(std::move(v));
    }
  for (int sign : {1, -1}) {
    IntVec v = unit(d, 0);
    for (std::size_t i = 1; i < d; ++i) v[i] = sign;
    vs.push_back(std::move(v));
  }
  return LatticePolytope::from_vertices(std::move(vs));
}

std::optional<IntVec> fano_center(const LatticePolytope& p) {
  auto interior = p.interior_lattice_points();
  if (interior.size() != 1) return std::nullopt;
  return interior.front();
}

bool is_fano(const LatticePolytope& p) {
  if (!p.is_slice() || p.dim() < 1) return false;
  auto center = fano_center(p);
  if (!center) return false;
  std::size_t k = p.dim();
  IntVec c0 = p.chart_coords(*center);
  for (const auto& f : p.facets()) {
    if (f.tight.size() != k) return false;  // facet must be a simplex
    IntMat diffs(k, k);
    for (std::size_t i = 0; i < k; ++i)
      diffs.set_row(i, p.chart_coords(p.vertices()[f.tight[i]]) - c0);
    Int index = 1;
    for (const auto& e : elementary_divisors(diffs)) {
      if (e == 0) return false;
      index *= e;
    }
    if (index != 1) return false;
  }
  return true;
}

bool is_hd_compatible(const LatticePolytope& p) {
  if (!p.is_slice())
    throw std::invalid_argument("is_hd_compatible: not a slice polytope");
  std::size_t d = p.ambient_dim();
  const auto& verts = p.vertices();
  for (const auto& f : p.facets()) {
    bool ok = false;
    // x_i = kappa
    for (std::size_t i = 1; i < d && !ok; ++i) {
      const Int& kappa = verts[f.tight.front()][i];
      bool all = true;
      for (auto t : f.tight)
        if (verts[t][i] != kappa) {
          all = false;
          break;
        }
      ok = all;
    }
    // x_i - x_j = lambda
    for (std::size_t i = 1; i < d && !ok; ++i)
      for (std::size_t j = i + 1; j < d && !ok; ++j) {
        Int lambda = verts[f.tight.front()][i] - verts[f.tight.front()][j];
        bool all = true;
        for (auto t : f.tight)
          if (verts[t][i] - verts[t][j] != lambda) {
            all = false;
            break;
          }
        ok = all;
      }
    if (!ok) return false;
  }
  return true;
}

}  // namespace crepant
