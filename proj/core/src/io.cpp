#include "crepant/io.hpp"

#include <algorithm>
#include <numeric>

namespace crepant {

namespace {

bool lex_less(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::int64_t to_i64(const Int& x) {
  if (!x.fits_slong_p())
    throw std::invalid_argument("io: integer too large for JSON");
  return x.get_si();
}

}  // namespace

Json int_vec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_i64(x));
  return a;
}

IntVec int_vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("io: expected an array");
  IntVec v;
  for (const auto& e : j) v.push_back(Int(e.get<std::int64_t>()));
  return v;
}

Json to_json(const LatticePolytope& p) {
  Json j;
  j["ambient_dim"] = p.ambient_dim();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(int_vec_to_json(v));
  j["vertices"] = vs;
  return j;
}

LatticePolytope polytope_from_json(const Json& j) {
  std::size_t d = j.at("ambient_dim").get<std::size_t>();
  std::vector<IntVec> vs;
  for (const auto& e : j.at("vertices")) {
    auto v = int_vec_from_json(e);
    if (v.size() != d)
      throw std::invalid_argument("io: vertex/ambient_dim mismatch");
    vs.push_back(std::move(v));
  }
  return LatticePolytope::from_points(std::move(vs));
}

Json to_json(const ParamSequence& m) {
  Json j;
  j["d"] = m.d;
  Json rows = Json::array();
  for (const auto& r : m.rows) rows.push_back(int_vec_to_json(r));
  j["rows"] = rows;
  return j;
}

ParamSequence sequence_from_json(const Json& j) {
  std::size_t d = j.at("d").get<std::size_t>();
  std::vector<IntVec> rows;
  for (const auto& e : j.at("rows")) rows.push_back(int_vec_from_json(e));
  return ParamSequence::make(d, std::move(rows));
}

Json to_json(const RationalCone& c) {
  Json j;
  Json gs = Json::array();
  for (const auto& g : c.generators()) gs.push_back(int_vec_to_json(g));
  j["generators"] = gs;
  return j;
}

RationalCone cone_from_json(const Json& j) {
  std::vector<IntVec> gs;
  for (const auto& e : j.at("generators")) gs.push_back(int_vec_from_json(e));
  return RationalCone::from_generators(std::move(gs));
}

Json to_json(const CertifiedTriangulation& t) {
  // canonical relabelling: points sorted lexicographically
  std::size_t n = t.tri.points.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t(0));
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(t.tri.points[a], t.tri.points[b]);
  });
  std::vector<std::size_t> where(n);
  for (std::size_t i = 0; i < n; ++i) where[perm[i]] = i;

  Json j;
  Json pts = Json::array();
  Json hts = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(int_vec_to_json(t.tri.points[perm[i]]));
    hts.push_back(to_string(t.heights[perm[i]]));
  }
  std::vector<std::vector<std::size_t>> simplices;
  for (const auto& s : t.tri.simplices) {
    std::vector<std::size_t> r;
    for (auto i : s) r.push_back(where[i]);
    std::sort(r.begin(), r.end());
    simplices.push_back(std::move(r));
  }
  std::sort(simplices.begin(), simplices.end());
  Json sj = Json::array();
  for (const auto& s : simplices) sj.push_back(s);
  j["points"] = pts;
  j["simplices"] = sj;
  j["heights"] = hts;
  j["flags"] = {{"maximal", t.flags.maximal},
                {"basic", t.flags.basic},
                {"coherent", t.flags.coherent}};
  return j;
}

CertifiedTriangulation triangulation_from_json(const Json& j) {
  CertifiedTriangulation t;
  for (const auto& e : j.at("points"))
    t.tri.points.push_back(int_vec_from_json(e));
  for (const auto& e : j.at("simplices")) {
    std::vector<std::size_t> s;
    for (const auto& i : e) s.push_back(i.get<std::size_t>());
    std::sort(s.begin(), s.end());
    t.tri.simplices.push_back(std::move(s));
  }
  for (const auto& e : j.at("heights"))
    t.heights.push_back(rat_from_string(e.get<std::string>()));
  if (t.heights.size() != t.tri.points.size())
    throw std::invalid_argument("io: heights/points mismatch");
  if (j.contains("flags")) {
    const auto& f = j.at("flags");
    t.flags.maximal = f.value("maximal", false);
    t.flags.basic = f.value("basic", false);
    t.flags.coherent = f.value("coherent", false);
  }
  return t;
}

Json to_json(const EhrhartData& e) {
  Json j;
  Json cs = Json::array();
  for (const auto& c : e.coefficients) cs.push_back(to_string(c));
  Json ds = Json::array();
  for (const auto& d : e.delta) ds.push_back(to_i64(d));
  j["coefficients"] = cs;
  j["delta"] = ds;
  return j;
}

Json to_json(const CohomologyProfile& c) {
  Json a = Json::array();
  for (const auto& d : c.dims) a.push_back(to_i64(d));
  return Json{{"cohomology", a}};
}

}  // namespace crepant
