#include <doctest.h>

#include <crepant/ehrhart.hpp>
#include <crepant/triangulation.hpp>

#include <set>

#include "support.hpp"

using namespace crepant;
using testsupport::ints;
using testsupport::iv;
using testsupport::Rng;

namespace {

std::vector<IntVec> square_pts() {
  return {iv({1, 0, 0}), iv({1, 0, 1}), iv({1, 1, 0}), iv({1, 1, 1})};
}

std::vector<std::vector<std::size_t>> cells_of(const Subdivision& s) {
  auto c = s.cells;
  std::sort(c.begin(), c.end());
  return c;
}

std::size_t index_of(const std::vector<IntVec>& pts, const IntVec& p) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i] == p) return i;
  throw std::logic_error("point not found");
}

}  // namespace

TEST_CASE("regular subdivision of collinear points") {
  std::vector<IntVec> pts = {iv({1, 0}), iv({1, 1}), iv({1, 2})};
  auto flat = regular_subdivision(pts, {Rat(0), Rat(0), Rat(0)});
  REQUIRE(flat.cells.size() == 1);
  CHECK(flat.cells.front() == std::vector<std::size_t>{0, 2});

  auto split = regular_subdivision(pts, {Rat(0), Rat(-1), Rat(0)});
  REQUIRE(split.cells.size() == 2);
  CHECK(cells_of(split) ==
        std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}});
}

TEST_CASE("regular subdivision of the square with one dropped corner") {
  auto pts = square_pts();
  HeightFunction w(4, Rat(0));
  w[index_of(pts, iv({1, 1, 1}))] = Rat(-1);
  auto s = regular_subdivision(pts, w);
  REQUIRE(s.cells.size() == 2);
  std::size_t p00 = index_of(pts, iv({1, 0, 0}));
  std::size_t p10 = index_of(pts, iv({1, 1, 0}));
  std::size_t p01 = index_of(pts, iv({1, 0, 1}));
  std::size_t p11 = index_of(pts, iv({1, 1, 1}));
  std::vector<std::vector<std::size_t>> expect = {{p00, p10, p11},
                                                  {p00, p01, p11}};
  for (auto& c : expect) std::sort(c.begin(), c.end());
  std::sort(expect.begin(), expect.end());
  CHECK(cells_of(s) == expect);
}

TEST_CASE("pull") {
  SUBCASE("corner of a square gives two triangles") {
    auto pts = square_pts();
    Subdivision s{pts, {{0, 1, 2, 3}}};
    auto r = pull(s, index_of(pts, iv({1, 0, 0})));
    CHECK(r.cells.size() == 2);
    for (const auto& c : r.cells) CHECK(c.size() == 3);
  }
  SUBCASE("pulling a vertex of every incident simplex changes nothing") {
    auto pts = square_pts();
    Subdivision s{pts, {{0, 1, 3}, {0, 2, 3}}};
    for (std::size_t v = 0; v < 4; ++v) CHECK(cells_of(pull(s, v)) == cells_of(s));
  }
  SUBCASE("interior point of a segment") {
    std::vector<IntVec> pts = {iv({1, 0}), iv({1, 1}), iv({1, 2})};
    Subdivision s{pts, {{0, 2}}};
    auto r = pull(s, 1);
    CHECK(cells_of(r) == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}});
  }
}

TEST_CASE("pull_heights") {
  SUBCASE("square corner with flat heights drops to -1") {
    auto pts = square_pts();
    Subdivision s{pts, {{0, 1, 2, 3}}};
    HeightFunction w(4, Rat(0));
    std::size_t v = index_of(pts, iv({1, 0, 0}));
    auto w2 = pull_heights(s, w, v);
    CHECK(w2[v] == Rat(-1));
    for (std::size_t i = 0; i < 4; ++i)
      if (i != v) CHECK(w2[i] == Rat(0));
    // round trip
    CHECK(cells_of(regular_subdivision(pts, w2)) == cells_of(pull(s, v)));
  }
  SUBCASE("pulling an already-pulled point keeps the subdivision") {
    std::vector<IntVec> pts = {iv({1, 0}), iv({1, 1}), iv({1, 2})};
    HeightFunction w = {Rat(0), Rat(-1), Rat(0)};
    auto s = regular_subdivision(pts, w);
    auto w2 = pull_heights(s, w, 1);
    CHECK(cells_of(regular_subdivision(pts, w2)) == cells_of(s));
  }
  SUBCASE("flat collinear points reproduce the two-cell example") {
    std::vector<IntVec> pts = {iv({1, 0}), iv({1, 1}), iv({1, 2})};
    Subdivision s{pts, {{0, 2}}};
    HeightFunction w(3, Rat(0));
    auto w2 = pull_heights(s, w, 1);
    CHECK(w2 == HeightFunction{Rat(0), Rat(-1), Rat(0)});
    CHECK(cells_of(regular_subdivision(pts, w2)) == cells_of(pull(s, 1)));
  }
}

TEST_CASE("pull_all") {
  SUBCASE("dilated triangle splits into 4 basic triangles") {
    auto p = hypersurface_simplex(3, 2);
    auto pts = p.lattice_points();
    REQUIRE(pts.size() == 6);
    std::vector<std::size_t> vertex_ids;
    for (const auto& v : p.vertices()) vertex_ids.push_back(index_of(pts, v));
    std::sort(vertex_ids.begin(), vertex_ids.end());
    Subdivision s{pts, {vertex_ids}};
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;  // lex
    auto cert = pull_all(s, HeightFunction(pts.size(), Rat(0)), order);
    CHECK(cert.tri.simplices.size() == 4);
    CHECK(cert.flags.coherent);
    CHECK(verify_basic(cert.tri));
    CHECK(verify_maximal(cert.tri));
    CHECK(verify_covering(cert.tri, cert.heights));
  }
  SUBCASE("a basic simplex stays itself") {
    std::vector<IntVec> pts = {iv({1, 0, 0}), iv({1, 1, 0}), iv({1, 0, 1})};
    Subdivision s{pts, {{0, 1, 2}}};
    auto cert = pull_all(s, HeightFunction(3, Rat(0)), {0, 1, 2});
    CHECK(cert.tri.simplices ==
          std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  }
  SUBCASE("square pulled from a corner gives the corner triangulation") {
    auto pts = square_pts();
    Subdivision s{pts, {{0, 1, 2, 3}}};
    auto cert = pull_all(s, HeightFunction(4, Rat(0)), {0, 1, 2, 3});
    CHECK(cert.tri.simplices.size() == 2);
    for (const auto& t : cert.tri.simplices)
      CHECK(std::find(t.begin(), t.end(), 0) != t.end());
  }
}

TEST_CASE("pulling all points of random configurations yields triangulations") {
  Rng rng(51);
  for (int t = 0; t < 30; ++t) {
    std::size_t d = 2 + rng.below(3);  // ambient 2..4
    std::size_t n = d + 1 + rng.below(4);
    std::vector<IntVec> pts;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec p(d);
      p[0] = 1;
      for (std::size_t j = 1; j < d; ++j) p[j] = Int(rng.range(0, 3));
      if (std::find(pts.begin(), pts.end(), p) == pts.end())
        pts.push_back(std::move(p));
    }
    auto hull = hull_vertices(pts);
    std::vector<std::size_t> cell;
    for (const auto& v : hull) cell.push_back(index_of(pts, v));
    std::sort(cell.begin(), cell.end());
    Subdivision s{pts, {cell}};
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    auto cert = pull_all(s, HeightFunction(pts.size(), Rat(0)), order);
    CHECK(cert.flags.coherent);
    CHECK(verify_covering(cert.tri, cert.heights));
    std::set<std::size_t> used;
    for (const auto& simplex : cert.tri.simplices)
      used.insert(simplex.begin(), simplex.end());
    CHECK(used.size() == pts.size());
  }
}

TEST_CASE("pull plus height update round-trips through regular_subdivision") {
  Rng rng(52);
  int done = 0;
  for (int t = 0; done < 40 && t < 200; ++t) {
    std::size_t d = 2 + rng.below(3);
    std::size_t n = d + 1 + rng.below(4);
    std::vector<IntVec> pts;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec p(d);
      p[0] = 1;
      for (std::size_t j = 1; j < d; ++j) p[j] = Int(rng.range(0, 3));
      if (std::find(pts.begin(), pts.end(), p) == pts.end())
        pts.push_back(std::move(p));
    }
    if (pts.size() < 3) continue;
    HeightFunction w;
    for (std::size_t i = 0; i < pts.size(); ++i)
      w.push_back(Rat(rng.range(-3, 3)));
    auto s = regular_subdivision(pts, w);
    std::size_t v = rng.below(pts.size());
    auto w2 = pull_heights(s, w, v);
    CHECK(cells_of(regular_subdivision(pts, w2)) == cells_of(pull(s, v)));
    ++done;
  }
  CHECK(done == 40);
}

TEST_CASE("full flag triangulation agrees with pulling on vertex sets") {
  SUBCASE("square") {
    auto p = LatticePolytope::from_vertices(square_pts());
    auto order = p.vertices();
    auto t = full_flag_triangulation(p, order);
    CHECK(t.simplices.size() == 2);
    for (const auto& s : t.simplices)
      CHECK(std::find(s.begin(), s.end(), 0) != s.end());
  }
  SUBCASE("simplex") {
    auto p = LatticePolytope::from_vertices(
        {iv({1, 0, 0}), iv({1, 1, 0}), iv({1, 0, 1})});
    auto t = full_flag_triangulation(p, p.vertices());
    CHECK(t.simplices == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  }
  SUBCASE("hexagon fans from the first vertex") {
    auto hex = del_pezzo_slice(3);
    auto t = full_flag_triangulation(hex, hex.vertices());
    CHECK(t.simplices.size() == 4);
  }
  SUBCASE("oracle comparison on random polytopes") {
    Rng rng(53);
    for (int t = 0; t < 12; ++t) {
      std::size_t d = 2 + rng.below(3);
      std::vector<IntVec> pts;
      for (std::size_t i = 0; i < d + 2 + rng.below(3); ++i) {
        IntVec p(d);
        p[0] = 1;
        for (std::size_t j = 1; j < d; ++j) p[j] = Int(rng.range(0, 3));
        pts.push_back(std::move(p));
      }
      auto poly = LatticePolytope::from_points(pts);
      auto order = poly.vertices();
      auto flags = full_flag_triangulation(poly, order);
      std::vector<std::size_t> ids(order.size());
      for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
      Subdivision s{order, {ids}};
      auto pulled = pull_all(s, HeightFunction(order.size(), Rat(0)), ids);
      auto a = flags.simplices;
      auto b = pulled.tri.simplices;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
}

TEST_CASE("prism subdivision") {
  SUBCASE("segment base with lambda (1,1)") {
    Triangulation base;
    base.points = {iv({1, 0, 0}), iv({1, 1, 0})};
    base.simplices = {{0, 1}};
    auto [s, w] = prism_subdivision(base, {Rat(0), Rat(0)}, iv({1, 1, 0}), 2);
    REQUIRE(s.cells.size() == 1);
    auto cp = cell_polytope(s, 0);
    CHECK(cp == build(ParamSequence::make(3, {iv({1, 0, 0}), iv({1, 1, 0})})));
  }
  SUBCASE("point base gives a segment") {
    Triangulation base;
    base.points = {iv({1, 0})};
    base.simplices = {{0}};
    auto [s, w] = prism_subdivision(base, {Rat(0)}, iv({3, 0}), 1);
    REQUIRE(s.cells.size() == 1);
    CHECK(cell_polytope(s, 0) ==
          LatticePolytope::from_vertices({iv({1, 0}), iv({1, 3})}));
  }
  SUBCASE("two segments under lambda (2,1) partition the running example") {
    Triangulation base;
    base.points = {iv({1, 0, 0}), iv({1, 1, 0}), iv({1, 2, 0})};
    base.simplices = {{0, 1}, {1, 2}};
    HeightFunction wq = {Rat(0), Rat(-1), Rat(0)};
    auto [s, w] = prism_subdivision(base, wq, iv({2, 1, 0}), 2);
    REQUIRE(s.cells.size() == 2);
    Int total = 0;
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
      CHECK(cell_polytope(s, i).vertices().size() == 4);
      total += cell_polytope(s, i).normalized_volume();
    }
    auto p = build(ParamSequence::make(3, {iv({2, 0, 0}), iv({2, 1, 0})}));
    CHECK(total == p.normalized_volume());
    CHECK(verify_subdivision(s, w));
    CHECK(s.points.size() == p.lattice_points().size());
  }
}

TEST_CASE("resolve") {
  SUBCASE("running example: 12 basic triangles on 12 points") {
    auto cert =
        resolve(ParamSequence::make(3, {iv({2, 0, 0}), iv({2, 1, 0})}));
    CHECK(cert.tri.points.size() == 12);
    CHECK(cert.tri.simplices.size() == 12);
    CHECK(cert.flags.maximal);
    CHECK(cert.flags.basic);
    CHECK(cert.flags.coherent);
    CHECK(verify_covering(cert.tri, cert.heights));
  }
  SUBCASE("segments") {
    for (long k = 1; k <= 5; ++k) {
      auto cert = resolve(ParamSequence::make(2, {{Int(k), Int(0)}}));
      CHECK(cert.tri.simplices.size() == std::size_t(k));
      CHECK(cert.flags.basic);
    }
  }
  SUBCASE("the d=4 example resolves to volume-many basic simplices") {
    auto m = ParamSequence::make(
        4, {iv({1, 0, 0, 0}), iv({1, 0, 0, 0}), iv({2, -1, -1, 0})});
    auto cert = resolve(m);
    CHECK(cert.flags.maximal);
    CHECK(cert.flags.basic);
    CHECK(cert.flags.coherent);
    CHECK(Int(cert.tri.simplices.size()) == build(m).normalized_volume());
  }
  SUBCASE("point") {
    auto cert = resolve(ParamSequence::make(1, {}));
    CHECK(cert.tri.simplices.size() == 1);
  }
}

TEST_CASE("verifiers on pinned instances") {
  SUBCASE("a segment with an interior point is not maximal") {
    Triangulation t;
    t.points = {iv({1, 0}), iv({1, 2})};
    t.simplices = {{0, 1}};
    CHECK_FALSE(verify_maximal(t));
    CHECK(verify_basic(t) == false);  // volume 2
  }
  SUBCASE("unit square triangulations") {
    Triangulation t;
    t.points = square_pts();
    t.simplices = {{0, 1, 3}, {0, 2, 3}};
    CHECK(verify_maximal(t));
    CHECK(verify_basic(t));
  }
  SUBCASE("Reeve cell is elementary but not basic") {
    Triangulation t;
    t.points = {iv({1, 0, 0, 0}), iv({1, 1, 0, 0}), iv({1, 0, 1, 0}),
                iv({1, 1, 1, 2})};
    t.simplices = {{0, 1, 2, 3}};
    CHECK(verify_maximal(t));
    CHECK_FALSE(verify_basic(t));
  }
  SUBCASE("coherence is the lower-envelope criterion") {
    Triangulation t;
    t.points = {iv({1, 0, 0}), iv({1, 1, 0}), iv({1, 0, 1})};
    t.simplices = {{0, 1, 2}};
    CHECK(verify_coherent(t, HeightFunction(3, Rat(0))));

    Triangulation sq;
    sq.points = square_pts();
    HeightFunction w(4, Rat(0));
    w[3] = Rat(-1);  // lift breaks the square along 0-3
    sq.simplices = {{0, 1, 3}, {0, 2, 3}};
    CHECK(verify_coherent(sq, w));
    sq.simplices = {{0, 1, 2}, {1, 2, 3}};  // the other diagonal
    CHECK_FALSE(verify_coherent(sq, w));
  }
}

TEST_CASE("minimal non-faces and the Koszul criterion") {
  SUBCASE("square along a diagonal has exactly the opposite pair") {
    Triangulation t;
    t.points = square_pts();
    t.simplices = {{0, 1, 3}, {0, 2, 3}};
    auto nf = minimal_nonfaces(t);
    REQUIRE(nf.size() == 1);
    CHECK(nf.front() == std::vector<std::size_t>{1, 2});
    CHECK(koszul_check(t));
  }
  SUBCASE("a skipped point is a cardinality-one non-face") {
    Triangulation t;
    t.points = {iv({1, 0}), iv({1, 1}), iv({1, 2})};
    t.simplices = {{0, 2}};
    auto nf = minimal_nonfaces(t);
    REQUIRE(nf.size() == 1);
    CHECK(nf.front() == std::vector<std::size_t>{1});
    CHECK_FALSE(koszul_check(t));
  }
  SUBCASE("a single simplex has no non-faces") {
    Triangulation t;
    t.points = {iv({1, 0, 0}), iv({1, 1, 0}), iv({1, 0, 1})};
    t.simplices = {{0, 1, 2}};
    CHECK(minimal_nonfaces(t).empty());
    CHECK(koszul_check(t));
  }
  SUBCASE("resolve outputs satisfy the Koszul criterion") {
    auto cert =
        resolve(ParamSequence::make(3, {iv({2, 0, 0}), iv({2, 1, 0})}));
    CHECK(koszul_check(cert.tri));
  }
}

TEST_CASE("canonical Fano triangulation") {
  SUBCASE("hexagon: six triangles around the center") {
    auto cert = fano_canonical(del_pezzo_slice(3));
    CHECK(cert.tri.simplices.size() == 6);
    CHECK(cert.flags.basic);
    CHECK(cert.flags.coherent);
    CHECK(cert.flags.maximal);
    // the center (1,0,0) is in every simplex
    std::size_t center = index_of(cert.tri.points, iv({1, 0, 0}));
    for (const auto& s : cert.tri.simplices)
      CHECK(std::find(s.begin(), s.end(), center) != s.end());
  }
  SUBCASE("non-Fano input is rejected") {
    CHECK_THROWS_AS(fano_canonical(hypersurface_simplex(3, 2)),
                    std::invalid_argument);
  }
  SUBCASE("the five-dimensional case has 30 facet cones") {
    auto cert = fano_canonical(del_pezzo_slice(5));
    CHECK(cert.tri.simplices.size() == 30);
    CHECK(cert.flags.basic);
    CHECK(cert.flags.coherent);
  }
}

TEST_CASE("alcove triangulation of compatible polytopes") {
  SUBCASE("dilated triangle") {
    auto cert = hd_triangulation(hypersurface_simplex(3, 2));
    CHECK(cert.tri.simplices.size() == 4);
    CHECK(cert.flags.basic);
    CHECK(cert.flags.coherent);
    CHECK(cert.flags.maximal);
  }
  SUBCASE("unit square splits along the difference hyperplane") {
    auto cert = hd_triangulation(rp_polytope(ints({1, 1})));
    CHECK(cert.tri.simplices.size() == 2);
    CHECK(cert.flags.basic);
  }
  SUBCASE("hexagon") {
    auto cert = hd_triangulation(zonotope(3));
    CHECK(cert.tri.simplices.size() == 6);
    CHECK(cert.flags.basic);
    CHECK(cert.flags.coherent);
    CHECK(verify_covering(cert.tri, cert.heights));
  }
  SUBCASE("incompatible input is rejected") {
    CHECK_THROWS_AS(hd_triangulation(LatticePolytope::from_vertices(
                        {iv({1, 0, 0}), iv({1, 1, 0}), iv({1, 1, 2})})),
                    std::invalid_argument);
  }
  SUBCASE("volume-many alcoves on larger compatible polytopes") {
    for (const auto& p : {hypersurface_simplex(4, 2), rp_polytope(ints({2, 2})),
                          zonotope(4)}) {
      auto cert = hd_triangulation(p);
      CHECK(Int(cert.tri.simplices.size()) == p.normalized_volume());
      CHECK(cert.flags.basic);
      CHECK(cert.flags.coherent);
      CHECK(cert.flags.maximal);
    }
  }
  SUBCASE("segments split into unit pieces") {
    auto cert = hd_triangulation(hypersurface_simplex(2, 3));
    CHECK(cert.tri.simplices.size() == 3);
    CHECK(cert.flags.basic);
  }
}

TEST_CASE("replaying a hand-picked pull order over the prism subdivision") {
  // base: the two-segment triangulation of [0,2]; prism cut by (2,1);
  // pulling the listed points first still certifies a basic coherent
  // triangulation with volume-many simplices
  Triangulation base;
  base.points = {iv({1, 0, 0}), iv({1, 1, 0}), iv({1, 2, 0})};
  base.simplices = {{0, 1}, {1, 2}};
  HeightFunction wq = {Rat(0), Rat(-1), Rat(0)};
  auto [sub, w] = prism_subdivision(base, wq, iv({2, 1, 0}), 2);
  std::vector<IntVec> first = {iv({1, 0, 2}), iv({1, 1, 1}), iv({1, 1, 2}),
                               iv({1, 1, 0}), iv({1, 2, 1}), iv({1, 2, 2}),
                               iv({1, 2, 3})};
  std::vector<std::size_t> order;
  for (const auto& p : first) order.push_back(index_of(sub.points, p));
  for (std::size_t i = 0; i < sub.points.size(); ++i)
    if (std::find(order.begin(), order.end(), i) == order.end())
      order.push_back(i);
  auto cert = pull_all(sub, w, order);
  CHECK(cert.tri.simplices.size() == 12);
  CHECK(cert.flags.coherent);
  CHECK(verify_basic(cert.tri));
  CHECK(verify_maximal(cert.tri));
  CHECK(verify_covering(cert.tri, cert.heights));
}

TEST_CASE("the special families resolve like any other sequence") {
  auto rp = resolve(rp_sequence(ints({2, 3})));
  CHECK(rp.tri.simplices.size() == 12);
  CHECK(rp.flags.maximal);
  CHECK(rp.flags.basic);
  CHECK(rp.flags.coherent);
  auto hs = resolve(hypersurface_sequence(4, 2));
  CHECK(Int(hs.tri.simplices.size()) == hypersurface_simplex(4, 2).normalized_volume());
  CHECK(hs.flags.basic);
  CHECK(koszul_check(hs.tri));
}

TEST_CASE("prisms over basic simplices only carry basic elementary cells") {
  // small instance of the lifting argument: every elementary simplex drawn
  // from a bounded prism over a basic simplex is basic
  Rng rng(54);
  for (std::size_t d = 3; d <= 5; ++d) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<IntVec> base;
      IntVec e1(d, Int(0));
      e1[0] = 1;
      base.push_back(e1);
      for (std::size_t i = 1; i + 1 < d; ++i) {
        IntVec v = e1;
        v[i] = 1;
        base.push_back(v);
      }
      IntMat u = testsupport::random_slice_map(d - 1, rng);
      std::vector<IntVec> pts;
      for (const auto& b : base) {
        IntVec short_b(b.begin(), b.end() - 1);
        IntVec w(d - 1, Int(0));
        for (std::size_t i = 0; i < d - 1; ++i)
          for (std::size_t j = 0; j < d - 1; ++j) w[i] += u(i, j) * short_b[j];
        for (long t = 0; t <= 2; ++t) {
          IntVec q(d);
          for (std::size_t i = 0; i + 1 < d; ++i) q[i] = w[i];
          q[d - 1] = Int(t);
          pts.push_back(q);
        }
      }
      // all d-subsets that span: elementary implies basic
      std::vector<std::size_t> comb(d);
      for (std::size_t i = 0; i < d; ++i) comb[i] = i;
      for (;;) {
        std::vector<IntVec> vs;
        for (std::size_t i = 0; i < d; ++i) vs.push_back(pts[comb[i]]);
        auto uniq = vs;
        std::sort(uniq.begin(), uniq.end(), [](const IntVec& a, const IntVec& b) {
          return a < b;
        });
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        if (uniq.size() == d) {
          auto poly = LatticePolytope::from_points(vs);
          if (poly.vertices().size() == d && poly.dim() == d - 1) {
            if (is_elementary_simplex(poly)) CHECK(is_basic_simplex(poly));
          }
        }
        bool more = false;
        for (std::size_t i = d; i-- > 0;) {
          if (comb[i] != i + pts.size() - d) {
            ++comb[i];
            for (std::size_t j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
            more = true;
            break;
          }
        }
        if (!more) break;
      }
    }
  }
}

TEST_CASE("different pull orders give the same simplex count") {
  Rng rng(55);
  for (int t = 0; t < 6; ++t) {
    std::size_t d = 2 + rng.below(3);
    auto m = testsupport::random_admissible(d, rng, 2, 40);
    auto a = resolve(m, PullOrder::Lex);
    auto b = resolve(m, PullOrder::Given);
    auto c = resolve(m, PullOrder::Seeded, 17 + t);
    CHECK(a.tri.simplices.size() == b.tri.simplices.size());
    CHECK(a.tri.simplices.size() == c.tri.simplices.size());
    auto e = ehrhart_polynomial(build(m));
    Int sum = 0;
    for (const auto& dd : e.delta) sum += dd;
    CHECK(Int(a.tri.simplices.size()) == sum);
  }
}
