// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit when
// anything fails. Everything is exact; the randomized parts are seeded.

#include <crepant/ehrhart.hpp>
#include <crepant/io.hpp>
#include <crepant/triangulation.hpp>

#include <functional>
#include <iostream>
#include <set>

#include "support.hpp"

using namespace crepant;
using testsupport::ints;
using testsupport::iv;
using testsupport::Rng;

namespace {

int g_failures = 0;

void report(int num, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << "[" << (num < 10 ? " " : "") << num << "] "
            << (ok ? "PASS" : "FAIL") << " " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

struct CorpusEntry {
  ParamSequence m;
  CertifiedTriangulation cert;
  LatticePolytope poly = LatticePolytope::from_vertices({{Int(1)}});
};

// seeded corpus: 200 admissible sequences, d in {2..5}, entries in [-3,3]
std::vector<CorpusEntry> build_corpus() {
  Rng rng(0xC0FFEE);
  std::vector<std::pair<std::size_t, int>> plan = {
      {2, 40}, {3, 65}, {4, 55}, {5, 40}};
  std::vector<std::size_t> caps = {0, 0, 60, 60, 48, 36};
  std::vector<CorpusEntry> corpus;
  for (auto [d, count] : plan)
    for (int t = 0; t < count; ++t) {
      CorpusEntry e;
      e.m = testsupport::random_admissible(d, rng, 3, caps[d]);
      e.poly = build(e.m);
      e.cert = resolve(e.m, PullOrder::Lex);
      corpus.push_back(std::move(e));
    }
  return corpus;
}

bool criterion1_ehrhart_goldens() {
  bool ok = true;
  for (long k = 1; k <= 4; ++k) {
    auto m = ParamSequence::make(2, {{Int(k), Int(0)}});
    auto e = ehrhart_polynomial(build(m));
    ok = ok && e.coefficients == RatVec{Rat(1), Rat(k)};
    for (long nu = 0; nu <= 4; ++nu)
      ok = ok && ehrhart_nakajima(m, Int(nu)) == Int(k * nu + 1);
  }
  auto m3 = ParamSequence::make(3, {iv({2, 0, 0}), iv({2, 1, 0})});
  auto e3 = ehrhart_polynomial(build(m3));
  ok = ok && e3.coefficients == RatVec{Rat(1), Rat(5), Rat(6)};
  ok = ok && count_points(build(m3), 1) == 12;
  ok = ok && count_points(build(m3), 2) == 35;
  auto m4 = ParamSequence::make(
      4, {iv({1, 0, 0, 0}), iv({1, 0, 0, 0}), iv({2, -1, -1, 0})});
  auto closed = nakajima_closed_form(m4);
  for (long nu = 0; nu <= 3; ++nu) {
    Rat predicted = evaluate_polynomial(closed, Int(nu));
    ok = ok && predicted == Rat(count_points(build(m4), Int(nu)));
    ok = ok && predicted == Rat(ehrhart_nakajima(m4, Int(nu)));
  }
  // the closed forms match interpolation throughout d <= 4
  Rng rng(71);
  for (std::size_t d = 2; d <= 4; ++d)
    for (int t = 0; t < 3; ++t) {
      auto m = testsupport::random_admissible(d, rng, 2, 50);
      ok = ok && nakajima_closed_form(m) ==
                     ehrhart_polynomial(build(m)).coefficients;
    }
  return ok;
}

bool criterion2_resolution_corpus(const std::vector<CorpusEntry>& corpus,
                             std::string& detail) {
  std::size_t failures = 0;
  for (const auto& e : corpus) {
    bool ok = e.cert.flags.maximal && e.cert.flags.basic &&
              e.cert.flags.coherent;
    ok = ok && verify_covering(e.cert.tri, e.cert.heights);
    auto pts = e.poly.lattice_points();
    ok = ok && pts == e.cert.tri.points;
    ok = ok && Int(e.cert.tri.simplices.size()) == e.poly.normalized_volume();
    if (!ok) ++failures;
  }
  detail = std::to_string(corpus.size()) + " sequences, " +
           std::to_string(failures) + " failures";
  return failures == 0;
}

bool criterion3_pull_round_trip(std::string& detail) {
  Rng rng(0xBEEF);
  int done = 0, failures = 0;
  while (done < 100) {
    std::size_t d = 2 + rng.below(3);  // ambient dimension 2..4
    std::size_t n = d + 1 + rng.below(5);
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
      w.push_back(
          make_rat(Int(rng.range(-3, 3)), Int(1 + long(rng.below(2)))));
    auto s = regular_subdivision(pts, w);
    std::size_t v = rng.below(pts.size());
    auto w2 = pull_heights(s, w, v);
    auto direct = pull(s, v);
    auto regular = regular_subdivision(pts, w2);
    auto a = direct.cells;
    auto b = regular.cells;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) ++failures;
    ++done;
  }
  detail = "100 subdivisions, " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool criterion4_prism_lifting(std::string& detail) {
  Rng rng(0xF00D);
  long counterexamples = 0, elementary_found = 0;
  for (std::size_t d = 3; d <= 4; ++d) {
    for (int trial = 0; trial < 8; ++trial) {
      // random unimodular image (within the slice of height-one points of
      // R^{d-1}) of the standard basic (d-2)-simplex, then the prism points
      std::vector<IntVec> base;
      {
        IntVec e1(d - 1, Int(0));
        e1[0] = 1;
        base.push_back(e1);
        for (std::size_t i = 1; i + 1 < d; ++i) {
          IntVec v = e1;
          v[i] = 1;
          base.push_back(v);
        }
      }
      IntMat u = testsupport::random_slice_map(d - 1, rng);
      std::vector<IntVec> pts;
      for (const auto& b : base) {
        IntVec w(d - 1, Int(0));
        for (std::size_t i = 0; i + 1 < d; ++i)
          for (std::size_t j = 0; j + 1 < d; ++j) w[i] += u(i, j) * b[j];
        for (long t = 0; t <= 3; ++t) {
          IntVec q(d, Int(0));
          for (std::size_t i = 0; i + 1 < d; ++i) q[i] = w[i];
          q[d - 1] = Int(t);
          pts.push_back(q);
        }
      }
      // exhaustive over all d-subsets
      std::vector<std::size_t> c(d);
      for (std::size_t i = 0; i < d; ++i) c[i] = i;
      for (;;) {
        std::vector<IntVec> vs;
        for (std::size_t i = 0; i < d; ++i) vs.push_back(pts[c[i]]);
        std::set<IntVec> uniq(vs.begin(), vs.end());
        if (uniq.size() == d) {
          auto poly = LatticePolytope::from_points(vs);
          if (poly.vertices().size() == d && poly.dim() + 1 == d) {
            if (is_elementary_simplex(poly)) {
              ++elementary_found;
              if (!is_basic_simplex(poly)) ++counterexamples;
            }
          }
        }
        bool more = false;
        for (std::size_t i = d; i-- > 0;) {
          if (c[i] != i + pts.size() - d) {
            ++c[i];
            for (std::size_t j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
            more = true;
            break;
          }
        }
        if (!more) break;
      }
    }
  }
  detail = std::to_string(elementary_found) + " elementary simplices, " +
           std::to_string(counterexamples) + " counterexamples";
  return counterexamples == 0 && elementary_found > 0;
}

bool criterion5_hypersurface() {
  bool ok = true;
  for (std::size_t d = 2; d <= 5; ++d)
    for (long k = 1; k <= 4; ++k)
      ok = ok && hypersurface_cohomology(d, Int(k)).dims ==
                     cohomology_dims(hypersurface_simplex(d, Int(k))).dims;
  for (long k = 1; k <= 4; ++k)
    ok = ok && hypersurface_cohomology(2, Int(k)).dims ==
                   std::vector<Int>{Int(1), Int(k - 1)};
  ok = ok && hypersurface_cohomology(3, 2).dims == ints({1, 3, 0});
  return ok;
}

bool criterion6_rp(std::string& detail) {
  bool ok = true;
  std::size_t ehr_checked = 0, hilb_checked = 0;

  std::function<void(std::vector<Int>&, std::size_t)> tuples =
      [&](std::vector<Int>& ks, std::size_t want) {
        if (ks.size() == want) {
          std::size_t d = ks.size() + 1;
          Int prod = 1;
          for (const auto& k : ks) prod *= k;
          if (d <= 4 || prod <= 16) {
            // Ehrhart: coefficients are the elementary symmetric polynomials
            auto e = ehrhart_polynomial(rp_polytope(ks));
            auto s = elementary_symmetric(ks);
            RatVec expect;
            for (const auto& x : s) expect.push_back(Rat(x));
            ok = ok && e.coefficients == expect;
            ++ehr_checked;
          }
          // Hilbert basis of the dual equals the explicit 2d-1 element set
          // for the singular members (every k_i >= 2; with some k_i = 1 the
          // first unit functional is a sum of two others and drops out).
          bool singular = true;
          for (const auto& k : ks)
            if (k < 2) singular = false;
          if (singular) {
            auto dual = dual_cone(cone_over(rp_polytope(ks)));
            auto hb = hilbert_basis(dual);
            std::set<IntVec> expect_set;
            for (std::size_t i = 0; i < d; ++i) {
              IntVec e(d, Int(0));
              e[i] = 1;
              expect_set.insert(e);
            }
            for (std::size_t i = 0; i + 1 < d; ++i) {
              IntVec e(d, Int(0));
              e[0] = ks[i];
              e[i + 1] = -1;
              expect_set.insert(e);
            }
            std::set<IntVec> got(hb.begin(), hb.end());
            ok = ok && got == expect_set;
            ok = ok && embedding_dimension(cone_over(rp_polytope(ks))) ==
                           2 * d - 1;
            ++hilb_checked;
          }
          return;
        }
        for (long k = 1; k <= 4; ++k) {
          ks.push_back(Int(k));
          tuples(ks, want);
          ks.pop_back();
        }
      };
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<Int> ks;
    tuples(ks, len);
  }
  // a larger d=5 Ehrhart check within the product bound
  for (const auto& ks :
       {ints({3, 3, 3, 3}), ints({1, 2, 3, 4}), ints({4, 4, 2, 2})}) {
    auto e = ehrhart_polynomial(rp_polytope(ks));
    auto s = elementary_symmetric(ks);
    RatVec expect;
    for (const auto& x : s) expect.push_back(Rat(x));
    ok = ok && e.coefficients == expect;
    ++ehr_checked;
  }
  detail = std::to_string(ehr_checked) + " Ehrhart + " +
           std::to_string(hilb_checked) + " Hilbert-basis instances";
  return ok;
}

bool criterion7_zonotopes() {
  bool ok = true;
  for (std::size_t d = 2; d <= 4; ++d) {
    ok = ok && zonotope(d).vertices().size() ==
                   2 * ((std::size_t(1) << (d - 1)) - 1);
    ok = ok && zonotope_polar(d).vertices().size() == d * (d - 1);
    ok = ok && zonotope_polar(d).normalized_volume() ==
                   binomial(Int(2 * (d - 1)), Int(d - 1));
  }
  return ok;
}

bool criterion8_koszul(const std::vector<CorpusEntry>& corpus,
                       std::string& detail) {
  std::size_t failures = 0;
  for (const auto& e : corpus)
    if (!koszul_check(e.cert.tri)) ++failures;
  // the cardinality-1 counterexample
  Triangulation t;
  t.points = {iv({1, 0}), iv({1, 1}), iv({1, 2})};
  t.simplices = {{0, 2}};
  bool counterexample_rejected = !koszul_check(t);
  detail = std::to_string(corpus.size()) + " triangulations, " +
           std::to_string(failures) + " failures";
  return failures == 0 && counterexample_rejected;
}

bool criterion9_independence(const std::vector<CorpusEntry>& corpus,
                             std::string& detail) {
  std::size_t checked = 0, failures = 0;
  for (const auto& e : corpus) {
    if (checked >= 20) break;
    if (e.m.d < 3) continue;
    auto a = e.cert.tri.simplices.size();
    auto b = resolve(e.m, PullOrder::Given).tri.simplices.size();
    auto c = resolve(e.m, PullOrder::Seeded, 1234 + checked).tri.simplices.size();
    Int sum = 0;
    for (const auto& x : ehrhart_polynomial(e.poly).delta) sum += x;
    if (!(a == b && b == c && Int(a) == sum)) ++failures;
    ++checked;
  }
  detail = std::to_string(checked) + " polytopes x 3 orders, " +
           std::to_string(failures) + " failures";
  return checked >= 20 && failures == 0;
}

bool criterion10_invariance(std::string& detail) {
  Rng rng(0xABCD);
  std::size_t failures = 0, instances = 0;
  for (std::size_t d = 2; d <= 4; ++d) {
    for (int t = 0; t < 3; ++t) {
      auto m = testsupport::random_admissible(d, rng, 2, 45);
      auto p = build(m);
      auto e0 = ehrhart_polynomial(p);
      Int vol0 = p.normalized_volume();
      bool gor0 = gorenstein_functional(cone_over(p)).has_value();
      ++instances;
      for (int rep = 0; rep < 10; ++rep) {
        auto map = testsupport::random_slice_map(d, rng);
        auto q = testsupport::transform_slice(p, map);
        bool ok = ehrhart_polynomial(q).delta == e0.delta;
        ok = ok && q.normalized_volume() == vol0;
        ok = ok && gorenstein_functional(cone_over(q)).has_value() == gor0;
        // multiplicity invariance on the vertex cone of the first vertex
        if (p.dim() + 1 == d) {
          auto c0 = cone_over(p);
          auto c1 = cone_over(q);
          if (c0.generators().size() == d && c1.generators().size() == d)
            ok = ok && multiplicity(c0) == multiplicity(c1);
        }
        if (!ok) ++failures;
      }
    }
  }
  detail = std::to_string(instances) + " instances x 10 maps, " +
           std::to_string(failures) + " failures";
  return failures == 0;
}

}  // namespace

int main() {
  std::cout << "acceptance criteria\n";

  report(1, "Ehrhart goldens for the d=2,3,4 closed forms",
         criterion1_ehrhart_goldens());

  auto corpus = build_corpus();
  std::string detail;

  bool c2 = criterion2_resolution_corpus(corpus, detail);
  report(2, "resolve() is maximal+basic+coherent+covering on the corpus", c2,
         detail);

  bool c3 = criterion3_pull_round_trip(detail);
  report(3, "pull + pull_heights round-trips through regular_subdivision", c3,
         detail);

  bool c4 = criterion4_prism_lifting(detail);
  report(4, "elementary simplices in bounded prisms over basic bases are basic",
         c4, detail);

  report(5, "hypersurface family closed form (d<=5, k<=4)",
         criterion5_hypersurface());

  bool c6 = criterion6_rp(detail);
  report(6, "box family: product Ehrhart + dual Hilbert basis of size 2d-1",
         c6, detail);

  report(7, "zonotope and polar counts for d in {2,3,4}",
         criterion7_zonotopes());

  bool c8 = criterion8_koszul(corpus, detail);
  report(8, "Koszul criterion on the corpus", c8, detail);

  bool c9 = criterion9_independence(corpus, detail);
  report(9, "simplex counts are order-independent and equal sum(delta)", c9,
         detail);

  bool c10 = criterion10_invariance(detail);
  report(10, "delta/volume/multiplicity/Gorenstein invariance", c10, detail);

  if (g_failures) {
    std::cout << g_failures << " criteria FAILED\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
