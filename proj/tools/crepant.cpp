// Command-line front end: construct Nakajima polytopes from parameter
// matrices, compute certified basic coherent triangulations, and report
// Ehrhart / delta / cohomology data with closed-form cross-checks.
//
// Exit codes: 0 ok, 2 bad input, 3 internal verifier failure, 4 cross-check
// mismatch.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "crepant/io.hpp"

namespace {

using namespace crepant;

constexpr int kExitBadInput = 2;
constexpr int kExitVerifier = 3;
constexpr int kExitMismatch = 4;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_dim() {
  if (const char* env = std::getenv("CREPANT_MAX_DIM")) {
    return std::strtoul(env, nullptr, 10);
  }
  return 6;
}

Json parse_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
    std::ifstream in(arg);
    if (!in) throw BadInput("cannot open file: " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw BadInput(std::string("bad JSON: ") + e.what());
  }
}

ParamSequence load_sequence(const std::string& arg) {
  auto j = parse_json_arg(arg);
  ParamSequence m = sequence_from_json(j);
  if (m.d > max_dim())
    throw BadInput("d exceeds CREPANT_MAX_DIM (" + std::to_string(max_dim()) +
                   ")");
  return m;
}

std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

void require_admissible(const ParamSequence& m) {
  auto adm = is_admissible(m);
  if (!adm.ok) {
    if (adm.vertex.empty())
      throw BadInput(adm.reason);
    throw BadInput("row " + std::to_string(adm.row) + " negative at vertex " +
                   vec_str(adm.vertex));
  }
}

PullOrder parse_order(const std::string& s) {
  if (s == "lex") return PullOrder::Lex;
  if (s == "given") return PullOrder::Given;
  if (s == "seeded") return PullOrder::Seeded;
  throw BadInput("unknown order policy: " + s);
}

const char* mark(bool b) { return b ? "✓" : "✗"; }

int cmd_build(const std::string& marg, bool json_only) {
  ParamSequence m = load_sequence(marg);
  require_admissible(m);
  LatticePolytope p = build(m);
  Json j = to_json(p);
  std::cout << j.dump() << "\n";
  if (!json_only) {
    std::size_t d = m.d;
    std::size_t nv = p.vertices().size();
    std::size_t nf = p.facets().size();
    std::size_t np = p.lattice_points().size();
    // vertex/facet bounds of the classification; trivial for a point
    bool bounds_ok = d < 2 || (d <= nv && nv <= (std::size_t(1) << (d - 1)) &&
                               d <= nf && nf <= 2 * (d - 1));
    std::cout << "dim=" << p.dim() << " vertices=" << nv << " facets=" << nf
              << " lattice_points=" << np << " bounds=" << mark(bounds_ok)
              << "\n";
  }
  return 0;
}

int cmd_resolve(const std::string& marg, const std::string& order,
                std::uint64_t seed, bool json_only) {
  ParamSequence m = load_sequence(marg);
  require_admissible(m);
  auto cert = resolve(m, parse_order(order), seed);
  bool covering = verify_covering(cert.tri, cert.heights);
  bool koszul = koszul_check(cert.tri);
  std::cout << to_json(cert).dump() << "\n";
  if (!json_only) {
    std::cout << "maximal=" << mark(cert.flags.maximal)
              << " basic=" << mark(cert.flags.basic)
              << " coherent=" << mark(cert.flags.coherent)
              << " covering=" << mark(covering)
              << " simplices=" << cert.tri.simplices.size()
              << " koszul=" << mark(koszul) << "\n";
  }
  if (!cert.flags.maximal || !cert.flags.basic || !cert.flags.coherent ||
      !covering)
    return kExitVerifier;
  return 0;
}

void report_polytope(Json& out, const LatticePolytope& p) {
  out["dim"] = p.dim();
  out["vertices"] = p.vertices().size();
  out["facets"] = p.facets().size();
  out["lattice_points"] = p.lattice_points().size();
  out["normalized_volume"] = to_string(p.normalized_volume());
  out["exceptional_rays"] = p.exceptional_points().size();
  auto e = ehrhart_polynomial(p);
  Json cs = Json::array();
  for (const auto& c : e.coefficients) cs.push_back(to_string(c));
  out["coefficients"] = cs;
  Json ds = Json::array();
  for (const auto& dd : e.delta) ds.push_back(to_string(dd));
  out["delta"] = ds;
  auto coh = cohomology_dims(p);
  Json cj = Json::array();
  for (const auto& dd : coh.dims) cj.push_back(to_string(dd));
  out["cohomology"] = cj;
  auto cone = cone_over(p);
  auto g = gorenstein_functional(cone);
  out["gorenstein_functional"] = g ? vec_str(*g) : "none";
  if (cone.full_dimensional())
    out["embedding_dimension"] = embedding_dimension(cone);
}

int cmd_report(const std::vector<std::string>& family, const std::string& marg,
               const std::string& parg, bool json_only) {
  Json out;
  bool pass = true;
  LatticePolytope p = LatticePolytope::from_vertices({{Int(1)}});
  if (!marg.empty()) {
    ParamSequence m = load_sequence(marg);
    require_admissible(m);
    p = build(m);
    out["family"] = "matrix";
    report_polytope(out, p);
  } else if (!parg.empty()) {
    p = polytope_from_json(parse_json_arg(parg));
    if (p.ambient_dim() > max_dim()) throw BadInput("dim exceeds CREPANT_MAX_DIM");
    out["family"] = "polytope";
    report_polytope(out, p);
  } else if (!family.empty()) {
    const std::string& kind = family.front();
    std::vector<Int> args;
    for (std::size_t i = 1; i < family.size(); ++i)
      args.push_back(Int(family[i]));
    if (kind == "hypersurface") {
      if (args.size() != 2) throw BadInput("usage: report hypersurface d k");
      std::size_t d = args[0].get_ui();
      if (d > max_dim()) throw BadInput("d exceeds CREPANT_MAX_DIM");
      p = hypersurface_simplex(d, args[1]);
      out["family"] = "hypersurface";
      report_polytope(out, p);
      auto closed = hypersurface_cohomology(d, args[1]);
      auto direct = cohomology_dims(p);
      pass = closed.dims == direct.dims;
      Json cj = Json::array();
      for (const auto& x : closed.dims) cj.push_back(to_string(x));
      out["closed_form_cohomology"] = cj;
    } else if (kind == "rp") {
      if (args.empty()) throw BadInput("usage: report rp k1 [k2 ...]");
      if (args.size() + 1 > max_dim()) throw BadInput("d exceeds CREPANT_MAX_DIM");
      p = rp_polytope(args);
      out["family"] = "rp";
      report_polytope(out, p);
      auto closed = rp_cohomology(args);
      auto direct = cohomology_dims(p);
      pass = closed.dims == direct.dims;
      std::size_t d = args.size() + 1;
      bool singular = true;  // the 2d-1 count needs every edge length >= 2
      for (const auto& k : args)
        if (k < 2) singular = false;
      if (singular) pass = pass && out["embedding_dimension"] == 2 * d - 1;
      Json cj = Json::array();
      for (const auto& x : closed.dims) cj.push_back(to_string(x));
      out["closed_form_cohomology"] = cj;
    } else if (kind == "zonotope") {
      if (args.size() != 1) throw BadInput("usage: report zonotope d");
      std::size_t d = args[0].get_ui();
      if (d > max_dim()) throw BadInput("d exceeds CREPANT_MAX_DIM");
      p = zonotope(d);
      auto polar = zonotope_polar(d);
      out["family"] = "zonotope";
      out["vertices"] = p.vertices().size();
      out["polar_vertices"] = polar.vertices().size();
      out["polar_normalized_volume"] = to_string(polar.normalized_volume());
      std::size_t expect_v = 2 * ((std::size_t(1) << (d - 1)) - 1);
      std::size_t expect_pv = d * (d - 1);
      Int expect_vol = binomial(Int(2 * (d - 1)), Int(d - 1));
      pass = p.vertices().size() == expect_v &&
             polar.vertices().size() == expect_pv &&
             polar.normalized_volume() == expect_vol;
    } else if (kind == "fano-hexagon") {
      if (args.size() != 1) throw BadInput("usage: report fano-hexagon d");
      std::size_t d = args[0].get_ui();
      if (d > max_dim()) throw BadInput("d exceeds CREPANT_MAX_DIM");
      p = del_pezzo_slice(d);
      out["family"] = "fano-hexagon";
      out["vertices"] = p.vertices().size();
      out["facets"] = p.facets().size();
      out["fano"] = is_fano(p);
      Int expect_f = 1;
      for (Int i = 1; i <= Int(d); ++i) expect_f *= i;
      Int half = 1;
      for (Int i = 1; i <= Int((d - 1) / 2); ++i) half *= i;
      expect_f /= half * half;
      pass = is_fano(p) && Int(p.facets().size()) == expect_f;
      auto cert = fano_canonical(p);
      out["canonical_simplices"] = cert.tri.simplices.size();
      pass = pass && cert.flags.basic && cert.flags.coherent;
    } else {
      throw BadInput("unknown family: " + kind);
    }
  } else {
    throw BadInput("report needs a family, -m, or --polytope");
  }
  out["cross_check"] = pass ? "PASS" : "FAIL";
  std::cout << out.dump() << "\n";
  if (!json_only)
    std::cout << "cross-check " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : kExitMismatch;
}

int cmd_verify(const std::string& carg) {
  auto cert = triangulation_from_json(parse_json_arg(carg));
  bool maximal = verify_maximal(cert.tri);
  bool basic = verify_basic(cert.tri);
  bool coherent = verify_coherent(cert.tri, cert.heights);
  bool covering = verify_covering(cert.tri, cert.heights);
  std::cout << "maximal=" << mark(maximal) << " basic=" << mark(basic)
            << " coherent=" << mark(coherent) << " covering=" << mark(covering)
            << "\n";
  bool ok = covering && (!cert.flags.maximal || maximal) &&
            (!cert.flags.basic || basic) && (!cert.flags.coherent || coherent);
  return ok ? 0 : kExitVerifier;
}

int cmd_points(const std::string& marg, const std::string& parg,
               std::uint64_t nu) {
  LatticePolytope p = LatticePolytope::from_vertices({{Int(1)}});
  if (!marg.empty()) {
    ParamSequence m = load_sequence(marg);
    require_admissible(m);
    p = build(m);
  } else if (!parg.empty()) {
    p = polytope_from_json(parse_json_arg(parg));
  } else {
    throw BadInput("points needs -m or --polytope");
  }
  if (nu > 1) p = p.dilate(Int(nu));
  Json a = Json::array();
  for (const auto& pt : p.lattice_points()) a.push_back(int_vec_to_json(pt));
  std::cout << a.dump() << "\n";
  return 0;
}

int cmd_hilbert(const std::string& carg, bool dual) {
  auto cone = cone_from_json(parse_json_arg(carg));
  if (cone.ambient_dim() > max_dim())
    throw BadInput("dim exceeds CREPANT_MAX_DIM");
  RationalCone target = dual ? dual_cone(cone) : cone;
  auto basis = hilbert_basis(target);
  Json a = Json::array();
  for (const auto& b : basis) a.push_back(int_vec_to_json(b));
  Json out;
  out["hilbert_basis"] = a;
  out["count"] = basis.size();
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice-polytope resolutions and Ehrhart reports"};
  app.require_subcommand(1);

  std::string marg, parg, carg, order = "lex";
  std::uint64_t seed = 0, nu = 1;
  bool json_only = false, dual = false;
  std::vector<std::string> family;

  auto* b = app.add_subcommand("build", "construct a polytope from a matrix");
  b->add_option("-m,--matrix", marg, "parameter matrix (JSON or file)")
      ->required();
  b->add_flag("--json", json_only, "JSON output only");

  auto* r = app.add_subcommand("resolve", "certified triangulation");
  r->add_option("-m,--matrix", marg, "parameter matrix (JSON or file)")
      ->required();
  r->add_option("--order", order, "pull order: lex|given|seeded");
  r->add_option("--seed", seed, "seed for --order seeded");
  r->add_flag("--json", json_only, "JSON output only");

  auto* rep = app.add_subcommand("report", "Ehrhart / cohomology report");
  rep->add_option("family", family,
                  "family: hypersurface d k | rp k1.. | zonotope d | "
                  "fano-hexagon d");
  rep->add_option("-m,--matrix", marg, "parameter matrix (JSON or file)");
  rep->add_option("--polytope", parg, "polytope (JSON or file)");
  rep->add_flag("--json", json_only, "JSON output only");

  auto* v = app.add_subcommand("verify", "re-check a stored certificate");
  v->add_option("certificate", carg, "triangulation JSON or file")->required();

  auto* pts = app.add_subcommand("points", "lattice-point dump");
  pts->add_option("-m,--matrix", marg, "parameter matrix (JSON or file)");
  pts->add_option("--polytope", parg, "polytope (JSON or file)");
  pts->add_option("--nu", nu, "dilation factor");

  auto* h = app.add_subcommand("hilbert", "Hilbert basis of a cone");
  h->add_option("cone", carg, "cone generators JSON or file")->required();
  h->add_flag("--dual", dual, "use the dual cone");

  CLI11_PARSE(app, argc, argv);

  try {
    if (b->parsed()) return cmd_build(marg, json_only);
    if (r->parsed()) return cmd_resolve(marg, order, seed, json_only);
    if (rep->parsed()) return cmd_report(family, marg, parg, json_only);
    if (v->parsed()) return cmd_verify(carg);
    if (pts->parsed()) return cmd_points(marg, parg, nu);
    if (h->parsed()) return cmd_hilbert(carg, dual);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kExitVerifier;
  }
  return 0;
}
