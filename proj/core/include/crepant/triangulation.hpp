#pragma once

// Subdivisions and triangulations of slice polytopes: regular subdivisions
// from heights, pulling refinements with coherence-preserving height
// updates, the prism subdivision and the full resolution pipeline, plus the
// verification predicates (maximal / basic / coherent / covering / Koszul).

#include <cstdint>

#include "crepant/nakajima.hpp"
#include "crepant/polytope.hpp"

namespace crepant {

/// Exact rational height per configuration point (same indexing).
using HeightFunction = std::vector<Rat>;

/// Point configuration plus cells; cell entries are sorted indices of the
/// cell's vertices within `points`.
struct Subdivision {
  std::vector<IntVec> points;
  std::vector<std::vector<std::size_t>> cells;
};

struct Triangulation {
  std::vector<IntVec> points;
  std::vector<std::vector<std::size_t>> simplices;  // each of size dim+1
};

struct TriFlags {
  bool maximal = false;
  bool basic = false;
  bool coherent = false;
};

struct CertifiedTriangulation {
  Triangulation tri;
  HeightFunction heights;
  TriFlags flags;
};

/// Projection of the lower envelope of the lifted configuration: a cell is
/// the set of points on which some affine functional agrees with the
/// heights while staying strictly below them elsewhere.
Subdivision regular_subdivision(const std::vector<IntVec>& points,
                                const HeightFunction& heights);

/// Pulling refinement: cells not containing point v are kept; a cell
/// containing v is replaced by the pyramids over its facets that avoid v.
Subdivision pull(const Subdivision& s, std::size_t v);

/// Height update realizing pull(s, v) as a regular subdivision: the pulled
/// point drops to (envelope value at v) - epsilon, with epsilon chosen
/// exactly as half the minimum strict slack of the non-incident cells (1
/// when every cell contains v).
HeightFunction pull_heights(const Subdivision& s, const HeightFunction& w,
                            std::size_t v);

/// Sequentially pulls every point in the given order; the result is a
/// triangulation with vertex set exactly the point set, coherent via the
/// accumulated heights (the coherent flag records the verifier's verdict).
CertifiedTriangulation pull_all(const Subdivision& s, const HeightFunction& w,
                                const std::vector<std::size_t>& order);

/// Pulling triangulation of the vertex set realized by full flags of faces;
/// an independent oracle for pull_all on vertex-only configurations.
Triangulation full_flag_triangulation(const LatticePolytope& p,
                                      const std::vector<IntVec>& order);

/// Prism step: every simplex s of the base triangulation becomes the cell
/// prism(s) cut by x_axis <= <lambda, x>; the heights lift vertically.
/// Returns the subdivision on all lattice points of the union.
std::pair<Subdivision, HeightFunction> prism_subdivision(
    const Triangulation& base, const HeightFunction& base_heights,
    const IntVec& lambda, std::size_t axis);

enum class PullOrder : std::uint8_t { Lex, Given, Seeded };

/// Resolution pipeline: reduce, resolve the base, prism, pull all lattice
/// points. The returned flags are verifier verdicts, not assumptions.
CertifiedTriangulation resolve(const ParamSequence& m,
                               PullOrder order = PullOrder::Lex,
                               std::uint64_t seed = 0);

/// Every maximal simplex contains no lattice points besides its vertices.
bool verify_maximal(const Triangulation& t);

/// Every maximal simplex has normalized volume 1 in the affine lattice of
/// conv(points).
bool verify_basic(const Triangulation& t);

/// Each simplex's interpolating functional stays strictly below the heights
/// at every other configuration point, i.e. every simplex is a cell of the
/// regular subdivision S_w. Together with the covering identity this pins
/// T = S_w exactly.
bool verify_coherent(const Triangulation& t, const HeightFunction& w);

/// Volume identity plus pairwise common-face tests (separating functionals
/// derived from the heights witness that intersecting cells meet in the
/// convex hull of their shared vertices).
bool verify_covering(const Triangulation& t, const HeightFunction& w);

/// Same checks for a general subdivision (cells need not be simplices).
bool verify_subdivision(const Subdivision& s, const HeightFunction& w);

/// Inclusion-minimal vertex subsets that span a simplex but are not a face;
/// cardinality-1 entries are configuration points missed by the
/// triangulation.
std::vector<std::vector<std::size_t>> minimal_nonfaces(const Triangulation& t);

/// Koszul criterion: every minimal non-face is an edge.
bool koszul_check(const Triangulation& t);

/// Join triangulation of a Fano polytope: pyramids over the facets from the
/// interior point, realized by pulling the interior point first.
CertifiedTriangulation fano_canonical(const LatticePolytope& p);

/// Restriction of the alcove triangulation of the hyperplane arrangement
/// {x_i = kappa, x_i - x_j = lambda} to a compatible polytope, certified by
/// a convex quadratic sampled on the lattice points.
CertifiedTriangulation hd_triangulation(const LatticePolytope& p);

LatticePolytope cell_polytope(const Subdivision& s, std::size_t cell);
LatticePolytope simplex_polytope(const Triangulation& t, std::size_t cell);

}  // namespace crepant
