#pragma once

// Admissible free-parameter sequences, the recursive Nakajima polytope
// construction, its inequality description, reduction to half-line prisms,
// and the special families (dilated simplices, rectangular parallelepipeds,
// zonotopes, Fano / hyperplane-arrangement-compatible predicates).

#include <optional>

#include "crepant/polytope.hpp"

namespace crepant {

/// Lower-triangular integer parameter matrix: rows m_1..m_{d-1}, each of
/// length d with m_{i,j} = 0 for j > i.
struct ParamSequence {
  std::size_t d = 1;
  std::vector<IntVec> rows;  // d-1 rows

  static ParamSequence make(std::size_t d, std::vector<IntVec> rows);
};

struct Admissibility {
  bool ok = true;
  // witness when !ok: the violating row (1-based) and polytope vertex
  std::size_t row = 0;
  IntVec vertex;
  std::string reason;
};

/// A sequence is admissible when every row is nonzero and each row's
/// functional is nonnegative on the vertices of the previously built
/// polytope.
Admissibility is_admissible(const ParamSequence& m);

/// The (d-1)-dimensional slice polytope built by the lifting recursion,
/// with duplicate lifted points removed at each stage.
LatticePolytope build(const ParamSequence& m);

/// The inequality system x_1 = 1, 0 <= x_{j+1} <= <m_j, x>; its solution
/// set equals build(m).
std::vector<Halfspace> hrep(const ParamSequence& m);

struct Reduction {
  ParamSequence base;  // over d-1
  IntVec lambda;       // d-1 entries
};

/// Splits off the last row: the base polytope data together with the
/// truncating functional of the half-line-prism description.
Reduction reduce(const ParamSequence& m);

/// The parameter sequence whose build is the k-fold dilated basic
/// (d-1)-simplex (k on the top-left, ones on the remaining diagonal).
ParamSequence hypersurface_sequence(std::size_t d, const Int& k);
LatticePolytope hypersurface_simplex(std::size_t d, const Int& k);

/// Box {1} x [0,k_1] x ... x [0,k_{d-1}]; sequence has k_i in the first
/// column and zeros elsewhere.
ParamSequence rp_sequence(const std::vector<Int>& ks);
LatticePolytope rp_polytope(const std::vector<Int>& ks);

/// Zonotope conv([-1,0]^{d-1} cup [0,1]^{d-1}) embedded at x_1 = 1, and its
/// polar; #vert = 2(2^{d-1}-1) and d(d-1) respectively.
LatticePolytope zonotope(std::size_t d);
LatticePolytope zonotope_polar(std::size_t d);

/// conv{e_1 +- e_i, e_1 +- (e_2+...+e_d)}: a non-simplex Fano polytope for
/// odd d >= 3 (a del Pezzo polytope on the slice).
LatticePolytope del_pezzo_slice(std::size_t d);

/// Exactly one interior lattice point which spans, with each facet's
/// vertices, an index-one affine sublattice; facets must be simplices with
/// dim(P) vertices for that to hold.
bool is_fano(const LatticePolytope& p);
std::optional<IntVec> fano_center(const LatticePolytope& p);

/// Every facet hyperplane, in the slice coordinates x_2..x_d, is of the
/// form x_i = kappa or x_i - x_j = lambda. A property of the embedding, not
/// of the lattice-equivalence class.
bool is_hd_compatible(const LatticePolytope& p);

}  // namespace crepant
