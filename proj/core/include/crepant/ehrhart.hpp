#pragma once

// Lattice-point counting in dilations, Ehrhart polynomial interpolation,
// the nested-sum count for parameter sequences, delta-vectors, and the
// resolution cohomology dimension formulas for the special families.

#include "crepant/nakajima.hpp"
#include "crepant/polytope.hpp"

namespace crepant {

struct EhrhartData {
  std::size_t dim = 0;          // k = dim(P)
  RatVec coefficients;          // a_0..a_k, exact
  std::vector<Int> delta;       // delta_0..delta_k
};

/// Entry j is dim H^{2j} of any crepant full resolution over the polytope;
/// odd cohomology vanishes.
struct CohomologyProfile {
  std::vector<Int> dims;
};

/// #(nu P cap N_P); nu = 0 counts the empty dilation as a point.
Int count_points(const LatticePolytope& p, const Int& nu);

/// Coefficients by exact interpolation через nu = 0..dim(P), verified
/// against the counts at dim(P)+1 and dim(P)+2; the delta-vector comes from
/// the alternating-sum transform with 0^0 = 1.
EhrhartData ehrhart_polynomial(const LatticePolytope& p);

Rat evaluate_polynomial(const RatVec& coefficients, const Int& nu);

/// Nested-sum evaluation of the lattice-point count straight from the
/// parameter matrix; equals count_points(build(m), nu).
Int ehrhart_nakajima(const ParamSequence& m, const Int& nu);

/// Closed-form Ehrhart coefficients in the matrix entries, d in {2, 3, 4}.
RatVec nakajima_closed_form(const ParamSequence& m);

/// delta_j = sum_i (sum_xi (-1)^xi C(k+1, xi) (j-xi)^i) a_i, with 0^0 = 1;
/// throws when the result is not integral (bad coefficients).
std::vector<Int> delta_vector(const RatVec& coefficients, std::size_t k);

/// delta-vector of the slice polytope, reported at indices 0..d-1; the
/// counts do not depend on the choice of basic triangulation.
CohomologyProfile cohomology_dims(const LatticePolytope& p);

/// Closed form for the k-fold dilated basic simplex family.
CohomologyProfile hypersurface_cohomology(std::size_t d, const Int& k);

std::vector<Int> elementary_symmetric(const std::vector<Int>& ks);

/// Closed form for the box family via elementary symmetric polynomials.
CohomologyProfile rp_cohomology(const std::vector<Int>& ks);

Int binomial(const Int& n, const Int& k);

}  // namespace crepant
