#pragma once

// Exact integer/rational linear algebra: determinants, Hermite and Smith
// normal forms, linear solving, kernels and saturated affine lattice bases.

#include <optional>

#include "crepant/arith.hpp"

namespace crepant {

/// Exact determinant of a square integer matrix (fraction-free Bareiss).
Int exact_det(const IntMat& m);

Rat exact_det(const RatMat& m);

std::size_t rank(const IntMat& m);

/// Smith normal form diagonal d_1 | d_2 | ... of an integer matrix, the
/// nonzero divisors (taken positive) first, then zeros up to min(rows, cols).
std::vector<Int> elementary_divisors(const IntMat& m);

struct SmithDecomposition {
  IntMat d;  // diagonal, u * a * v = d
  IntMat u;  // unimodular rows x rows
  IntMat v;  // unimodular cols x cols
};

SmithDecomposition smith_decomposition(const IntMat& a);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct RatSolve {
  SolveStatus status;
  RatVec x;  // valid only when status == Unique
};

/// Exact solve of a.x = b over the rationals.
RatSolve solve_rational(const RatMat& a, const RatVec& b);

RatSolve solve_rational(const IntMat& a, const RatVec& b);

/// Any particular rational solution of a.x = b together with a basis of the
/// kernel of a; empty optional when inconsistent.
struct AffineSolutionSet {
  RatVec particular;
  std::vector<RatVec> kernel;
};
std::optional<AffineSolutionSet> solve_affine(const RatMat& a, const RatVec& b);

/// One integral solution x of a.x = b, if any (via Smith normal form).
std::optional<IntVec> solve_integral(const IntMat& a, const IntVec& b);

/// Basis of the rational kernel {x : a.x = 0}, cleared to primitive integer
/// vectors.
std::vector<IntVec> integer_kernel_basis(const IntMat& a);

/// Basis of the saturated lattice lin_Q(rows of a) cap Z^n.
std::vector<IntVec> saturated_row_lattice(const IntMat& a);

struct AffineLatticeBasis {
  IntVec origin;
  std::vector<IntVec> basis;  // saturated: aff(points) cap Z^d = origin + Z basis
};

/// Origin = first point; basis spans aff(points) cap Z^d translated to the
/// origin, computed by Hermite reduction of difference vectors followed by
/// saturation. Every point - origin has integer coordinates in the basis.
AffineLatticeBasis affine_lattice_basis(const std::vector<IntVec>& points);

IntMat mat_mul(const IntMat& a, const IntMat& b);

/// Inverse of a unimodular integer matrix (integral by Cramer).
IntMat unimodular_inverse(const IntMat& u);

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

/// Integer vector recovered from an integral rational vector; nullopt if any
/// entry has a denominator.
std::optional<IntVec> to_int(const RatVec& v);

}  // namespace crepant
