#pragma once

// Shared helpers for the test suites: deterministic rng, random unimodular
// maps, and the seeded corpus of admissible parameter sequences.

#include <crepant/nakajima.hpp>
#include <crepant/triangulation.hpp>

#include <algorithm>
#include <cstdint>

namespace testsupport {

using namespace crepant;

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

inline std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  // uniform in [lo, hi]
  long range(long lo, long hi) {
    return lo + long(below(std::uint64_t(hi - lo + 1)));
  }
};

/// Product of random elementary row operations: unimodular k x k.
inline IntMat random_unimodular(std::size_t k, Rng& rng, int ops = 12) {
  IntMat u = IntMat::identity(k);
  for (int t = 0; t < ops; ++t) {
    std::size_t i = rng.below(k), j = rng.below(k);
    switch (rng.below(3)) {
      case 0: {  // row add
        if (i == j) break;
        Int f(rng.range(-2, 2));
        for (std::size_t c = 0; c < k; ++c) u(i, c) += f * u(j, c);
        break;
      }
      case 1: {  // swap
        if (i == j) break;
        for (std::size_t c = 0; c < k; ++c) std::swap(u(i, c), u(j, c));
        break;
      }
      default: {  // negate
        for (std::size_t c = 0; c < k; ++c) u(i, c) = -u(i, c);
        break;
      }
    }
  }
  return u;
}

/// Affine integral transformation preserving the slice x_1 = 1: block
/// matrix [[1, 0], [b, U]] with U unimodular, plus zero first coordinate
/// translation folded into b.
inline IntMat random_slice_map(std::size_t d, Rng& rng) {
  IntMat m = IntMat::identity(d);
  IntMat u = random_unimodular(d - 1, rng);
  for (std::size_t i = 1; i < d; ++i) {
    m(i, 0) = Int(rng.range(-2, 2));
    for (std::size_t j = 1; j < d; ++j) m(i, j) = u(i - 1, j - 1);
  }
  return m;
}

inline LatticePolytope transform_slice(const LatticePolytope& p,
                                       const IntMat& m) {
  return apply_affine_map(p, m, IntVec(p.ambient_dim(), Int(0)));
}

/// Random admissible sequence with entries bounded by `bound`, resampled
/// (stage by stage) until the resulting polytope has at most `max_points`
/// lattice points. The lattice points are tracked through the fiber
/// structure of the lifting recursion, so oversized rows are rejected
/// before anything expensive happens.
inline ParamSequence random_admissible(std::size_t d, Rng& rng, long bound,
                                       std::size_t max_points) {
  for (;;) {
    std::vector<IntVec> rows;
    IntVec origin(d, Int(0));
    origin[0] = 1;
    LatticePolytope p = LatticePolytope::from_vertices({origin});
    std::vector<IntVec> lattice = {origin};
    bool ok = true;
    for (std::size_t i = 0; i + 1 < d && ok; ++i) {
      IntVec row(d, Int(0));
      bool found = false;
      for (int attempt = 0; attempt < 64 && !found; ++attempt) {
        for (std::size_t j = 0; j <= i; ++j)
          row[j] = Int(rng.range(-bound, bound));
        if (is_zero(row)) continue;
        bool nonneg = true;
        for (const auto& v : p.vertices())
          if (dot(row, v) < 0) {
            nonneg = false;
            break;
          }
        if (!nonneg) continue;
        Int next_count = 0;
        for (const auto& u : lattice) next_count += dot(row, u) + 1;
        if (next_count > long(max_points)) continue;
        found = true;
      }
      if (!found) {
        ok = false;
        break;
      }
      std::vector<IntVec> next_lattice;
      for (const auto& u : lattice) {
        Int roof = dot(row, u);
        for (Int t = 0; t <= roof; ++t) {
          IntVec q = u;
          q[i + 1] = t;
          next_lattice.push_back(std::move(q));
        }
      }
      lattice = std::move(next_lattice);
      std::vector<IntVec> pts = p.vertices();
      for (const auto& v : p.vertices()) {
        IntVec lifted = v;
        lifted[i + 1] = dot(row, v);
        pts.push_back(std::move(lifted));
      }
      p = LatticePolytope::from_points(std::move(pts));
      rows.push_back(row);
    }
    if (!ok) continue;
    return ParamSequence::make(d, std::move(rows));
  }
}

}  // namespace testsupport
