#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include <boost/rational.hpp>

#include "obstructor/base_graph.hpp"

namespace obstructor {

using Rational = boost::rational<std::int64_t>;

// Even steps move coordinates (1,2), odd steps (2,3).
inline LayeredGraph build_galt2(std::int64_t D, std::int64_t r, const BuildOptions& opts = {}) {
  return LayeredGraph::build(Family::galt2, 3, D, r, opts);
}

// Steps cycle through coordinate pairs (1,2), (2,3), (3,4).
inline LayeredGraph build_galt3(std::int64_t D, std::int64_t r, const BuildOptions& opts = {}) {
  return LayeredGraph::build(Family::galt3, 4, D, r, opts);
}

// k coordinates, k-1 step kinds. k=3 and k=4 coincide with build_galt2 and
// build_galt3 under the vertex id codec.
inline LayeredGraph build_galt_general(int k, std::int64_t D, std::int64_t r, const BuildOptions& opts = {}) {
  if (k < 3) throw std::invalid_argument("build_galt_general: k must be >= 3");
  return LayeredGraph::build(Family::galt_general, k, D, r, opts);
}

inline CriticalPath critical_path_of(const LayeredGraph& g, const CriticalPair& pair) {
  if (static_cast<int>(pair.generators.size()) != g.params().step_kinds())
    throw std::invalid_argument("generator tuple has the wrong arity for this family");
  for (auto gen : pair.generators)
    if (gen >= g.hull_size()) throw std::invalid_argument("generator index is not in the hull set");
  if (pair.id >= g.pair_count() || g.pair_source(pair.id) != pair.source || g.pair_target(pair.id) != pair.target)
    throw std::invalid_argument("pair does not belong to this graph");
  return g.critical_path(pair.id);
}

/// n = Theta(D^f(k)) for the k-coordinate product balanced so that
/// |E| = Theta(|P|); f(k) = (2k^2 + k - 4) / (2(k - 2)).
inline Rational exponent_f(std::int64_t k) {
  if (k <= 2) throw std::invalid_argument("exponent_f: k must be >= 3 (pole at k = 2)");
  return Rational(2 * k * k + k - 4, 2 * (k - 2));
}

// Smallest k in [lo, hi] minimizing f; ties resolve to the smaller k.
inline std::int64_t exponent_f_argmin(std::int64_t lo, std::int64_t hi) {
  if (lo < 3 || hi < lo) throw std::invalid_argument("exponent_f_argmin: need 3 <= lo <= hi");
  std::int64_t best = lo;
  for (std::int64_t k = lo + 1; k <= hi; ++k)
    if (exponent_f(k) < exponent_f(best)) best = k;
  return best;
}

// The real minimizer 2 + sqrt(3).
inline double exponent_f_real_minimizer() { return 2.0 + std::sqrt(3.0); }

}  // namespace obstructor
