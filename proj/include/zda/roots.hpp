#pragma once

#include "zda/poly.hpp"

namespace zda {

/// Roots of a univariate polynomial that lie in its coefficient tower.
/// `complete` means the list is provably all of them. Root finding is
/// guaranteed-complete for towers of depth <= 2 (any degree); deeper towers
/// get the rational and quadratic tiers only, with the flag reporting
/// honestly.
struct RootList {
  std::vector<std::pair<Elem, int>> roots;  // sorted by real value, with multiplicity
  bool complete = true;

  bool has(const Elem& r) const {
    for (const auto& [x, m] : roots)
      if (x == r) return true;
    return false;
  }
  std::size_t count_with_multiplicity() const {
    std::size_t n = 0;
    for (const auto& [x, m] : roots) n += static_cast<std::size_t>(m);
    return n;
  }
};

/// All tower roots of p. Throws Errc::zero_polynomial and, for the public
/// degree contract, Errc::degree_too_high (> 4).
RootList univariate_roots(const MultiPoly& p);

/// Internal engine without the degree cap.
RootList tower_roots(const UniPoly& p);

/// Isolating intervals (lo, hi) with rational endpoints for every real root
/// of a squarefree polynomial with no rational roots. Exposed for tests.
struct IsolatedRoot {
  Rat lo, hi;
  int sign_lo = 0;  // sign of p at lo (nonzero)
};
std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& squarefree);

/// Number of real roots of an arbitrary nonzero polynomial (via its
/// squarefree part), counted without multiplicity.
int count_real_roots(const UniPoly& p);

/// The rational with the smallest denominator in [lo, hi].
Rat simplest_rational(const Rat& lo, const Rat& hi);

}  // namespace zda
