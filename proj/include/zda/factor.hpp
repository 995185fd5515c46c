#pragma once

#include "zda/poly.hpp"
#include "zda/roots.hpp"

namespace zda {

/// Linear factors over the tower, greedily extracted and divided out.
/// Invariant (verified on construction): prod(factors^mult) * residual ==
/// input exactly; the residual absorbs the scalar. `complete` means no
/// further linear factor with tower coefficients exists; best-effort
/// otherwise (degenerate candidate slices or an inconclusive root search).
struct FactorReport {
  std::vector<std::pair<LinearForm, int>> factors;
  MultiPoly residual;
  bool complete = true;

  int factor_degree() const {
    int d = 0;
    for (const auto& [f, m] : factors) d += m;
    return d;
  }
};

/// Public contract: p homogeneous and nonzero in <= 3 variables, degree <= 4.
/// Throws Errc::not_homogeneous, Errc::degree_too_high, Errc::zero_polynomial.
FactorReport linear_factors(const MultiPoly& p);

/// Engine without the 3-variable cap (supports the 4-variable pipeline).
FactorReport extract_linear_factors(const MultiPoly& p);

/// q (monic, grlex) with p proportional to q^2, when p is a perfect square
/// up to a scalar.
std::optional<MultiPoly> perfect_square_core(const MultiPoly& p);

enum class QuadKind {
  splits_over_tower,       // q = scalar * l1 * l2 with tower coefficients
  splits_over_closure,     // rank <= 2 but the forms need a missing square
                           // root or are a complex-conjugate pair; the
                           // tower-rational zero set is the Gram kernel
  irreducible_definite,    // rank >= 3, definite: real zero set = Gram kernel
  irreducible_indefinite,  // rank >= 3, indefinite: real zero set is a cone
};

const char* quad_kind_name(QuadKind k);

struct QuadSplit {
  QuadKind kind;
  int rank = 0;
  int positives = 0;
  int negatives = 0;
  std::optional<std::pair<LinearForm, LinearForm>> forms;  // splits_over_tower
  Subspace gram_kernel;

  bool splits_over_closure() const {
    return kind == QuadKind::splits_over_tower || kind == QuadKind::splits_over_closure;
  }
  /// True when the tower-rational zero set is a single subspace (the Gram
  /// kernel); false for tower splits (union of two hyperplanes) and
  /// indefinite cones.
  bool zero_set_is_kernel() const {
    return kind == QuadKind::splits_over_closure || kind == QuadKind::irreducible_definite;
  }
};

/// Classification of a homogeneous quadratic via Gram-matrix congruence
/// diagonalization. Throws Errc::not_homogeneous / Errc::wrong_degree.
QuadSplit quadratic_split(const MultiPoly& q);

}  // namespace zda
