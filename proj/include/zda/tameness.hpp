#pragma once

#include <cstdint>

#include "zda/algebra.hpp"
#include "zda/catalog.hpp"

namespace zda {

enum class ZKind { all_of_a, subspace_union, undetermined };
enum class Verdict { yes, no, undetermined };

const char* zkind_name(ZKind k);
const char* verdict_name(Verdict v);

/// Decomposition of the right-zero-divisor set Z.
struct ZDecomposition {
  ZKind kind = ZKind::undetermined;
  std::vector<Subspace> components;        // when subspace_union
  std::optional<MultiPoly> residual;       // when undetermined
  bool cone_certified = false;             // residual indefinite of rank >= 3
  std::vector<std::string> justification;  // ordered rule citations
};

/// Decision pipeline:
///   1. products span deficient        -> Z = A
///   2. determinant form vanishes      -> Z = A
///   3. complete ideal enumeration     -> union of the maximal left ideals
///   4. variety decomposition of the determinant form (linear factors plus
///      quadratic-residual analysis)   -> union, or undetermined with the
///      unresolved residual attached
/// Throws Errc::not_associative / Errc::dimension_too_large.
ZDecomposition zero_divisor_set(const Algebra& a);

struct TamenessReport {
  Verdict tame = Verdict::undetermined;
  bool proper = false;  // Z != A, equivalently the determinant form is nonzero
  ZDecomposition z;
  std::optional<IdealList> ideal_list;
  MultiPoly d;
  FactorReport factor_report;
  std::optional<QuadSplit> residual_split;  // analysis of the quadratic core
  Verdict splits_over_closure = Verdict::undetermined;
};

/// Full analysis. For 3-dimensional associative input a "not tame" outcome
/// contradicts the theory and raises Errc::internal instead of returning.
TamenessReport tameness_report(const Algebra& a);

/// (real tameness, splits over the closure) evidence row; no equivalence is
/// claimed. Rows whose verdicts differ are what the explorer flags.
struct OpenQuestionRow {
  Verdict tame;
  Verdict splits;
  bool differs() const {
    return (tame == Verdict::yes && splits == Verdict::no) ||
           (tame == Verdict::no && splits == Verdict::yes);
  }
};

OpenQuestionRow open_question_row(const Algebra& a);

/// Two-sided seeded verification of a subspace_union decomposition:
/// (a) sampled points inside each component are zero divisors;
/// (b) points generated on the zero set (random slices of the determinant
///     form solved exactly, plus points sampled from its factor varieties)
///     lie in some component.
/// Vacuous pass for other kinds.
struct CheckReport {
  bool pass = true;
  std::optional<Vec> witness;
  int component_samples = 0;
  int solved_samples = 0;
  bool no_solvable_slice = false;  // `count` consecutive dry slices
  std::string note;
};

CheckReport cross_check_sample(const Algebra& a, const ZDecomposition& z, int count,
                               std::uint64_t seed);

}  // namespace zda
