#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zda/linalg.hpp"

namespace zda {

using ExpVec = std::vector<unsigned>;

unsigned exp_total(const ExpVec& e);

/// Graded-lexicographic order, greatest term first (map iteration starts at
/// the leading term).
struct GrlexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    unsigned da = exp_total(a), db = exp_total(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse exact multivariate polynomial. Canonical: no zero coefficients are
/// stored, so equality is equality of term maps.
class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, Elem, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(const Tower& t, std::size_t nvars) : tower_(t), nvars_(nvars) {}
  static MultiPoly constant(const Tower& t, std::size_t nvars, const Elem& c);
  static MultiPoly var(const Tower& t, std::size_t nvars, std::size_t i);

  const Tower& tower() const { return tower_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void set_term(const ExpVec& e, const Elem& c);
  void add_term(const ExpVec& e, const Elem& c);
  Elem coeff(const ExpVec& e) const;

  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;

  const ExpVec& leading_exp() const;  // throws on zero
  const Elem& leading_coeff() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Elem& c) const;
  bool operator==(const MultiPoly& o) const = default;

  Elem evaluate(const Vec& point) const;

  /// Substitutes variable `var` by `rep` (same arity).
  MultiPoly substitute(std::size_t var, const MultiPoly& rep) const;

  /// Restricts to a line: x_j = point[j] for all j except `var`, which is
  /// kept. Returns the dense univariate coefficient list (low to high).
  std::vector<Elem> restrict_to_var(std::size_t var, const Vec& point) const;

  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  void check_compat(const MultiPoly& o) const;

  Tower tower_;
  std::size_t nvars_ = 0;
  TermMap terms_;
};

/// p and q equal up to one nonzero scalar (cross-multiplied by leading
/// coefficients; both zero also counts).
bool proportional(const MultiPoly& p, const MultiPoly& q);

/// Determinant of a square matrix of degree <= 1 entries, by cofactor
/// expansion with term-map accumulation. Throws Errc::non_square.
MultiPoly det_poly_matrix(const std::vector<std::vector<MultiPoly>>& m);

/// Nonzero linear form c1 x1 + ... + cn xn, normalized so the first nonzero
/// coefficient is 1.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(const Tower& t, Vec coeffs);  // normalizes; throws on zero form

  const Tower& tower() const { return tower_; }
  const Vec& coeffs() const { return coeffs_; }
  std::size_t nvars() const { return coeffs_.size(); }
  std::size_t pivot() const { return pivot_; }

  MultiPoly poly() const;
  Elem evaluate(const Vec& point) const;
  Subspace kernel_subspace() const;

  bool operator==(const LinearForm& o) const = default;

  std::string str(const std::vector<std::string>& var_names = {}) const;

 private:
  Tower tower_;
  Vec coeffs_;
  std::size_t pivot_ = 0;
};

/// True iff q vanishes on the hyperplane f = 0, decided by exact substitution
/// of the pivot variable.
bool divides_linear(const LinearForm& f, const MultiPoly& q);

/// Exact quotient q / f when f divides q (nullopt otherwise).
std::optional<MultiPoly> divide_exact(const MultiPoly& q, const MultiPoly& f);

// ---------------------------------------------------------------------------
// Dense univariate polynomials over a tower (internal workhorse for root
// finding, characteristic polynomials and resultants).

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Tower& t) : tower_(t) {}
  UniPoly(const Tower& t, std::vector<Elem> coeffs);

  static UniPoly from_multipoly(const MultiPoly& p);  // requires nvars == 1
  MultiPoly to_multipoly() const;

  const Tower& tower() const { return tower_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Elem coeff(std::size_t i) const;
  const Elem& lead() const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Elem& c) const;
  bool operator==(const UniPoly& o) const = default;

  Elem evaluate(const Elem& x) const;
  Elem evaluate(const Rat& x) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly conjugate(unsigned mask) const;

  /// Divides by the linear factor (t - root); remainder must vanish.
  UniPoly deflate(const Elem& root) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();

  Tower tower_;
  std::vector<Elem> coeffs_;  // low to high, no trailing zeros
};

/// Euclidean division over the field: (quotient, remainder).
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Resultant via the Sylvester matrix determinant over the tower.
Elem resultant(const UniPoly& a, const UniPoly& b);

}  // namespace zda
