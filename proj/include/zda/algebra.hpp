#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zda/factor.hpp"
#include "zda/poly.hpp"

namespace zda {

/// Finite-dimensional algebra over a tower, defined by its structure
/// constants: b_i * b_j = sum_k c[i][j][k] b_k. Immutable after construction.
class Algebra {
 public:
  /// constants laid out [i][j][k] flattened to i*n*n + j*n + k.
  /// Throws Errc::shape_mismatch / Errc::tower_mismatch.
  static Algebra make(std::size_t n, const Tower& t, std::vector<Elem> constants,
                      std::string name = {});

  std::size_t dim() const { return n_; }
  const Tower& tower() const { return tower_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  void set_basis_names(std::vector<std::string> names);
  void set_name(std::string name) { name_ = std::move(name); }

  const Elem& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }

  /// b_i * b_j in basis coordinates.
  Vec basis_product(std::size_t i, std::size_t j) const;

  /// Bilinear extension. Throws Errc::dimension_mismatch.
  Vec product(const Vec& x, const Vec& y) const;

  /// Matrix of y |-> y*x (column j is b_j * x).
  Mat right_mult_matrix(const Vec& x) const;
  /// Matrix of y |-> x*y (column j is x * b_j).
  Mat left_mult_matrix(const Vec& x) const;

  Vec basis_vec(std::size_t i) const;

  /// Transport to the basis whose i-th vector is column i of p (invertible).
  Algebra change_basis(const Mat& p) const;

  /// The opposite algebra (multiplication reversed); swaps left and right.
  Algebra opposite() const;

 private:
  std::size_t n_ = 0;
  Tower tower_;
  std::vector<Elem> c_;
  std::string name_;
  std::vector<std::string> basis_names_;
};

struct AxiomReport {
  bool associative = true;
  std::optional<std::array<std::size_t, 3>> assoc_witness;
  bool commutative = true;
  std::optional<std::pair<std::size_t, std::size_t>> comm_witness;
  std::optional<Vec> identity;
  int aa_dim = 0;
  bool aa_full = false;
};

/// Associativity on all basis triples (sufficient by bilinearity),
/// commutativity on all pairs, identity by exact linear solve, AA span.
AxiomReport check_axioms(const Algebra& a);

/// Span of all basis products (the linear hull of AA).
Subspace span_of_products(const Algebra& a);

/// det R(x) as a homogeneous polynomial of degree n in the coordinates of x.
MultiPoly determinant_form(const Algebra& a);

/// rank(R(x)) < n; 0 always counts.
bool is_right_zero_divisor(const Algebra& a, const Vec& x);

/// Smallest subspace containing w closed under left multiplication by the
/// whole algebra.
Subspace left_ideal_closure(const Algebra& a, const Subspace& w);

/// Maximal left ideals (dimension <= 3, AA full). `complete` is set when
/// every search step was conclusive; bounds_used records the pruning rules.
struct IdealList {
  std::vector<Subspace> ideals;
  bool complete = true;
  std::vector<std::string> bounds_used;
};

/// Throws Errc::requires_aa_full, Errc::dimension_too_large,
/// Errc::not_associative.
IdealList maximal_left_ideals(const Algebra& a);

}  // namespace zda
