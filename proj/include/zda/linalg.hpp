#pragma once

#include <string>
#include <vector>

#include "zda/field.hpp"

namespace zda {

using Vec = std::vector<Elem>;

/// Dense matrix over a tower, row-major. All entries share one tower.
class Mat {
 public:
  Mat() = default;
  Mat(const Tower& t, std::size_t rows, std::size_t cols);
  static Mat identity(const Tower& t, std::size_t n);
  static Mat from_rows(const Tower& t, const std::vector<Vec>& rows);

  const Tower& tower() const { return tower_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const = default;
  bool is_symmetric() const;

  std::string str() const;

 private:
  Tower tower_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> e_;
};

/// Reduced row echelon form; returns the canonical RREF and the rank.
std::pair<Mat, int> rref(const Mat& m);

/// Exact determinant. Cofactor expansion for n <= 4, fraction-free Bareiss
/// elimination above. Throws Errc::non_square.
Elem det(const Mat& m);

/// Inverse; empty optional when singular. Throws Errc::non_square.
std::optional<Mat> inverse(const Mat& m);

int rank(const Mat& m);

/// Linear subspace of F^n in canonical form: basis rows in RREF, pivots
/// strictly increasing, pivot entries 1, pivot columns otherwise zero.
/// Equality of subspaces is therefore syntactic. The zero subspace has an
/// empty basis and an explicit ambient dimension.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(const Tower& t, std::size_t ambient);
  static Subspace full(const Tower& t, std::size_t ambient);
  static Subspace span(const Tower& t, std::size_t ambient, const std::vector<Vec>& vectors);

  const Tower& tower() const { return tower_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& x) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const = default;

  std::string str() const;

 private:
  Tower tower_;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
};

/// Null space of m (right kernel: all x with m*x = 0), canonical.
Subspace kernel(const Mat& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// Congruence diagonalization of a symmetric matrix: transform^T * Q *
/// transform == diag(diagonal) exactly, transform invertible over the tower.
/// positives/negatives count the signs of the nonzero diagonal entries.
struct SignatureResult {
  int rank = 0;
  int positives = 0;
  int negatives = 0;
  Mat transform;
  std::vector<Elem> diagonal;
};

/// Throws Errc::non_symmetric.
SignatureResult diagonalize_symmetric(const Mat& q);

// Small vector helpers.
Vec zero_vec(const Tower& t, std::size_t n);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Elem& c);
std::string vec_str(const Vec& v);

}  // namespace zda
