#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zda/error.hpp"

namespace zda {

using Rat = mpq_class;

/// Real quadratic tower Q(sqrt(d1))(sqrt(d2))... given by its ordered list of
/// radicands. Each radicand is square-free, >= 2, and independent of the ones
/// before it (no sqrt already expressible lower in the tower). Depth <= 2 has
/// guaranteed-complete root finding elsewhere in the library; deeper towers
/// are accepted up to kMaxTowerDepth with best-effort semantics.
inline constexpr int kMaxTowerDepth = 4;

class Tower {
 public:
  Tower() = default;  // the rationals

  /// Validates and builds a tower. Throws Errc::not_square_free,
  /// Errc::redundant_radicand or Errc::tower_too_deep.
  static Tower make(const std::vector<long>& radicands);

  int depth() const { return static_cast<int>(rads_.size()); }
  std::size_t basis_size() const { return std::size_t{1} << rads_.size(); }
  const std::vector<long>& radicands() const { return rads_; }
  long radicand(int i) const { return rads_.at(static_cast<std::size_t>(i)); }
  bool is_rational() const { return rads_.empty(); }

  /// Tower with the top radicand dropped.
  Tower subtower() const;

  /// The basis element for `mask` is prod_{i in mask} sqrt(d_i). Returns
  /// (s, r) with that product equal to s*sqrt(r), r square-free (r = 1 for
  /// mask 0 or when the product is a perfect square).
  std::pair<long, long> basis_surd(unsigned mask) const;

  bool operator==(const Tower&) const = default;

  std::string str() const;

 private:
  std::vector<long> rads_;
};

/// Element of a tower: 2^depth exact rational coordinates with respect to the
/// multiplicative basis {prod_{i in S} sqrt(d_i)}. Always canonical (gmp keeps
/// rationals in lowest terms with positive denominator), so equality is
/// coordinate-wise. Immutable in spirit: all operations return new values.
class Elem {
 public:
  Elem() : Elem(Tower{}) {}
  explicit Elem(const Tower& t);
  Elem(const Tower& t, const Rat& value);
  Elem(const Tower& t, long value);

  /// The basis element prod_{i in mask} sqrt(d_i).
  static Elem surd(const Tower& t, unsigned mask);

  /// sqrt(m) for integer m >= 0 when it exists in the tower.
  static std::optional<Elem> sqrt_int(const Tower& t, long m);

  const Tower& tower() const { return tower_; }
  const std::vector<Rat>& coords() const { return coords_; }
  const Rat& coord(std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  bool is_rational() const;
  /// Rational part (coordinate of basis element 1).
  const Rat& rat_part() const { return coords_[0]; }
  /// Value as a rational; throws Errc::internal if irrational.
  Rat as_rat() const;

  Elem operator-() const;
  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator/(const Elem& o) const;  // throws Errc::division_by_zero
  Elem& operator+=(const Elem& o) { return *this = *this + o; }
  Elem& operator-=(const Elem& o) { return *this = *this - o; }
  Elem& operator*=(const Elem& o) { return *this = *this * o; }
  Elem& operator/=(const Elem& o) { return *this = *this / o; }

  Elem operator*(const Rat& r) const;
  Elem operator/(const Rat& r) const;

  bool operator==(const Elem& o) const { return tower_ == o.tower_ && coords_ == o.coords_; }
  bool operator!=(const Elem& o) const { return !(*this == o); }

  /// Sign under the positive-root real embedding. Interval arithmetic at
  /// increasing precision first, exact recursive descent when inconclusive.
  int sign() const;

  /// Multiplicative inverse; throws Errc::division_by_zero on zero.
  Elem inverse() const;

  /// Applies the automorphism flipping sqrt(d_i) for every bit set in mask.
  Elem conjugate(unsigned mask) const;

  /// Product of all conjugates; always rational.
  Rat norm_q() const;

  /// a = lo + hi*sqrt(d_top); lo and hi live in the subtower.
  std::pair<Elem, Elem> split_top() const;
  static Elem join_top(const Tower& t, const Elem& lo, const Elem& hi);

  /// Embeds into a deeper tower whose radicand list starts with ours.
  Elem lift(const Tower& bigger) const;

  std::string str() const;

 private:
  void check_same_tower(const Elem& o) const;
  std::optional<Elem> try_sqrt_impl() const;
  friend std::optional<Elem> try_sqrt(const Elem&);

  Tower tower_;
  std::vector<Rat> coords_;
};

inline Elem operator*(const Rat& r, const Elem& e) { return e * r; }

inline int sign(const Elem& e) { return e.sign(); }

/// Square root in the same tower with sign >= 0, if one exists.
/// Throws Errc::negative_radicand when sign(a) < 0.
std::optional<Elem> try_sqrt(const Elem& a);

/// Compares by real value.
inline bool less_real(const Elem& a, const Elem& b) { return (a - b).sign() < 0; }

/// abs by real value.
Elem abs_real(const Elem& a);

/// Parses the element syntax: signed rationals `p/q` or `p`, `sqrt(d)` atoms,
/// infix + - * /, parentheses. Throws Errc::parse_error or
/// Errc::coefficient_not_in_tower.
Elem parse_element(const std::string& text, const Tower& t);

std::string to_string(const Elem& e);

}  // namespace zda
