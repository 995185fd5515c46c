#pragma once

#include <stdexcept>
#include <string>

namespace zda {

enum class Errc {
  not_square_free,
  redundant_radicand,
  tower_too_deep,
  tower_mismatch,
  division_by_zero,
  negative_radicand,
  non_square,
  dimension_mismatch,
  non_symmetric,
  arity_mismatch,
  degree_too_high,
  zero_polynomial,
  not_homogeneous,
  wrong_degree,
  shape_mismatch,
  requires_aa_full,
  dimension_too_large,
  not_associative,
  parse_error,
  unknown_basis_name,
  duplicate_product,
  coefficient_not_in_tower,
  unknown_name,
  bad_usage,
  internal,
};

const char* errc_name(Errc c);

/// Domain error. `line`/`col` are 1-based and only meaningful for parse errors.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Error(Errc code, std::string msg, int line, int col)
      : std::runtime_error(std::move(msg)), code_(code), line_(line), col_(col) {}

  Errc code() const { return code_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  Errc code_;
  int line_ = 0;
  int col_ = 0;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace zda
