#pragma once

#include <string>

#include "zda/algebra.hpp"

namespace zda {

/// Parses the line-oriented algebra-definition format:
///
///   # comment
///   name <ident>                      (optional)
///   field Q (adjoin sqrt <int>)*
///   dim <int>
///   basis <ident>+
///   <ident>*<ident> = <term> (('+'|'-') <term>)*
///
/// with <term> := <coeff>? <ident> (or the literal 0) and <coeff> in the
/// field-element syntax. Unspecified products default to zero; every basis
/// pair may appear at most once. UTF-8, LF or CRLF, tokens whitespace
/// separated. Diagnostics carry 1-based line/column.
Algebra parse_algebra_file(const std::string& text);

/// Reads and parses a file from disk.
Algebra load_algebra_file(const std::string& path);

/// Canonical text round-trip: parse(to_alg_text(a)) defines the same algebra.
std::string to_alg_text(const Algebra& a);

}  // namespace zda
