#pragma once

#include <string>
#include <vector>

#include "zda/tameness.hpp"

namespace zda {

/// Rendering of analysis results. `machine` selects the flat key-value
/// format (stable keys, one `key = value` pair per line); text otherwise.
std::string render_inspect(const Algebra& a, bool machine);
std::string render_detform(const Algebra& a, bool machine);
std::string render_zdiv(const Algebra& a, const ZDecomposition& z, bool machine);
std::string render_ideals(const Algebra& a, const IdealList& il, bool machine);
std::string render_tame(const Algebra& a, const TamenessReport& rep, bool machine);
std::string render_check(const Algebra& a, const CheckReport& r, bool machine);
std::string render_catalog(bool machine);
std::string render_open_question_table(bool machine);

/// Command-line front end:
///   inspect FILE|NAME, detform ..., zdiv ..., ideals ..., tame ...,
///   sample ... [--count N] [--seed S], tame --all, catalog
/// Global flags: --format text|machine, --quiet.
/// Exit codes: 0 success, 1 parse/precondition error, 2 undetermined result.
struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult run_command(const std::vector<std::string>& args);

}  // namespace zda
