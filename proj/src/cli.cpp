#include "zda/cli.hpp"

#include <sstream>

#include "zda/algfile.hpp"

namespace zda {

namespace {

Algebra resolve_algebra(const std::string& arg) {
  if (const CatalogEntry* e = catalog_find(arg)) return e->algebra;
  return load_algebra_file(arg);
}

const char* kUsage =
    "usage: zda [--format text|machine] [--quiet] <command> [args]\n"
    "\n"
    "commands:\n"
    "  inspect FILE|NAME         axioms, identity and product-span summary\n"
    "  detform FILE|NAME         determinant form and its linear factors\n"
    "  zdiv FILE|NAME            decomposition of the right-zero-divisor set\n"
    "  ideals FILE|NAME          maximal left ideals (dimension <= 3)\n"
    "  tame FILE|NAME            full tameness report\n"
    "  tame --all                tameness/splitting table over the catalog\n"
    "  sample FILE|NAME [--count N] [--seed S]\n"
    "                            two-sided verification of the decomposition\n"
    "  catalog                   list the built-in algebras\n";

}  // namespace

CliResult run_command(const std::vector<std::string>& args) {
  CliResult res;
  bool machine = false, quiet = false, all = false;
  std::string command;
  std::string operand;
  long count = 100;
  std::uint64_t seed = 42;

  try {
    for (std::size_t i = 0; i < args.size(); ++i) {
      const std::string& a = args[i];
      if (a == "--format") {
        if (++i >= args.size()) fail(Errc::bad_usage, "--format needs an argument");
        if (args[i] == "machine")
          machine = true;
        else if (args[i] == "text")
          machine = false;
        else
          fail(Errc::bad_usage, "--format must be text or machine");
      } else if (a == "--quiet") {
        quiet = true;
      } else if (a == "--all") {
        all = true;
      } else if (a == "--count") {
        if (++i >= args.size()) fail(Errc::bad_usage, "--count needs an argument");
        count = std::stol(args[i]);
        if (count < 1) fail(Errc::bad_usage, "--count must be positive");
      } else if (a == "--seed") {
        if (++i >= args.size()) fail(Errc::bad_usage, "--seed needs an argument");
        seed = std::stoull(args[i]);
      } else if (command.empty()) {
        command = a;
      } else if (operand.empty()) {
        operand = a;
      } else {
        fail(Errc::bad_usage, "unexpected argument: " + a);
      }
    }

    if (command.empty()) {
      res.err = kUsage;
      res.exit_code = 1;
      return res;
    }

    std::string out;
    if (command == "catalog") {
      out = render_catalog(machine);
    } else if (command == "tame" && all) {
      out = render_open_question_table(machine);
    } else if (command == "inspect" || command == "detform" || command == "zdiv" ||
               command == "ideals" || command == "tame" || command == "sample") {
      if (operand.empty()) fail(Errc::bad_usage, command + " needs a FILE or catalog NAME");
      Algebra a = resolve_algebra(operand);
      if (command == "inspect") {
        out = render_inspect(a, machine);
      } else if (command == "detform") {
        out = render_detform(a, machine);
      } else if (command == "zdiv") {
        ZDecomposition z = zero_divisor_set(a);
        out = render_zdiv(a, z, machine);
        if (z.kind == ZKind::undetermined) res.exit_code = 2;
      } else if (command == "ideals") {
        IdealList il = maximal_left_ideals(a);
        out = render_ideals(a, il, machine);
        if (!il.complete) res.exit_code = 2;
      } else if (command == "tame") {
        TamenessReport rep = tameness_report(a);
        out = render_tame(a, rep, machine);
        if (rep.tame == Verdict::undetermined) res.exit_code = 2;
      } else {  // sample
        ZDecomposition z = zero_divisor_set(a);
        CheckReport r = cross_check_sample(a, z, static_cast<int>(count), seed);
        out = render_check(a, r, machine);
        if (!r.pass) res.exit_code = 1;
      }
    } else {
      fail(Errc::bad_usage, "unknown command: " + command + "\n" + kUsage);
    }
    if (!quiet) res.out = out;
  } catch (const Error& e) {
    res.err = std::string(errc_name(e.code())) + ": " + e.what() + "\n";
    res.exit_code = 1;
  } catch (const std::exception& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 1;
  }
  return res;
}

}  // namespace zda
