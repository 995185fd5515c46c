#include "zda.h"

#include <cstring>
#include <new>

#include "zda/algfile.hpp"
#include "zda/cli.hpp"

using namespace zda;

struct zda_algebra {
  Algebra rep;
};

struct zda_report {
  Algebra algebra;
  TamenessReport rep;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err_msg, const std::string& msg) {
  if (err_msg) *err_msg = dup_string(msg);
}

zda_status status_of(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error:
    case Errc::unknown_basis_name:
    case Errc::duplicate_product:
    case Errc::coefficient_not_in_tower:
    case Errc::not_square_free:
    case Errc::redundant_radicand:
    case Errc::tower_too_deep:
      return ZDA_ERR_PARSE;
    case Errc::not_associative:
    case Errc::dimension_too_large:
    case Errc::requires_aa_full:
      return ZDA_ERR_PRECONDITION;
    case Errc::unknown_name:
    case Errc::bad_usage:
      return ZDA_ERR_INVALID;
    default:
      return ZDA_ERR_INTERNAL;
  }
}

template <typename Fn>
zda_status guarded(char** err_msg, Fn&& fn) {
  try {
    fn();
    return ZDA_OK;
  } catch (const Error& e) {
    set_err(err_msg, std::string(errc_name(e.code())) + ": " + e.what());
    return status_of(e);
  } catch (const std::exception& e) {
    set_err(err_msg, e.what());
    return ZDA_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* zda_version(void) { return "0.1.0"; }

void zda_string_free(char* s) { std::free(s); }

zda_status zda_algebra_from_text(const char* text, zda_algebra** out, char** err_msg) {
  if (!text || !out) {
    set_err(err_msg, "null argument");
    return ZDA_ERR_INVALID;
  }
  return guarded(err_msg, [&] { *out = new zda_algebra{parse_algebra_file(text)}; });
}

zda_status zda_algebra_from_file(const char* path, zda_algebra** out, char** err_msg) {
  if (!path || !out) {
    set_err(err_msg, "null argument");
    return ZDA_ERR_INVALID;
  }
  return guarded(err_msg, [&] { *out = new zda_algebra{load_algebra_file(path)}; });
}

zda_status zda_algebra_from_catalog(const char* name, zda_algebra** out, char** err_msg) {
  if (!name || !out) {
    set_err(err_msg, "null argument");
    return ZDA_ERR_INVALID;
  }
  const CatalogEntry* e = catalog_find(name);
  if (!e) {
    set_err(err_msg, std::string("unknown catalog name: ") + name);
    return ZDA_ERR_INVALID;
  }
  return guarded(err_msg, [&] { *out = new zda_algebra{e->algebra}; });
}

void zda_algebra_free(zda_algebra* a) { delete a; }

char* zda_catalog_names(void) {
  std::string names;
  for (const CatalogEntry& e : catalog()) {
    names += e.name;
    names += "\n";
  }
  return dup_string(names);
}

size_t zda_algebra_dim(const zda_algebra* a) { return a ? a->rep.dim() : 0; }

char* zda_algebra_name(const zda_algebra* a) {
  return a ? dup_string(a->rep.name()) : nullptr;
}

char* zda_algebra_text(const zda_algebra* a) {
  if (!a) return nullptr;
  try {
    return dup_string(to_alg_text(a->rep));
  } catch (...) {
    return nullptr;
  }
}

zda_status zda_analyze(const zda_algebra* a, zda_report** out, char** err_msg) {
  if (!a || !out) {
    set_err(err_msg, "null argument");
    return ZDA_ERR_INVALID;
  }
  return guarded(err_msg, [&] { *out = new zda_report{a->rep, tameness_report(a->rep)}; });
}

void zda_report_free(zda_report* r) { delete r; }

const char* zda_report_verdict(const zda_report* r) {
  if (!r) return "undetermined";
  switch (r->rep.tame) {
    case Verdict::yes: return "tame";
    case Verdict::no: return "not tame";
    case Verdict::undetermined: return "undetermined";
  }
  return "undetermined";
}

const char* zda_report_splits(const zda_report* r) {
  return r ? verdict_name(r->rep.splits_over_closure) : "undetermined";
}

int zda_report_proper(const zda_report* r) { return r && r->rep.proper ? 1 : 0; }

size_t zda_report_component_count(const zda_report* r) {
  return r ? r->rep.z.components.size() : 0;
}

size_t zda_report_component_dim(const zda_report* r, size_t i) {
  if (!r || i >= r->rep.z.components.size()) return static_cast<size_t>(-1);
  return r->rep.z.components[i].dim();
}

char* zda_report_render(const zda_report* r, int machine_format) {
  if (!r) return nullptr;
  try {
    return dup_string(render_tame(r->algebra, r->rep, machine_format != 0));
  } catch (...) {
    return nullptr;
  }
}

int zda_run_cli(int argc, const char* const* argv, char** out_text, char** err_text) {
  std::vector<std::string> args;
  for (int i = 0; i < argc; ++i) args.emplace_back(argv[i]);
  CliResult res = run_command(args);
  if (out_text) *out_text = dup_string(res.out);
  if (err_text) *err_text = dup_string(res.err);
  return res.exit_code;
}

}  // extern "C"
