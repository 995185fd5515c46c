#include <sstream>

#include "zda/cli.hpp"

namespace zda {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string tame_str(Verdict v) {
  switch (v) {
    case Verdict::yes: return "tame";
    case Verdict::no: return "not tame";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

void emit_subspace_machine(std::ostringstream& os, const std::string& prefix, const Subspace& w) {
  os << prefix << ".dim = " << w.dim() << "\n";
  for (std::size_t j = 0; j < w.basis().size(); ++j)
    os << prefix << ".basis[" << j << "] = " << vec_str(w.basis()[j]) << "\n";
}

void emit_algebra_header_machine(std::ostringstream& os, const Algebra& a) {
  os << "algebra.name = " << (a.name().empty() ? "(unnamed)" : a.name()) << "\n";
  os << "algebra.dim = " << a.dim() << "\n";
  os << "algebra.field = " << a.tower().str() << "\n";
}

void emit_factors_machine(std::ostringstream& os, const Algebra& a, const FactorReport& fr) {
  for (std::size_t i = 0; i < fr.factors.size(); ++i) {
    os << "factors[" << i << "].form = " << fr.factors[i].first.str(a.basis_names()) << "\n";
    os << "factors[" << i << "].multiplicity = " << fr.factors[i].second << "\n";
  }
  os << "factors.count = " << fr.factors.size() << "\n";
  os << "factors.complete = " << bool_str(fr.complete) << "\n";
  os << "residual.poly = " << fr.residual.str(a.basis_names()) << "\n";
}

std::string describe_axioms_text(const Algebra& a, const AxiomReport& ax) {
  std::ostringstream os;
  os << "associative:  " << bool_str(ax.associative);
  if (ax.assoc_witness) {
    auto [i, j, k] = *ax.assoc_witness;
    os << "  (fails on " << a.basis_names()[i] << ", " << a.basis_names()[j] << ", "
       << a.basis_names()[k] << ")";
  }
  os << "\ncommutative:  " << bool_str(ax.commutative);
  if (ax.comm_witness)
    os << "  (fails on " << a.basis_names()[ax.comm_witness->first] << ", "
       << a.basis_names()[ax.comm_witness->second] << ")";
  os << "\nidentity:     " << (ax.identity ? vec_str(*ax.identity) : std::string("none"));
  os << "\nproducts span: dimension " << ax.aa_dim << (ax.aa_full ? " (full)" : " (proper subspace)");
  return os.str();
}

}  // namespace

std::string render_inspect(const Algebra& a, bool machine) {
  AxiomReport ax = check_axioms(a);
  std::ostringstream os;
  if (machine) {
    emit_algebra_header_machine(os, a);
    os << "axioms.associative = " << bool_str(ax.associative) << "\n";
    os << "axioms.commutative = " << bool_str(ax.commutative) << "\n";
    os << "axioms.identity = " << (ax.identity ? vec_str(*ax.identity) : std::string("none"))
       << "\n";
    os << "aa.dim = " << ax.aa_dim << "\n";
    os << "aa.full = " << bool_str(ax.aa_full) << "\n";
    return os.str();
  }
  os << "algebra " << (a.name().empty() ? "(unnamed)" : a.name()) << ": dimension " << a.dim()
     << " over " << a.tower().str() << "\n";
  std::size_t specified = 0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!is_zero_vec(a.basis_product(i, j))) ++specified;
  os << "basis: ";
  for (std::size_t i = 0; i < a.dim(); ++i) os << (i ? " " : "") << a.basis_names()[i];
  os << "  (" << specified << " of " << a.dim() * a.dim()
     << " basis products nonzero; unspecified products are zero)\n";
  os << describe_axioms_text(a, ax) << "\n";
  return os.str();
}

std::string render_detform(const Algebra& a, bool machine) {
  MultiPoly d = determinant_form(a);
  std::ostringstream os;
  if (machine) {
    emit_algebra_header_machine(os, a);
    os << "d.poly = " << d.str(a.basis_names()) << "\n";
    if (!d.is_zero()) emit_factors_machine(os, a, extract_linear_factors(d));
    return os.str();
  }
  os << "determinant form of " << a.name() << ":\n  " << d.str(a.basis_names()) << "\n";
  if (d.is_zero()) return os.str();
  FactorReport fr = extract_linear_factors(d);
  if (fr.factors.empty()) {
    os << "no linear factors over " << a.tower().str()
       << (fr.complete ? "" : " (best-effort search)") << "\n";
  } else {
    os << "linear factors (" << (fr.complete ? "complete over the tower" : "best effort") << "):\n";
    for (const auto& [f, m] : fr.factors) {
      os << "  " << f.str(a.basis_names());
      if (m > 1) os << "   (multiplicity " << m << ")";
      os << "\n";
    }
    os << "residual: " << fr.residual.str(a.basis_names()) << "\n";
  }
  return os.str();
}

std::string render_zdiv(const Algebra& a, const ZDecomposition& z, bool machine) {
  std::ostringstream os;
  if (machine) {
    emit_algebra_header_machine(os, a);
    os << "z.kind = " << zkind_name(z.kind) << "\n";
    os << "z.components.count = " << z.components.size() << "\n";
    for (std::size_t i = 0; i < z.components.size(); ++i)
      emit_subspace_machine(os, "z.components[" + std::to_string(i) + "]", z.components[i]);
    if (z.residual) os << "z.residual = " << z.residual->str(a.basis_names()) << "\n";
    for (std::size_t i = 0; i < z.justification.size(); ++i)
      os << "z.justification[" << i << "] = " << z.justification[i] << "\n";
    return os.str();
  }
  os << "right zero divisors of " << a.name() << ": ";
  switch (z.kind) {
    case ZKind::all_of_a:
      os << "the whole algebra\n";
      break;
    case ZKind::subspace_union: {
      os << "union of " << z.components.size() << " subspace"
         << (z.components.size() == 1 ? "" : "s") << "\n";
      for (const Subspace& w : z.components)
        os << "  dim " << w.dim() << ": " << w.str() << "\n";
      break;
    }
    case ZKind::undetermined:
      os << "undetermined\n";
      if (z.residual) os << "  unresolved residual: " << z.residual->str(a.basis_names()) << "\n";
      break;
  }
  for (const std::string& j : z.justification) os << "  - " << j << "\n";
  return os.str();
}

std::string render_ideals(const Algebra& a, const IdealList& il, bool machine) {
  std::ostringstream os;
  if (machine) {
    emit_algebra_header_machine(os, a);
    os << "ideals.count = " << il.ideals.size() << "\n";
    os << "ideals.complete = " << bool_str(il.complete) << "\n";
    for (std::size_t i = 0; i < il.ideals.size(); ++i)
      emit_subspace_machine(os, "ideals[" + std::to_string(i) + "]", il.ideals[i]);
    for (std::size_t i = 0; i < il.bounds_used.size(); ++i)
      os << "ideals.bounds[" << i << "] = " << il.bounds_used[i] << "\n";
    return os.str();
  }
  os << "maximal left ideals of " << a.name() << " ("
     << (il.complete ? "complete" : "possibly incomplete") << "):\n";
  if (il.ideals.empty()) os << "  none found\n";
  for (const Subspace& w : il.ideals) os << "  dim " << w.dim() << ": " << w.str() << "\n";
  for (const std::string& b : il.bounds_used) os << "  - " << b << "\n";
  return os.str();
}

std::string render_tame(const Algebra& a, const TamenessReport& rep, bool machine) {
  std::ostringstream os;
  if (machine) {
    emit_algebra_header_machine(os, a);
    os << "tame.verdict = " << tame_str(rep.tame) << "\n";
    os << "tame.proper = " << bool_str(rep.proper) << "\n";
    os << "z.kind = " << zkind_name(rep.z.kind) << "\n";
    os << "z.components.count = " << rep.z.components.size() << "\n";
    for (std::size_t i = 0; i < rep.z.components.size(); ++i)
      emit_subspace_machine(os, "z.components[" + std::to_string(i) + "]", rep.z.components[i]);
    if (rep.z.residual) os << "z.residual = " << rep.z.residual->str(a.basis_names()) << "\n";
    os << "d.poly = " << rep.d.str(a.basis_names()) << "\n";
    emit_factors_machine(os, a, rep.factor_report);
    if (rep.residual_split) {
      os << "residual.kind = " << quad_kind_name(rep.residual_split->kind) << "\n";
      os << "residual.rank = " << rep.residual_split->rank << "\n";
      os << "residual.signature = (" << rep.residual_split->positives << ","
         << rep.residual_split->negatives << ")\n";
    }
    os << "open_question.tame = " << tame_str(rep.tame) << "\n";
    os << "open_question.splits = " << verdict_name(rep.splits_over_closure) << "\n";
    OpenQuestionRow row{rep.tame, rep.splits_over_closure};
    os << "open_question.differs = " << bool_str(row.differs()) << "\n";
    return os.str();
  }
  os << "tameness report for " << a.name() << "\n";
  os << "  verdict: " << tame_str(rep.tame) << (rep.proper ? " (proper: Z != A)" : " (Z = A)")
     << "\n";
  os << render_zdiv(a, rep.z, false);
  os << "  determinant form: " << rep.d.str(a.basis_names()) << "\n";
  if (!rep.factor_report.factors.empty()) {
    os << "  linear factors:";
    for (const auto& [f, m] : rep.factor_report.factors) {
      os << " (" << f.str(a.basis_names()) << ")";
      if (m > 1) os << "^" << m;
    }
    os << "\n";
  }
  if (rep.residual_split)
    os << "  quadratic core: " << quad_kind_name(rep.residual_split->kind) << ", rank "
       << rep.residual_split->rank << ", signature (" << rep.residual_split->positives << ","
       << rep.residual_split->negatives << ")\n";
  os << "  splits over the closure: " << verdict_name(rep.splits_over_closure) << "\n";
  OpenQuestionRow row{rep.tame, rep.splits_over_closure};
  if (row.differs())
    os << "  note: tameness and closure splitting disagree on this algebra "
          "(open-question evidence)\n";
  return os.str();
}

std::string render_check(const Algebra& a, const CheckReport& r, bool machine) {
  std::ostringstream os;
  if (machine) {
    emit_algebra_header_machine(os, a);
    os << "check.pass = " << bool_str(r.pass) << "\n";
    os << "check.component_samples = " << r.component_samples << "\n";
    os << "check.solved_samples = " << r.solved_samples << "\n";
    os << "check.no_solvable_slice = " << bool_str(r.no_solvable_slice) << "\n";
    if (r.witness) os << "check.witness = " << vec_str(*r.witness) << "\n";
    if (!r.note.empty()) os << "check.note = " << r.note << "\n";
    return os.str();
  }
  os << "cross check for " << a.name() << ": " << (r.pass ? "pass" : "FAIL") << "\n";
  os << "  component samples: " << r.component_samples
     << ", zero-set samples: " << r.solved_samples << "\n";
  if (r.witness) os << "  witness: " << vec_str(*r.witness) << "\n";
  if (!r.note.empty()) os << "  note: " << r.note << "\n";
  return os.str();
}

std::string render_catalog(bool machine) {
  std::ostringstream os;
  const auto& cat = catalog();
  if (machine) {
    os << "catalog.count = " << cat.size() << "\n";
    for (std::size_t i = 0; i < cat.size(); ++i) {
      os << "catalog[" << i << "].name = " << cat[i].name << "\n";
      os << "catalog[" << i << "].dim = " << cat[i].algebra.dim() << "\n";
      os << "catalog[" << i << "].field = " << cat[i].algebra.tower().str() << "\n";
      os << "catalog[" << i << "].description = " << cat[i].description << "\n";
    }
    return os.str();
  }
  for (const CatalogEntry& e : cat) {
    os << e.name << "  (dim " << e.algebra.dim() << " over " << e.algebra.tower().str() << ")\n"
       << "    " << e.description << "\n";
  }
  return os.str();
}

std::string render_open_question_table(bool machine) {
  std::ostringstream os;
  const auto& cat = catalog();
  if (machine) {
    for (std::size_t i = 0; i < cat.size(); ++i) {
      OpenQuestionRow row = open_question_row(cat[i].algebra);
      os << "table[" << i << "].name = " << cat[i].name << "\n";
      os << "table[" << i << "].tame = " << tame_str(row.tame) << "\n";
      os << "table[" << i << "].splits = " << verdict_name(row.splits) << "\n";
      os << "table[" << i << "].differs = " << bool_str(row.differs()) << "\n";
    }
    return os.str();
  }
  os << "real tameness vs splitting of the determinant form over the closure\n";
  os << "(no equivalence is claimed; rows where the verdicts differ are flagged)\n\n";
  os << "  algebra          tame          splits    \n";
  os << "  ---------------  ------------  ----------\n";
  for (const CatalogEntry& e : cat) {
    OpenQuestionRow row = open_question_row(e.algebra);
    os << "  ";
    os << e.name;
    for (std::size_t i = e.name.size(); i < 17; ++i) os << ' ';
    std::string t = tame_str(row.tame);
    os << t;
    for (std::size_t i = t.size(); i < 14; ++i) os << ' ';
    os << verdict_name(row.splits);
    if (row.differs()) os << "   <- verdicts differ";
    os << "\n";
  }
  return os.str();
}

}  // namespace zda
