#include "zda/tameness.hpp"

#include <algorithm>
#include <random>

namespace zda {

const char* zkind_name(ZKind k) {
  switch (k) {
    case ZKind::all_of_a: return "all";
    case ZKind::subspace_union: return "subspace-union";
    case ZKind::undetermined: return "undetermined";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::undetermined: return "undetermined";
  }
  return "?";
}

namespace {

void add_component(std::vector<Subspace>& components, const Subspace& w) {
  for (const Subspace& c : components)
    if (c == w) return;
  components.push_back(w);
}

// keep only maximal members (pairwise incomparable)
void prune_contained(std::vector<Subspace>& components) {
  std::vector<Subspace> kept;
  for (const Subspace& w : components) {
    bool inside = false;
    for (const Subspace& o : components)
      if (!(o == w) && o.contains(w)) inside = true;
    if (!inside) kept.push_back(w);
  }
  components = std::move(kept);
}

void check_preconditions(const Algebra& a) {
  if (a.dim() > 4) fail(Errc::dimension_too_large, "analysis limited to dimension 4");
  AxiomReport ax = check_axioms(a);
  if (!ax.associative) {
    std::string msg = "algebra is not associative";
    if (ax.assoc_witness) {
      auto [i, j, k] = *ax.assoc_witness;
      msg += " (witness basis triple " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
             "," + std::to_string(k + 1) + ")";
    }
    fail(Errc::not_associative, msg);
  }
}

// Shared tail of the pipeline: classify the non-linear residual of the
// determinant form. Returns true when the decomposition was resolved.
bool resolve_residual(const MultiPoly& residual, std::vector<Subspace>& components,
                      ZDecomposition& z, std::optional<QuadSplit>& split_out) {
  int deg = residual.total_degree();
  if (deg <= 0) {
    z.justification.push_back("determinant form splits into linear forms over the tower");
    return true;
  }
  MultiPoly quad = residual;
  if (deg == 4) {
    auto core = perfect_square_core(residual);
    if (!core) return false;
    z.justification.push_back("quartic residual is a perfect square; analyzing its core");
    quad = *core;
    deg = 2;
  }
  if (deg != 2) return false;
  QuadSplit qs = quadratic_split(quad);
  split_out = qs;
  switch (qs.kind) {
    case QuadKind::splits_over_tower:
      add_component(components, qs.forms->first.kernel_subspace());
      add_component(components, qs.forms->second.kernel_subspace());
      z.justification.push_back("quadratic residual splits over the tower");
      return true;
    case QuadKind::splits_over_closure:
    case QuadKind::irreducible_definite:
      add_component(components, qs.gram_kernel);
      z.justification.push_back(
          "quadratic residual has no tower-rational zeros outside its radical: "
          "its zero set is the Gram kernel");
      return true;
    case QuadKind::irreducible_indefinite:
      z.cone_certified = true;
      z.justification.push_back(
          "quadratic residual is indefinite of rank >= 3: its real zero set is a cone, "
          "not a finite union of subspaces");
      return false;
  }
  return false;
}

}  // namespace

ZDecomposition zero_divisor_set(const Algebra& a) {
  check_preconditions(a);
  const std::size_t n = a.dim();
  ZDecomposition z;

  Subspace aa = span_of_products(a);
  if (aa.dim() < n) {
    z.kind = ZKind::all_of_a;
    z.justification.push_back(
        "products span a proper subspace, so every element is a right (and left) zero divisor");
    return z;
  }

  MultiPoly d = determinant_form(a);
  if (d.is_zero()) {
    z.kind = ZKind::all_of_a;
    z.justification.push_back(
        "determinant form vanishes identically: every right multiplication is singular");
    return z;
  }

  if (n <= 3) {
    IdealList il = maximal_left_ideals(a);
    if (il.complete) {
      z.kind = ZKind::subspace_union;
      z.components = il.ideals;
      z.justification.push_back(
          "zero divisors form the union of the maximal left ideals (complete enumeration)");
      return z;
    }
  }

  // variety decomposition of the determinant form
  FactorReport fr = extract_linear_factors(d);
  std::vector<Subspace> components;
  for (const auto& [f, mult] : fr.factors) add_component(components, f.kernel_subspace());
  if (!fr.factors.empty())
    z.justification.push_back("linear factors of the determinant form contribute their kernels");

  std::optional<QuadSplit> split;
  if (resolve_residual(fr.residual, components, z, split)) {
    prune_contained(components);
    z.kind = ZKind::subspace_union;
    z.components = std::move(components);
    return z;
  }
  z.kind = ZKind::undetermined;
  z.residual = fr.residual;
  if (!z.cone_certified)
    z.justification.push_back("residual could not be resolved into subspaces");
  return z;
}

TamenessReport tameness_report(const Algebra& a) {
  check_preconditions(a);
  TamenessReport rep;
  rep.z = zero_divisor_set(a);
  rep.d = determinant_form(a);
  rep.proper = !rep.d.is_zero();

  if (a.dim() <= 3) {
    AxiomReport ax = check_axioms(a);
    if (ax.aa_full && !rep.d.is_zero()) {
      IdealList il = maximal_left_ideals(a);
      rep.ideal_list = il;
    }
  }

  if (rep.d.is_zero()) {
    rep.factor_report.residual = rep.d;
    rep.splits_over_closure = Verdict::undetermined;
  } else {
    rep.factor_report = extract_linear_factors(rep.d);
    const MultiPoly& residual = rep.factor_report.residual;
    int deg = residual.total_degree();
    if (deg <= 0) {
      rep.splits_over_closure = Verdict::yes;
    } else {
      MultiPoly quad = residual;
      bool have_quad = deg == 2;
      if (deg == 4) {
        auto core = perfect_square_core(residual);
        if (core) {
          quad = *core;
          have_quad = true;
        }
      }
      if (have_quad) {
        QuadSplit qs = quadratic_split(quad);
        rep.residual_split = qs;
        rep.splits_over_closure = qs.rank <= 2 ? Verdict::yes : Verdict::no;
      } else {
        rep.splits_over_closure = Verdict::undetermined;
      }
    }
  }

  switch (rep.z.kind) {
    case ZKind::all_of_a:
    case ZKind::subspace_union:
      rep.tame = Verdict::yes;
      break;
    case ZKind::undetermined:
      rep.tame = rep.z.cone_certified ? Verdict::no : Verdict::undetermined;
      break;
  }

  if (a.dim() == 3 && rep.tame == Verdict::no)
    fail(Errc::internal,
         "3-dimensional associative algebra reported not tame; this contradicts the theory "
         "and indicates a bug");
  return rep;
}

OpenQuestionRow open_question_row(const Algebra& a) {
  TamenessReport rep = tameness_report(a);
  return {rep.tame, rep.splits_over_closure};
}

CheckReport cross_check_sample(const Algebra& a, const ZDecomposition& z, int count,
                               std::uint64_t seed) {
  CheckReport out;
  if (z.kind != ZKind::subspace_union) {
    out.note = "decomposition is not a subspace union; nothing to verify";
    return out;
  }
  const Tower& t = a.tower();
  const std::size_t n = a.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  auto rnd_rat = [&]() {
    Rat q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };

  MultiPoly d = determinant_form(a);

  // (a) points inside each component are zero divisors
  for (const Subspace& w : z.components) {
    for (int it = 0; it < count; ++it) {
      Vec x = zero_vec(t, n);
      for (const Vec& b : w.basis()) x = add(x, scale(b, Elem(t, rnd_rat())));
      ++out.component_samples;
      if (!det(a.right_mult_matrix(x)).is_zero()) {
        out.pass = false;
        out.witness = x;
        out.note = "component point is not a zero divisor";
        return out;
      }
    }
  }

  // (b) points generated on the zero set lie in some component
  auto in_some_component = [&](const Vec& x) {
    for (const Subspace& w : z.components)
      if (w.contains(x)) return true;
    return false;
  };

  int dry = 0;
  std::uniform_int_distribution<std::size_t> pick_var(0, n - 1);
  for (int it = 0; it < count; ++it) {
    std::size_t var = pick_var(rng);
    Vec point(n, Elem(t));
    for (std::size_t i = 0; i < n; ++i)
      if (i != var) point[i] = Elem(t, rnd_rat());
    std::vector<Elem> slice = d.restrict_to_var(var, point);
    UniPoly u(t, std::move(slice));
    bool found = false;
    if (u.is_zero()) {
      // the whole slice line lies in the zero set
      point[var] = Elem(t, rnd_rat());
      found = true;
      ++out.solved_samples;
      if (!in_some_component(point)) {
        out.pass = false;
        out.witness = point;
        out.note = "zero-set point escapes every component";
        return out;
      }
    } else if (u.degree() >= 1) {
      for (const auto& [r, mult] : tower_roots(u).roots) {
        point[var] = r;
        found = true;
        ++out.solved_samples;
        if (!in_some_component(point)) {
          out.pass = false;
          out.witness = point;
          out.note = "zero-set point escapes every component";
          return out;
        }
      }
    }
    if (found) {
      dry = 0;
    } else if (++dry >= count) {
      out.no_solvable_slice = true;
      out.note = "no solvable slice found in " + std::to_string(count) + " consecutive tries";
      break;
    }
  }

  // (b') points sampled from the factor varieties of the determinant form,
  // independent of the ideal enumeration route
  if (!d.is_zero()) {
    FactorReport fr = extract_linear_factors(d);
    std::vector<Subspace> varieties;
    for (const auto& [f, mult] : fr.factors) varieties.push_back(f.kernel_subspace());
    std::optional<QuadSplit> split;
    MultiPoly quad = fr.residual;
    if (quad.total_degree() == 4) {
      if (auto core = perfect_square_core(quad)) quad = *core;
    }
    if (quad.total_degree() == 2) {
      QuadSplit qs = quadratic_split(quad);
      if (qs.kind == QuadKind::splits_over_tower) {
        varieties.push_back(qs.forms->first.kernel_subspace());
        varieties.push_back(qs.forms->second.kernel_subspace());
      } else if (qs.zero_set_is_kernel()) {
        varieties.push_back(qs.gram_kernel);
      }
    }
    for (const Subspace& v : varieties) {
      for (int it = 0; it < std::max(1, count / 4); ++it) {
        Vec x = zero_vec(t, n);
        for (const Vec& b : v.basis()) x = add(x, scale(b, Elem(t, rnd_rat())));
        ++out.solved_samples;
        if (!in_some_component(x)) {
          out.pass = false;
          out.witness = x;
          out.note = "factor-variety point escapes every component";
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace zda
