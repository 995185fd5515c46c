#include "zda/factor.hpp"

#include <algorithm>

namespace zda {

namespace {

// p with x_pivot = -t, x_j = 1, all other variables 0; univariate in t.
UniPoly pivot_slice(const MultiPoly& p, std::size_t pivot, std::size_t j) {
  const Tower& t = p.tower();
  std::vector<Elem> cs;
  for (const auto& [e, c] : p.terms()) {
    bool support_ok = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != pivot && i != j && e[i] != 0) support_ok = false;
    if (!support_ok) continue;
    std::size_t d = e[pivot];
    if (cs.size() <= d) cs.resize(d + 1, Elem(t));
    cs[d] += d % 2 ? -c : c;
  }
  return UniPoly(t, std::move(cs));
}

bool var_divides(const MultiPoly& p, std::size_t i) {
  for (const auto& [e, c] : p.terms())
    if (e[i] == 0) return false;
  return true;
}

MultiPoly var_quotient(const MultiPoly& p, std::size_t i) {
  MultiPoly q(p.tower(), p.nvars());
  for (const auto& [e, c] : p.terms()) {
    ExpVec f = e;
    --f[i];
    q.set_term(f, c);
  }
  return q;
}

// deterministic order on extracted factors: lexicographic by coefficient
// vector under the real order
bool form_less(const LinearForm& a, const LinearForm& b) {
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    int s = (a.coeffs()[i] - b.coeffs()[i]).sign();
    if (s != 0) return s < 0;
  }
  return false;
}

}  // namespace

FactorReport extract_linear_factors(const MultiPoly& p) {
  if (p.is_zero()) fail(Errc::zero_polynomial, "factor search on zero polynomial");
  if (!p.is_homogeneous()) fail(Errc::not_homogeneous, "factor search needs a homogeneous form");
  const Tower& t = p.tower();
  const std::size_t n = p.nvars();

  FactorReport rep;
  rep.residual = p;
  MultiPoly& work = rep.residual;

  auto record = [&](const LinearForm& f, int mult) {
    for (auto& [g, m] : rep.factors)
      if (g == f) {
        m += mult;
        return;
      }
    rep.factors.emplace_back(f, mult);
  };

  // coordinate-variable factors first; afterwards no variable divides work
  for (std::size_t i = 0; i < n; ++i) {
    int mult = 0;
    while (var_divides(work, i)) {
      work = var_quotient(work, i);
      ++mult;
    }
    if (mult > 0) {
      Vec c = zero_vec(t, n);
      c[i] = Elem(t, 1);
      record(LinearForm(t, c), mult);
    }
  }

  bool changed = true;
  while (changed && work.total_degree() >= 1) {
    changed = false;
    for (std::size_t pivot = 0; pivot < n && !changed; ++pivot) {
      // candidates for f = x_pivot + sum_{j > pivot} b_j x_j from the
      // coefficient-matching slices x_pivot = -t, x_j = 1, rest 0
      std::vector<std::vector<Elem>> cand;
      bool degenerate = false;
      for (std::size_t j = pivot + 1; j < n; ++j) {
        UniPoly u = pivot_slice(work, pivot, j);
        if (u.is_zero()) {
          // the slice plane lies inside the zero set; b_j is unconstrained
          degenerate = true;
          break;
        }
        RootList rl = tower_roots(u);
        if (!rl.complete) rep.complete = false;
        std::vector<Elem> cj;
        for (const auto& [r, m] : rl.roots) cj.push_back(r);
        cand.push_back(std::move(cj));
      }
      if (degenerate) {
        rep.complete = false;
        continue;
      }
      // walk the candidate tuples (empty product = single all-zero tuple,
      // which step 1 already handled; divides_linear just fails then)
      std::vector<std::size_t> pick(cand.size(), 0);
      for (;;) {
        bool any_empty = false;
        for (const auto& cj : cand)
          if (cj.empty()) any_empty = true;
        if (any_empty) break;
        Vec coeffs = zero_vec(t, n);
        coeffs[pivot] = Elem(t, 1);
        for (std::size_t idx = 0; idx < cand.size(); ++idx)
          coeffs[pivot + 1 + idx] = cand[idx][pick[idx]];
        LinearForm f(t, coeffs);
        if (divides_linear(f, work)) {
          int mult = 0;
          for (;;) {
            auto q = divide_exact(work, f.poly());
            if (!q) break;
            work = *q;
            ++mult;
          }
          if (mult > 0) {
            record(f, mult);
            changed = true;
            break;
          }
        }
        std::size_t idx = 0;
        while (idx < cand.size() && ++pick[idx] == cand[idx].size()) {
          pick[idx] = 0;
          ++idx;
        }
        if (idx == cand.size()) break;
        if (cand.empty()) break;
      }
    }
  }

  std::sort(rep.factors.begin(), rep.factors.end(),
            [](const auto& a, const auto& b) { return form_less(a.first, b.first); });

  // expansion identity, always
  MultiPoly check = rep.residual;
  for (const auto& [f, m] : rep.factors)
    for (int i = 0; i < m; ++i) check = check * f.poly();
  if (!(check == p)) fail(Errc::internal, "factor report expansion identity violated");
  return rep;
}

FactorReport linear_factors(const MultiPoly& p) {
  if (p.is_zero()) fail(Errc::zero_polynomial, "linear_factors: zero polynomial");
  if (!p.is_homogeneous()) fail(Errc::not_homogeneous, "linear_factors: not homogeneous");
  if (p.nvars() > 3) fail(Errc::arity_mismatch, "linear_factors: at most 3 variables");
  if (p.total_degree() > 4) fail(Errc::degree_too_high, "linear_factors: degree > 4");
  return extract_linear_factors(p);
}

std::optional<MultiPoly> perfect_square_core(const MultiPoly& p) {
  if (p.is_zero()) return MultiPoly(p.tower(), p.nvars());
  if (p.total_degree() % 2 != 0) return std::nullopt;
  const Tower& t = p.tower();
  MultiPoly mon = p * p.leading_coeff().inverse();
  const ExpVec& le = mon.leading_exp();
  ExpVec half(le.size());
  for (std::size_t i = 0; i < le.size(); ++i) {
    if (le[i] % 2 != 0) return std::nullopt;
    half[i] = le[i] / 2;
  }
  MultiPoly q(t, p.nvars());
  q.set_term(half, Elem(t, 1));
  MultiPoly rem = mon - q * q;
  while (!rem.is_zero()) {
    const ExpVec& re = rem.leading_exp();
    // next term of q: LT(rem) / (2 * LT(q)); LT(q) = x^half stays leading
    ExpVec diff(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < half[i]) return std::nullopt;
      diff[i] = re[i] - half[i];
    }
    if (GrlexGreater{}(diff, half)) return std::nullopt;  // would outrank the root's lead
    MultiPoly term(t, p.nvars());
    term.set_term(diff, rem.leading_coeff() / Rat(2));
    q = q + term;
    rem = mon - q * q;
  }
  return q;
}

const char* quad_kind_name(QuadKind k) {
  switch (k) {
    case QuadKind::splits_over_tower: return "splits-over-tower";
    case QuadKind::splits_over_closure: return "splits-over-closure";
    case QuadKind::irreducible_definite: return "irreducible-definite";
    case QuadKind::irreducible_indefinite: return "irreducible-indefinite";
  }
  return "?";
}

QuadSplit quadratic_split(const MultiPoly& q) {
  if (q.is_zero()) fail(Errc::zero_polynomial, "quadratic_split: zero polynomial");
  if (!q.is_homogeneous()) fail(Errc::not_homogeneous, "quadratic_split: not homogeneous");
  if (q.total_degree() != 2) fail(Errc::wrong_degree, "quadratic_split: degree != 2");
  const Tower& t = q.tower();
  const std::size_t n = q.nvars();

  Mat gram(t, n, n);
  for (const auto& [e, c] : q.terms()) {
    std::size_t i = 0;
    while (e[i] == 0) ++i;
    if (e[i] == 2) {
      gram.at(i, i) = c;
    } else {
      std::size_t j = i + 1;
      while (e[j] == 0) ++j;
      Elem half = c / Rat(2);
      gram.at(i, j) = half;
      gram.at(j, i) = half;
    }
  }

  SignatureResult sig = diagonalize_symmetric(gram);
  QuadSplit out;
  out.rank = sig.rank;
  out.positives = sig.positives;
  out.negatives = sig.negatives;
  out.gram_kernel = kernel(gram);

  auto form_from_row = [&](const Mat& tinv, std::size_t k) {
    return LinearForm(t, tinv.row(k));
  };

  if (sig.rank <= 2) {
    auto tinv = inverse(sig.transform);
    if (!tinv) fail(Errc::internal, "congruence transform not invertible");
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < n; ++i)
      if (!sig.diagonal[i].is_zero()) nz.push_back(i);
    if (sig.rank == 1) {
      LinearForm l = form_from_row(*tinv, nz[0]);
      out.kind = QuadKind::splits_over_tower;
      out.forms = {l, l};
    } else if (sig.positives == 1 && sig.negatives == 1) {
      // d_i y_i^2 + d_j y_j^2 with opposite signs: split if sqrt(-d_j/d_i)
      // lives in the tower
      const Elem &di = sig.diagonal[nz[0]], &dj = sig.diagonal[nz[1]];
      Elem m = -(dj / di);
      auto s = try_sqrt(m);
      if (s) {
        Vec yi = tinv->row(nz[0]), yj = tinv->row(nz[1]);
        Vec c1(n, Elem(t)), c2(n, Elem(t));
        for (std::size_t c = 0; c < n; ++c) {
          c1[c] = yi[c] - *s * yj[c];
          c2[c] = yi[c] + *s * yj[c];
        }
        out.kind = QuadKind::splits_over_tower;
        out.forms = {LinearForm(t, c1), LinearForm(t, c2)};
      } else {
        out.kind = QuadKind::splits_over_closure;
      }
    } else {
      // rank-2 definite: conjugate pair of complex forms
      out.kind = QuadKind::splits_over_closure;
    }
  } else {
    bool definite = sig.positives == sig.rank || sig.negatives == sig.rank;
    out.kind = definite ? QuadKind::irreducible_definite : QuadKind::irreducible_indefinite;
  }

  if (out.forms) {
    // forms are exact: scalar * l1 * l2 == q
    MultiPoly prod = out.forms->first.poly() * out.forms->second.poly();
    if (!proportional(prod, q)) fail(Errc::internal, "quadratic split forms do not multiply back");
  }
  return out;
}

}  // namespace zda
