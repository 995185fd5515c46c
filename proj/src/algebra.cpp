#include "zda/algebra.hpp"

#include <algorithm>

namespace zda {

Algebra Algebra::make(std::size_t n, const Tower& t, std::vector<Elem> constants,
                      std::string name) {
  if (n < 1) fail(Errc::shape_mismatch, "dimension must be at least 1");
  if (constants.size() != n * n * n)
    fail(Errc::shape_mismatch, "expected " + std::to_string(n * n * n) + " structure constants");
  for (const Elem& e : constants)
    if (e.tower() != t) fail(Errc::tower_mismatch, "structure constant outside the declared tower");
  Algebra a;
  a.n_ = n;
  a.tower_ = t;
  a.c_ = std::move(constants);
  a.name_ = std::move(name);
  for (std::size_t i = 0; i < n; ++i) a.basis_names_.push_back("b" + std::to_string(i + 1));
  return a;
}

void Algebra::set_basis_names(std::vector<std::string> names) {
  if (names.size() != n_) fail(Errc::shape_mismatch, "basis name count");
  basis_names_ = std::move(names);
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vec v(n_, Elem(tower_));
  for (std::size_t k = 0; k < n_; ++k) v[k] = c(i, j, k);
  return v;
}

Vec Algebra::product(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) fail(Errc::dimension_mismatch, "product arity");
  Vec out(n_, Elem(tower_));
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      Elem f = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k)
        if (!c(i, j, k).is_zero()) out[k] += f * c(i, j, k);
    }
  }
  return out;
}

Mat Algebra::right_mult_matrix(const Vec& x) const {
  if (x.size() != n_) fail(Errc::dimension_mismatch, "right_mult_matrix arity");
  Mat m(tower_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Vec col = product(basis_vec(j), x);
    for (std::size_t k = 0; k < n_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Mat Algebra::left_mult_matrix(const Vec& x) const {
  if (x.size() != n_) fail(Errc::dimension_mismatch, "left_mult_matrix arity");
  Mat m(tower_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Vec col = product(x, basis_vec(j));
    for (std::size_t k = 0; k < n_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Vec Algebra::basis_vec(std::size_t i) const {
  Vec v(n_, Elem(tower_));
  v[i] = Elem(tower_, 1);
  return v;
}

Algebra Algebra::change_basis(const Mat& p) const {
  if (p.rows() != n_ || p.cols() != n_) fail(Errc::dimension_mismatch, "basis change shape");
  auto pinv = inverse(p);
  if (!pinv) fail(Errc::dimension_mismatch, "basis change matrix is singular");
  std::vector<Elem> cs;
  cs.reserve(n_ * n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Vec bi = p.col(i);
    for (std::size_t j = 0; j < n_; ++j) {
      Vec prod_old = product(bi, p.col(j));
      Vec prod_new = *pinv * prod_old;
      for (std::size_t k = 0; k < n_; ++k) cs.push_back(prod_new[k]);
    }
  }
  return make(n_, tower_, std::move(cs), name_.empty() ? "" : name_ + "'");
}

Algebra Algebra::opposite() const {
  std::vector<Elem> cs;
  cs.reserve(n_ * n_ * n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) cs.push_back(c(j, i, k));
  return make(n_, tower_, std::move(cs), name_.empty() ? "" : name_ + "^op");
}

AxiomReport check_axioms(const Algebra& a) {
  const std::size_t n = a.dim();
  AxiomReport rep;
  for (std::size_t i = 0; i < n && rep.associative; ++i)
    for (std::size_t j = 0; j < n && rep.associative; ++j)
      for (std::size_t k = 0; k < n && rep.associative; ++k) {
        Vec lhs = a.product(a.basis_product(i, j), a.basis_vec(k));
        Vec rhs = a.product(a.basis_vec(i), a.basis_product(j, k));
        if (lhs != rhs) {
          rep.associative = false;
          rep.assoc_witness = {{i, j, k}};
        }
      }
  for (std::size_t i = 0; i < n && rep.commutative; ++i)
    for (std::size_t j = i + 1; j < n && rep.commutative; ++j)
      if (a.basis_product(i, j) != a.basis_product(j, i)) {
        rep.commutative = false;
        rep.comm_witness = {i, j};
      }

  // identity: e*b_i = b_i = b_i*e, a linear system in the coordinates of e
  {
    const Tower& t = a.tower();
    Mat sys(t, 2 * n * n, n);
    std::vector<Elem> rhs;
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) sys.at(row, j) = a.c(j, i, k);  // e * b_i
        rhs.push_back(i == k ? Elem(t, 1) : Elem(t));
        ++row;
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) sys.at(row, j) = a.c(i, j, k);  // b_i * e
        rhs.push_back(i == k ? Elem(t, 1) : Elem(t));
        ++row;
      }
    Mat aug(t, 2 * n * n, n + 1);
    for (std::size_t r = 0; r < 2 * n * n; ++r) {
      for (std::size_t cidx = 0; cidx < n; ++cidx) aug.at(r, cidx) = sys.at(r, cidx);
      aug.at(r, n) = rhs[r];
    }
    auto [red, rk] = rref(aug);
    // consistent iff no pivot in the rhs column
    bool consistent = true;
    for (int r = 0; r < rk; ++r) {
      std::size_t cidx = 0;
      while (cidx <= n && red.at(static_cast<std::size_t>(r), cidx).is_zero()) ++cidx;
      if (cidx == n) consistent = false;
    }
    if (consistent) {
      // particular solution: free variables zero
      Vec e(n, Elem(t));
      for (int r = 0; r < rk; ++r) {
        std::size_t cidx = 0;
        while (cidx < n && red.at(static_cast<std::size_t>(r), cidx).is_zero()) ++cidx;
        if (cidx < n) e[cidx] = red.at(static_cast<std::size_t>(r), n);
      }
      bool verified = true;
      for (std::size_t i = 0; i < n && verified; ++i)
        if (a.product(e, a.basis_vec(i)) != a.basis_vec(i) ||
            a.product(a.basis_vec(i), e) != a.basis_vec(i))
          verified = false;
      if (verified) rep.identity = e;
    }
  }

  Subspace aa = span_of_products(a);
  rep.aa_dim = static_cast<int>(aa.dim());
  rep.aa_full = aa.dim() == n;
  return rep;
}

Subspace span_of_products(const Algebra& a) {
  std::vector<Vec> rows;
  rows.reserve(a.dim() * a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) rows.push_back(a.basis_product(i, j));
  return Subspace::span(a.tower(), a.dim(), rows);
}

MultiPoly determinant_form(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n > 6) fail(Errc::dimension_too_large, "determinant form limited to dimension 6");
  const Tower& t = a.tower();
  // entry (k, j) = sum_i c[j][i][k] xi_i  (column j is b_j * x)
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(t, n)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        if (a.c(j, i, k).is_zero()) continue;
        ExpVec e(n, 0);
        e[i] = 1;
        m[k][j].add_term(e, a.c(j, i, k));
      }
  return det_poly_matrix(m);
}

bool is_right_zero_divisor(const Algebra& a, const Vec& x) {
  return rank(a.right_mult_matrix(x)) < static_cast<int>(a.dim());
}

Subspace left_ideal_closure(const Algebra& a, const Subspace& w) {
  if (w.ambient_dim() != a.dim()) fail(Errc::dimension_mismatch, "closure ambient mismatch");
  Subspace cur = w;
  for (;;) {
    std::vector<Vec> rows = cur.basis();
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (const Vec& v : cur.basis()) rows.push_back(a.product(a.basis_vec(i), v));
    Subspace next = Subspace::span(a.tower(), a.dim(), rows);
    if (next == cur) return cur;
    cur = next;
  }
}

// ---------------------------------------------------------------------------
// Maximal left ideals

namespace {

bool is_scalar_matrix(const Mat& m) {
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && m.at(i, j) != m.at(0, 0)) return false;
      if (i != j && !m.at(i, j).is_zero()) return false;
    }
  return true;
}

bool is_parallel(const Vec& a, const Vec& b) {
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = p + 1; q < a.size(); ++q)
      if (a[p] * b[q] != a[q] * b[p]) return false;
  return true;
}

bool is_left_ideal(const Algebra& alg, const Subspace& w) {
  return left_ideal_closure(alg, w) == w;
}

// Lines spanned by eigenvectors of op inside the 2-dimensional space E.
// Returns nullopt when op acts as a scalar on all of E (every line works).
std::optional<std::vector<Subspace>> eigenlines_within(const Algebra& alg, const Mat& op,
                                                       const Subspace& e2, bool& complete) {
  const Tower& t = alg.tower();
  const Vec u1 = e2.basis()[0], u2 = e2.basis()[1];
  const Vec a = op * u1, b = op * u2;
  // v = s*u1 + u2 (plus the line through u1 alone): op v parallel to v gives
  // quadratics in s from the 2x2 minors
  const std::size_t n = u1.size();
  UniPoly g(t);
  bool all_zero = true;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      Elem c2 = a[p] * u1[q] - a[q] * u1[p];
      Elem c1 = a[p] * u2[q] + b[p] * u1[q] - a[q] * u2[p] - b[q] * u1[p];
      Elem c0 = b[p] * u2[q] - b[q] * u2[p];
      UniPoly m(t, {c0, c1, c2});
      if (m.is_zero()) continue;
      all_zero = false;
      g = g.is_zero() ? m.monic() : gcd(g, m);
    }
  if (all_zero) {
    // every v in E has op v parallel to v
    return std::nullopt;
  }
  std::vector<Subspace> lines;
  if (!g.is_zero() && g.degree() >= 1) {
    RootList rl = tower_roots(g);
    if (!rl.complete) complete = false;
    for (const auto& [s, mult] : rl.roots) {
      Vec v = add(scale(u1, s), u2);
      lines.push_back(Subspace::span(t, n, {v}));
    }
  }
  // the remaining projective point: v = u1
  if (is_parallel(a, u1)) lines.push_back(Subspace::span(t, n, {u1}));
  return lines;
}

}  // namespace

IdealList maximal_left_ideals(const Algebra& a) {
  const std::size_t n = a.dim();
  const Tower& t = a.tower();
  if (n > 3) fail(Errc::dimension_too_large, "ideal enumeration limited to dimension 3");
  AxiomReport ax = check_axioms(a);
  if (!ax.associative)
    fail(Errc::not_associative, "ideal enumeration requires an associative algebra");
  if (!ax.aa_full)
    fail(Errc::requires_aa_full, "ideal enumeration requires the span of products to be full");

  IdealList out;
  MultiPoly d = determinant_form(a);
  if (d.is_zero()) {
    // every element is a right zero divisor and left ideals are not pinned
    // down by the determinant form; there may be infinitely many
    out.complete = false;
    out.bounds_used.push_back(
        "determinant form vanishes identically; enumeration is inconclusive");
    return out;
  }

  // codimension-1 ideals: kernels of linear factors of the determinant form
  FactorReport fr = extract_linear_factors(d);
  if (!fr.complete) out.complete = false;
  std::vector<Subspace> codim1;
  for (const auto& [f, mult] : fr.factors) {
    Subspace w = f.kernel_subspace();
    if (is_left_ideal(a, w)) codim1.push_back(w);
  }
  out.bounds_used.push_back(
      "codimension-1 ideals are kernels of linear factors of the determinant form; at most " +
      std::to_string(n) + " of them");

  std::vector<Subspace> dim1;
  if (n == 3) {
    // dimension-1 ideals are common eigenlines of the left-multiplication
    // operators
    std::vector<Mat> ops;
    for (std::size_t i = 0; i < n; ++i) ops.push_back(a.left_mult_matrix(a.basis_vec(i)));
    int start = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (!is_scalar_matrix(ops[i])) {
        start = static_cast<int>(i);
        break;
      }
    if (start < 0)
      fail(Errc::internal, "all left multiplications scalar but determinant form is nonzero");

    // eigenvalues of the starting operator
    std::vector<std::vector<MultiPoly>> chi(n, std::vector<MultiPoly>(n, MultiPoly(t, 1)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        MultiPoly entry = MultiPoly::constant(t, 1, ops[static_cast<std::size_t>(start)].at(i, j));
        if (i == j) entry = entry - MultiPoly::var(t, 1, 0);
        chi[i][j] = entry;
      }
    RootList eigen = tower_roots(UniPoly::from_multipoly(det_poly_matrix(chi)));
    if (!eigen.complete) out.complete = false;

    std::vector<Subspace> cands;
    for (const auto& [lambda, mult] : eigen.roots) {
      Mat shifted = ops[static_cast<std::size_t>(start)];
      for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) -= lambda;
      Subspace es = kernel(shifted);
      if (es.dim() >= 1 && es.dim() < n) cands.push_back(es);
    }
    // refine against the remaining generators
    for (std::size_t g = 0; g < n; ++g) {
      if (static_cast<int>(g) == start) continue;
      std::vector<Subspace> next;
      for (const Subspace& csp : cands) {
        if (csp.dim() == 1) {
          Vec v = csp.basis()[0];
          if (is_parallel(ops[g] * v, v)) next.push_back(csp);
        } else if (csp.dim() == 2) {
          auto lines = eigenlines_within(a, ops[g], csp, out.complete);
          if (!lines) {
            next.push_back(csp);  // generator is scalar on the plane
          } else {
            for (const Subspace& l : *lines) next.push_back(l);
          }
        }
      }
      cands = std::move(next);
    }
    for (const Subspace& csp : cands) {
      if (csp.dim() != 1) continue;  // surviving planes are covered by codim-1
      if (!is_left_ideal(a, csp)) continue;
      bool inside = false;
      for (const Subspace& w : codim1)
        if (w.contains(csp)) inside = true;
      if (!inside && std::find(dim1.begin(), dim1.end(), csp) == dim1.end()) dim1.push_back(csp);
    }
    out.bounds_used.push_back(
        "dimension-1 ideals are common eigenlines of the left multiplications");
  }

  out.ideals = codim1;
  for (const Subspace& w : dim1) out.ideals.push_back(w);

  if (out.ideals.empty() && out.complete) {
    // no positive-dimensional left ideal exists, so {0} is the unique
    // maximal one (division-algebra-like case)
    out.ideals.push_back(Subspace::zero(t, n));
    out.bounds_used.push_back("no positive-dimensional ideal: {0} is the unique maximal one");
  }

  if (out.complete) {
    std::size_t c1 = 0, small = 0;
    bool has_dim1 = false;
    for (const Subspace& w : out.ideals) {
      if (w.dim() == n - 1) ++c1;
      if (2 * w.dim() < n) ++small;
      if (w.dim() == 1) has_dim1 = true;
    }
    if (c1 > n) fail(Errc::internal, "more codimension-1 ideals than the dimension allows");
    if (small > 1) fail(Errc::internal, "two maximal ideals of dimension below half");
    if (has_dim1 && out.ideals.size() > n + 1)
      fail(Errc::internal, "ideal count exceeds the dimension-1 bound");
    out.bounds_used.push_back("count bounds verified: <= " + std::to_string(n) +
                              " of codimension 1, <= 1 of dimension < " + std::to_string(n) +
                              "/2, <= " + std::to_string(n + 1) + " overall with a line present");
  }
  return out;
}

}  // namespace zda
