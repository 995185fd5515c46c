#include "zda/catalog.hpp"

namespace zda {

namespace {

Algebra build_paper_example() {
  Tower k = Tower::make({2, 3});
  const std::size_t n = 3;
  Elem s2 = Elem::surd(k, 1), s3 = Elem::surd(k, 2), s6 = Elem::surd(k, 3);
  std::vector<Vec> prod(n * n, zero_vec(k, n));
  auto set = [&](std::size_t i, std::size_t j, Vec v) { prod[i * n + j] = std::move(v); };
  // first basis vector is the identity
  for (std::size_t j = 0; j < n; ++j) {
    Vec e = zero_vec(k, n);
    e[j] = Elem(k, 1);
    set(0, j, e);
    set(j, 0, e);
  }
  set(1, 1, {Elem(k, Rat(-1, 2)), s2 / Rat(8), s6 * Rat(3, 8)});
  set(1, 2, {-s3 / Rat(2), -s6 / Rat(8), -s2 / Rat(8)});
  set(2, 1, {-s3 / Rat(2), -s6 / Rat(8), -s2 / Rat(8)});
  set(2, 2, {Elem(k, Rat(1, 2)), -s2 * Rat(5, 8), s6 / Rat(8)});
  std::vector<Elem> cs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t kk = 0; kk < n; ++kk) cs.push_back(prod[i * n + j][kk]);
  Algebra a = Algebra::make(n, k, std::move(cs), "paper_example");
  a.set_basis_names({"a", "b", "g"});
  return a;
}

Algebra build_m2_real() {
  Tower q;
  const std::size_t n = 4;
  // basis E11, E12, E21, E22; E_{ab} E_{cd} = [b==c] E_{ad}
  auto row = [](std::size_t idx) { return idx / 2 + 1; };
  auto col = [](std::size_t idx) { return idx % 2 + 1; };
  std::vector<Elem> cs(n * n * n, Elem(q));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (col(i) != row(j)) continue;
      std::size_t target = (row(i) - 1) * 2 + (col(j) - 1);
      cs[(i * n + j) * n + target] = Elem(q, 1);
    }
  Algebra a = Algebra::make(n, q, std::move(cs), "m2_real");
  a.set_basis_names({"e11", "e12", "e21", "e22"});
  return a;
}

Algebra build_poly_x3() {
  Tower q;
  const std::size_t n = 3;  // basis 1, X, X^2 modulo X^3
  std::vector<Elem> cs(n * n * n, Elem(q));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) cs[(i * n + j) * n + (i + j)] = Elem(q, 1);
  Algebra a = Algebra::make(n, q, std::move(cs), "poly_x3");
  a.set_basis_names({"one", "x", "x2"});
  return a;
}

Algebra build_split_fff() {
  Tower q;
  const std::size_t n = 3;
  std::vector<Elem> cs(n * n * n, Elem(q));
  for (std::size_t i = 0; i < n; ++i) cs[(i * n + i) * n + i] = Elem(q, 1);
  Algebra a = Algebra::make(n, q, std::move(cs), "split_fff");
  return a;
}

Algebra build_zero_mult() {
  Tower q;
  const std::size_t n = 3;
  return Algebra::make(n, q, std::vector<Elem>(n * n * n, Elem(q)), "zero_mult");
}

Algebra build_lambda_algebra() {
  Tower q;
  const std::size_t n = 3;  // x*y = lambda(x)*y with lambda = first coordinate
  std::vector<Elem> cs(n * n * n, Elem(q));
  for (std::size_t j = 0; j < n; ++j) cs[(0 * n + j) * n + j] = Elem(q, 1);
  return Algebra::make(n, q, std::move(cs), "lambda_algebra");
}

Algebra build_quaternion_q() {
  Tower q;
  const std::size_t n = 4;  // basis e, i, j, k
  std::vector<Elem> cs(n * n * n, Elem(q));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
    cs[(i * n + j) * n + k] = Elem(q, v);
  };
  for (std::size_t j = 0; j < n; ++j) {
    set(0, j, j, 1);
    set(j, 0, j, 1);
  }
  set(1, 1, 0, -1);
  set(2, 2, 0, -1);
  set(3, 3, 0, -1);
  set(1, 2, 3, 1);
  set(2, 1, 3, -1);
  set(2, 3, 1, 1);
  set(3, 2, 1, -1);
  set(3, 1, 2, 1);
  set(1, 3, 2, -1);
  Algebra a = Algebra::make(n, q, std::move(cs), "quaternion_q");
  a.set_basis_names({"e", "i", "j", "k"});
  return a;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  cat.push_back({"paper_example",
                 "3-dim commutative algebra over Q(sqrt2, sqrt3); zero divisors form a plane "
                 "and a line",
                 build_paper_example(), "tame", true, {1, 2}, "yes"});
  cat.push_back({"m2_real",
                 "real 2x2 matrices; zero divisors form a determinantal cone, not tame",
                 build_m2_real(), "not tame", true, {}, "no"});
  cat.push_back({"poly_x3", "truncated polynomials F[X]/(X^3); one maximal left ideal",
                 build_poly_x3(), "tame", true, {2}, "yes"});
  cat.push_back({"split_fff", "split product F x F x F; three coordinate hyperplanes",
                 build_split_fff(), "tame", true, {2, 2, 2}, "yes"});
  cat.push_back({"zero_mult", "zero multiplication; products span {0}, every element divides zero",
                 build_zero_mult(), "tame", false, {}, "undetermined"});
  cat.push_back({"lambda_algebra",
                 "x*y = lambda(x) y for the first-coordinate functional; products are full but "
                 "the determinant form vanishes",
                 build_lambda_algebra(), "tame", false, {}, "undetermined"});
  cat.push_back({"quaternion_q",
                 "rational quaternions; a division algebra whose determinant form is a "
                 "definite square",
                 build_quaternion_q(), "tame", true, {0}, "no"});
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace zda
