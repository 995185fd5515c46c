#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zda/factor.hpp"

using namespace zda;

namespace {

Rat rnd_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

MultiPoly example_cubic(const Tower& k) {
  Elem s2 = Elem::surd(k, 1), s3 = Elem::surd(k, 2), s6 = Elem::surd(k, 3);
  MultiPoly p(k, 3);
  p.set_term({0, 0, 3}, s6 * Rat(6));
  p.set_term({0, 1, 2}, s2 * Rat(6));
  p.set_term({1, 0, 2}, Elem(k, -12));
  p.set_term({0, 2, 1}, s6 * Rat(6));
  p.set_term({1, 1, 1}, s3 * Rat(24));
  p.set_term({0, 3, 0}, s2 * Rat(-10));
  p.set_term({1, 2, 0}, Elem(k, 12));
  p.set_term({3, 0, 0}, Elem(k, 16));
  return p;
}

// residual (2a - sqrt2 b - sqrt6 g)^2 + (2a + 2 sqrt2 b)^2
MultiPoly example_residual(const Tower& k) {
  Elem s2 = Elem::surd(k, 1), s6 = Elem::surd(k, 3);
  MultiPoly l1(k, 3), l2(k, 3);
  l1.set_term({1, 0, 0}, Elem(k, 2));
  l1.set_term({0, 1, 0}, -s2);
  l1.set_term({0, 0, 1}, -s6);
  l2.set_term({1, 0, 0}, Elem(k, 2));
  l2.set_term({0, 1, 0}, s2 * Rat(2));
  return l1 * l1 + l2 * l2;
}

}  // namespace

TEST_CASE("displayed factorization identity") {
  // (sqrt6 g + 2a - sqrt2 b) * residual == the displayed cubic, exactly
  Tower k = Tower::make({2, 3});
  Elem s2 = Elem::surd(k, 1), s6 = Elem::surd(k, 3);
  MultiPoly f(k, 3);
  f.set_term({1, 0, 0}, Elem(k, 2));
  f.set_term({0, 1, 0}, -s2);
  f.set_term({0, 0, 1}, s6);
  CHECK(f * example_residual(k) == example_cubic(k));
}

TEST_CASE("linear_factors: coordinate product") {
  Tower q;
  MultiPoly p = MultiPoly::var(q, 3, 0) * MultiPoly::var(q, 3, 1) * MultiPoly::var(q, 3, 2);
  FactorReport r = linear_factors(p);
  CHECK(r.complete);
  CHECK(r.factors.size() == 3);
  CHECK(r.factor_degree() == 3);
  CHECK(r.residual == MultiPoly::constant(q, 3, Elem(q, 1)));
}

TEST_CASE("linear_factors: multiplicities") {
  Tower q;
  MultiPoly x = MultiPoly::var(q, 3, 0), y = MultiPoly::var(q, 3, 1), z = MultiPoly::var(q, 3, 2);
  MultiPoly p = (x + y) * (x + y) * z;
  FactorReport r = linear_factors(p);
  CHECK(r.complete);
  REQUIRE(r.factors.size() == 2);
  int mults = 0;
  for (const auto& [f, m] : r.factors) {
    if (f.poly() == x.substitute(0, x) + y)  // x + y
      CHECK(m == 2);
    mults += m;
  }
  CHECK(mults == 3);
  CHECK(r.residual.total_degree() == 0);
}

TEST_CASE("linear_factors: the example cubic") {
  Tower k = Tower::make({2, 3});
  Elem s2 = Elem::surd(k, 1), s6 = Elem::surd(k, 3);
  MultiPoly cubic = example_cubic(k);
  FactorReport r = linear_factors(cubic);
  CHECK(r.complete);
  REQUIRE(r.factors.size() == 1);
  CHECK(r.factors[0].second == 1);
  // normalized plane form: a - (sqrt2/2) b + (sqrt6/2) g
  LinearForm expect(k, {Elem(k, 2), -s2, s6});
  CHECK(r.factors[0].first == expect);
  CHECK(proportional(r.residual, example_residual(k)));
}

TEST_CASE("linear_factors: errors") {
  Tower q;
  MultiPoly x = MultiPoly::var(q, 2, 0), y = MultiPoly::var(q, 2, 1);
  CHECK_THROWS_AS(linear_factors(x * x + y), Error);          // not homogeneous
  CHECK_THROWS_AS(linear_factors(MultiPoly(q, 2)), Error);    // zero
  MultiPoly big(q, 2);
  big.set_term({5, 0}, Elem(q, 1));
  CHECK_THROWS_AS(linear_factors(big), Error);                // degree > 4
  CHECK_THROWS_AS(linear_factors(MultiPoly::var(q, 4, 0)), Error);  // 4 vars
}

TEST_CASE("random products of linear forms are fully recovered") {
  std::mt19937_64 rng(51);
  Tower q;
  for (int it = 0; it < 40; ++it) {
    std::uniform_int_distribution<int> nf(2, 3);
    int n = nf(rng);
    MultiPoly p = MultiPoly::constant(q, 3, Elem(q, 1));
    for (int i = 0; i < n; ++i) {
      Vec c{Elem(q, rnd_rat(rng)), Elem(q, rnd_rat(rng)), Elem(q, rnd_rat(rng))};
      if (is_zero_vec(c)) c[0] = Elem(q, 1);
      MultiPoly f(q, 3);
      for (std::size_t v = 0; v < 3; ++v) {
        ExpVec e(3, 0);
        e[v] = 1;
        f.set_term(e, c[v]);
      }
      p = p * f;
    }
    FactorReport r = linear_factors(p);
    CHECK(r.complete);
    CHECK(r.factor_degree() == n);
    CHECK(r.residual.total_degree() == 0);
  }
}

TEST_CASE("perfect square core") {
  Tower q;
  // (ad - bc)^2
  MultiPoly a = MultiPoly::var(q, 4, 0), b = MultiPoly::var(q, 4, 1);
  MultiPoly c = MultiPoly::var(q, 4, 2), d = MultiPoly::var(q, 4, 3);
  MultiPoly det2 = a * d - b * c;
  auto core = perfect_square_core(det2 * det2);
  REQUIRE(core.has_value());
  CHECK(proportional(*core, det2));

  auto core2 = perfect_square_core(det2 * det2 * Elem(q, Rat(-3, 7)));
  REQUIRE(core2.has_value());
  CHECK(proportional(*core2, det2));

  CHECK(!perfect_square_core(det2).has_value());            // odd structure
  CHECK(!perfect_square_core(a * d * d * d).has_value());   // not a square
  // quaternion norm squared
  MultiPoly nq = a * a + b * b + c * c + d * d;
  auto core3 = perfect_square_core(nq * nq);
  REQUIRE(core3.has_value());
  CHECK(proportional(*core3, nq));
}

TEST_CASE("quadratic_split: spec examples") {
  Tower q;
  // y1^2 + y2^2 in 3 vars: splits over closure, zero set the line y1=y2=0
  MultiPoly y1 = MultiPoly::var(q, 3, 0), y2 = MultiPoly::var(q, 3, 1);
  QuadSplit s = quadratic_split(y1 * y1 + y2 * y2);
  CHECK(s.kind == QuadKind::splits_over_closure);
  CHECK(s.rank == 2);
  CHECK(s.splits_over_closure());
  CHECK(s.zero_set_is_kernel());
  CHECK(s.gram_kernel == Subspace::span(q, 3, {{Elem(q), Elem(q), Elem(q, 1)}}));

  // y1^2 - y2^2: splits over the tower as (y1-y2)(y1+y2)
  QuadSplit s2 = quadratic_split(y1 * y1 - y2 * y2);
  CHECK(s2.kind == QuadKind::splits_over_tower);
  REQUIRE(s2.forms.has_value());
  MultiPoly prod = s2.forms->first.poly() * s2.forms->second.poly();
  CHECK(proportional(prod, y1 * y1 - y2 * y2));

  // ad - bc: irreducible, indefinite, signature (2,2)
  MultiPoly a = MultiPoly::var(q, 4, 0), b = MultiPoly::var(q, 4, 1);
  MultiPoly c = MultiPoly::var(q, 4, 2), d = MultiPoly::var(q, 4, 3);
  QuadSplit s3 = quadratic_split(a * d - b * c);
  CHECK(s3.kind == QuadKind::irreducible_indefinite);
  CHECK(s3.rank == 4);
  CHECK(s3.positives == 2);
  CHECK(s3.negatives == 2);
  CHECK(!s3.splits_over_closure());

  // errors
  CHECK_THROWS_AS(quadratic_split(a * d * d), Error);
  CHECK_THROWS_AS(quadratic_split(MultiPoly(q, 2)), Error);
}

TEST_CASE("quadratic_split: tower-dependent splitting") {
  // y1^2 - 2 y2^2: irrational split over Q, rational over Q(sqrt2)
  Tower q;
  MultiPoly y1 = MultiPoly::var(q, 3, 0), y2 = MultiPoly::var(q, 3, 1);
  QuadSplit s = quadratic_split(y1 * y1 - y2 * y2 * Elem(q, 2));
  CHECK(s.kind == QuadKind::splits_over_closure);
  CHECK(s.zero_set_is_kernel());

  Tower k = Tower::make({2});
  MultiPoly z1 = MultiPoly::var(k, 3, 0), z2 = MultiPoly::var(k, 3, 1);
  QuadSplit s2 = quadratic_split(z1 * z1 - z2 * z2 * Elem(k, 2));
  CHECK(s2.kind == QuadKind::splits_over_tower);
  REQUIRE(s2.forms.has_value());
}

TEST_CASE("quadratic_split: example residual is rank-2 definite with line kernel") {
  Tower k = Tower::make({2, 3});
  Elem s2 = Elem::surd(k, 1), s6 = Elem::surd(k, 3);
  QuadSplit s = quadratic_split(example_residual(k));
  CHECK(s.kind == QuadKind::splits_over_closure);
  CHECK(s.rank == 2);
  CHECK((s.positives == 2 || s.negatives == 2));
  Subspace line = Subspace::span(k, 3, {{Elem(k, 2), -s2, s6}});
  CHECK(s.gram_kernel == line);
}

TEST_CASE("quadratic_split invariant under change of variables") {
  std::mt19937_64 rng(53);
  Tower q;
  for (int it = 0; it < 20; ++it) {
    // random symmetric gram -> quadratic, compare with congruent version
    Mat g(q, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) {
        Elem v(q, rnd_rat(rng));
        g.at(i, j) = v;
        g.at(j, i) = v;
      }
    auto to_poly = [&](const Mat& m) {
      MultiPoly p(q, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          ExpVec e(3, 0);
          ++e[i];
          ++e[j];
          p.add_term(e, m.at(i, j));
        }
      return p;
    };
    MultiPoly p = to_poly(g);
    if (p.is_zero()) continue;
    Mat s(q, 3, 3);
    do {
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s.at(i, j) = Elem(q, rnd_rat(rng));
    } while (det(s).is_zero());
    MultiPoly p2 = to_poly(s.transpose() * g * s);
    QuadSplit a = quadratic_split(p), b = quadratic_split(p2);
    CHECK(a.rank == b.rank);
    CHECK(a.positives == b.positives);
    CHECK(a.negatives == b.negatives);
    CHECK(a.splits_over_closure() == b.splits_over_closure());
  }
}
