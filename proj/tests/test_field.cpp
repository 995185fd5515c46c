#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <mpfr.h>

#include <random>

#include "zda/field.hpp"

using namespace zda;

namespace {

Rat rnd_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Elem rnd_elem(std::mt19937_64& rng, const Tower& t) {
  Elem e(t);
  Elem acc(t);
  for (unsigned m = 0; m < t.basis_size(); ++m) acc += Elem::surd(t, m) * rnd_rat(rng);
  return acc;
}

}  // namespace

TEST_CASE("tower construction") {
  Tower q = Tower::make({});
  CHECK(q.depth() == 0);
  CHECK(q.basis_size() == 1);
  CHECK(q.str() == "Q");

  Tower k = Tower::make({2, 3});
  CHECK(k.depth() == 2);
  CHECK(k.basis_size() == 4);
  // basis {1, sqrt2, sqrt3, sqrt6}
  CHECK(k.basis_surd(0) == std::pair<long, long>{1, 1});
  CHECK(k.basis_surd(1) == std::pair<long, long>{1, 2});
  CHECK(k.basis_surd(2) == std::pair<long, long>{1, 3});
  CHECK(k.basis_surd(3) == std::pair<long, long>{1, 6});

  CHECK_THROWS_AS(Tower::make({4}), Error);
  try {
    Tower::make({4});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_square_free);
  }
  // sqrt(6) = sqrt(2)*sqrt(3) already exists
  try {
    Tower::make({2, 3, 6});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::redundant_radicand);
  }
  // depth cap
  CHECK_THROWS_AS(Tower::make({2, 3, 5, 7, 11}), Error);
  // radicands need not be coprime
  Tower k26 = Tower::make({2, 6});
  CHECK(k26.depth() == 2);
  // sqrt(2)*sqrt(6) = 2*sqrt(3)
  CHECK(k26.basis_surd(3) == std::pair<long, long>{2, 3});
}

TEST_CASE("basic arithmetic") {
  Tower k = Tower::make({2, 3});
  Elem s2 = Elem::surd(k, 1), s3 = Elem::surd(k, 2), s6 = Elem::surd(k, 3);
  CHECK(s2 * s3 == s6);
  CHECK(s2 * s2 == Elem(k, 2));
  CHECK((s2 / Rat(8)) * (s2 / Rat(8)) == Elem(k, Rat(1, 32)));

  // 1 / (1 + sqrt2) = -1 + sqrt2
  Elem one(k, 1);
  CHECK(one / (one + s2) == s2 - one);

  // tower mismatch
  Tower q;
  CHECK_THROWS_AS(Elem(q, 1) + Elem(k, 1), Error);
  CHECK_THROWS_AS(one / Elem(k), Error);
}

TEST_CASE("sign") {
  Tower k = Tower::make({2, 3});
  Elem s2 = Elem::surd(k, 1), s6 = Elem::surd(k, 3);
  CHECK(Elem(k).sign() == 0);
  CHECK((s6 - Elem(k, 2)).sign() == 1);   // sqrt6 > 2
  CHECK((Elem(k, 1) - s2).sign() == -1);  // sqrt2 > 1
  // close call: 7/5 vs sqrt(2) (7/5 = 1.4 < 1.41421...)
  CHECK((Elem(k, Rat(7, 5)) - s2).sign() == -1);
  CHECK((Elem(k, Rat(141421356, 100000000)) - s2).sign() == -1);
  // sqrt2*sqrt3 - sqrt6 == 0
  Elem z = s2 * Elem::surd(k, 2) - s6;
  CHECK(z.sign() == 0);
}

TEST_CASE("sign consistency properties") {
  std::mt19937_64 rng(7);
  Tower k = Tower::make({2, 3});
  for (int it = 0; it < 300; ++it) {
    Elem a = rnd_elem(rng, k), b = rnd_elem(rng, k);
    CHECK((a * b).sign() == a.sign() * b.sign());
    CHECK((a * a).sign() >= 0);
  }
}

TEST_CASE("sign agrees with high-precision interval evaluation") {
  std::mt19937_64 rng(11);
  Tower k = Tower::make({2, 3});
  mpfr_t lo, hi, t, s;
  mpfr_inits2(512, lo, hi, t, s, static_cast<mpfr_ptr>(nullptr));
  int checked = 0;
  for (int it = 0; it < 1000; ++it) {
    Elem a = rnd_elem(rng, k);
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
    for (unsigned m = 0; m < k.basis_size(); ++m) {
      const Rat& c = a.coord(m);
      if (c == 0) continue;
      auto [sq, r] = k.basis_surd(m);
      mpfr_sqrt_ui(s, static_cast<unsigned long>(r), MPFR_RNDD);
      mpfr_mul_si(s, s, sq, MPFR_RNDD);
      mpfr_set_q(t, c.get_mpq_t(), MPFR_RNDD);
      mpfr_mul(t, t, s, c > 0 ? MPFR_RNDD : MPFR_RNDU);
      mpfr_add(lo, lo, t, MPFR_RNDD);
      mpfr_sqrt_ui(s, static_cast<unsigned long>(r), MPFR_RNDU);
      mpfr_mul_si(s, s, sq, MPFR_RNDU);
      mpfr_set_q(t, c.get_mpq_t(), MPFR_RNDU);
      mpfr_mul(t, t, s, c > 0 ? MPFR_RNDU : MPFR_RNDD);
      mpfr_add(hi, hi, t, MPFR_RNDU);
    }
    if (mpfr_sgn(lo) > 0) {
      CHECK(a.sign() == 1);
      ++checked;
    } else if (mpfr_sgn(hi) < 0) {
      CHECK(a.sign() == -1);
      ++checked;
    } else {
      // interval straddles zero at 512 bits: element should be exactly zero
      CHECK(a.sign() == 0);
    }
  }
  CHECK(checked > 900);
  mpfr_clears(lo, hi, t, s, static_cast<mpfr_ptr>(nullptr));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(3);
  Tower k = Tower::make({2, 5});
  for (int it = 0; it < 200; ++it) {
    Elem a = rnd_elem(rng, k), b = rnd_elem(rng, k), c = rnd_elem(rng, k);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Elem(k, 1));
  }
}

TEST_CASE("try_sqrt") {
  Tower q;
  CHECK(*try_sqrt(Elem(q, Rat(9, 4))) == Elem(q, Rat(3, 2)));
  CHECK(!try_sqrt(Elem(q, 2)).has_value());

  Tower k = Tower::make({2, 3});
  CHECK(*try_sqrt(Elem(k, 6)) == Elem::surd(k, 3));
  CHECK(*try_sqrt(Elem(k, 2)) == Elem::surd(k, 1));
  CHECK(*try_sqrt(Elem(k, 8)) == Elem::surd(k, 1) * Rat(2));
  // (1 + sqrt2)^2 = 3 + 2 sqrt2
  Elem a = Elem(k, 3) + Elem::surd(k, 1) * Rat(2);
  CHECK(*try_sqrt(a) == Elem(k, 1) + Elem::surd(k, 1));
  // 5 has no root in Q(sqrt2, sqrt3)
  CHECK(!try_sqrt(Elem(k, 5)).has_value());
  CHECK_THROWS_AS(try_sqrt(Elem(k, -1)), Error);
}

TEST_CASE("try_sqrt soundness on random squares") {
  std::mt19937_64 rng(17);
  Tower k = Tower::make({2, 3});
  for (int it = 0; it < 200; ++it) {
    Elem a = rnd_elem(rng, k);
    Elem sq = a * a;
    auto r = try_sqrt(sq);
    REQUIRE(r.has_value());
    CHECK(*r * *r == sq);
    CHECK(r->sign() >= 0);
  }
}

TEST_CASE("printing and parsing") {
  Tower k = Tower::make({2, 3});
  Elem e = Elem(k, Rat(1, 2)) - Elem::surd(k, 3) * Rat(3, 8);
  CHECK(e.str() == "1/2 - 3/8*sqrt(6)");
  CHECK(parse_element(e.str(), k) == e);
  CHECK(Elem(k).str() == "0");
  CHECK((-Elem(k, Rat(5, 3))).str() == "-5/3");

  CHECK(parse_element("sqrt(2)*sqrt(3)", k) == Elem::surd(k, 3));
  CHECK(parse_element("1/3 sqrt(2)", k) == Elem::surd(k, 1) / Rat(3));
  CHECK(parse_element("(1+sqrt(2))*(sqrt(2)-1)", k) == Elem(k, 1));
  CHECK(parse_element("sqrt(8)", k) == Elem::surd(k, 1) * Rat(2));
  CHECK(parse_element("1/(1+sqrt(2))", k) == Elem::surd(k, 1) - Elem(k, 1));
  CHECK_THROWS_AS(parse_element("sqrt(5)", k), Error);
  CHECK_THROWS_AS(parse_element("1 +", k), Error);
  CHECK_THROWS_AS(parse_element("3/0", k), Error);

  // canonical printing round-trips on random elements
  std::mt19937_64 rng(23);
  for (int it = 0; it < 100; ++it) {
    Elem a = rnd_elem(rng, k);
    CHECK(parse_element(a.str(), k) == a);
  }
}

TEST_CASE("conjugates and norms") {
  Tower k = Tower::make({2, 3});
  Elem s2 = Elem::surd(k, 1), s3 = Elem::surd(k, 2);
  Elem a = Elem(k, 1) + s2 * Rat(2) + s3 * Rat(3);
  CHECK(a.conjugate(1) == Elem(k, 1) - s2 * Rat(2) + s3 * Rat(3));
  CHECK(a.conjugate(2) == Elem(k, 1) + s2 * Rat(2) - s3 * Rat(3));
  CHECK(a.conjugate(3) == Elem(k, 1) - s2 * Rat(2) - s3 * Rat(3));
  // norm of sqrt2: sqrt2 * -sqrt2 * sqrt2 * -sqrt2 = 4
  CHECK(s2.norm_q() == 4);
  std::mt19937_64 rng(29);
  for (int it = 0; it < 50; ++it) {
    Elem x = rnd_elem(rng, k), y = rnd_elem(rng, k);
    CHECK(x.norm_q() * y.norm_q() == (x * y).norm_q());
  }
}

TEST_CASE("split and join") {
  Tower k = Tower::make({2, 3});
  std::mt19937_64 rng(31);
  for (int it = 0; it < 50; ++it) {
    Elem a = rnd_elem(rng, k);
    auto [lo, hi] = a.split_top();
    CHECK(Elem::join_top(k, lo, hi) == a);
    // a == lo + hi*sqrt(3)
    CHECK(lo.lift(k) + hi.lift(k) * Elem::surd(k, 2) == a);
  }
}
