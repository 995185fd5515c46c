#include "zda/field.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zda {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_square_free: return "NotSquareFree";
    case Errc::redundant_radicand: return "RedundantRadicand";
    case Errc::tower_too_deep: return "TowerTooDeep";
    case Errc::tower_mismatch: return "TowerMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::negative_radicand: return "NegativeRadicand";
    case Errc::non_square: return "NonSquare";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::non_symmetric: return "NonSymmetric";
    case Errc::arity_mismatch: return "ArityMismatch";
    case Errc::degree_too_high: return "DegreeTooHigh";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::not_homogeneous: return "NotHomogeneous";
    case Errc::wrong_degree: return "WrongDegree";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::requires_aa_full: return "RequiresAAFull";
    case Errc::dimension_too_large: return "DimensionTooLarge";
    case Errc::not_associative: return "NotAssociative";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_basis_name: return "UnknownBasisName";
    case Errc::duplicate_product: return "DuplicateProduct";
    case Errc::coefficient_not_in_tower: return "CoefficientNotInTower";
    case Errc::unknown_name: return "UnknownName";
    case Errc::bad_usage: return "BadUsage";
    case Errc::internal: return "InternalError";
  }
  return "Error";
}

// ---------------------------------------------------------------------------
// Tower

namespace {

// Splits m >= 1 into s^2 * r with r square-free.
std::pair<long, long> square_split(long m) {
  long s = 1, r = 1;
  for (long p = 2; p * p <= m; p == 2 ? p = 3 : p += 2) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int k = 0; k + 1 < e; k += 2) s *= p;
    if (e % 2 == 1) r *= p;
  }
  r *= m;  // remaining prime (or 1)
  return {s, r};
}

bool is_square_free(long d) { return square_split(d).first == 1; }

}  // namespace

Tower Tower::make(const std::vector<long>& radicands) {
  Tower t;
  for (long d : radicands) {
    if (d < 2) fail(Errc::not_square_free, "radicand must be >= 2, got " + std::to_string(d));
    if (!is_square_free(d))
      fail(Errc::not_square_free, "radicand " + std::to_string(d) + " is not square-free");
    if (t.depth() >= kMaxTowerDepth)
      fail(Errc::tower_too_deep,
           "tower depth limited to " + std::to_string(kMaxTowerDepth) + " radicands");
    if (Elem::sqrt_int(t, d).has_value())
      fail(Errc::redundant_radicand,
           "sqrt(" + std::to_string(d) + ") already exists in " + t.str());
    t.rads_.push_back(d);
  }
  return t;
}

Tower Tower::subtower() const {
  Tower t;
  t.rads_.assign(rads_.begin(), rads_.end() - 1);
  return t;
}

std::pair<long, long> Tower::basis_surd(unsigned mask) const {
  long m = 1;
  for (int i = 0; i < depth(); ++i)
    if (mask & (1u << i)) m *= rads_[static_cast<std::size_t>(i)];
  return square_split(m);
}

std::string Tower::str() const {
  if (rads_.empty()) return "Q";
  std::ostringstream os;
  os << "Q(";
  for (std::size_t i = 0; i < rads_.size(); ++i) {
    if (i) os << ", ";
    os << "sqrt(" << rads_[i] << ")";
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Elem basics

Elem::Elem(const Tower& t) : tower_(t), coords_(t.basis_size(), Rat(0)) {}

Elem::Elem(const Tower& t, const Rat& value) : Elem(t) { coords_[0] = value; }

Elem::Elem(const Tower& t, long value) : Elem(t) { coords_[0] = value; }

Elem Elem::surd(const Tower& t, unsigned mask) {
  Elem e(t);
  e.coords_.at(mask) = 1;
  return e;
}

bool Elem::is_zero() const {
  for (const Rat& c : coords_)
    if (c != 0) return false;
  return true;
}

bool Elem::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rat Elem::as_rat() const {
  if (!is_rational()) fail(Errc::internal, "element is not rational: " + str());
  return coords_[0];
}

void Elem::check_same_tower(const Elem& o) const {
  if (tower_ != o.tower_)
    fail(Errc::tower_mismatch, "operands live in " + tower_.str() + " and " + o.tower_.str());
}

Elem Elem::operator-() const {
  Elem r(*this);
  for (Rat& c : r.coords_) c = -c;
  return r;
}

Elem Elem::operator+(const Elem& o) const {
  check_same_tower(o);
  Elem r(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
  return r;
}

Elem Elem::operator-(const Elem& o) const {
  check_same_tower(o);
  Elem r(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= o.coords_[i];
  return r;
}

Elem Elem::operator*(const Elem& o) const {
  check_same_tower(o);
  const std::size_t n = coords_.size();
  Elem r(tower_);
  for (std::size_t i = 0; i < n; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.coords_[j] == 0) continue;
      // sqrt-basis product: common radicands square away.
      unsigned common = static_cast<unsigned>(i & j);
      long factor = 1;
      for (int b = 0; b < tower_.depth(); ++b)
        if (common & (1u << b)) factor *= tower_.radicand(b);
      Rat term = coords_[i] * o.coords_[j];
      if (factor != 1) term *= factor;
      r.coords_[i ^ j] += term;
    }
  }
  return r;
}

Elem Elem::operator*(const Rat& q) const {
  Elem r(*this);
  for (Rat& c : r.coords_) c *= q;
  return r;
}

Elem Elem::operator/(const Rat& q) const {
  if (q == 0) fail(Errc::division_by_zero, "division by zero rational");
  Elem r(*this);
  for (Rat& c : r.coords_) c /= q;
  return r;
}

Elem Elem::conjugate(unsigned mask) const {
  Elem r(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (__builtin_popcount(static_cast<unsigned>(i) & mask) % 2 == 1) r.coords_[i] = -r.coords_[i];
  return r;
}

Rat Elem::norm_q() const {
  Elem p(*this);
  for (unsigned m = 1; m < tower_.basis_size(); ++m) p = p * conjugate(m);
  // The product over the full automorphism group is rational.
  if (!p.is_rational()) fail(Errc::internal, "norm is not rational");
  return p.coords_[0];
}

Elem Elem::inverse() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
  Elem num(tower_, Rat(1));
  for (unsigned m = 1; m < tower_.basis_size(); ++m) num = num * conjugate(m);
  Elem t = *this * num;
  if (!t.is_rational() || t.coords_[0] == 0) fail(Errc::internal, "inverse: bad norm");
  return num / t.coords_[0];
}

Elem Elem::operator/(const Elem& o) const {
  check_same_tower(o);
  if (o.is_zero()) fail(Errc::division_by_zero, "division by zero");
  return *this * o.inverse();
}

std::pair<Elem, Elem> Elem::split_top() const {
  if (tower_.depth() == 0) fail(Errc::internal, "split_top on rationals");
  Tower sub = tower_.subtower();
  Elem lo(sub), hi(sub);
  const std::size_t half = sub.basis_size();
  for (std::size_t i = 0; i < half; ++i) {
    lo.coords_[i] = coords_[i];
    hi.coords_[i] = coords_[i + half];
  }
  return {lo, hi};
}

Elem Elem::join_top(const Tower& t, const Elem& lo, const Elem& hi) {
  Elem r(t);
  const std::size_t half = t.subtower().basis_size();
  for (std::size_t i = 0; i < half; ++i) {
    r.coords_[i] = lo.coords_[i];
    r.coords_[i + half] = hi.coords_[i];
  }
  return r;
}

Elem Elem::lift(const Tower& bigger) const {
  if (bigger.depth() < tower_.depth() ||
      !std::equal(tower_.radicands().begin(), tower_.radicands().end(),
                  bigger.radicands().begin()))
    fail(Errc::tower_mismatch, "cannot lift " + tower_.str() + " into " + bigger.str());
  Elem r(bigger);
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = coords_[i];
  return r;
}

// ---------------------------------------------------------------------------
// Sign

namespace {

// Directed-rounding evaluation: returns -1/+1 when the interval at the given
// precision excludes zero, 0 when inconclusive.
int sign_interval(const Elem& a, mpfr_prec_t prec) {
  mpfr_t lo, hi, t_lo, t_hi, s_lo, s_hi;
  mpfr_inits2(prec, lo, hi, t_lo, t_hi, s_lo, s_hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  const Tower& tw = a.tower();
  for (std::size_t m = 0; m < a.coords().size(); ++m) {
    const Rat& c = a.coord(m);
    if (c == 0) continue;
    auto [s, r] = tw.basis_surd(static_cast<unsigned>(m));
    // s * sqrt(r) >= 0 exactly; c carries the sign.
    if (sgn(c) > 0) {
      mpfr_set_q(t_lo, c.get_mpq_t(), MPFR_RNDD);
      mpfr_set_q(t_hi, c.get_mpq_t(), MPFR_RNDU);
    } else {
      mpfr_set_q(t_lo, c.get_mpq_t(), MPFR_RNDD);
      mpfr_set_q(t_hi, c.get_mpq_t(), MPFR_RNDU);
    }
    mpfr_sqrt_ui(s_lo, static_cast<unsigned long>(r), MPFR_RNDD);
    mpfr_sqrt_ui(s_hi, static_cast<unsigned long>(r), MPFR_RNDU);
    mpfr_mul_si(s_lo, s_lo, s, MPFR_RNDD);
    mpfr_mul_si(s_hi, s_hi, s, MPFR_RNDU);
    // term = c * (s*sqrt(r)), with the second factor in [s_lo, s_hi], >= 0.
    if (sgn(c) > 0) {
      mpfr_mul(t_lo, t_lo, s_lo, MPFR_RNDD);
      mpfr_mul(t_hi, t_hi, s_hi, MPFR_RNDU);
    } else {
      mpfr_mul(t_lo, t_lo, s_hi, MPFR_RNDD);
      mpfr_mul(t_hi, t_hi, s_lo, MPFR_RNDU);
    }
    mpfr_add(lo, lo, t_lo, MPFR_RNDD);
    mpfr_add(hi, hi, t_hi, MPFR_RNDU);
  }
  int out = 0;
  if (mpfr_sgn(lo) > 0)
    out = 1;
  else if (mpfr_sgn(hi) < 0)
    out = -1;
  mpfr_clears(lo, hi, t_lo, t_hi, s_lo, s_hi, static_cast<mpfr_ptr>(nullptr));
  return out;
}

int sign_exact(const Elem& a) {
  if (a.tower().depth() == 0) return sgn(a.rat_part());
  auto [x, y] = a.split_top();
  if (y.is_zero()) return sign_exact(x);
  if (x.is_zero()) return sign_exact(y);
  int sx = sign_exact(x), sy = sign_exact(y);
  if (sx == sy) return sx;
  // Mixed signs: compare x^2 against d*y^2 in the subtower.
  long d = a.tower().radicand(a.tower().depth() - 1);
  Elem diff = x * x - y * y * Rat(d);
  int s2 = sign_exact(diff);
  return sx * s2;
}

}  // namespace

int Elem::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coords_[0]);
  for (mpfr_prec_t prec : {64, 128, 256}) {
    int s = sign_interval(*this, prec);
    if (s != 0) return s;
  }
  return sign_exact(*this);
}

Elem abs_real(const Elem& a) { return a.sign() < 0 ? -a : a; }

// ---------------------------------------------------------------------------
// Square roots

namespace {

// sqrt of a nonnegative rational when it is rational.
std::optional<Rat> rat_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return Rat(0);
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn, rd);
}

}  // namespace

std::optional<Elem> Elem::try_sqrt_impl() const {
  if (tower_.depth() == 0) {
    auto r = rat_sqrt(coords_[0]);
    if (!r) return std::nullopt;
    return Elem(tower_, *r);
  }
  const Tower sub = tower_.subtower();
  const long d = tower_.radicand(tower_.depth() - 1);
  auto [x, y] = split_top();
  if (y.is_zero()) {
    // b in subtower, or b = w*sqrt(d) with w in subtower.
    if (auto b = x.try_sqrt_impl()) return b->lift(tower_);
    Elem xd = x / Rat(d);
    if (auto w = xd.try_sqrt_impl())
      return join_top(tower_, Elem(sub), *w);
    return std::nullopt;
  }
  // b = u + v*sqrt(d): u^2 and d*v^2 are the roots of z^2 - x z + d (y/2)^2.
  Elem disc = x * x - y * y * Rat(d);
  auto s = disc.try_sqrt_impl();
  if (!s) return std::nullopt;
  for (int pick = 0; pick < 2; ++pick) {
    Elem usq = (pick == 0 ? x + *s : x - *s) / Rat(2);
    auto u = usq.try_sqrt_impl();
    if (!u || u->is_zero()) continue;
    Elem v = y / (*u * Rat(2));
    Elem cand = join_top(tower_, *u, v);
    if (cand * cand == *this) {
      if (cand.sign() < 0) cand = -cand;
      return cand;
    }
  }
  return std::nullopt;
}

std::optional<Elem> try_sqrt(const Elem& a) {
  int s = a.sign();
  if (s < 0) fail(Errc::negative_radicand, "try_sqrt of negative element " + a.str());
  if (s == 0) return Elem(a.tower());
  auto r = a.try_sqrt_impl();
  if (r && r->sign() < 0) return -*r;
  return r;
}

std::optional<Elem> Elem::sqrt_int(const Tower& t, long m) {
  if (m < 0) fail(Errc::negative_radicand, "sqrt of negative integer");
  if (m == 0) return Elem(t);
  auto [s, r] = square_split(m);
  if (r == 1) return Elem(t, Rat(s));
  Elem target(t, Rat(r));
  auto root = target.try_sqrt_impl();
  if (!root) return std::nullopt;
  if (root->sign() < 0) *root = -*root;
  return *root * Rat(s);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string rat_str(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::string Elem::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t m = 0; m < coords_.size(); ++m) {
    if (coords_[m] == 0) continue;
    auto [s, r] = tower_.basis_surd(static_cast<unsigned>(m));
    Rat c = coords_[m] * s;
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (r == 1) {
      os << rat_str(mag);
    } else {
      if (mag != 1) os << rat_str(mag) << "*";
      os << "sqrt(" << r << ")";
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string to_string(const Elem& e) { return e.str(); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct ElemParser {
  const std::string& s;
  const Tower& tower;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) const {
    throw Error(Errc::parse_error, msg + " at offset " + std::to_string(pos), 1,
                static_cast<int>(pos) + 1);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  long parse_long() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) err("expected integer");
    return std::stol(s.substr(start, pos - start));
  }

  Elem parse_atom() {
    skip_ws();
    if (eat('(')) {
      Elem e = parse_expr();
      if (!eat(')')) err("expected ')'");
      return e;
    }
    if (s.compare(pos, 5, "sqrt(") == 0) {
      pos += 5;
      long m = parse_long();
      if (!eat(')')) err("expected ')' after sqrt radicand");
      auto r = Elem::sqrt_int(tower, m);
      if (!r)
        throw Error(Errc::coefficient_not_in_tower,
                    "sqrt(" + std::to_string(m) + ") does not exist in " + tower.str());
      return *r;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      long num = parse_long();
      if (pos + 1 < s.size() && s[pos] == '/' &&
          std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
        ++pos;
        long den = parse_long();
        if (den == 0) err("zero denominator");
        Rat q(num, den);
        q.canonicalize();
        return Elem(tower, q);
      }
      return Elem(tower, Rat(num));
    }
    err("expected rational, sqrt(...) or '('");
  }

  Elem parse_factor() {
    skip_ws();
    if (eat('-')) return -parse_factor();
    if (eat('+')) return parse_factor();
    return parse_atom();
  }

  Elem parse_term() {
    Elem e = parse_factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        e = e * parse_factor();
      } else if (peek() == '/') {
        // disambiguate: '/' directly after a factor is division
        ++pos;
        Elem d = parse_factor();
        if (d.is_zero()) err("division by zero");
        e = e / d;
      } else if (peek() == 's' || peek() == '(') {
        // implicit multiplication: `1/3 sqrt(5)` or `2 (1+sqrt(2))`
        e = e * parse_factor();
      } else {
        return e;
      }
    }
  }

  Elem parse_expr() {
    Elem e = parse_term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos;
        e = e + parse_term();
      } else if (c == '-') {
        ++pos;
        e = e - parse_term();
      } else {
        return e;
      }
    }
  }

  Elem run() {
    Elem e = parse_expr();
    skip_ws();
    if (pos != s.size()) err("trailing input");
    return e;
  }
};

}  // namespace

Elem parse_element(const std::string& text, const Tower& t) {
  ElemParser p{text, t};
  return p.run();
}

}  // namespace zda
