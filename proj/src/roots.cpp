#include "zda/roots.hpp"

#include <algorithm>
#include <map>

namespace zda {

namespace {

// ---------------------------------------------------------------------------
// Rational intervals

struct IvalQ {
  Rat lo, hi;

  IvalQ operator+(const IvalQ& o) const { return {lo + o.lo, hi + o.hi}; }
  IvalQ operator-(const IvalQ& o) const { return {lo - o.hi, hi - o.lo}; }
};

// Division by an interval known to be strictly positive.
IvalQ div_pos(const IvalQ& x, const IvalQ& d) {
  Rat a = x.lo / d.lo, b = x.lo / d.hi, c = x.hi / d.lo, e = x.hi / d.hi;
  return {std::min(std::min(a, b), std::min(c, e)), std::max(std::max(a, b), std::max(c, e))};
}

// Interval for s*sqrt(r) with ~bits of precision, endpoints exact dyadics.
IvalQ surd_interval(long s, long r, unsigned bits) {
  mpz_class scaled = mpz_class(r) << (2 * bits);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class den = mpz_class(1) << bits;
  Rat lo(root * s, den), hi((root + 1) * s, den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// Simplest rational in an interval (Stern-Brocot descent)

Rat simplest_pos(const Rat& lo, const Rat& hi) {
  mpz_class fl = lo.get_num() / lo.get_den();  // floor for positive lo
  Rat flq(fl);
  if (flq == lo) return lo;
  if (hi >= flq + 1) return Rat(fl + 1);
  Rat inner = simplest_pos(1 / (hi - flq), 1 / (lo - flq));
  return flq + 1 / inner;
}

}  // namespace

Rat simplest_rational(const Rat& lo, const Rat& hi) {
  if (lo > hi) fail(Errc::internal, "simplest_rational: empty interval");
  if (lo <= 0 && 0 <= hi) return Rat(0);
  if (hi < 0) return -simplest_pos(-hi, -lo);
  return simplest_pos(lo, hi);
}

namespace {

// ---------------------------------------------------------------------------
// Rational-root tier

// Trial-division factorization. Returns false if a composite cofactor
// survives the bound (divisor enumeration would then be incomplete).
bool factorize(mpz_class n, std::map<mpz_class, int>& out) {
  if (n < 0) n = -n;
  if (n == 0) return true;
  for (mpz_class p = 2; p * p <= n && p < 1000000; p == 2 ? p = 3 : p += 2) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) {
      out[n] += 1;  // composite leftover: divisors below are incomplete
      return false;
    }
    ++out[n];
  }
  return true;
}

bool divisors_of(const mpz_class& n, std::vector<mpz_class>& out, std::size_t cap) {
  std::map<mpz_class, int> f;
  bool ok = factorize(n, f);
  out = {1};
  for (const auto& [p, e] : f) {
    std::size_t sz = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) {
        out.push_back(out[i] * pk);
        if (out.size() > cap) return false;
      }
    }
  }
  return ok;
}

// Distinct rational roots of p (nonzero, p(0) != 0 assumed upstream).
// Returns completeness of the search.
bool rational_roots(const UniPoly& p, std::vector<Rat>& out) {
  const Tower q;
  // common rational roots of all coordinate polynomials = roots of their gcd
  UniPoly g(q);
  const std::size_t nb = p.tower().basis_size();
  for (std::size_t m = 0; m < nb; ++m) {
    std::vector<Elem> cs;
    cs.reserve(p.coeffs().size());
    for (const Elem& c : p.coeffs()) cs.emplace_back(q, c.coord(m));
    UniPoly cm(q, std::move(cs));
    if (cm.is_zero()) continue;
    g = g.is_zero() ? cm.monic() : gcd(g, cm);
    if (g.degree() == 0) return true;
  }
  if (g.is_zero() || g.degree() == 0) return true;
  // primitive integerization
  mpz_class den_lcm = 1;
  for (const Elem& c : g.coeffs()) {
    mpz_class d = c.rat_part().get_den();
    mpz_class gq;
    mpz_gcd(gq.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / gq * d;
  }
  std::vector<mpz_class> zc;
  for (const Elem& c : g.coeffs()) zc.push_back(mpz_class(c.rat_part() * Rat(den_lcm)));
  std::vector<mpz_class> d0, dn;
  bool ok = divisors_of(zc.front(), d0, 4096);
  ok = divisors_of(zc.back(), dn, 4096) && ok;
  if (d0.size() * dn.size() > 200000) ok = false;
  for (const mpz_class& a : d0) {
    for (const mpz_class& b : dn) {
      for (int s = 0; s < 2; ++s) {
        Rat cand(s ? -a : a, b);
        cand.canonicalize();
        if (g.evaluate(cand).is_zero() &&
            std::find(out.begin(), out.end(), cand) == out.end())
          out.push_back(cand);
      }
      if (d0.size() * dn.size() > 200000) return false;
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// Sturm isolation

Rat rat_upper_abs(const Elem& e) {
  Rat bound(0);
  const Tower& t = e.tower();
  for (std::size_t m = 0; m < e.coords().size(); ++m) {
    const Rat& c = e.coord(m);
    if (c == 0) continue;
    auto [s, r] = t.basis_surd(static_cast<unsigned>(m));
    mpz_class root;
    mpz_class rr(r);
    mpz_sqrt(root.get_mpz_t(), rr.get_mpz_t());
    bound += abs(c) * Rat((root + 1) * s);
  }
  return bound;
}

std::vector<UniPoly> sturm_chain(const UniPoly& sf) {
  // normalization must preserve signs: scale by 1/|lead| only
  auto normalize = [](const UniPoly& p) {
    Elem l = p.lead();
    if (l.sign() < 0) l = -l;
    return p * l.inverse();
  };
  std::vector<UniPoly> chain{sf, sf.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(normalize(-r));
  }
  return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const UniPoly& p : chain) {
    if (p.is_zero()) continue;
    int s = p.evaluate(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& sf) {
  std::vector<IsolatedRoot> out;
  if (sf.degree() <= 0) return out;
  auto chain = sturm_chain(sf);
  // Cauchy bound
  Rat m(1);
  Rat lead_low;
  {
    // |lead| lower bound: |lead| >= 1/denominator-ish; use exact |lead| via
    // upper bound of its inverse instead: |a_i/a_n| <= ub(a_i) * ub(1/a_n)
    Elem inv = sf.lead().inverse();
    Rat ub_inv = rat_upper_abs(inv);
    for (int i = 0; i < sf.degree(); ++i) {
      Rat b = rat_upper_abs(sf.coeffs()[static_cast<std::size_t>(i)]) * ub_inv;
      if (b > m) m = b;
    }
  }
  Rat bound = m + 1;
  struct Seg {
    Rat lo, hi;
    int vlo, vhi;
  };
  std::vector<Seg> stack{{-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound)}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    int count = s.vlo - s.vhi;
    if (count <= 0) continue;
    if (count == 1) {
      out.push_back({s.lo, s.hi, sf.evaluate(s.lo).sign()});
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    int vm = sign_variations(chain, mid);
    stack.push_back({s.lo, mid, s.vlo, vm});
    stack.push_back({mid, s.hi, vm, s.vhi});
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
    return a.lo < b.lo;
  });
  return out;
}

int count_real_roots(const UniPoly& p) {
  if (p.is_zero()) fail(Errc::zero_polynomial, "count_real_roots of zero polynomial");
  UniPoly sf = divmod(p, gcd(p, p.derivative())).first;
  if (sf.degree() <= 0) return 0;
  auto chain = sturm_chain(sf);
  Elem inv = sf.lead().inverse();
  Rat m(1);
  for (int i = 0; i < sf.degree(); ++i) {
    Rat b = rat_upper_abs(sf.coeffs()[static_cast<std::size_t>(i)]) * rat_upper_abs(inv);
    if (b > m) m = b;
  }
  Rat bound = m + 1;
  return sign_variations(chain, -bound) - sign_variations(chain, bound);
}

namespace {

// ---------------------------------------------------------------------------
// Certified reconstruction tier (towers of depth <= 2)
//
// Every root of p lying in the tower is a real root of the squarefree part,
// and its conjugates are real roots of the conjugated polynomials. Isolate
// all of those, then reconstruct the rational coordinates of a candidate root
// from one isolating interval per conjugate, using the character sums of the
// automorphism group. A denominator bound derived from the integerized
// leading coefficient makes the search provably exhaustive: once intervals
// are narrower than 1/(2B^2), a coordinate either is the unique rational with
// denominator <= B in its interval or the combination is certified dead.

struct RefiningRoot {
  Rat lo, hi;
  int sign_lo;
  bool confirmed = false;

  void refine_to(const UniPoly& sf, const Rat& width) {
    while (hi - lo > width) {
      Rat mid = (lo + hi) / 2;
      int sm = sf.evaluate(mid).sign();
      // sm != 0: sf has no rational roots by the time this tier runs
      if (sm == sign_lo)
        lo = mid;
      else
        hi = mid;
    }
  }
};

mpz_class denominator_bound(const UniPoly& sf) {
  // integerize: scale by the lcm of all coordinate denominators
  mpz_class den_lcm = 1;
  for (const Elem& c : sf.coeffs())
    for (const Rat& q : c.coords()) {
      mpz_class d = q.get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
      den_lcm = den_lcm / g * d;
    }
  Elem lead = sf.lead() * Rat(den_lcm);
  mpz_class nrm = abs(mpz_class(lead.norm_q()));
  mpz_class prod = 1;
  for (long d : sf.tower().radicands()) prod *= d;
  // 4 * (prod d_i)^2 * |N(lead)| generously covers the ring-of-integers
  // denominators at depth <= 2
  mpz_class b = 4 * prod * prod * nrm;
  return b < 1 ? mpz_class(1) : b;
}

std::vector<Elem> certified_roots(const UniPoly& work) {
  const Tower& t = work.tower();
  const std::size_t nconj = t.basis_size();
  UniPoly sf = divmod(work, gcd(work, work.derivative())).first.monic();
  if (sf.degree() <= 0) return {};

  std::vector<UniPoly> conj;
  std::vector<std::vector<RefiningRoot>> iso(nconj);
  for (std::size_t j = 0; j < nconj; ++j) {
    conj.push_back(sf.conjugate(static_cast<unsigned>(j)));
    for (const IsolatedRoot& r : isolate_real_roots(conj.back()))
      iso[j].push_back({r.lo, r.hi, r.sign_lo});
    // a tower root's conjugates are real roots of the conjugated polynomial,
    // so an empty list anywhere certifies there is no tower root at all
    if (iso[j].empty()) return {};
  }

  mpz_class bound = denominator_bound(sf);
  Rat bound_q(bound);
  // final width 1/(4 B^2) on the root intervals keeps every reconstructed
  // coordinate interval below the uniqueness threshold 1/(2 B^2)
  const std::size_t final_bits = mpz_sizeinbase(bound.get_mpz_t(), 2) * 2 + 4;

  std::vector<std::size_t> ladder;
  for (std::size_t b = 64; b < final_bits; b *= 2) ladder.push_back(b);
  ladder.push_back(final_bits);

  std::vector<Elem> found;
  auto record = [&](const Elem& r) {
    for (const Elem& f : found)
      if (f == r) return;
    found.push_back(r);
  };

  for (std::size_t bits : ladder) {
    Rat width(mpz_class(1), mpz_class(1) << bits);
    width.canonicalize();
    for (std::size_t j = 0; j < nconj; ++j)
      for (RefiningRoot& r : iso[j]) r.refine_to(conj[j], width);

    // precompute surd intervals: divisor = 2^depth * s_m * sqrt(r_m)
    std::vector<IvalQ> beta(nconj);
    for (std::size_t m = 0; m < nconj; ++m) {
      auto [s, r] = t.basis_surd(static_cast<unsigned>(m));
      beta[m] = surd_interval(s * static_cast<long>(nconj), r, static_cast<unsigned>(bits));
    }

    for (RefiningRoot& r0 : iso[0]) {
      if (r0.confirmed) continue;
      // iterate over all combinations of one interval per conjugate
      std::vector<std::size_t> pick(nconj, 0);
      for (;;) {
        bool viable = true;
        Elem cand(t);
        for (std::size_t m = 0; m < nconj && viable; ++m) {
          IvalQ sum{Rat(0), Rat(0)};
          for (std::size_t j = 0; j < nconj; ++j) {
            const RefiningRoot& rj = j == 0 ? r0 : iso[j][pick[j]];
            IvalQ ij{rj.lo, rj.hi};
            if (__builtin_popcount(static_cast<unsigned>(m & j)) % 2 == 0)
              sum = sum + ij;
            else
              sum = sum - ij;
          }
          IvalQ cm = div_pos(sum, beta[m]);
          Rat coord = simplest_rational(cm.lo, cm.hi);
          if (coord.get_den() > bound) {
            viable = false;
            break;
          }
          cand += Elem::surd(t, static_cast<unsigned>(m)) * coord;
        }
        if (viable && sf.evaluate(cand).is_zero()) {
          record(cand);
          // confirm the interval the verified root actually lies in
          bool in_r0 = false;
          for (RefiningRoot& rr : iso[0]) {
            if ((cand - Elem(t, rr.lo)).sign() > 0 && (Elem(t, rr.hi) - cand).sign() > 0) {
              rr.confirmed = true;
              if (&rr == &r0) in_r0 = true;
              break;
            }
          }
          if (in_r0) break;
        }
        // next combination (conjugate slots 1..nconj-1)
        std::size_t j = 1;
        while (j < nconj) {
          if (++pick[j] < iso[j].size()) break;
          pick[j] = 0;
          ++j;
        }
        if (j >= nconj) break;
      }
    }

    bool all_done = true;
    for (const RefiningRoot& r0 : iso[0])
      if (!r0.confirmed) all_done = false;
    if (all_done) break;
  }
  return found;
}

void deflate_fully(UniPoly& work, const Elem& root, int& mult) {
  mult = 0;
  while (work.degree() >= 1 && work.evaluate(root).is_zero()) {
    work = work.deflate(root);
    ++mult;
  }
}

}  // namespace

RootList tower_roots(const UniPoly& p) {
  if (p.is_zero()) fail(Errc::zero_polynomial, "root finding on the zero polynomial");
  const Tower& t = p.tower();
  RootList out;
  UniPoly work = p;

  auto push = [&](const Elem& r, int mult) {
    for (auto& [x, m] : out.roots)
      if (x == r) {
        m += mult;
        return;
      }
    out.roots.emplace_back(r, mult);
  };

  // roots at zero
  {
    int k = 0;
    while (work.degree() >= 1 && work.coeff(0).is_zero()) {
      std::vector<Elem> shifted(work.coeffs().begin() + 1, work.coeffs().end());
      work = UniPoly(t, std::move(shifted));
      ++k;
    }
    if (k > 0) push(Elem(t), k);
  }

  // rational tier
  if (work.degree() >= 1) {
    std::vector<Rat> rs;
    bool rat_complete = rational_roots(work, rs);
    if (!rat_complete && t.depth() > 2) out.complete = false;
    for (const Rat& r : rs) {
      int mult = 0;
      deflate_fully(work, Elem(t, r), mult);
      if (mult > 0) push(Elem(t, r), mult);
    }
  }

  // direct formulas at low degree (conclusive at any depth)
  auto low_degree = [&]() {
    while (work.degree() == 1 || work.degree() == 2) {
      if (work.degree() == 1) {
        Elem r = -(work.coeff(0) / work.coeff(1));
        int mult = 0;
        deflate_fully(work, r, mult);
        push(r, mult);
        continue;
      }
      Elem a = work.coeff(2), b = work.coeff(1), c = work.coeff(0);
      Elem disc = b * b - a * c * Rat(4);
      int ds = disc.sign();
      if (ds < 0) return;  // no real roots: conclusive
      if (ds == 0) {
        Elem r = -(b / (a * Rat(2)));
        int mult = 0;
        deflate_fully(work, r, mult);
        push(r, mult);
        continue;
      }
      auto s = try_sqrt(disc);
      if (!s) return;  // irrational discriminant root: no tower roots, conclusive
      Elem two_a = a * Rat(2);
      for (const Elem& r : {(-b + *s) / two_a, (-b - *s) / two_a}) {
        int mult = 0;
        deflate_fully(work, r, mult);
        if (mult > 0) push(r, mult);
      }
      return;
    }
  };
  low_degree();

  // certified tier for the remaining factor
  if (work.degree() >= 3) {
    if (t.depth() <= 2) {
      for (const Elem& r : certified_roots(work)) {
        int mult = 0;
        deflate_fully(work, r, mult);
        if (mult > 0) push(r, mult);
      }
      low_degree();  // anything certified_roots deflated down to quadratics
    } else {
      out.complete = false;
    }
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return less_real(a.first, b.first); });
  return out;
}

RootList univariate_roots(const MultiPoly& p) {
  if (p.nvars() != 1) fail(Errc::arity_mismatch, "univariate_roots: expected one variable");
  if (p.is_zero()) fail(Errc::zero_polynomial, "univariate_roots: zero polynomial");
  if (p.total_degree() > 4) fail(Errc::degree_too_high, "univariate_roots: degree > 4");
  return tower_roots(UniPoly::from_multipoly(p));
}

}  // namespace zda
