#include "zda/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zda {

unsigned exp_total(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0u); }

MultiPoly MultiPoly::constant(const Tower& t, std::size_t nvars, const Elem& c) {
  MultiPoly p(t, nvars);
  p.set_term(ExpVec(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::var(const Tower& t, std::size_t nvars, std::size_t i) {
  MultiPoly p(t, nvars);
  ExpVec e(nvars, 0);
  e.at(i) = 1;
  p.set_term(e, Elem(t, 1));
  return p;
}

void MultiPoly::set_term(const ExpVec& e, const Elem& c) {
  if (e.size() != nvars_) fail(Errc::arity_mismatch, "exponent vector arity");
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

void MultiPoly::add_term(const ExpVec& e, const Elem& c) {
  if (e.size() != nvars_) fail(Errc::arity_mismatch, "exponent vector arity");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Elem MultiPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Elem(tower_) : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(exp_total(terms_.begin()->first));
}

int MultiPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = exp_total(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (exp_total(e) != d) return false;
  return true;
}

const ExpVec& MultiPoly::leading_exp() const {
  if (terms_.empty()) fail(Errc::zero_polynomial, "leading term of zero polynomial");
  return terms_.begin()->first;
}

const Elem& MultiPoly::leading_coeff() const {
  if (terms_.empty()) fail(Errc::zero_polynomial, "leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

void MultiPoly::check_compat(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) fail(Errc::arity_mismatch, "polynomial arity mismatch");
  if (tower_ != o.tower_) fail(Errc::tower_mismatch, "polynomial tower mismatch");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(tower_, nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compat(o);
  MultiPoly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compat(o);
  MultiPoly p = *this;
  for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
  return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compat(o);
  MultiPoly p(tower_, nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      ExpVec e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

MultiPoly MultiPoly::operator*(const Elem& c) const {
  MultiPoly p(tower_, nvars_);
  if (c.is_zero()) return p;
  for (const auto& [e, k] : terms_) p.terms_.emplace(e, k * c);
  return p;
}

Elem MultiPoly::evaluate(const Vec& point) const {
  if (point.size() != nvars_) fail(Errc::arity_mismatch, "evaluation point arity");
  Elem acc(tower_);
  for (const auto& [e, c] : terms_) {
    Elem term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& rep) const {
  check_compat(rep);
  MultiPoly acc(tower_, nvars_);
  // cache powers of rep
  std::vector<MultiPoly> powers{MultiPoly::constant(tower_, nvars_, Elem(tower_, 1))};
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * rep);
    ExpVec rest = e;
    rest[var] = 0;
    MultiPoly mono(tower_, nvars_);
    mono.set_term(rest, c);
    acc = acc + mono * powers[e[var]];
  }
  return acc;
}

std::vector<Elem> MultiPoly::restrict_to_var(std::size_t var, const Vec& point) const {
  if (point.size() != nvars_) fail(Errc::arity_mismatch, "restriction point arity");
  std::vector<Elem> out;
  for (const auto& [e, c] : terms_) {
    Elem term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (i == var) continue;
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    std::size_t d = e[var];
    if (out.size() <= d) out.resize(d + 1, Elem(tower_));
    out[d] += term;
  }
  return out;
}

std::string MultiPoly::str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  auto name = [&](std::size_t i) {
    if (i < var_names.size()) return var_names[i];
    return "x" + std::to_string(i + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    // coefficient rendering: pull the sign out for single-coordinate
    // coefficients, parenthesize the rest
    std::size_t nonzero = 0;
    for (const Rat& q : c.coords())
      if (q != 0) ++nonzero;
    bool neg = nonzero == 1 && c.sign() < 0;
    Elem mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string cs = nonzero > 1 ? "(" + mag.str() + ")" : mag.str();
    bool has_vars = exp_total(e) > 0;
    bool is_one = mag == Elem(tower_, 1);
    if (!has_vars) {
      os << cs;
      continue;
    }
    bool printed = false;
    if (!is_one) {
      os << cs;
      printed = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << name(i);
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

bool proportional(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p * q.leading_coeff() == q * p.leading_coeff();
}

namespace {

MultiPoly det_poly_rec(const std::vector<std::vector<MultiPoly>>& m,
                       std::vector<std::size_t>& cols, std::size_t row, const Tower& t,
                       std::size_t nvars) {
  if (cols.size() == 1) return m[row][cols[0]];
  MultiPoly acc(t, nvars);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (m[row][cols[k]].is_zero()) continue;
    std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    MultiPoly sub = det_poly_rec(m, cols, row + 1, t, nvars);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    MultiPoly term = m[row][c] * sub;
    if (k % 2) term = -term;
    acc = acc + term;
  }
  return acc;
}

}  // namespace

MultiPoly det_poly_matrix(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail(Errc::non_square, "det_poly_matrix: not square");
  if (n == 0) fail(Errc::non_square, "det_poly_matrix: empty matrix");
  const Tower& t = m[0][0].tower();
  const std::size_t nvars = m[0][0].nvars();
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  return det_poly_rec(m, cols, 0, t, nvars);
}

// ---------------------------------------------------------------------------
// LinearForm

LinearForm::LinearForm(const Tower& t, Vec coeffs) : tower_(t), coeffs_(std::move(coeffs)) {
  std::size_t p = 0;
  while (p < coeffs_.size() && coeffs_[p].is_zero()) ++p;
  if (p == coeffs_.size()) fail(Errc::zero_polynomial, "zero linear form");
  pivot_ = p;
  Elem inv = coeffs_[p].inverse();
  for (Elem& c : coeffs_) c *= inv;
}

MultiPoly LinearForm::poly() const {
  MultiPoly p(tower_, coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    ExpVec e(coeffs_.size(), 0);
    e[i] = 1;
    p.set_term(e, coeffs_[i]);
  }
  return p;
}

Elem LinearForm::evaluate(const Vec& point) const {
  if (point.size() != coeffs_.size()) fail(Errc::arity_mismatch, "linear form arity");
  Elem acc(tower_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] * point[i];
  return acc;
}

Subspace LinearForm::kernel_subspace() const {
  Mat m(tower_, 1, coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) m.at(0, i) = coeffs_[i];
  return kernel(m);
}

std::string LinearForm::str(const std::vector<std::string>& var_names) const {
  return poly().str(var_names);
}

bool divides_linear(const LinearForm& f, const MultiPoly& q) {
  if (f.nvars() != q.nvars()) fail(Errc::arity_mismatch, "divides_linear arity");
  if (q.is_zero()) return true;
  const Tower& t = q.tower();
  // substitute the pivot variable by -(rest of f)
  MultiPoly rep(t, q.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if (i == f.pivot()) continue;
    ExpVec e(q.nvars(), 0);
    e[i] = 1;
    rep.set_term(e, -f.coeffs()[i]);
  }
  return q.substitute(f.pivot(), rep).is_zero();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& q, const MultiPoly& f) {
  if (f.is_zero()) fail(Errc::division_by_zero, "division by zero polynomial");
  const Tower& t = q.tower();
  MultiPoly rem = q;
  MultiPoly quot(t, q.nvars());
  const ExpVec& fl = f.leading_exp();
  const Elem& fc = f.leading_coeff();
  while (!rem.is_zero()) {
    const ExpVec& rl = rem.leading_exp();
    ExpVec diff(rl.size());
    for (std::size_t i = 0; i < rl.size(); ++i) {
      if (rl[i] < fl[i]) return std::nullopt;
      diff[i] = rl[i] - fl[i];
    }
    Elem c = rem.leading_coeff() / fc;
    MultiPoly mono(t, q.nvars());
    mono.set_term(diff, c);
    quot = quot + mono;
    rem = rem - mono * f;
  }
  return quot;
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(const Tower& t, std::vector<Elem> coeffs) : tower_(t), coeffs_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p) {
  if (p.nvars() != 1) fail(Errc::arity_mismatch, "from_multipoly: expected one variable");
  std::vector<Elem> cs;
  for (const auto& [e, c] : p.terms()) {
    if (cs.size() <= e[0]) cs.resize(e[0] + 1, Elem(p.tower()));
    cs[e[0]] = c;
  }
  return UniPoly(p.tower(), std::move(cs));
}

MultiPoly UniPoly::to_multipoly() const {
  MultiPoly p(tower_, 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p.set_term({static_cast<unsigned>(i)}, coeffs_[i]);
  return p;
}

Elem UniPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Elem(tower_);
}

const Elem& UniPoly::lead() const {
  if (coeffs_.empty()) fail(Errc::zero_polynomial, "lead of zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (Elem& c : p.coeffs_) c = -c;
  return p;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly p = *this;
  if (p.coeffs_.size() < o.coeffs_.size()) p.coeffs_.resize(o.coeffs_.size(), Elem(tower_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) p.coeffs_[i] += o.coeffs_[i];
  p.trim();
  return p;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(tower_);
  std::vector<Elem> out(coeffs_.size() + o.coeffs_.size() - 1, Elem(tower_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return UniPoly(tower_, std::move(out));
}

UniPoly UniPoly::operator*(const Elem& c) const {
  if (c.is_zero()) return UniPoly(tower_);
  UniPoly p = *this;
  for (Elem& k : p.coeffs_) k *= c;
  return p;
}

Elem UniPoly::evaluate(const Elem& x) const {
  Elem acc(tower_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Elem UniPoly::evaluate(const Rat& x) const {
  Elem acc(tower_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(tower_);
  std::vector<Elem> out(coeffs_.size() - 1, Elem(tower_));
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return UniPoly(tower_, std::move(out));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

UniPoly UniPoly::conjugate(unsigned mask) const {
  UniPoly p = *this;
  for (Elem& c : p.coeffs_) c = c.conjugate(mask);
  return p;
}

UniPoly UniPoly::deflate(const Elem& root) const {
  // synthetic division by (t - root)
  if (is_zero()) fail(Errc::zero_polynomial, "deflate zero polynomial");
  std::vector<Elem> out(coeffs_.size() - 1, Elem(tower_));
  Elem carry(tower_);
  for (std::size_t i = coeffs_.size(); i-- > 1;) {
    carry = coeffs_[i] + carry * root;
    out[i - 1] = carry;
  }
  Elem rem = coeffs_[0] + carry * root;
  if (!rem.is_zero()) fail(Errc::internal, "deflate: nonzero remainder");
  return UniPoly(tower_, std::move(out));
}

std::string UniPoly::str(const std::string& var) const {
  std::vector<std::string> names{var};
  return to_multipoly().str(names);
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
  const Tower& t = a.tower();
  std::vector<Elem> rem(a.coeffs());
  int db = b.degree();
  if (a.degree() < db) return {UniPoly(t), a};
  std::vector<Elem> quot(static_cast<std::size_t>(a.degree() - db) + 1, Elem(t));
  Elem inv = b.lead().inverse();
  for (int i = a.degree(); i >= db; --i) {
    Elem c = rem[static_cast<std::size_t>(i)] * inv;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(t, std::move(quot)), UniPoly(t, std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = y;
    y = r.is_zero() ? r : r.monic();  // keep coefficients small
  }
  return x.monic();
}

Elem resultant(const UniPoly& a, const UniPoly& b) {
  const Tower& t = a.tower();
  if (a.is_zero() || b.is_zero()) return Elem(t);
  const int m = a.degree(), n = b.degree();
  if (m == 0) {
    Elem r(t, 1);
    for (int i = 0; i < n; ++i) r *= a.coeffs()[0];
    return r;
  }
  if (n == 0) {
    Elem r(t, 1);
    for (int i = 0; i < m; ++i) r *= b.coeffs()[0];
    return r;
  }
  Mat s(t, static_cast<std::size_t>(m + n), static_cast<std::size_t>(m + n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j)
      s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) =
          a.coeffs()[static_cast<std::size_t>(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j)
      s.at(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + j)) =
          b.coeffs()[static_cast<std::size_t>(n - j)];
  return det(s);
}

}  // namespace zda
