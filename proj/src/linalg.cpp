#include "zda/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace zda {

Mat::Mat(const Tower& t, std::size_t rows, std::size_t cols)
    : tower_(t), rows_(rows), cols_(cols), e_(rows * cols, Elem(t)) {}

Mat Mat::identity(const Tower& t, std::size_t n) {
  Mat m(t, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Elem(t, 1);
  return m;
}

Mat Mat::from_rows(const Tower& t, const std::vector<Vec>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Mat m(t, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(Errc::dimension_mismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  Vec v;
  v.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
  return v;
}

Vec Mat::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) fail(Errc::dimension_mismatch, "matrix product shape mismatch");
  Mat m(tower_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

Vec Mat::operator*(const Vec& v) const {
  if (v.size() != cols_) fail(Errc::dimension_mismatch, "matrix-vector shape mismatch");
  Vec out(rows_, Elem(tower_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

Mat Mat::transpose() const {
  Mat m(tower_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  return os.str();
}

std::pair<Mat, int> rref(const Mat& m) {
  Mat a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t lead = 0;
  int rk = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    std::size_t pivot = r;
    while (pivot < rows && a.at(pivot, lead).is_zero()) ++pivot;
    if (pivot == rows) {
      --r;
      ++lead;
      continue;
    }
    if (pivot != r)
      for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(pivot, c), a.at(r, c));
    Elem inv = a.at(r, lead).inverse();
    for (std::size_t c = lead; c < cols; ++c) a.at(r, c) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, lead).is_zero()) continue;
      Elem f = a.at(i, lead);
      for (std::size_t c = lead; c < cols; ++c) a.at(i, c) -= f * a.at(r, c);
    }
    ++rk;
    ++lead;
  }
  return {a, rk};
}

int rank(const Mat& m) { return rref(m).second; }

namespace {

Elem det_cofactor(const Mat& m, std::vector<std::size_t>& cols, std::size_t row) {
  const Tower& t = m.tower();
  if (cols.size() == 1) return m.at(row, cols[0]);
  Elem acc(t);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (m.at(row, cols[k]).is_zero()) continue;
    std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Elem sub = det_cofactor(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    Elem term = m.at(row, c) * sub;
    if (k % 2) term = -term;
    acc += term;
  }
  return acc;
}

Elem det_bareiss(Mat a) {
  const std::size_t n = a.rows();
  const Tower& t = a.tower();
  Elem prev(t, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k).is_zero()) ++p;
      if (p == n) return Elem(t);
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  Elem d = a.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

}  // namespace

Elem det(const Mat& m) {
  if (m.rows() != m.cols()) fail(Errc::non_square, "determinant of non-square matrix");
  if (m.rows() == 0) return Elem(m.tower(), 1);
  if (m.rows() <= 4) {
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return det_cofactor(m, cols, 0);
  }
  return det_bareiss(m);
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) fail(Errc::non_square, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(m.tower(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Elem(m.tower(), 1);
  }
  auto [r, rk] = rref(aug);
  if (rk < static_cast<int>(n)) return std::nullopt;
  // rank n on the left block means the left half reduced to the identity
  for (std::size_t i = 0; i < n; ++i)
    if (r.at(i, i) != Elem(m.tower(), 1)) return std::nullopt;
  Mat inv(m.tower(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(const Tower& t, std::size_t ambient) {
  Subspace s;
  s.tower_ = t;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(const Tower& t, std::size_t ambient) {
  Subspace s = zero(t, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec row(ambient, Elem(t));
    row[i] = Elem(t, 1);
    s.basis_.push_back(std::move(row));
  }
  return s;
}

Subspace Subspace::span(const Tower& t, std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s = zero(t, ambient);
  if (vectors.empty()) return s;
  auto [r, rk] = rref(Mat::from_rows(t, vectors));
  for (int i = 0; i < rk; ++i) s.basis_.push_back(r.row(static_cast<std::size_t>(i)));
  return s;
}

bool Subspace::contains(const Vec& x) const {
  if (x.size() != ambient_) fail(Errc::dimension_mismatch, "vector/ambient mismatch");
  Vec v = x;
  for (const Vec& b : basis_) {
    std::size_t pivot = 0;
    while (pivot < ambient_ && b[pivot].is_zero()) ++pivot;
    if (pivot == ambient_) continue;
    if (!v[pivot].is_zero()) {
      Elem f = v[pivot];
      for (std::size_t c = 0; c < ambient_; ++c) v[c] -= f * b[c];
    }
  }
  return is_zero_vec(v);
}

bool Subspace::contains(const Subspace& other) const {
  for (const Vec& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

std::string Subspace::str() const {
  if (basis_.empty()) return "{0}";
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) os << ", ";
    os << vec_str(basis_[i]);
  }
  os << "}";
  return os.str();
}

Subspace kernel(const Mat& m) {
  auto [r, rk] = rref(m);
  const std::size_t n = m.cols();
  const Tower& t = m.tower();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < rk; ++i) {
    std::size_t c = 0;
    while (c < n && r.at(static_cast<std::size_t>(i), c).is_zero()) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<Vec> rows;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, Elem(t));
    v[free] = Elem(t, 1);
    for (int i = 0; i < rk; ++i)
      v[pivot_col[static_cast<std::size_t>(i)]] = -r.at(static_cast<std::size_t>(i), free);
    rows.push_back(std::move(v));
  }
  return Subspace::span(t, n, rows);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    fail(Errc::dimension_mismatch, "subspace sum: ambient dimensions differ");
  std::vector<Vec> rows = u.basis();
  rows.insert(rows.end(), v.basis().begin(), v.basis().end());
  return Subspace::span(u.tower(), u.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    fail(Errc::dimension_mismatch, "subspace intersection: ambient dimensions differ");
  const Tower& t = u.tower();
  const std::size_t n = u.ambient_dim();
  const std::size_t r = u.dim(), s = v.dim();
  if (r == 0 || s == 0) return Subspace::zero(t, n);
  // x in both spans: x = a*U = b*V. Solve the stacked constraint system
  // (a, b) * [U; -V] = 0, i.e. the kernel of the transpose.
  Mat stacked(t, r + s, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < n; ++c) stacked.at(i, c) = u.basis()[i][c];
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t c = 0; c < n; ++c) stacked.at(r + j, c) = -v.basis()[j][c];
  Subspace null = kernel(stacked.transpose());
  std::vector<Vec> rows;
  for (const Vec& ab : null.basis()) {
    Vec x(n, Elem(t));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = 0; c < n; ++c) x[c] += ab[i] * u.basis()[i][c];
    rows.push_back(std::move(x));
  }
  return Subspace::span(t, n, rows);
}

// ---------------------------------------------------------------------------
// Symmetric diagonalization

SignatureResult diagonalize_symmetric(const Mat& q) {
  if (!q.is_symmetric()) fail(Errc::non_symmetric, "diagonalize_symmetric: matrix not symmetric");
  const std::size_t n = q.rows();
  const Tower& tw = q.tower();
  Mat a = q;
  Mat t = Mat::identity(tw, n);

  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(t.at(r, i), t.at(r, j));
  };
  // column j += f * column i (and the mirrored row op), tracked on t
  auto col_add = [&](std::size_t j, std::size_t i, const Elem& f) {
    for (std::size_t r = 0; r < n; ++r) a.at(r, j) += f * a.at(r, i);
    for (std::size_t c = 0; c < n; ++c) a.at(j, c) += f * a.at(i, c);
    for (std::size_t r = 0; r < n; ++r) t.at(r, j) += f * t.at(r, i);
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, p).is_zero()) ++p;
      if (p < n) {
        col_swap(k, p);
      } else {
        // all remaining diagonal entries vanish; pull in an off-diagonal one
        bool found = false;
        for (std::size_t i = k; i < n && !found; ++i)
          for (std::size_t j = i + 1; j < n && !found; ++j)
            if (!a.at(i, j).is_zero()) {
              if (i != k) col_swap(i, k);
              if (j != k + 1) col_swap(j, k + 1);
              col_add(k, k + 1, Elem(tw, 1));  // makes a(k,k) = 2*a(k,k+1) != 0
              found = true;
            }
        if (!found) break;  // remaining block is zero
      }
    }
    Elem pivot = a.at(k, k);
    for (std::size_t j = k + 1; j < n; ++j)
      if (!a.at(k, j).is_zero()) col_add(j, k, -(a.at(k, j) / pivot));
  }

  SignatureResult res;
  res.transform = t;
  res.diagonal.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Elem d = a.at(i, i);
    int s = d.sign();
    if (s > 0) ++res.positives;
    if (s < 0) ++res.negatives;
    if (s != 0) ++res.rank;
    res.diagonal.push_back(std::move(d));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Vector helpers

Vec zero_vec(const Tower& t, std::size_t n) { return Vec(n, Elem(t)); }

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Elem& e) { return e.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(Errc::dimension_mismatch, "vector add");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec scale(const Vec& a, const Elem& c) {
  Vec r = a;
  for (Elem& e : r) e *= c;
  return r;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << "]";
  return os.str();
}

}  // namespace zda
