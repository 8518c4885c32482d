#include "fouralg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fouralg {

Vec zero_vec(const FieldSpec& fs, std::size_t n) {
  return Vec(n, Scalar::zero(fs));
}

Vec unit_vec(const FieldSpec& fs, std::size_t n, std::size_t i) {
  Vec v = zero_vec(fs, n);
  v[i] = Scalar::one(fs);
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector lengths differ");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector lengths differ");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void axpy(const Scalar& c, const Vec& x, Vec& y) {
  if (x.size() != y.size()) throw ShapeError("vector lengths differ");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += c * x[i];
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool vec_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].less(b[i])) return true;
    if (b[i].less(a[i])) return false;
  }
  return a.size() < b.size();
}

Matrix::Matrix(const FieldSpec& fs, std::size_t rows, std::size_t cols)
    : fs_(fs), rows_(rows), cols_(cols),
      e_(rows * cols, Scalar::zero(fs)) {}

Matrix Matrix::identity(const FieldSpec& fs, std::size_t n) {
  Matrix m(fs, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(fs);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& fs, const std::vector<Vec>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(fs, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const FieldSpec& fs, std::size_t rows,
                         const std::vector<Vec>& cols) {
  Matrix m(fs, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ShapeError("bad column length");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v;
  v.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix m(fs_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::mul(const Matrix& o) const {
  if (fs_ != o.fs_) throw FieldMismatch("matrix fields differ");
  if (cols_ != o.rows_) throw ShapeError("matrix shapes incompatible");
  Matrix m(fs_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        m.at(i, j) += a * o.at(k, j);
    }
  return m;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw ShapeError("matrix/vector shapes incompatible");
  Vec r = zero_vec(fs_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return fs_ == o.fs_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::lex_less(const Matrix& o) const {
  for (std::size_t i = 0; i < e_.size() && i < o.e_.size(); ++i) {
    if (e_[i].less(o.e_[i])) return true;
    if (o.e_[i].less(e_[i])) return false;
  }
  return e_.size() < o.e_.size();
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(m.at(piv, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = 0; j < cols_; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar factor = m.at(i, c);
      for (std::size_t j = 0; j < cols_; ++j)
        m.at(i, j) -= factor * m.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

bool Matrix::invertible() const {
  return rows_ == cols_ && rank() == rows_;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw ShapeError("inverse of non-square matrix");
  Matrix aug(fs_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar::one(fs_);
  }
  std::vector<std::size_t> pivots;
  Matrix red = aug.rref(&pivots);
  if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
  Matrix inv(fs_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = red.at(i, cols_ + j);
  return inv;
}

std::vector<Vec> Matrix::kernel_basis() const {
  std::vector<std::size_t> pivots;
  Matrix red = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (is_pivot[j]) continue;
    Vec v = zero_vec(fs_, cols_);
    v[j] = Scalar::one(fs_);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -red.at(r, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> Matrix::image_basis() const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < cols_; ++j) cols.push_back(col(j));
  return span(fs_, rows_, cols).basis;
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw ShapeError("rhs length != rows");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  Matrix red = aug.rref(&pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = red.at(r, m.cols());
  return AffineSolution{std::move(x), m.kernel_basis()};
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_dim) throw ShapeError("ambient dimension mismatch");
  return is_zero_vec(reduce_mod(*this, v));
}

Subspace span(const FieldSpec& fs, std::size_t ambient_dim,
              const std::vector<Vec>& vectors) {
  Matrix m = Matrix::from_rows(fs, vectors);
  if (!vectors.empty() && m.cols() != ambient_dim)
    throw ShapeError("vector length != ambient dimension");
  std::vector<std::size_t> pivots;
  Matrix red = m.rref(&pivots);
  std::vector<Vec> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) basis.push_back(red.row(r));
  return Subspace{ambient_dim, std::move(basis)};
}

Vec reduce_mod(const Subspace& s, const Vec& v) {
  Vec r = v;
  for (const auto& row : s.basis) {
    std::size_t piv = 0;
    while (piv < row.size() && row[piv].is_zero()) ++piv;
    if (piv == row.size()) continue;
    Scalar c = r[piv];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= c * row[j];
  }
  return r;
}

std::vector<Vec> quotient_representatives(const FieldSpec& fs,
                                          const std::vector<Vec>& subspace_basis,
                                          std::size_t ambient_dim,
                                          bool force) {
  if (!fs.is_prime_field())
    throw UnsupportedOverRationals(
        "quotient_representatives needs a prime field");
  Subspace s = span(fs, ambient_dim, subspace_basis);
  double total = std::pow(static_cast<double>(fs.characteristic()),
                          static_cast<double>(ambient_dim));
  if (!force && total > 1e8)
    throw SizeGuard("coset enumeration over p^n too large");

  std::map<std::vector<std::uint64_t>, Vec> seen;
  std::vector<Vec> reps;
  std::vector<std::uint64_t> digits(ambient_dim, 0);
  std::uint64_t p = fs.characteristic();
  while (true) {
    Vec v(ambient_dim, Scalar::zero(fs));
    for (std::size_t i = 0; i < ambient_dim; ++i)
      v[i] = Scalar::of_int(fs, static_cast<long>(digits[i]));
    Vec key_vec = reduce_mod(s, v);
    std::vector<std::uint64_t> key;
    key.reserve(ambient_dim);
    for (const auto& x : key_vec) key.push_back(x.residue());
    if (seen.emplace(std::move(key), v).second) reps.push_back(v);
    // lexicographic odometer: last digit fastest
    std::size_t i = ambient_dim;
    while (i > 0) {
      --i;
      if (++digits[i] < p) break;
      digits[i] = 0;
      if (i == 0) return reps;
    }
    if (ambient_dim == 0) return reps;
  }
}

}  // namespace fouralg

namespace fouralg {

void for_each_vector(const FieldSpec& fs, std::size_t len,
                     const std::function<void(const Vec&)>& fn) {
  if (!fs.is_prime_field())
    throw UnsupportedOverRationals("vector enumeration needs a prime field");
  const std::uint64_t p = fs.characteristic();
  std::vector<std::uint64_t> digits(len, 0);
  Vec v = zero_vec(fs, len);
  while (true) {
    for (std::size_t i = 0; i < len; ++i)
      v[i] = Scalar::of_int(fs, static_cast<long>(digits[i]));
    fn(v);
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++digits[i] < p) break;
      digits[i] = 0;
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

double power_count(std::uint64_t p, std::size_t e) {
  return std::pow(static_cast<double>(p), static_cast<double>(e));
}

}  // namespace fouralg

namespace fouralg {

void append_residue_key(std::string& key, std::uint64_t residue) {
  for (int shift = 24; shift >= 0; shift -= 8)
    key.push_back(static_cast<char>((residue >> shift) & 0xff));
}

}  // namespace fouralg
