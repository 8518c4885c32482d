#include "fouralg/algebra.hpp"

#include <cmath>

namespace fouralg {

BilinearMap::BilinearMap(const FieldSpec& fs, std::size_t left_dim,
                         std::size_t right_dim, std::size_t out_dim)
    : fs_(fs), l_(left_dim), r_(right_dim), o_(out_dim),
      e_(left_dim * right_dim * out_dim, Scalar::zero(fs)) {}

Vec BilinearMap::apply_basis(std::size_t i, std::size_t j) const {
  Vec v;
  v.reserve(o_);
  for (std::size_t k = 0; k < o_; ++k) v.push_back(t(i, j, k));
  return v;
}

Vec BilinearMap::apply(const Vec& x, const Vec& y) const {
  if (x.size() != l_ || y.size() != r_)
    throw ShapeError("bilinear map argument dimensions");
  Vec out = zero_vec(fs_, o_);
  for (std::size_t i = 0; i < l_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < r_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < o_; ++k) out[k] += c * t(i, j, k);
    }
  }
  return out;
}

void BilinearMap::set_basis(std::size_t i, std::size_t j, const Vec& value) {
  if (value.size() != o_) throw ShapeError("bilinear map value dimension");
  for (std::size_t k = 0; k < o_; ++k) t(i, j, k) = value[k];
}

void BilinearMap::set_symmetric(std::size_t i, std::size_t j,
                                const Vec& value) {
  if (l_ != r_) throw ShapeError("symmetric entry on non-square map");
  set_basis(i, j, value);
  set_basis(j, i, value);
}

bool BilinearMap::is_symmetric() const {
  if (l_ != r_) return false;
  for (std::size_t i = 0; i < l_; ++i)
    for (std::size_t j = i + 1; j < r_; ++j)
      for (std::size_t k = 0; k < o_; ++k)
        if (t(i, j, k) != t(j, i, k)) return false;
  return true;
}

bool BilinearMap::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool BilinearMap::operator==(const BilinearMap& o) const {
  return fs_ == o.fs_ && l_ == o.l_ && r_ == o.r_ && o_ == o.o_ && e_ == o.e_;
}

Algebra::Algebra(const FieldSpec& fs, std::size_t dim)
    : fs_(fs), mult_(fs, dim, dim, dim) {}

bool Algebra::operator==(const Algebra& o) const {
  return fs_ == o.fs_ && mult_ == o.mult_;
}

bool is_commutative(const Algebra& a) { return a.mult().is_symmetric(); }

FourAlgebraCheck is_four_algebra(const Algebra& a) {
  FourAlgebraCheck res;
  const std::size_t n = a.dim();
  res.commutative = true;
  for (std::size_t i = 0; i < n && res.commutative; ++i)
    for (std::size_t j = i + 1; j < n && res.commutative; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.mult().t(i, j, k) != a.mult().t(j, i, k)) {
          res.commutative = false;
          res.commutativity_witness = {i, j, k};
          break;
        }
  // Full linearization of (a^2)^2 = 0; the sum is symmetric in (i,j,k,l).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) {
          Vec s = a.product(a.basis_product(i, j), a.basis_product(k, l));
          s = add(s, a.product(a.basis_product(i, k), a.basis_product(j, l)));
          s = add(s, a.product(a.basis_product(i, l), a.basis_product(j, k)));
          if (!is_zero_vec(s)) {
            res.quadruple_witness = {i, j, k, l};
            return res;
          }
        }
  return res;
}

LinearizedIdentitiesReport check_linearized_identities(const Algebra& a) {
  const FieldSpec& fs = a.field();
  const std::size_t n = a.dim();
  const Scalar two = Scalar::of_int(fs, 2);
  LinearizedIdentitiesReport rep;

  rep.sq_times_prod = polarization_vanishes(
      fs, {PolarizationVar{n, 3}, PolarizationVar{n, 1}}, n,
      [&](const std::vector<Vec>& v) {
        return a.product(a.square(v[0]), a.product(v[0], v[1]));
      });
  rep.sq_sq = polarization_vanishes(
      fs, {PolarizationVar{n, 2}, PolarizationVar{n, 2}}, n,
      [&](const std::vector<Vec>& v) {
        Vec r = a.product(a.square(v[0]), a.square(v[1]));
        axpy(two, a.square(a.product(v[0], v[1])), r);
        return r;
      });
  rep.sq_prod_prod = polarization_vanishes(
      fs,
      {PolarizationVar{n, 2}, PolarizationVar{n, 1}, PolarizationVar{n, 1}}, n,
      [&](const std::vector<Vec>& v) {
        Vec r = a.product(a.square(v[0]), a.product(v[1], v[2]));
        axpy(two, a.product(a.product(v[0], v[1]), a.product(v[0], v[2])), r);
        return r;
      });
  rep.pairing_sum = true;
  for (std::size_t i = 0; i < n && rep.pairing_sum; ++i)
    for (std::size_t j = i; j < n && rep.pairing_sum; ++j)
      for (std::size_t k = j; k < n && rep.pairing_sum; ++k)
        for (std::size_t l = k; l < n; ++l) {
          Vec s = a.product(a.basis_product(i, j), a.basis_product(k, l));
          s = add(s, a.product(a.basis_product(i, k), a.basis_product(j, l)));
          s = add(s, a.product(a.basis_product(i, l), a.basis_product(j, k)));
          if (!is_zero_vec(s)) {
            rep.pairing_sum = false;
            break;
          }
        }
  return rep;
}

Subspace derived_algebra(const Algebra& a) {
  std::vector<Vec> products;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      products.push_back(a.basis_product(i, j));
  return span(a.field(), a.dim(), products);
}

bool is_metabelian(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) {
          Vec s = a.product(a.basis_product(i, j), a.basis_product(k, l));
          if (!is_zero_vec(s)) return false;
        }
  return true;
}

bool is_module(const Algebra& a, std::size_t v_dim, const BilinearMap& act) {
  if (act.left_dim() != a.dim() || act.right_dim() != v_dim ||
      act.out_dim() != v_dim)
    throw ShapeError("action shape is not A x V -> V");
  return polarization_vanishes(
      a.field(), {PolarizationVar{a.dim(), 3}, PolarizationVar{v_dim, 1}},
      v_dim, [&](const std::vector<Vec>& v) {
        return act.apply(a.square(v[0]), act.apply(v[0], v[1]));
      });
}

Algebra abelian(const FieldSpec& fs, std::size_t n) { return Algebra(fs, n); }

Algebra dim2_A1(const FieldSpec& fs) {
  Algebra a(fs, 2);
  a.set_product(0, 0, unit_vec(fs, 2, 1));
  return a;
}

Algebra dim2_A2(const FieldSpec& fs) {
  Algebra a(fs, 2);
  a.set_product(0, 1, unit_vec(fs, 2, 1));
  return a;
}

Algebra heisenberg(const FieldSpec& fs, std::size_t n) {
  // basis e_1..e_n, f_1..f_n, z with e_i f_i = z
  Algebra a(fs, 2 * n + 1);
  for (std::size_t i = 0; i < n; ++i)
    a.set_product(i, n + i, unit_vec(fs, 2 * n + 1, 2 * n));
  a.labels.resize(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    a.labels[i] = "e" + std::to_string(i + 1);
    a.labels[n + i] = "f" + std::to_string(i + 1);
  }
  a.labels[2 * n] = "z";
  return a;
}

Algebra met(const FieldSpec& fs, std::size_t n, std::size_t m,
            const BilinearMap& act, const BilinearMap& f) {
  if (act.left_dim() != m || act.right_dim() != n || act.out_dim() != n)
    throw ShapeError("Met action shape is not k^m x k^n -> k^n");
  if (f.left_dim() != m || f.right_dim() != m || f.out_dim() != n)
    throw ShapeError("Met cocycle shape is not k^m x k^m -> k^n");
  if (!f.is_symmetric()) throw NotSymmetric("Met cocycle must be symmetric");
  Algebra a(fs, n + m);
  auto embed = [&](const Vec& v) {
    Vec w = zero_vec(fs, n + m);
    for (std::size_t k = 0; k < n; ++k) w[k] = v[k];
    return w;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      a.set_product(i, n + j, embed(act.apply_basis(j, i)));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = j; l < m; ++l)
      a.set_product(n + j, n + l, embed(f.apply_basis(j, l)));
  return a;
}

Algebra example33(const FieldSpec& fs, std::size_t n) {
  if (n < 1) throw ShapeError("example33 needs n >= 1");
  Algebra a(fs, n + 1);
  a.set_product(0, 1, unit_vec(fs, n + 1, n));
  return a;
}

bool is_algebra_morphism(const Algebra& a, const Algebra& b,
                         const Matrix& phi) {
  if (phi.cols() != a.dim() || phi.rows() != b.dim())
    throw ShapeError("morphism matrix shape");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec phi_i = phi.col(i);
    for (std::size_t j = i; j < a.dim(); ++j) {
      Vec lhs = phi.apply(a.basis_product(i, j));
      Vec rhs = b.product(phi_i, phi.col(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::optional<Matrix> find_isomorphism(const Algebra& a, const Algebra& b,
                                       bool force) {
  const FieldSpec& fs = a.field();
  if (fs != b.field()) throw FieldMismatch("algebras over different fields");
  if (!fs.is_prime_field())
    throw UnsupportedOverRationals("find_isomorphism needs a prime field");
  if (a.dim() != b.dim()) return std::nullopt;
  const std::size_t n = a.dim();
  if (n > 3 && !force) throw SizeGuard("find_isomorphism guarded at dim 3");
  if (n == 0) return Matrix(fs, 0, 0);

  const std::uint64_t p = fs.characteristic();
  std::vector<std::uint64_t> digits(n * n, 0);
  while (true) {
    Matrix phi(fs, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        phi.at(i, j) = Scalar::of_int(fs, static_cast<long>(digits[i * n + j]));
    if (phi.invertible() && is_algebra_morphism(a, b, phi)) return phi;
    std::size_t i = digits.size();
    while (true) {
      if (i == 0) return std::nullopt;
      --i;
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
}

}  // namespace fouralg
