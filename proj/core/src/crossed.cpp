#include "fouralg/crossed.hpp"

#include <cmath>

namespace fouralg {

CrossedData CrossedData::zero(const Algebra& A, std::size_t v_dim) {
  const FieldSpec& fs = A.field();
  const std::size_t n = A.dim();
  return CrossedData{A, v_dim, BilinearMap(fs, n, v_dim, v_dim),
                     BilinearMap(fs, n, n, v_dim),
                     BilinearMap(fs, v_dim, v_dim, v_dim)};
}

bool same_shape(const CrossedData& a, const CrossedData& b) {
  return a.field() == b.field() && a.A.dim() == b.A.dim() &&
         a.v_dim == b.v_dim;
}

namespace {

void check_shapes(const CrossedData& cd) {
  const std::size_t n = cd.A.dim();
  const std::size_t m = cd.v_dim;
  if (cd.act.left_dim() != n || cd.act.right_dim() != m ||
      cd.act.out_dim() != m)
    throw ShapeError("action shape is not A x V -> V");
  if (cd.f.left_dim() != n || cd.f.right_dim() != n || cd.f.out_dim() != m)
    throw ShapeError("cocycle shape is not A x A -> V");
  if (cd.mult_v.left_dim() != m || cd.mult_v.right_dim() != m ||
      cd.mult_v.out_dim() != m)
    throw ShapeError("kernel multiplication shape is not V x V -> V");
}

Algebra v_algebra(const CrossedData& cd) {
  Algebra v(cd.field(), cd.v_dim);
  v.mult() = cd.mult_v;
  return v;
}

}  // namespace

CrossedValidation validate_crossed_system(const CrossedData& cd) {
  check_shapes(cd);
  const FieldSpec& fs = cd.field();
  const std::size_t n = cd.A.dim();
  const std::size_t m = cd.v_dim;
  const Scalar two = Scalar::of_int(fs, 2);
  CrossedValidation out;

  // CS1: f symmetric, mult_v a commutative 4-algebra structure on V.
  if (!cd.f.is_symmetric()) {
    out.cs1.pass = false;
  } else {
    FourAlgebraCheck v_check = is_four_algebra(v_algebra(cd));
    if (!v_check.ok()) {
      out.cs1.pass = false;
      if (v_check.quadruple_witness)
        out.cs1.witness.assign(v_check.quadruple_witness->begin(),
                               v_check.quadruple_witness->end());
      else if (v_check.commutativity_witness)
        out.cs1.witness.assign(v_check.commutativity_witness->begin(),
                               v_check.commutativity_witness->end());
    }
  }

  // CS2: f(a^2,a^2) + f(a,a) f(a,a) + 2 a^2 |> f(a,a) = 0, degree 4 in a.
  if (auto w = polarization_witness(
          fs, {PolarizationVar{n, 4}}, m, [&](const std::vector<Vec>& v) {
            const Vec& a = v[0];
            Vec a2 = cd.A.square(a);
            Vec faa = cd.f.apply(a, a);
            Vec r = cd.f.apply(a2, a2);
            r = add(r, cd.mult_v.apply(faa, faa));
            axpy(two, cd.act.apply(a2, faa), r);
            return r;
          })) {
    out.cs2.pass = false;
    out.cs2.witness = *w;
  }

  // CS3, by bidegree components in (a, x).
  auto component = [&](unsigned da, unsigned dx, const auto& eval) {
    return polarization_witness(
        fs, {PolarizationVar{n, da}, PolarizationVar{m, dx}}, m,
        [&](const std::vector<Vec>& v) { return eval(v[0], v[1]); });
  };
  // (2,2): a^2 |> x^2 + x^2 f(a,a) + 2 (a|>x)^2
  auto w22 = component(2, 2, [&](const Vec& a, const Vec& x) {
    Vec x2 = cd.mult_v.apply(x, x);
    Vec ax = cd.act.apply(a, x);
    Vec r = cd.act.apply(cd.A.square(a), x2);
    r = add(r, cd.mult_v.apply(x2, cd.f.apply(a, a)));
    axpy(two, cd.mult_v.apply(ax, ax), r);
    return r;
  });
  // (1,3): 2 x^2 (a|>x)
  auto w13 = component(1, 3, [&](const Vec& a, const Vec& x) {
    Vec r = cd.mult_v.apply(cd.mult_v.apply(x, x), cd.act.apply(a, x));
    return scale(two, r);
  });
  // (3,1): 2 (a|>x) f(a,a) + 2 a^2 |> (a|>x)
  auto w31 = component(3, 1, [&](const Vec& a, const Vec& x) {
    Vec ax = cd.act.apply(a, x);
    Vec r = cd.mult_v.apply(ax, cd.f.apply(a, a));
    r = add(r, cd.act.apply(cd.A.square(a), ax));
    return scale(two, r);
  });
  if (w22) {
    out.cs3.pass = false;
    out.cs3.witness = *w22;
  } else if (w13) {
    out.cs3.pass = false;
    out.cs3.witness = *w13;
  } else if (w31) {
    out.cs3.pass = false;
    out.cs3.witness = *w31;
  }
  return out;
}

Algebra crossed_product(const CrossedData& cd, bool validate) {
  check_shapes(cd);
  if (validate && !validate_crossed_system(cd).pass())
    throw InvalidCrossedSystem("crossed data violates (CS1)-(CS3)");
  const FieldSpec& fs = cd.field();
  const std::size_t n = cd.A.dim();
  const std::size_t m = cd.v_dim;
  Algebra e(fs, m + n);
  auto embed_v = [&](const Vec& x) {
    Vec w = zero_vec(fs, m + n);
    for (std::size_t k = 0; k < m; ++k) w[k] = x[k];
    return w;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      e.set_product(i, j, embed_v(cd.mult_v.apply_basis(i, j)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e.set_product(i, m + j, embed_v(cd.act.apply_basis(j, i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec w = embed_v(cd.f.apply_basis(i, j));
      Vec ab = cd.A.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) w[m + k] = ab[k];
      e.set_product(m + i, m + j, w);
    }
  return e;
}

Algebra semidirect_product(const Algebra& a, const Algebra& v_alg,
                           const BilinearMap& act) {
  CrossedData cd = CrossedData::zero(a, v_alg.dim());
  cd.act = act;
  cd.mult_v = v_alg.mult();
  return crossed_product(cd);
}

Algebra twisted_product(const Algebra& v_alg, std::size_t a_dim,
                        const BilinearMap& act, const BilinearMap& f) {
  CrossedData cd{abelian(v_alg.field(), a_dim), v_alg.dim(), act, f,
                 v_alg.mult()};
  return crossed_product(cd);
}

namespace {

Vec coords_in_basis(const FieldSpec& fs, const std::vector<Vec>& basis,
                    std::size_t ambient, const Vec& w, const char* what) {
  Matrix k = Matrix::from_cols(fs, ambient, basis);
  auto sol = solve_affine(k, w);
  if (!sol)
    throw NotMorphism(std::string("value does not lie in Ker(pi): ") + what);
  return sol->particular;
}

}  // namespace

Decomposition decompose(const Extension& ext) {
  const FieldSpec& fs = ext.E.field();
  const std::size_t ne = ext.E.dim();
  const std::size_t na = ext.A.dim();
  if (ext.pi.rows() != na || ext.pi.cols() != ne)
    throw ShapeError("pi shape is not dim A x dim E");
  if (ext.section.rows() != ne || ext.section.cols() != na)
    throw ShapeError("section shape is not dim E x dim A");
  if (ext.pi.rank() != na) throw NotSurjective("pi is not surjective");
  if (!is_algebra_morphism(ext.E, ext.A, ext.pi))
    throw NotMorphism("pi is not an algebra morphism");
  if (ext.pi.mul(ext.section) != Matrix::identity(fs, na))
    throw NotSection("pi o s is not the identity");

  std::vector<Vec> v_basis = ext.pi.kernel_basis();
  const std::size_t m = v_basis.size();

  CrossedData cs = CrossedData::zero(ext.A, m);
  auto v_coords = [&](const Vec& w, const char* what) {
    return coords_in_basis(fs, v_basis, ne, w, what);
  };
  for (std::size_t i = 0; i < na; ++i) {
    Vec sa = ext.section.col(i);
    for (std::size_t j = 0; j < m; ++j)
      cs.act.set_basis(i, j, v_coords(ext.E.product(sa, v_basis[j]), "act"));
    for (std::size_t j = i; j < na; ++j) {
      Vec w = ext.E.product(sa, ext.section.col(j));
      w = sub(w, ext.section.apply(ext.A.basis_product(i, j)));
      cs.f.set_symmetric(i, j, v_coords(w, "f"));
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      cs.mult_v.set_symmetric(
          i, j, v_coords(ext.E.product(v_basis[i], v_basis[j]), "mult_v"));

  std::vector<Vec> phi_cols = v_basis;
  for (std::size_t i = 0; i < na; ++i) phi_cols.push_back(ext.section.col(i));
  Matrix phi = Matrix::from_cols(fs, ne, phi_cols);
  return Decomposition{std::move(cs), std::move(v_basis), std::move(phi)};
}

Extension derived_quotient_extension(const Algebra& e) {
  const FieldSpec& fs = e.field();
  const std::size_t n = e.dim();
  Subspace derived = derived_algebra(e);
  std::vector<std::size_t> pivot_cols;
  for (const auto& row : derived.basis) {
    std::size_t piv = 0;
    while (piv < row.size() && row[piv].is_zero()) ++piv;
    pivot_cols.push_back(piv);
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  const std::size_t na = free_cols.size();
  Algebra a = abelian(fs, na);  // E/E' is always abelian
  Matrix pi(fs, na, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec red = reduce_mod(derived, unit_vec(fs, n, j));
    for (std::size_t r = 0; r < na; ++r) pi.at(r, j) = red[free_cols[r]];
  }
  Matrix s(fs, n, na);
  for (std::size_t r = 0; r < na; ++r)
    s.at(free_cols[r], r) = Scalar::one(fs);
  return Extension{e, std::move(a), std::move(pi), std::move(s)};
}

OneDimPairReport check_one_dim_pair(const OneDimExtPair& p) {
  const FieldSpec& fs = p.V.field();
  const std::size_t m = p.V.dim();
  if (p.F.size() != m || p.xi.rows() != m || p.xi.cols() != m)
    throw ShapeError("pair data dimensions");
  const Scalar two = Scalar::of_int(fs, 2);
  OneDimPairReport rep;
  rep.f_square_zero = is_zero_vec(p.V.square(p.F));

  auto vanishes = [&](unsigned degree, const auto& eval) {
    return polarization_vanishes(
        fs, {PolarizationVar{m, degree}}, m,
        [&](const std::vector<Vec>& v) { return eval(v[0]); });
  };
  // Components of x^2 F + 2 x^2 xi(x) + 2 xi(x)^2 + 2 xi(x) F = 0, separated
  // by homogeneous degree in x (valid since p >= 5 exceeds the degree).
  bool c3 = vanishes(3, [&](const Vec& x) {
    return p.V.product(p.V.square(x), p.xi.apply(x));
  });
  bool c2 = vanishes(2, [&](const Vec& x) {
    Vec xi_x = p.xi.apply(x);
    Vec r = p.V.product(p.V.square(x), p.F);
    axpy(two, p.V.square(xi_x), r);
    return r;
  });
  bool c1 = vanishes(1, [&](const Vec& x) {
    return p.V.product(p.xi.apply(x), p.F);
  });
  rep.condition_general = c3 && c2 && c1;

  // Variant with x F instead of x^2 F: degree-1 component becomes
  // x F + 2 xi(x) F, degree-2 component loses the x^2 F term.
  bool v1 = vanishes(1, [&](const Vec& x) {
    Vec r = p.V.product(x, p.F);
    axpy(two, p.V.product(p.xi.apply(x), p.F), r);
    return r;
  });
  bool v2 = vanishes(2, [&](const Vec& x) { return p.V.square(p.xi.apply(x)); });
  rep.condition_linear_variant = c3 && v2 && v1;
  return rep;
}

Algebra one_dim_extension(const OneDimExtPair& p) {
  OneDimPairReport rep = check_one_dim_pair(p);
  if (!rep.ok()) throw InvalidPair("(F, xi) violates the pair conditions");
  const FieldSpec& fs = p.V.field();
  const std::size_t m = p.V.dim();
  BilinearMap act(fs, 1, m, m);
  for (std::size_t j = 0; j < m; ++j) act.set_basis(0, j, p.xi.col(j));
  BilinearMap f(fs, 1, 1, m);
  f.set_basis(0, 0, p.F);
  return twisted_product(p.V, 1, act, f);
}

std::vector<Matrix> split_sections(const CrossedData& cd, bool force) {
  const FieldSpec& fs = cd.field();
  if (!fs.is_prime_field())
    throw UnsupportedOverRationals("split_sections needs a prime field");
  const std::size_t n = cd.A.dim();
  const std::size_t m = cd.v_dim;
  const std::uint64_t p = fs.characteristic();
  double total = std::pow(static_cast<double>(p), static_cast<double>(n * m));
  if (!force && total > 1e8) throw SizeGuard("section space p^(n*m) too large");

  Algebra e = crossed_product(cd);
  std::vector<Matrix> sections;
  std::vector<std::uint64_t> digits(n * m, 0);
  while (true) {
    Matrix s(fs, m + n, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        s.at(i, j) = Scalar::of_int(fs, static_cast<long>(digits[i * n + j]));
    for (std::size_t j = 0; j < n; ++j) s.at(m + j, j) = Scalar::one(fs);
    if (is_algebra_morphism(cd.A, e, s)) sections.push_back(s);
    std::size_t i = digits.size();
    bool carried = false;
    while (i > 0) {
      --i;
      if (++digits[i] < p) {
        carried = true;
        break;
      }
      digits[i] = 0;
    }
    if (!carried) break;
    if (digits.empty()) break;
  }
  return sections;
}

namespace detail {

std::string maps_key(const CrossedData& cd) {
  if (!cd.field().is_prime_field())
    throw UnsupportedOverRationals("maps_key needs a prime field");
  const std::size_t n = cd.A.dim();
  const std::size_t m = cd.v_dim;
  std::string key;
  key.reserve(4 * (n * m * m + n * n * m + m * m * m));
  for (const auto& x : cd.act.entries()) append_residue_key(key, x.residue());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        append_residue_key(key, cd.f.t(i, j, k).residue());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        append_residue_key(key, cd.mult_v.t(i, j, k).residue());
  return key;
}

}  // namespace detail

}  // namespace fouralg
