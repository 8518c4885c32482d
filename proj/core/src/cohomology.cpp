#include "fouralg/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fouralg {

namespace {

constexpr double kBudget = 1e8;
constexpr double kRepresentativeCap = 1e5;

void budget_guard(const FieldSpec& fs, std::size_t exponent, bool force,
                  const char* what) {
  if (!fs.is_prime_field())
    throw UnsupportedOverRationals(std::string(what) +
                                   " needs a prime field");
  if (!force && power_count(fs.characteristic(), exponent) > kBudget)
    throw SizeGuard(std::string(what) + ": candidate space exceeds budget");
}

std::size_t sym_dim(std::size_t n, std::size_t m) {
  return n * (n + 1) / 2 * m;
}

Matrix matrix_from_flat(const FieldSpec& fs, std::size_t rows,
                        std::size_t cols, const Vec& flat) {
  Matrix m(fs, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = flat[i * cols + j];
  return m;
}

BilinearMap act_from_flat(const FieldSpec& fs, std::size_t n, std::size_t m,
                          const Vec& flat) {
  BilinearMap act(fs, n, m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        act.t(i, j, k) = flat[(i * m + j) * m + k];
  return act;
}

// CS3 bidegree (1,3) component, the only crossed-system condition free of f.
bool act_condition_13(const Algebra& a, const BilinearMap& act,
                      const BilinearMap& mult_v) {
  const FieldSpec& fs = a.field();
  const Scalar two = Scalar::of_int(fs, 2);
  return polarization_vanishes(
      fs, {PolarizationVar{a.dim(), 1}, PolarizationVar{mult_v.left_dim(), 3}},
      mult_v.out_dim(), [&](const std::vector<Vec>& v) {
        Vec r = mult_v.apply(mult_v.apply(v[1], v[1]), act.apply(v[0], v[1]));
        return scale(two, r);
      });
}

// Polarized values of the CS3 components that are linear in f: bidegrees
// (2,2) and (3,1), concatenated.
Vec f_linear_conditions(const Algebra& a, const BilinearMap& act,
                        const BilinearMap& f, const BilinearMap& mult_v) {
  const FieldSpec& fs = a.field();
  const std::size_t n = a.dim();
  const std::size_t m = mult_v.left_dim();
  const Scalar two = Scalar::of_int(fs, 2);
  Vec out = polarization_values(
      fs, {PolarizationVar{n, 2}, PolarizationVar{m, 2}}, m,
      [&](const std::vector<Vec>& v) {
        const Vec& av = v[0];
        const Vec& xv = v[1];
        Vec x2 = mult_v.apply(xv, xv);
        Vec ax = act.apply(av, xv);
        Vec r = act.apply(a.square(av), x2);
        r = add(r, mult_v.apply(x2, f.apply(av, av)));
        axpy(two, mult_v.apply(ax, ax), r);
        return r;
      });
  Vec v31 = polarization_values(
      fs, {PolarizationVar{n, 3}, PolarizationVar{m, 1}}, m,
      [&](const std::vector<Vec>& v) {
        const Vec& av = v[0];
        Vec ax = act.apply(av, v[1]);
        Vec r = mult_v.apply(ax, f.apply(av, av));
        r = add(r, act.apply(a.square(av), ax));
        return scale(two, r);
      });
  out.insert(out.end(), v31.begin(), v31.end());
  return out;
}

bool cs2_holds(const Algebra& a, const BilinearMap& act, const BilinearMap& f,
               const BilinearMap& mult_v) {
  const FieldSpec& fs = a.field();
  const Scalar two = Scalar::of_int(fs, 2);
  return polarization_vanishes(
      fs, {PolarizationVar{a.dim(), 4}}, mult_v.out_dim(),
      [&](const std::vector<Vec>& v) {
        Vec a2 = a.square(v[0]);
        Vec faa = f.apply(v[0], v[0]);
        Vec r = f.apply(a2, a2);
        r = add(r, mult_v.apply(faa, faa));
        axpy(two, act.apply(a2, faa), r);
        return r;
      });
}

/// All valid crossed systems of a by the fixed kernel 4-algebra, keyed by
/// their canonical serialization.  For every action candidate, the f-linear
/// conditions are solved exactly and only the (quadratic) CS2 residual is
/// filtered per solution.
std::map<std::string, CrossedData> stratum_systems(const Algebra& a,
                                                   const Algebra& v_alg) {
  const FieldSpec& fs = a.field();
  const std::size_t n = a.dim();
  const std::size_t m = v_alg.dim();
  const std::size_t fd = sym_dim(n, m);
  const BilinearMap& mult_v = v_alg.mult();
  std::map<std::string, CrossedData> out;

  for_each_vector(fs, n * m * m, [&](const Vec& act_flat) {
    BilinearMap act = act_from_flat(fs, n, m, act_flat);
    if (!act_condition_13(a, act, mult_v)) return;

    BilinearMap f_zero(fs, n, n, m);
    Vec base = f_linear_conditions(a, act, f_zero, mult_v);
    Matrix sys(fs, base.size(), fd);
    for (std::size_t k = 0; k < fd; ++k) {
      BilinearMap fk =
          unflatten_symmetric(fs, n, m, unit_vec(fs, fd, k));
      Vec col = sub(f_linear_conditions(a, act, fk, mult_v), base);
      for (std::size_t r = 0; r < col.size(); ++r) sys.at(r, k) = col[r];
    }
    Vec rhs = base;
    for (auto& x : rhs) x = -x;
    auto sol = solve_affine(sys, rhs);
    if (!sol) return;

    for_each_vector(fs, sol->kernel.size(), [&](const Vec& coeffs) {
      Vec f_flat = sol->particular;
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        axpy(coeffs[i], sol->kernel[i], f_flat);
      BilinearMap f = unflatten_symmetric(fs, n, m, f_flat);
      if (!cs2_holds(a, act, f, mult_v)) return;
      CrossedData cd{a, m, act, f, mult_v};
      std::string key = detail::maps_key(cd);
      out.emplace(std::move(key), std::move(cd));
    });
  });
  return out;
}

std::vector<CohomologyClass> orbit_partition(
    std::map<std::string, CrossedData> systems) {
  std::vector<CohomologyClass> classes;
  if (systems.empty()) return classes;
  const FieldSpec& fs = systems.begin()->second.field();
  const std::size_t n = systems.begin()->second.A.dim();
  const std::size_t m = systems.begin()->second.v_dim;
  while (!systems.empty()) {
    // The first remaining key is the orbit's canonical representative: the
    // action preserves orbits, so the whole orbit is still present and the
    // global minimum of the remaining keys is the orbit minimum.
    CrossedData seed = systems.begin()->second;
    std::set<std::string> orbit;
    for_each_vector(fs, m * n, [&](const Vec& r_flat) {
      Matrix r = matrix_from_flat(fs, m, n, r_flat);
      orbit.insert(detail::maps_key(transform_by_r(seed, r)));
    });
    for (const std::string& key : orbit) {
      auto it = systems.find(key);
      if (it == systems.end())
        throw Error("orbit of a valid system left the valid set");
      systems.erase(it);
    }
    classes.push_back(CohomologyClass{std::move(seed), orbit.size()});
  }
  return classes;
}

/// Z^2 / B^2 from a condition matrix (rows: linear conditions on flattened
/// symmetric maps) and a coboundary matrix (columns: coboundaries of the
/// unit maps r).
QuotientDesc linear_quotient(const FieldSpec& fs, const Matrix& conditions,
                             const Matrix& coboundaries) {
  QuotientDesc q;
  std::vector<Vec> z_basis = conditions.kernel_basis();
  std::vector<Vec> b_basis = coboundaries.image_basis();
  for (const Vec& b : b_basis)
    if (!is_zero_vec(conditions.apply(b)))
      throw Error("coboundary outside the cocycle space");
  q.z2_dim = z_basis.size();
  q.b2_dim = b_basis.size();
  q.h2_dim = q.z2_dim - q.b2_dim;

  if (fs.is_prime_field() &&
      power_count(fs.characteristic(), q.h2_dim) <= kRepresentativeCap) {
    // z -> reduce_mod(B, z) is linear and picks the lexicographically least
    // member of each coset; its image over Z^2 lists every class once.
    Subspace b{conditions.cols(), b_basis};
    std::vector<Vec> reduced;
    for (const Vec& z : z_basis) reduced.push_back(reduce_mod(b, z));
    Subspace w = span(fs, conditions.cols(), reduced);
    if (w.dim() != q.h2_dim)
      throw Error("quotient dimension mismatch");
    for_each_vector(fs, w.dim(), [&](const Vec& coeffs) {
      Vec v = zero_vec(fs, conditions.cols());
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        axpy(coeffs[i], w.basis[i], v);
      q.representatives.push_back(std::move(v));
    });
    std::sort(q.representatives.begin(), q.representatives.end(), vec_less);
  }
  return q;
}

Scalar dot(const Vec& a, const Vec& b) {
  Scalar s = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool lambda_identity_holds(const Algebra& a, const Vec& lambda) {
  return polarization_vanishes(
      a.field(), {PolarizationVar{a.dim(), 3}}, 1,
      [&](const std::vector<Vec>& v) {
        return Vec{dot(lambda, v[0]) * dot(lambda, a.square(v[0]))};
      });
}

/// Condition matrix of Z^2_lambda: f(a^2,a^2) + 2 lambda(a^2) f(a,a) = 0.
Matrix lambda_cocycle_matrix(const Algebra& a, const Vec& lambda) {
  const FieldSpec& fs = a.field();
  const std::size_t n = a.dim();
  const std::size_t fd = sym_dim(n, 1);
  const Scalar two = Scalar::of_int(fs, 2);
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < fd; ++k) {
    BilinearMap fk = unflatten_symmetric(fs, n, 1, unit_vec(fs, fd, k));
    cols.push_back(polarization_values(
        fs, {PolarizationVar{n, 4}}, 1, [&](const std::vector<Vec>& v) {
          Vec a2 = a.square(v[0]);
          Scalar s = fk.apply(a2, a2)[0];
          s += two * dot(lambda, a2) * fk.apply(v[0], v[0])[0];
          return Vec{s};
        }));
  }
  return Matrix::from_cols(fs, cols.empty() ? 0 : cols[0].size(), cols);
}

Matrix lambda_coboundary_matrix(const Algebra& a, const Vec& lambda) {
  const FieldSpec& fs = a.field();
  const std::size_t n = a.dim();
  const std::size_t fd = sym_dim(n, 1);
  std::vector<Vec> cols;
  for (std::size_t u = 0; u < n; ++u) {
    Vec r = unit_vec(fs, n, u);
    Vec col(fd, Scalar::zero(fs));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Scalar s = lambda[i] * r[j] + lambda[j] * r[i];
        s -= dot(r, a.basis_product(i, j));
        col[idx++] = s;
      }
    cols.push_back(std::move(col));
  }
  return Matrix::from_cols(fs, fd, cols);
}

std::string serialize_ct(const CTTriple& t) {
  std::string key;
  const std::size_t m = t.F.size();
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      append_residue_key(key, t.theta.at(k, j).residue());
  for (const auto& x : t.F) append_residue_key(key, x.residue());
  return key;
}

}  // namespace

std::size_t CohomologyClassSet::total_systems() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.orbit_size;
  return total;
}

Vec flatten_symmetric(const BilinearMap& f) {
  if (f.left_dim() != f.right_dim() || !f.is_symmetric())
    throw NotSymmetric("flatten_symmetric needs a symmetric map");
  const std::size_t n = f.left_dim();
  const std::size_t m = f.out_dim();
  Vec flat;
  flat.reserve(sym_dim(n, m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) flat.push_back(f.t(i, j, k));
  return flat;
}

BilinearMap unflatten_symmetric(const FieldSpec& fs, std::size_t n,
                                std::size_t m, const Vec& flat) {
  if (flat.size() != sym_dim(n, m))
    throw ShapeError("unflatten_symmetric: wrong length");
  BilinearMap f(fs, n, n, m);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec value(flat.begin() + idx, flat.begin() + idx + m);
      f.set_symmetric(i, j, value);
      idx += m;
    }
  return f;
}

CrossedData transform_by_r(const CrossedData& cs_prime, const Matrix& r) {
  const FieldSpec& fs = cs_prime.field();
  const std::size_t n = cs_prime.A.dim();
  const std::size_t m = cs_prime.v_dim;
  if (r.rows() != m || r.cols() != n)
    throw ShapeError("transform_by_r: r must be dim V x dim A");
  CrossedData out = cs_prime;
  for (std::size_t i = 0; i < n; ++i) {
    Vec ri = r.col(i);
    for (std::size_t j = 0; j < m; ++j) {
      Vec v = add(cs_prime.act.apply_basis(i, j),
                  cs_prime.mult_v.apply(ri, unit_vec(fs, m, j)));
      out.act.set_basis(i, j, v);
    }
    for (std::size_t j = i; j < n; ++j) {
      Vec rj = r.col(j);
      Vec v = cs_prime.f.apply_basis(i, j);
      v = add(v, cs_prime.act.apply(unit_vec(fs, n, i), rj));
      v = add(v, cs_prime.act.apply(unit_vec(fs, n, j), ri));
      v = add(v, cs_prime.mult_v.apply(ri, rj));
      v = sub(v, r.apply(cs_prime.A.basis_product(i, j)));
      out.f.set_symmetric(i, j, v);
    }
  }
  return out;
}

std::optional<Matrix> are_cohomologous(const CrossedData& cs,
                                       const CrossedData& cs2, bool force) {
  if (!same_shape(cs, cs2))
    throw ShapeError("are_cohomologous: systems have different shapes");
  if (!(cs.mult_v == cs2.mult_v)) return std::nullopt;
  const FieldSpec& fs = cs.field();
  const std::size_t n = cs.A.dim();
  const std::size_t m = cs.v_dim;
  budget_guard(fs, n * m, force, "are_cohomologous");

  // The action condition is linear in r: act(i,j) = act'(i,j) + r(e_i) . e_j.
  auto act_residual = [&](const Matrix& r) {
    Vec res;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Vec v = add(cs2.act.apply_basis(i, j),
                    cs2.mult_v.apply(r.col(i), unit_vec(fs, m, j)));
        v = sub(v, cs.act.apply_basis(i, j));
        res.insert(res.end(), v.begin(), v.end());
      }
    return res;
  };
  const std::size_t rd = m * n;
  Vec base = act_residual(Matrix(fs, m, n));
  Matrix sys(fs, base.size(), rd);
  for (std::size_t k = 0; k < rd; ++k) {
    Matrix rk = matrix_from_flat(fs, m, n, unit_vec(fs, rd, k));
    Vec col = sub(act_residual(rk), base);
    for (std::size_t row = 0; row < col.size(); ++row) sys.at(row, k) = col[row];
  }
  Vec rhs = base;
  for (auto& x : rhs) x = -x;
  auto sol = solve_affine(sys, rhs);
  if (!sol) return std::nullopt;

  // The cocycle condition is quadratic in r: filter the affine candidates.
  auto cocycle_ok = [&](const Matrix& r) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Vec v = cs2.f.apply_basis(i, j);
        v = add(v, cs2.act.apply(unit_vec(fs, n, i), r.col(j)));
        v = add(v, cs2.act.apply(unit_vec(fs, n, j), r.col(i)));
        v = add(v, cs2.mult_v.apply(r.col(i), r.col(j)));
        v = sub(v, r.apply(cs.A.basis_product(i, j)));
        if (v != cs.f.apply_basis(i, j)) return false;
      }
    return true;
  };
  std::optional<Matrix> best;
  for_each_vector(fs, sol->kernel.size(), [&](const Vec& coeffs) {
    Vec r_flat = sol->particular;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      axpy(coeffs[i], sol->kernel[i], r_flat);
    Matrix r = matrix_from_flat(fs, m, n, r_flat);
    if (!cocycle_ok(r)) return;
    if (!best || r.lex_less(*best)) best = std::move(r);
  });
  return best;
}

std::vector<Algebra> four_algebra_tables(const FieldSpec& fs, std::size_t dim,
                                         bool force) {
  budget_guard(fs, sym_dim(dim, dim), force, "four_algebra_tables");
  std::vector<Algebra> tables;
  for_each_vector(fs, sym_dim(dim, dim), [&](const Vec& flat) {
    Algebra a(fs, dim);
    a.mult() = unflatten_symmetric(fs, dim, dim, flat);
    if (is_four_algebra(a).ok()) tables.push_back(std::move(a));
  });
  return tables;
}

CohomologyClassSet h2_nab(const Algebra& a, const Algebra& v_alg,
                          bool force) {
  if (a.field() != v_alg.field())
    throw FieldMismatch("h2_nab: mixed fields");
  const std::size_t n = a.dim();
  const std::size_t m = v_alg.dim();
  budget_guard(a.field(), n * m * m + sym_dim(n, m), force, "h2_nab");
  CohomologyClassSet out;
  out.decomposition_label = "multV";
  if (!is_four_algebra(v_alg).ok()) return out;  // vacuous stratum
  out.classes = orbit_partition(stratum_systems(a, v_alg));
  return out;
}

CohomologyClassSet gh2(const Algebra& a, std::size_t v_dim, bool force) {
  const FieldSpec& fs = a.field();
  const std::size_t n = a.dim();
  const std::size_t m = v_dim;
  budget_guard(fs, n * m * m + sym_dim(n, m) + sym_dim(m, m), force, "gh2");
  CohomologyClassSet out;
  out.decomposition_label = "multV";
  for (const Algebra& v_alg : four_algebra_tables(fs, m, force)) {
    std::vector<CohomologyClass> stratum =
        orbit_partition(stratum_systems(a, v_alg));
    for (auto& c : stratum) out.classes.push_back(std::move(c));
  }
  return out;
}

QuotientDesc h2_action(const Algebra& a, std::size_t v_dim,
                       const BilinearMap& act) {
  const FieldSpec& fs = a.field();
  const std::size_t n = a.dim();
  const std::size_t m = v_dim;
  if (act.left_dim() != n || act.right_dim() != m || act.out_dim() != m)
    throw ShapeError("h2_action: action shape is not A x V -> V");
  if (!is_module(a, m, act))
    throw NotAModule("h2_action: action violates a^2 |> (a |> x) = 0");
  const std::size_t fd = sym_dim(n, m);
  const Scalar two = Scalar::of_int(fs, 2);

  // Cocycle condition f(a^2,a^2) + 2 a^2 |> f(a,a) = 0, linear in f.
  std::vector<Vec> cond_cols;
  for (std::size_t k = 0; k < fd; ++k) {
    BilinearMap fk = unflatten_symmetric(fs, n, m, unit_vec(fs, fd, k));
    cond_cols.push_back(polarization_values(
        fs, {PolarizationVar{n, 4}}, m, [&](const std::vector<Vec>& v) {
          Vec a2 = a.square(v[0]);
          Vec r = fk.apply(a2, a2);
          axpy(two, act.apply(a2, fk.apply(v[0], v[0])), r);
          return r;
        }));
  }
  std::size_t rows = cond_cols.empty() ? 0 : cond_cols[0].size();
  Matrix conditions = Matrix::from_cols(fs, rows, cond_cols);

  // Coboundaries f = delta r with (delta r)(a,b) = a|>r(b) + b|>r(a) - r(ab).
  std::vector<Vec> cob_cols;
  for (std::size_t flat = 0; flat < n * m; ++flat) {
    Matrix r = matrix_from_flat(fs, m, n, unit_vec(fs, n * m, flat));
    BilinearMap d(fs, n, n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Vec v = act.apply(unit_vec(fs, n, i), r.col(j));
        v = add(v, act.apply(unit_vec(fs, n, j), r.col(i)));
        v = sub(v, r.apply(a.basis_product(i, j)));
        d.set_symmetric(i, j, v);
      }
    cob_cols.push_back(flatten_symmetric(d));
  }
  return linear_quotient(fs, conditions, Matrix::from_cols(fs, fd, cob_cols));
}

QuotientDesc h2_lambda(const Algebra& a, const Vec& lambda) {
  if (lambda.size() != a.dim())
    throw ShapeError("h2_lambda: functional has wrong length");
  if (!lambda_identity_holds(a, lambda))
    throw InvalidLambda("h2_lambda: lambda(a) lambda(a^2) != 0");
  return linear_quotient(a.field(), lambda_cocycle_matrix(a, lambda),
                         lambda_coboundary_matrix(a, lambda));
}

std::vector<CFPair> cf_pairs(const Algebra& a, bool force) {
  const FieldSpec& fs = a.field();
  const std::size_t n = a.dim();
  budget_guard(fs, n + sym_dim(n, 1), force, "cf_pairs");
  std::vector<CFPair> out;
  for_each_vector(fs, n, [&](const Vec& lambda) {
    if (!lambda_identity_holds(a, lambda)) return;
    std::vector<Vec> z = lambda_cocycle_matrix(a, lambda).kernel_basis();
    std::vector<Vec> fs_list;
    for_each_vector(fs, z.size(), [&](const Vec& coeffs) {
      Vec f = zero_vec(fs, sym_dim(n, 1));
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        axpy(coeffs[i], z[i], f);
      fs_list.push_back(std::move(f));
    });
    std::sort(fs_list.begin(), fs_list.end(), vec_less);
    for (auto& f : fs_list) out.push_back(CFPair{lambda, std::move(f)});
  });
  return out;
}

Algebra build_A_lambda_f(const Algebra& a, const CFPair& pair) {
  const FieldSpec& fs = a.field();
  const std::size_t n = a.dim();
  BilinearMap f = unflatten_symmetric(fs, n, 1, pair.f);
  Algebra out(fs, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vec v = zero_vec(fs, n + 1);
      Vec prod = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) v[k] = prod[k];
      v[n] = f.t(i, j, 0);
      out.set_product(i, j, v);
    }
    Vec v = zero_vec(fs, n + 1);
    v[n] = pair.lambda[i];
    out.set_product(i, n, v);
  }
  return out;  // g^2 = 0 by default
}

std::vector<CFStratum> cf_strata(const Algebra& a, bool force) {
  const FieldSpec& fs = a.field();
  budget_guard(fs, a.dim(), force, "cf_strata");
  std::vector<CFStratum> out;
  for_each_vector(fs, a.dim(), [&](const Vec& lambda) {
    if (!lambda_identity_holds(a, lambda)) return;
    out.push_back(CFStratum{lambda, h2_lambda(a, lambda)});
  });
  return out;
}

CohomologyClassSet gh2_via_cf(const Algebra& a, bool force) {
  const FieldSpec& fs = a.field();
  const std::size_t n = a.dim();
  CohomologyClassSet out;
  out.decomposition_label = "lambda";
  for (const CFStratum& stratum : cf_strata(a, force)) {
    BilinearMap act(fs, n, 1, 1);
    for (std::size_t i = 0; i < n; ++i) act.t(i, 0, 0) = stratum.lambda[i];
    std::size_t orbit =
        static_cast<std::size_t>(power_count(fs.characteristic(),
                                             stratum.h2.b2_dim));
    for (const Vec& rep : stratum.h2.representatives) {
      CrossedData cd{a, 1, act, unflatten_symmetric(fs, n, 1, rep),
                     BilinearMap(fs, 1, 1, 1)};
      out.classes.push_back(CohomologyClass{std::move(cd), orbit});
    }
  }
  return out;
}

std::vector<CTTriple> ct_triples(const Algebra& v_alg, bool force) {
  const FieldSpec& fs = v_alg.field();
  const std::size_t m = v_alg.dim();
  budget_guard(fs, m * m + m, force, "ct_triples");
  const Scalar two = Scalar::of_int(fs, 2);
  std::vector<CTTriple> out;
  for_each_vector(fs, m * m, [&](const Vec& theta_flat) {
    Matrix theta = matrix_from_flat(fs, m, m, theta_flat);
    // theta(x) . x^2 = 0, the F-free condition.
    bool ok3 = polarization_vanishes(
        fs, {PolarizationVar{m, 3}}, m, [&](const std::vector<Vec>& v) {
          return v_alg.product(theta.apply(v[0]), v_alg.square(v[0]));
        });
    if (!ok3) return;
    for_each_vector(fs, m, [&](const Vec& cap_f) {
      if (!is_zero_vec(v_alg.square(cap_f))) return;
      bool ok2 = polarization_vanishes(
          fs, {PolarizationVar{m, 2}}, m, [&](const std::vector<Vec>& v) {
            Vec tx = theta.apply(v[0]);
            Vec r = scale(two, v_alg.square(tx));
            r = add(r, v_alg.product(v_alg.square(v[0]), cap_f));
            return r;
          });
      if (!ok2) return;
      for (std::size_t j = 0; j < m; ++j)
        if (!is_zero_vec(v_alg.product(theta.col(j), cap_f))) return;
      out.push_back(CTTriple{theta, cap_f});
    });
  });
  return out;
}

std::vector<CTClass> ct_classes(const Algebra& v_alg, bool force) {
  const FieldSpec& fs = v_alg.field();
  const std::size_t m = v_alg.dim();
  const Scalar two = Scalar::of_int(fs, 2);
  std::map<std::string, CTTriple> pending;
  for (CTTriple& t : ct_triples(v_alg, force)) {
    std::string key = serialize_ct(t);
    pending.emplace(std::move(key), std::move(t));
  }
  std::vector<CTClass> classes;
  while (!pending.empty()) {
    CTTriple seed = pending.begin()->second;
    std::set<std::string> orbit;
    for_each_vector(fs, m, [&](const Vec& r) {
      Matrix theta = seed.theta;
      for (std::size_t j = 0; j < m; ++j) {
        Vec col = v_alg.product(r, unit_vec(fs, m, j));
        for (std::size_t k = 0; k < m; ++k) theta.at(k, j) += col[k];
      }
      Vec cap_f = seed.F;
      axpy(two, seed.theta.apply(r), cap_f);
      cap_f = add(cap_f, v_alg.square(r));
      orbit.insert(serialize_ct(CTTriple{std::move(theta), std::move(cap_f)}));
    });
    for (const std::string& key : orbit) {
      auto it = pending.find(key);
      if (it == pending.end())
        throw Error("orbit of a valid pair left the valid set");
      pending.erase(it);
    }
    classes.push_back(CTClass{std::move(seed), orbit.size()});
  }
  return classes;
}

CohomologyClassSet gh2_via_ct(const FieldSpec& fs, std::size_t v_dim,
                              bool force) {
  const std::size_t m = v_dim;
  budget_guard(fs, m * m + m + sym_dim(m, m), force, "gh2_via_ct");
  Algebra base = abelian(fs, 1);
  CohomologyClassSet out;
  out.decomposition_label = "multV";
  for (const Algebra& v_alg : four_algebra_tables(fs, m, force)) {
    for (const CTClass& c : ct_classes(v_alg, force)) {
      BilinearMap act(fs, 1, m, m);
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          act.t(0, j, k) = c.representative.theta.at(k, j);
      BilinearMap f(fs, 1, 1, m);
      f.set_basis(0, 0, c.representative.F);
      CrossedData cd{base, m, std::move(act), std::move(f), v_alg.mult()};
      out.classes.push_back(CohomologyClass{std::move(cd), c.orbit_size});
    }
  }
  return out;
}

QuotientDesc metabelian_h2(const FieldSpec& fs, std::size_t a_dim,
                           std::size_t v_dim, const BilinearMap& act) {
  const std::size_t n = a_dim;
  const std::size_t m = v_dim;
  if (act.left_dim() != n || act.right_dim() != m || act.out_dim() != m)
    throw ShapeError("metabelian_h2: action shape is not A x V -> V");
  const std::size_t fd = sym_dim(n, m);
  Matrix no_conditions(fs, 0, fd);  // every symmetric f is a cocycle
  std::vector<Vec> cob_cols;
  for (std::size_t flat = 0; flat < n * m; ++flat) {
    Matrix r = matrix_from_flat(fs, m, n, unit_vec(fs, n * m, flat));
    BilinearMap d(fs, n, n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Vec v = act.apply(unit_vec(fs, n, i), r.col(j));
        v = add(v, act.apply(unit_vec(fs, n, j), r.col(i)));
        d.set_symmetric(i, j, v);
      }
    cob_cols.push_back(flatten_symmetric(d));
  }
  return linear_quotient(fs, no_conditions,
                         Matrix::from_cols(fs, fd, cob_cols));
}

Algebra metabelian_product(std::size_t a_dim, std::size_t v_dim,
                           const BilinearMap& act, const BilinearMap& f) {
  const FieldSpec& fs = act.field();
  CrossedData cd{abelian(fs, a_dim), v_dim, act, f,
                 BilinearMap(fs, v_dim, v_dim, v_dim)};
  return crossed_product(cd);
}

}  // namespace fouralg
