#include "fouralg/morphgal.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace fouralg {

MorphismPair pair_identity(const FieldSpec& fs, std::size_t a_dim,
                           std::size_t v_dim) {
  return MorphismPair{Matrix(fs, v_dim, a_dim), Matrix::identity(fs, a_dim)};
}

MorphismPair pair_mul(const MorphismPair& p, const MorphismPair& q) {
  return MorphismPair{/*r=*/[&] {
                        Matrix r = p.r.mul(q.alpha);
                        for (std::size_t i = 0; i < r.rows(); ++i)
                          for (std::size_t j = 0; j < r.cols(); ++j)
                            r.at(i, j) += q.r.at(i, j);
                        return r;
                      }(),
                      p.alpha.mul(q.alpha)};
}

MorphismPair pair_inverse(const MorphismPair& p) {
  auto inv = p.alpha.inverse();
  if (!inv) throw Error("pair_inverse: alpha is not invertible");
  Matrix r = p.r.mul(*inv);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r.at(i, j) = -r.at(i, j);
  return MorphismPair{std::move(r), std::move(*inv)};
}

bool pair_less(const MorphismPair& p, const MorphismPair& q) {
  if (p.alpha != q.alpha) return p.alpha.lex_less(q.alpha);
  return p.r.lex_less(q.r);
}

Matrix psi_of_pair(const MorphismPair& p, std::size_t v_dim) {
  const FieldSpec& fs = p.alpha.field();
  const std::size_t n = p.alpha.rows();
  Matrix psi(fs, v_dim + n, v_dim + n);
  for (std::size_t i = 0; i < v_dim; ++i) psi.at(i, i) = Scalar::one(fs);
  for (std::size_t i = 0; i < v_dim; ++i)
    for (std::size_t j = 0; j < n; ++j) psi.at(i, v_dim + j) = p.r.at(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      psi.at(v_dim + i, v_dim + j) = p.alpha.at(i, j);
  return psi;
}

namespace {

void check_enum_budget(const FieldSpec& fs, std::size_t exponent, bool force,
                       const char* what) {
  if (!fs.is_prime_field())
    throw UnsupportedOverRationals(std::string(what) +
                                   " needs a prime field");
  if (!force && power_count(fs.characteristic(), exponent) > 1e8)
    throw SizeGuard(std::string(what) + ": candidate space exceeds budget");
}

std::vector<Matrix> endomorphisms_impl(const Algebra& a, bool automorphisms,
                                       bool force) {
  const FieldSpec& fs = a.field();
  const std::size_t n = a.dim();
  check_enum_budget(fs, n * n, force, "endomorphism enumeration");
  std::vector<Matrix> out;
  for_each_vector(fs, n * n, [&](const Vec& flat) {
    Matrix m(fs, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = flat[i * n + j];
    if (automorphisms && !m.invertible()) return;
    if (is_algebra_morphism(a, a, m)) out.push_back(std::move(m));
  });
  return out;
}

/// (M1)-(M2) on basis elements for a fixed endomorphism alpha and map r.
bool pair_satisfies(const CrossedData& cs, const CrossedData& cs2,
                    const Matrix& r, const Matrix& alpha) {
  const FieldSpec& fs = cs.field();
  const std::size_t n = cs.A.dim();
  const std::size_t m = cs.v_dim;
  for (std::size_t i = 0; i < n; ++i) {
    Vec alpha_a = alpha.col(i);
    Vec r_a = r.col(i);
    for (std::size_t j = 0; j < m; ++j) {
      Vec x = unit_vec(fs, m, j);
      Vec rhs = add(cs2.act.apply(alpha_a, x), cs2.mult_v.apply(r_a, x));
      if (cs.act.apply_basis(i, j) != rhs) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec alpha_a = alpha.col(i);
    Vec r_a = r.col(i);
    for (std::size_t j = i; j < n; ++j) {
      Vec alpha_b = alpha.col(j);
      Vec r_b = r.col(j);
      Vec rhs = cs2.f.apply(alpha_a, alpha_b);
      rhs = add(rhs, cs2.act.apply(alpha_a, r_b));
      rhs = add(rhs, cs2.act.apply(alpha_b, r_a));
      rhs = add(rhs, cs2.mult_v.apply(r_a, r_b));
      rhs = sub(rhs, r.apply(cs.A.basis_product(i, j)));
      if (cs.f.apply_basis(i, j) != rhs) return false;
    }
  }
  return true;
}

std::vector<MorphismPair> pairs_over_alphas(const CrossedData& cs,
                                            const CrossedData& cs2,
                                            const std::vector<Matrix>& alphas,
                                            bool force) {
  const FieldSpec& fs = cs.field();
  const std::size_t n = cs.A.dim();
  const std::size_t m = cs.v_dim;
  if (!force &&
      power_count(fs.characteristic(), n * m) *
              static_cast<double>(std::max<std::size_t>(alphas.size(), 1)) >
          1e8)
    throw SizeGuard("stabilizing-pair search exceeds budget");
  std::vector<MorphismPair> out;
  for (const Matrix& alpha : alphas) {
    for_each_vector(fs, m * n, [&](const Vec& flat) {
      Matrix r(fs, m, n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = flat[i * n + j];
      if (pair_satisfies(cs, cs2, r, alpha))
        out.push_back(MorphismPair{std::move(r), alpha});
    });
  }
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

std::string matrix_key(const Matrix& m) {
  std::string key;
  key.reserve(4 * m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      append_residue_key(key, m.at(i, j).residue());
  return key;
}

}  // namespace

std::vector<Matrix> algebra_endomorphisms(const Algebra& a, bool force) {
  return endomorphisms_impl(a, /*automorphisms=*/false, force);
}

std::vector<Matrix> algebra_automorphisms(const Algebra& a, bool force) {
  return endomorphisms_impl(a, /*automorphisms=*/true, force);
}

std::vector<MorphismPair> stabilizing_pairs(const CrossedData& cs,
                                            const CrossedData& cs2,
                                            bool force) {
  if (!same_shape(cs, cs2))
    throw ShapeError("stabilizing_pairs: systems have different shapes");
  return pairs_over_alphas(cs, cs2, algebra_endomorphisms(cs.A, force),
                           force);
}

StabilizingMorphisms stabilizing_morphisms(const CrossedData& cs,
                                           const CrossedData& cs2,
                                           bool force) {
  if (!same_shape(cs, cs2))
    throw ShapeError("stabilizing_morphisms: systems have different shapes");
  if (!(cs.mult_v == cs2.mult_v))
    return StabilizingMorphisms{StabilizingStatus::DifferentMultV, {}};
  return StabilizingMorphisms{StabilizingStatus::Comparable,
                              stabilizing_pairs(cs, cs2, force)};
}

GaloisGroup galois_group(const CrossedData& cs, bool force) {
  std::vector<MorphismPair> elems =
      pairs_over_alphas(cs, cs, algebra_automorphisms(cs.A, force), force);

  // Sanity: closure, identity and inverses under the pair multiplication.
  std::map<std::string, std::size_t> index;
  auto key = [&](const MorphismPair& p) {
    return matrix_key(p.alpha) + matrix_key(p.r);
  };
  for (std::size_t i = 0; i < elems.size(); ++i) index[key(elems[i])] = i;
  MorphismPair id = pair_identity(cs.field(), cs.A.dim(), cs.v_dim);
  if (!index.count(key(id)))
    throw Error("galois_group: identity element missing");
  for (const auto& p : elems) {
    if (!index.count(key(pair_inverse(p))))
      throw Error("galois_group: inverse missing");
    for (const auto& q : elems)
      if (!index.count(key(pair_mul(p, q))))
        throw Error("galois_group: not closed under multiplication");
  }
  return GaloisGroup{cs, std::move(elems)};
}

bool verify_galois_isomorphism(const CrossedData& cs, bool force) {
  const FieldSpec& fs = cs.field();
  const std::size_t n = cs.A.dim();
  const std::size_t m = cs.v_dim;
  check_enum_budget(fs, (m + n) * n, force, "automorphism enumeration");

  Algebra e = crossed_product(cs);

  // Independent side: all invertible algebra endomorphisms of the crossed
  // product whose restriction to the V coordinates is the identity.
  std::vector<std::string> fixing_keys;
  for_each_vector(fs, (m + n) * n, [&](const Vec& flat) {
    Matrix psi(fs, m + n, m + n);
    for (std::size_t i = 0; i < m; ++i) psi.at(i, i) = Scalar::one(fs);
    for (std::size_t i = 0; i < m + n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        psi.at(i, m + j) = flat[i * n + j];
    if (!psi.invertible()) return;
    if (!is_algebra_morphism(e, e, psi)) return;
    fixing_keys.push_back(matrix_key(psi));
  });
  std::sort(fixing_keys.begin(), fixing_keys.end());

  GaloisGroup g = galois_group(cs, force);
  std::vector<std::string> pair_keys;
  std::vector<Matrix> psis;
  for (const auto& p : g.elements) {
    psis.push_back(psi_of_pair(p, m));
    pair_keys.push_back(matrix_key(psis.back()));
  }
  std::sort(pair_keys.begin(), pair_keys.end());
  if (pair_keys != fixing_keys) return false;
  if (std::adjacent_find(pair_keys.begin(), pair_keys.end()) !=
      pair_keys.end())
    return false;  // psi_of_pair must be injective for a bijection

  // Homomorphism: psi(p q) = psi(p) psi(q) on all element pairs.
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    for (std::size_t j = 0; j < g.elements.size(); ++j)
      if (psi_of_pair(pair_mul(g.elements[i], g.elements[j]), m) !=
          psis[i].mul(psis[j]))
        return false;
  return true;
}

}  // namespace fouralg
