#ifndef FOURALG_ALGEBRA_HPP
#define FOURALG_ALGEBRA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fouralg/linalg.hpp"
#include "fouralg/polarize.hpp"

namespace fouralg {

/// Bilinear map k^l x k^r -> k^o as a structure 3-tensor t[i][j][k]:
/// (e_i, e_j) maps to sum_k t[i][j][k] e_k.
class BilinearMap {
 public:
  BilinearMap(const FieldSpec& fs, std::size_t left_dim, std::size_t right_dim,
              std::size_t out_dim);

  const FieldSpec& field() const { return fs_; }
  std::size_t left_dim() const { return l_; }
  std::size_t right_dim() const { return r_; }
  std::size_t out_dim() const { return o_; }

  Scalar& t(std::size_t i, std::size_t j, std::size_t k) {
    return e_[(i * r_ + j) * o_ + k];
  }
  const Scalar& t(std::size_t i, std::size_t j, std::size_t k) const {
    return e_[(i * r_ + j) * o_ + k];
  }
  const std::vector<Scalar>& entries() const { return e_; }

  Vec apply_basis(std::size_t i, std::size_t j) const;
  Vec apply(const Vec& x, const Vec& y) const;
  void set_basis(std::size_t i, std::size_t j, const Vec& value);
  /// Sets (i,j) and (j,i) together; requires square left/right dims.
  void set_symmetric(std::size_t i, std::size_t j, const Vec& value);

  bool is_symmetric() const;
  bool is_zero() const;
  bool operator==(const BilinearMap& o) const;

 private:
  FieldSpec fs_;
  std::size_t l_, r_, o_;
  std::vector<Scalar> e_;
};

/// Finite-dimensional algebra given by its structure-constant tensor over a
/// fixed basis: e_i * e_j = sum_k c[i][j][k] e_k.
class Algebra {
 public:
  Algebra(const FieldSpec& fs, std::size_t dim);

  const FieldSpec& field() const { return fs_; }
  std::size_t dim() const { return mult_.left_dim(); }

  const BilinearMap& mult() const { return mult_; }
  BilinearMap& mult() { return mult_; }

  Vec basis_product(std::size_t i, std::size_t j) const {
    return mult_.apply_basis(i, j);
  }
  Vec product(const Vec& x, const Vec& y) const { return mult_.apply(x, y); }
  Vec square(const Vec& x) const { return mult_.apply(x, x); }
  /// Sets e_i * e_j = e_j * e_i = value.
  void set_product(std::size_t i, std::size_t j, const Vec& value) {
    mult_.set_symmetric(i, j, value);
  }

  bool operator==(const Algebra& o) const;

  std::vector<std::string> labels;

 private:
  FieldSpec fs_;
  BilinearMap mult_;
};

bool is_commutative(const Algebra& a);

struct FourAlgebraCheck {
  bool commutative = false;
  /// First basis triple (i, j, k) with c[i][j][k] != c[j][i][k], if any.
  std::optional<std::array<std::size_t, 3>> commutativity_witness;
  /// First basis quadruple i<=j<=k<=l violating the symmetrized pairing sum
  /// (e_i e_j)(e_k e_l) + (e_i e_k)(e_j e_l) + (e_i e_l)(e_j e_k) = 0.
  std::optional<std::array<std::size_t, 4>> quadruple_witness;

  bool ok() const { return commutative && !quadruple_witness; }
};

/// Checks commutativity plus the degree-4 identity (a^2)^2 = 0 via its full
/// linearization on basis quadruples (valid for char 0 or p >= 5).
FourAlgebraCheck is_four_algebra(const Algebra& a);

struct LinearizedIdentitiesReport {
  bool sq_times_prod;       // a^2 (a b) = 0
  bool sq_sq;               // a^2 b^2 + 2 (a b)^2 = 0
  bool sq_prod_prod;        // a^2 (b c) + 2 (a b)(a c) = 0
  bool pairing_sum;         // (ab)(cd) + (ac)(bd) + (ad)(bc) = 0
  bool all_pass() const {
    return sq_times_prod && sq_sq && sq_prod_prod && pairing_sum;
  }
};

LinearizedIdentitiesReport check_linearized_identities(const Algebra& a);

Subspace derived_algebra(const Algebra& a);

bool is_metabelian(const Algebra& a);

/// Module axiom a^2 |> (a |> x) = 0 for an action act: A x V -> V.
bool is_module(const Algebra& a, std::size_t v_dim, const BilinearMap& act);

// Builders for the named families (all outputs pass is_four_algebra).
Algebra abelian(const FieldSpec& fs, std::size_t n);
Algebra dim2_A1(const FieldSpec& fs);        // e1^2 = e2
Algebra dim2_A2(const FieldSpec& fs);        // e1 e2 = e2
Algebra heisenberg(const FieldSpec& fs, std::size_t n);  // dim 2n+1
/// Metabelian family Met_n^m(act, f): basis e_1..e_n, f_1..f_m with
/// e_i f_j = act(f_j, e_i) in k^n and f_j f_l = f(f_j, f_l) in k^n.
Algebra met(const FieldSpec& fs, std::size_t n, std::size_t m,
            const BilinearMap& act, const BilinearMap& f);
Algebra example33(const FieldSpec& fs, std::size_t n);  // e1 e2 = e_{n+1}

bool is_algebra_morphism(const Algebra& a, const Algebra& b,
                         const Matrix& phi);

/// Exhaustive GL_n(F_p) search for an isomorphism, lexicographically first.
/// Guarded at dim <= 3 unless force is set.
std::optional<Matrix> find_isomorphism(const Algebra& a, const Algebra& b,
                                       bool force = false);

}  // namespace fouralg

#endif
