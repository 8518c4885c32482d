#ifndef FOURALG_LINALG_HPP
#define FOURALG_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fouralg/field.hpp"

namespace fouralg {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& fs, std::size_t n);
Vec unit_vec(const FieldSpec& fs, std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
void axpy(const Scalar& c, const Vec& x, Vec& y);  // y += c*x
bool is_zero_vec(const Vec& v);
bool vec_less(const Vec& a, const Vec& b);  // lexicographic

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix(const FieldSpec& fs, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& fs, std::size_t n);
  static Matrix from_rows(const FieldSpec& fs, const std::vector<Vec>& rows);
  static Matrix from_cols(const FieldSpec& fs, std::size_t rows,
                          const std::vector<Vec>& cols);

  const FieldSpec& field() const { return fs_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Matrix transpose() const;
  Matrix mul(const Matrix& o) const;
  Vec apply(const Vec& x) const;  // matrix * column vector
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool lex_less(const Matrix& o) const;

  std::size_t rank() const;
  bool invertible() const;
  std::optional<Matrix> inverse() const;

  /// Reduced row echelon form; pivots receives the pivot column of each
  /// nonzero row.  Deterministic: first nonzero entry scanning top-down.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;

  /// Canonical basis of the right null space (reduced echelon convention:
  /// one vector per free column, that coordinate set to 1).
  std::vector<Vec> kernel_basis() const;

  /// Echelon basis of the column space.
  std::vector<Vec> image_basis() const;

 private:
  FieldSpec fs_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

/// Full solution set of m*x = b: one particular solution plus a kernel basis.
struct AffineSolution {
  Vec particular;
  std::vector<Vec> kernel;
};

/// Returns nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& b);

/// Subspace of k^ambient given by an echelon (RREF) basis.
struct Subspace {
  std::size_t ambient_dim;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const Vec& v) const;
};

/// Echelonize a spanning set into a canonical Subspace.
Subspace span(const FieldSpec& fs, std::size_t ambient_dim,
              const std::vector<Vec>& vectors);

/// Reduce v modulo the subspace: zero out its coordinates at the pivot
/// columns of the echelon basis.  A canonical retraction: vectors are in the
/// same coset iff they reduce to the same vector.
Vec reduce_mod(const Subspace& s, const Vec& v);

/// Appends a residue to a byte key as 4 big-endian bytes, so byte-wise
/// lexicographic order on keys matches numeric order on residue sequences.
void append_residue_key(std::string& key, std::uint64_t residue);

/// Calls fn for every vector of F_p^len, in lexicographic residue order.
void for_each_vector(const FieldSpec& fs, std::size_t len,
                     const std::function<void(const Vec&)>& fn);

/// p^e as a double, for size-guard estimates.
double power_count(std::uint64_t p, std::size_t e);

/// Canonical coset representatives of k^n / span(subspace_basis) over F_p:
/// the lexicographically least member of each coset, in lexicographic order.
std::vector<Vec> quotient_representatives(const FieldSpec& fs,
                                          const std::vector<Vec>& subspace_basis,
                                          std::size_t ambient_dim,
                                          bool force = false);

}  // namespace fouralg

#endif
