#ifndef FOURALG_CLASSIFY_HPP
#define FOURALG_CLASSIFY_HPP

#include <vector>

#include "fouralg/cohomology.hpp"

namespace fouralg {

/// The algebra in the new basis whose i-th vector is column i of phi:
/// b_i b_j = phi^-1(phi(b_i) . phi(b_j)).
Algebra change_basis(const Algebra& a, const Matrix& phi);

/// All invertible n x n matrices over F_p in lexicographic order.
/// Guarded at p^(n^2) <= 1e8.
std::vector<Matrix> gl_matrices(const FieldSpec& fs, std::size_t n,
                                bool force = false);

struct ClassEntry {
  Algebra representative;  // lexicographically least table in the orbit
  std::size_t derived_dim;
  bool metabelian;
  /// classify_brute: number of multiplication tables in the orbit.
  /// classify_via_twisted: number of generated products merged here.
  std::size_t count;
};

struct ClassificationReport {
  std::size_t dim;
  FieldSpec field;
  std::vector<ClassEntry> classes;  // sorted by (derived_dim, table)

  std::size_t total_count() const;
};

/// Enumerates every commutative multiplication table of the given dimension,
/// filters the degree-4 identity and partitions the survivors into
/// basis-change orbits.  Guarded at dim <= 2 unless force is set.
ClassificationReport classify_brute(const FieldSpec& fs, std::size_t dim,
                                    bool force = false);

/// Classification through products over an abelian base: stratifies by the
/// derived-algebra dimension m, builds all crossed products of abelian
/// algebras of dimension dim - m by the 4-algebras of dimension m, keeps
/// those with derived dimension exactly m, and merges isomorphic results.
/// Produces the same class set as classify_brute.
ClassificationReport classify_via_twisted(const FieldSpec& fs,
                                          std::size_t dim,
                                          bool force = false);

}  // namespace fouralg

#endif
