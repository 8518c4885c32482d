#ifndef FOURALG_MORPHGAL_HPP
#define FOURALG_MORPHGAL_HPP

#include <vector>

#include "fouralg/crossed.hpp"

namespace fouralg {

/// A pair (r, alpha) with r: A -> V (m x n) and alpha: A -> A (n x n),
/// encoding the V-stabilizing linear map psi(x, a) = (x + r(a), alpha(a)).
struct MorphismPair {
  Matrix r;
  Matrix alpha;
};

MorphismPair pair_identity(const FieldSpec& fs, std::size_t a_dim,
                           std::size_t v_dim);

/// Semidirect-product multiplication (r, a) (r', a') = (r' + r a', a a').
/// Matches composition: psi_of_pair(pair_mul(p, q)) =
/// psi_of_pair(p) * psi_of_pair(q).
MorphismPair pair_mul(const MorphismPair& p, const MorphismPair& q);

/// Inverse (-r alpha^-1, alpha^-1); requires alpha invertible.
MorphismPair pair_inverse(const MorphismPair& p);

/// Deterministic total order: by alpha, then r, lexicographically.
bool pair_less(const MorphismPair& p, const MorphismPair& q);

/// The block matrix [I_m  r; 0  alpha] on V + A coordinates.
Matrix psi_of_pair(const MorphismPair& p, std::size_t v_dim);

/// All algebra endomorphisms (resp. automorphisms) of a, enumerated over
/// all n x n matrices in lexicographic order.  Guarded at p^(n^2) <= 1e8.
std::vector<Matrix> algebra_endomorphisms(const Algebra& a, bool force = false);
std::vector<Matrix> algebra_automorphisms(const Algebra& a, bool force = false);

enum class StabilizingStatus {
  Comparable,      // same kernel multiplication; pair list is meaningful
  DifferentMultV,  // no V-stabilizing morphisms can exist at all
};

struct StabilizingMorphisms {
  StabilizingStatus status;
  std::vector<MorphismPair> pairs;  // sorted by pair_less
};

/// All pairs (r, alpha) with alpha an algebra endomorphism of A such that
/// psi(x, a) = (x + r(a), alpha(a)) is an algebra morphism
/// from crossed_product(cs) to crossed_product(cs2):
///   (M1)  a |> x = alpha(a) |>' x + r(a) .' x
///   (M2)  f(a,b) = f'(alpha a, alpha b) + alpha(a) |>' r(b)
///                  + alpha(b) |>' r(a) + r(a) .' r(b) - r(ab).
std::vector<MorphismPair> stabilizing_pairs(const CrossedData& cs,
                                            const CrossedData& cs2,
                                            bool force = false);

/// stabilizing_pairs, with the kernel multiplications compared first:
/// different multiplications are reported distinctly from an empty search.
StabilizingMorphisms stabilizing_morphisms(const CrossedData& cs,
                                           const CrossedData& cs2,
                                           bool force = false);

struct GaloisGroup {
  CrossedData system;
  std::vector<MorphismPair> elements;  // sorted by pair_less

  std::size_t order() const { return elements.size(); }
};

/// The group of pairs (r, alpha) with alpha an automorphism of A satisfying
/// (M1)-(M2) against the system itself; isomorphic (via psi_of_pair) to the
/// group of automorphisms of the crossed product fixing V pointwise.
/// Closure, identity and inverses under pair_mul are verified on return.
GaloisGroup galois_group(const CrossedData& cs, bool force = false);

/// Independent check of that isomorphism: enumerates all linear maps on
/// V + A that fix V pointwise (p^((m+n) n) candidates), filters invertible
/// algebra morphisms of the crossed product, and checks that psi_of_pair is
/// a bijective group homomorphism from galois_group(cs) onto that set.
bool verify_galois_isomorphism(const CrossedData& cs, bool force = false);

}  // namespace fouralg

#endif
