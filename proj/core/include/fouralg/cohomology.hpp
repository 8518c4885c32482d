#ifndef FOURALG_COHOMOLOGY_HPP
#define FOURALG_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fouralg/crossed.hpp"

namespace fouralg {

/// The additive Hom(A,V)-action realizing equivalence of crossed systems:
/// given the "primed" system and r: A -> V (m x n), returns the system with
///   a |> x   = a |>' x + r(a) . x
///   f(a, b)  = f'(a, b) + a |>' r(b) + b |>' r(a) + r(a) . r(b) - r(ab)
/// and the same kernel multiplication.  transform applied at r1 then r2
/// equals transform at r1 + r2; validity is preserved.
CrossedData transform_by_r(const CrossedData& cs_prime, const Matrix& r);

/// Searches for r with transform_by_r(cs2, r) == cs.  Returns nullopt when
/// the kernel multiplications differ or no witness exists; otherwise the
/// lexicographically least witness.  The linear half of the constraints is
/// solved exactly; the quadratic half filters the affine candidate set.
std::optional<Matrix> are_cohomologous(const CrossedData& cs,
                                       const CrossedData& cs2,
                                       bool force = false);

struct CohomologyClass {
  CrossedData representative;  // lexicographically least system in the orbit
  std::size_t orbit_size;
};

struct CohomologyClassSet {
  /// The datum indexing the coproduct decomposition this set was assembled
  /// over: "multV", "act", or "lambda".
  std::string decomposition_label;
  std::vector<CohomologyClass> classes;

  std::size_t total_systems() const;
};

/// Flatten a symmetric bilinear map n x n -> m to its upper-triangle entry
/// vector: pairs (i <= j) in lexicographic order, output coordinate fastest.
Vec flatten_symmetric(const BilinearMap& f);
BilinearMap unflatten_symmetric(const FieldSpec& fs, std::size_t n,
                                std::size_t m, const Vec& flat);

/// All commutative multiplication tables on k^dim passing is_four_algebra,
/// in lexicographic order of the flattened upper-triangle tensor.
std::vector<Algebra> four_algebra_tables(const FieldSpec& fs, std::size_t dim,
                                         bool force = false);

/// Orbits of all valid pairs (act, f) over the fixed kernel 4-algebra v_alg
/// under transform_by_r.  Empty when v_alg is not a 4-algebra.
CohomologyClassSet h2_nab(const Algebra& a, const Algebra& v_alg,
                          bool force = false);

/// All crossed systems of a by k^v_dim modulo equivalence: the disjoint
/// union of h2_nab over every 4-algebra structure on the kernel.
CohomologyClassSet gh2(const Algebra& a, std::size_t v_dim,
                       bool force = false);

/// Linear-algebra quotient description Z^2 / B^2.
struct QuotientDesc {
  std::size_t z2_dim = 0;
  std::size_t b2_dim = 0;
  std::size_t h2_dim = 0;
  /// Over F_p, the canonical (lexicographically least) coset representative
  /// of every class, as flattened symmetric maps, sorted; computed only
  /// when p^h2_dim is small enough to list.
  std::vector<Vec> representatives;
};

/// Abelian-kernel cohomology for a fixed module action: Z^2 is the space of
/// symmetric f with f(a^2,a^2) + 2 a^2 |> f(a,a) = 0, B^2 the image of
/// r -> a |> r(b) + b |> r(a) - r(ab).
QuotientDesc h2_action(const Algebra& a, std::size_t v_dim,
                       const BilinearMap& act);

/// One-dimensional kernel, fixed functional lambda (a row vector of length
/// n): Z^2 = {f symmetric : f(a^2,a^2) + 2 lambda(a^2) f(a,a) = 0}, B^2 the
/// image of r -> lambda(a) r(b) + lambda(b) r(a) - r(ab).
/// Throws InvalidLambda unless lambda(a) lambda(a^2) = 0 identically.
QuotientDesc h2_lambda(const Algebra& a, const Vec& lambda);

/// A pair (lambda, f) describing a one-dimensional extension of a: lambda
/// is a functional on a, f a symmetric form stored flattened.
struct CFPair {
  Vec lambda;
  Vec f;  // flattened symmetric n x n -> k
};

/// All valid pairs: lambda(a) lambda(a^2) = 0 and
/// f(a^2,a^2) + 2 lambda(a^2) f(a,a) = 0; lexicographic order.
std::vector<CFPair> cf_pairs(const Algebra& a, bool force = false);

/// The (n+1)-dimensional algebra of a pair, on basis (e_1..e_n, g):
/// g^2 = 0, e_i g = lambda(e_i) g, e_i e_j = e_i . e_j + f(e_i, e_j) g.
Algebra build_A_lambda_f(const Algebra& a, const CFPair& pair);

struct CFStratum {
  Vec lambda;
  QuotientDesc h2;
};

/// Per-lambda strata of the one-dimensional-kernel cohomology of a.
std::vector<CFStratum> cf_strata(const Algebra& a, bool force = false);

/// gh2(a, 1) assembled along the lambda strata: for every valid lambda and
/// every canonical f-representative, the crossed system with act given by
/// lambda and zero kernel multiplication.  Classes match gh2(a, 1) exactly.
CohomologyClassSet gh2_via_cf(const Algebra& a, bool force = false);

/// A pair (theta, F) describing a crossed system of k by the 4-algebra V:
/// theta = (1 |> -): V -> V and F = f(1,1) in V, subject to
///   F^2 = 0,  theta(x) . x^2 = 0,  theta(x) . F = 0,
///   2 theta(x)^2 + x^2 . F = 0.
struct CTTriple {
  Matrix theta;
  Vec F;
};

std::vector<CTTriple> ct_triples(const Algebra& v_alg, bool force = false);

struct CTClass {
  CTTriple representative;
  std::size_t orbit_size;
};

/// Orbits of ct_triples under r in V acting by theta(x) = theta'(x) + r . x,
/// F = F' + 2 theta'(r) + r^2; canonical representative is the
/// lexicographically least serialized (theta, F).
std::vector<CTClass> ct_classes(const Algebra& v_alg, bool force = false);

/// gh2(abelian(1), v_dim) assembled along kernel-multiplication strata from
/// ct_classes.  Classes match gh2(abelian(1), v_dim) exactly.
CohomologyClassSet gh2_via_ct(const FieldSpec& fs, std::size_t v_dim,
                              bool force = false);

/// Metabelian case: both a and the kernel abelian.  Every symmetric f is a
/// cocycle; B^2 is the image of r -> a |> r(b) + b |> r(a).
QuotientDesc metabelian_h2(const FieldSpec& fs, std::size_t a_dim,
                           std::size_t v_dim, const BilinearMap& act);

/// The crossed product of abelian algebras with the given action and
/// cocycle (zero kernel multiplication); always a valid 4-algebra.
Algebra metabelian_product(std::size_t a_dim, std::size_t v_dim,
                           const BilinearMap& act, const BilinearMap& f);

}  // namespace fouralg

#endif
