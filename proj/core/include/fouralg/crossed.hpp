#ifndef FOURALG_CROSSED_HPP
#define FOURALG_CROSSED_HPP

#include <optional>
#include <string>
#include <vector>

#include "fouralg/algebra.hpp"

namespace fouralg {

/// Crossed data of a 4-algebra A by a space V: a weak action act: A x V -> V,
/// a symmetric 2-cocycle f: A x A -> V and a multiplication mult_v on V.
struct CrossedData {
  Algebra A;
  std::size_t v_dim;
  BilinearMap act;     // A x V -> V
  BilinearMap f;       // A x A -> V, symmetric
  BilinearMap mult_v;  // V x V -> V, symmetric

  const FieldSpec& field() const { return A.field(); }
  static CrossedData zero(const Algebra& A, std::size_t v_dim);
};

bool same_shape(const CrossedData& a, const CrossedData& b);

struct AxiomResult {
  bool pass = true;
  /// First violating basis tuple, A-indices then V-indices, lex order.
  std::vector<std::size_t> witness;
};

struct CrossedValidation {
  AxiomResult cs1, cs2, cs3;
  bool pass() const { return cs1.pass && cs2.pass && cs3.pass; }
};

/// Checks (CS1)-(CS3).  CS2 is polarized as a degree-4 identity in a; CS3 is
/// split into its bidegree components in (a, x) -- (2,2), (1,3) and (3,1) --
/// each polarized separately.
CrossedValidation validate_crossed_system(const CrossedData& cd);

/// The crossed product V # A on basis (V-basis, then A-basis):
/// (x,a)(y,b) = (x y + a|>y + b|>x + f(a,b), ab).
/// Validates unless validate=false (escape hatch for negative tests).
Algebra crossed_product(const CrossedData& cd, bool validate = true);

Algebra semidirect_product(const Algebra& a, const Algebra& v_alg,
                           const BilinearMap& act);

/// Twisted product: crossed product over an abelian base of dimension a_dim.
Algebra twisted_product(const Algebra& v_alg, std::size_t a_dim,
                        const BilinearMap& act, const BilinearMap& f);

/// Extension data: a surjective algebra morphism pi: E -> A with a linear
/// section s (pi o s = id).
struct Extension {
  Algebra E;
  Algebra A;
  Matrix pi;       // dim A x dim E
  Matrix section;  // dim E x dim A
};

struct Decomposition {
  CrossedData system;
  std::vector<Vec> v_basis;  // canonical kernel basis of pi, in E coordinates
  Matrix phi;                // V + A -> E, phi(x, a) = x + s(a)
};

/// Reads the crossed system off an extension through its section:
/// a|>x = s(a) x, f(a,b) = s(a) s(b) - s(ab), x y in V.
/// crossed_product(system) is isomorphic to E via phi.
Decomposition decompose(const Extension& ext);

/// The extension E -> E/E' with an echelon-complement coordinate section.
Extension derived_quotient_extension(const Algebra& e);

/// One-dimensional extension datum on a 4-algebra V: a vector F and an
/// endomorphism xi, with f_0 e_i = xi(e_i) and f_0^2 = F.
struct OneDimExtPair {
  Algebra V;
  Vec F;
  Matrix xi;
};

struct OneDimPairReport {
  bool f_square_zero;
  /// x^2 F + 2 x^2 xi(x) + 2 xi(x)^2 + 2 xi(x) F = 0 (the general
  /// twisted-product condition specialized to a 1-dimensional base).
  bool condition_general;
  /// The variant reading with x F in place of x^2 F, reported for
  /// comparison; construction follows the general condition.
  bool condition_linear_variant;
  bool ok() const { return f_square_zero && condition_general; }
};

OneDimPairReport check_one_dim_pair(const OneDimExtPair& p);

/// The (m+1)-dimensional algebra of the pair; throws InvalidPair when the
/// general conditions fail.
Algebra one_dim_extension(const OneDimExtPair& p);

/// All algebra-map sections of the projection V # A -> A, parameterized by
/// their V-component t: A -> V.  Returned as (m+n) x n matrices.
std::vector<Matrix> split_sections(const CrossedData& cd, bool force = false);

namespace detail {
/// Byte serialization of (act, f, mult_v) over F_p; lexicographic order on
/// the key matches lexicographic order on the (act, f-upper, multv-upper)
/// entries.  Used for canonical orbit representatives.
std::string maps_key(const CrossedData& cd);
}  // namespace detail

}  // namespace fouralg

#endif
