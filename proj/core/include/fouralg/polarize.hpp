#ifndef FOURALG_POLARIZE_HPP
#define FOURALG_POLARIZE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "fouralg/linalg.hpp"

namespace fouralg {

/// One formal variable of a (multi-)homogeneous polynomial map: its ambient
/// dimension and its homogeneity degree.
struct PolarizationVar {
  std::size_t dim;
  unsigned degree;
};

/// Evaluation callback: one exact vector per variable, value in k^out_dim.
using MultiEval = std::function<Vec(const std::vector<Vec>&)>;

/// Full symmetric polarization on basis tuples.  For each variable v of
/// degree d, non-decreasing index tuples (i_1 <= ... <= i_d) are enumerated
/// and the inclusion-exclusion sum
///   sum_{S subset {1..d}} (-1)^{d-|S|} Q(..., sum_{j in S} e_{i_j}, ...)
/// is formed (jointly over all variables).  Q vanishes identically iff every
/// such sum is zero, provided char k = 0 or char k > total degree; degrees
/// are capped at 4 and the field precondition p >= 5 makes 4! invertible.
///
/// Returns the lexicographically first violating tuple (the per-variable
/// index tuples concatenated), or nullopt when Q vanishes identically.
std::optional<std::vector<std::size_t>> polarization_witness(
    const FieldSpec& fs, const std::vector<PolarizationVar>& vars,
    std::size_t out_dim, const MultiEval& q);

bool polarization_vanishes(const FieldSpec& fs,
                           const std::vector<PolarizationVar>& vars,
                           std::size_t out_dim, const MultiEval& q);

/// All polarized sums concatenated in tuple-lex order (out_dim coordinates
/// per basis tuple).  Q vanishes identically iff the result is the zero
/// vector; the components are linear in Q, which lets callers set up linear
/// systems for parameterized families of maps.
Vec polarization_values(const FieldSpec& fs,
                        const std::vector<PolarizationVar>& vars,
                        std::size_t out_dim, const MultiEval& q);

/// Single-variable convenience: Q homogeneous of degree d on k^n -> k^m.
bool polarization_vanishes(const FieldSpec& fs, std::size_t n, unsigned degree,
                           std::size_t out_dim,
                           const std::function<Vec(const Vec&)>& q);

}  // namespace fouralg

#endif
