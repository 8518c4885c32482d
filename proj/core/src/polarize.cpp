#include "fouralg/polarize.hpp"

namespace fouralg {

namespace {

// Enumerate non-decreasing index tuples of length `degree` in 0..dim-1.
// Returns false when exhausted.
bool next_tuple(std::vector<std::size_t>& t, std::size_t dim) {
  std::size_t k = t.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (t[i] + 1 < dim) {
      ++t[i];
      for (std::size_t j = i + 1; j < k; ++j) t[j] = t[i];
      return true;
    }
  }
  return false;
}

// Shared driver: enumerates joint basis tuples (last variable fastest) and
// hands each polarized sum to the sink together with the concatenated tuple.
// The sink returns false to stop early.
void polarize_core(
    const FieldSpec& fs, const std::vector<PolarizationVar>& vars,
    std::size_t out_dim, const MultiEval& q,
    const std::function<bool(const std::vector<std::size_t>&, const Vec&)>&
        sink) {
  unsigned total_degree = 0;
  for (const auto& v : vars) {
    if (v.degree == 0) throw UnsupportedDegree("variable of degree 0");
    total_degree += v.degree;
  }
  if (total_degree > 4)
    throw UnsupportedDegree("polarization supports total degree <= 4");
  if (fs.is_prime_field() && fs.characteristic() <= total_degree)
    throw Error("field characteristic too small for polarization");

  const std::size_t nv = vars.size();
  // A variable on a 0-dimensional space has no basis tuples: a homogeneous
  // map of positive degree in it vanishes vacuously.
  for (const auto& v : vars)
    if (v.dim == 0) return;

  std::vector<std::vector<std::size_t>> tuples(nv);
  for (std::size_t v = 0; v < nv; ++v) tuples[v].assign(vars[v].degree, 0);

  const Scalar one = Scalar::one(fs);
  const Scalar minus_one = -one;

  while (true) {
    // subset sums per variable for the current tuples
    std::vector<std::vector<Vec>> sums(nv);
    std::vector<std::vector<bool>> odd(nv);  // parity of d - |S|
    for (std::size_t v = 0; v < nv; ++v) {
      unsigned d = vars[v].degree;
      sums[v].resize(std::size_t{1} << d, zero_vec(fs, vars[v].dim));
      odd[v].resize(std::size_t{1} << d);
      for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
        Vec s = zero_vec(fs, vars[v].dim);
        unsigned bits = 0;
        for (unsigned j = 0; j < d; ++j)
          if (mask & (std::size_t{1} << j)) {
            s[tuples[v][j]] += one;
            ++bits;
          }
        sums[v][mask] = std::move(s);
        odd[v][mask] = ((d - bits) % 2) != 0;
      }
    }

    Vec total = zero_vec(fs, out_dim);
    std::vector<std::size_t> mask(nv, 0);
    std::vector<Vec> args(nv, Vec{});
    while (true) {
      bool negative = false;
      for (std::size_t v = 0; v < nv; ++v) {
        args[v] = sums[v][mask[v]];
        if (odd[v][mask[v]]) negative = !negative;
      }
      Vec val = q(args);
      if (val.size() != out_dim) throw ShapeError("callback output dimension");
      axpy(negative ? minus_one : one, val, total);
      std::size_t v = nv;
      bool carried = false;
      while (v > 0) {
        --v;
        if (++mask[v] < sums[v].size()) {
          carried = true;
          break;
        }
        mask[v] = 0;
      }
      if (!carried) break;
    }

    std::vector<std::size_t> joint;
    for (std::size_t v = 0; v < nv; ++v)
      joint.insert(joint.end(), tuples[v].begin(), tuples[v].end());
    if (!sink(joint, total)) return;

    // advance joint tuple enumeration, last variable fastest
    std::size_t v = nv;
    bool advanced = false;
    while (v > 0) {
      --v;
      if (next_tuple(tuples[v], vars[v].dim)) {
        advanced = true;
        break;
      }
      tuples[v].assign(vars[v].degree, 0);
    }
    if (!advanced) return;
  }
}

}  // namespace

std::optional<std::vector<std::size_t>> polarization_witness(
    const FieldSpec& fs, const std::vector<PolarizationVar>& vars,
    std::size_t out_dim, const MultiEval& q) {
  std::optional<std::vector<std::size_t>> witness;
  polarize_core(fs, vars, out_dim, q,
                [&](const std::vector<std::size_t>& tuple, const Vec& total) {
                  if (is_zero_vec(total)) return true;
                  witness = tuple;
                  return false;
                });
  return witness;
}

Vec polarization_values(const FieldSpec& fs,
                        const std::vector<PolarizationVar>& vars,
                        std::size_t out_dim, const MultiEval& q) {
  Vec values;
  polarize_core(fs, vars, out_dim, q,
                [&](const std::vector<std::size_t>&, const Vec& total) {
                  values.insert(values.end(), total.begin(), total.end());
                  return true;
                });
  return values;
}

bool polarization_vanishes(const FieldSpec& fs,
                           const std::vector<PolarizationVar>& vars,
                           std::size_t out_dim, const MultiEval& q) {
  return !polarization_witness(fs, vars, out_dim, q).has_value();
}

bool polarization_vanishes(const FieldSpec& fs, std::size_t n, unsigned degree,
                           std::size_t out_dim,
                           const std::function<Vec(const Vec&)>& q) {
  return polarization_vanishes(
      fs, {PolarizationVar{n, degree}}, out_dim,
      [&q](const std::vector<Vec>& args) { return q(args[0]); });
}

}  // namespace fouralg
