// Acceptance gate: one pass/fail line per criterion; exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include "fouralg/classify.hpp"
#include "fouralg/cohomology.hpp"
#include "fouralg/morphgal.hpp"
#include "fouralg/polarize.hpp"

using namespace fouralg;

namespace {

const FieldSpec F5 = FieldSpec::prime(5);

int failures = 0;

void report(int number, const char* title, bool pass, double seconds) {
  std::printf("criterion %d [%s] %s (%.1fs)\n", number,
              pass ? "PASS" : "FAIL", title, seconds);
  if (!pass) ++failures;
}

template <typename Fn>
void criterion(int number, const char* title, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  bool pass = false;
  try {
    pass = fn();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "criterion %d threw: %s\n", number, e.what());
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  report(number, title, pass, secs);
}

CrossedData grid_data_11(int g, int f, int t) {
  CrossedData cd = CrossedData::zero(abelian(F5, 1), 1);
  cd.act.t(0, 0, 0) = Scalar::of_int(F5, g);
  cd.f.t(0, 0, 0) = Scalar::of_int(F5, f);
  cd.mult_v.t(0, 0, 0) = Scalar::of_int(F5, t);
  return cd;
}

bool matched_class_sets(const CohomologyClassSet& a,
                        const CohomologyClassSet& b) {
  if (a.classes.size() != b.classes.size()) return false;
  if (a.total_systems() != b.total_systems()) return false;
  std::set<std::string> ka, kb;
  for (const auto& c : a.classes) ka.insert(detail::maps_key(c.representative));
  for (const auto& c : b.classes) kb.insert(detail::maps_key(c.representative));
  return ka == kb;
}

bool crit1_dim2_classification() {
  for (auto p : {std::uint64_t{5}, std::uint64_t{7}}) {
    auto fs = FieldSpec::prime(p);
    auto rep = classify_brute(fs, 2);
    if (rep.classes.size() != 3) return false;
    bool saw_abelian = false, saw_a1 = false, saw_a2 = false;
    for (const auto& c : rep.classes) {
      if (find_isomorphism(c.representative, abelian(fs, 2))) saw_abelian = true;
      if (find_isomorphism(c.representative, dim2_A1(fs))) saw_a1 = true;
      if (find_isomorphism(c.representative, dim2_A2(fs))) saw_a2 = true;
    }
    if (!(saw_abelian && saw_a1 && saw_a2)) return false;
    auto twisted = classify_via_twisted(fs, 2);
    if (twisted.classes.size() != 3) return false;
  }
  return true;
}

bool crit2_validator_oracle() {
  // Exhaustive 125-point grid at dim A = dim V = 1.
  for (int g = 0; g < 5; ++g)
    for (int f = 0; f < 5; ++f)
      for (int t = 0; t < 5; ++t) {
        CrossedData cd = grid_data_11(g, f, t);
        bool axioms = validate_crossed_system(cd).pass();
        bool oracle = is_four_algebra(crossed_product(cd, false)).ok();
        if (axioms != oracle) return false;
      }
  // 10^4 uniform samples at (n, m) = (2, 1) over each dim-2 base.
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> d(0, 4);
  std::vector<Algebra> bases = {abelian(F5, 2), dim2_A1(F5), dim2_A2(F5)};
  for (int trial = 0; trial < 10000; ++trial) {
    CrossedData cd = CrossedData::zero(bases[trial % bases.size()], 1);
    for (std::size_t i = 0; i < 2; ++i)
      cd.act.t(i, 0, 0) = Scalar::of_int(F5, d(rng));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = i; j < 2; ++j)
        cd.f.set_symmetric(i, j, {Scalar::of_int(F5, d(rng))});
    cd.mult_v.t(0, 0, 0) = Scalar::of_int(F5, d(rng));
    bool axioms = validate_crossed_system(cd).pass();
    bool oracle = is_four_algebra(crossed_product(cd, false)).ok();
    if (axioms != oracle) return false;
  }
  return true;
}

bool reconstructs(const Algebra& e) {
  Extension ext = derived_quotient_extension(e);
  Decomposition dec = decompose(ext);
  if (!validate_crossed_system(dec.system).pass()) return false;
  Algebra rebuilt = crossed_product(dec.system);
  if (!dec.phi.invertible()) return false;
  if (!is_algebra_morphism(rebuilt, e, dec.phi)) return false;
  // Stabilizes V: phi restricted to the kernel copy is the kernel basis.
  std::size_t m = dec.system.v_dim, n = dec.system.A.dim();
  for (std::size_t j = 0; j < m; ++j)
    if (dec.phi.col(j) != dec.v_basis[j]) return false;
  // Co-stabilizes A: pi(phi(x, a)) = a.
  Matrix proj = ext.pi.mul(dec.phi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m + n; ++j) {
      bool expect_one = (j == m + i);
      if (proj.at(i, j).is_one() != expect_one) return false;
      if (!expect_one && !proj.at(i, j).is_zero()) return false;
    }
  return true;
}

bool crit3_reconstruction() {
  std::vector<Algebra> samples = {dim2_A1(F5), dim2_A2(F5), heisenberg(F5, 1),
                                  heisenberg(F5, 2)};
  // Two concrete members of the metabelian family Met_2^1.
  BilinearMap act(F5, 1, 2, 2), f(F5, 1, 1, 2);
  act.t(0, 0, 0) = Scalar::of_int(F5, 1);
  act.t(0, 1, 1) = Scalar::of_int(F5, 2);
  samples.push_back(met(F5, 2, 1, act, f));
  f.t(0, 0, 0) = Scalar::of_int(F5, 3);
  samples.push_back(met(F5, 2, 1, act, f));
  for (const auto& e : samples)
    if (!reconstructs(e)) return false;
  return true;
}

bool crit4_two_path() {
  std::vector<Algebra> bases = {abelian(F5, 1), abelian(F5, 2), dim2_A1(F5),
                                dim2_A2(F5), example33(F5, 1)};
  for (const auto& a : bases) {
    if (!matched_class_sets(gh2(a, 1), gh2_via_cf(a))) return false;
  }
  for (std::size_t m : {std::size_t{1}, std::size_t{2}}) {
    bool force = (m == 2);  // the direct enumeration exceeds the guard at m=2
    if (!matched_class_sets(gh2(abelian(F5, 1), m, force),
                            gh2_via_ct(F5, m, force)))
      return false;
  }
  return true;
}

bool crit5_nine_classes() {
  auto set = gh2(abelian(F5, 1), 1);
  return set.classes.size() == 9;
}

bool crit6_galois() {
  for (int g = 0; g < 5; ++g)
    for (int f = 0; f < 5; ++f)
      for (int t = 0; t < 5; ++t) {
        CrossedData cd = grid_data_11(g, f, t);
        if (!validate_crossed_system(cd).pass()) continue;
        if (!verify_galois_isomorphism(cd)) return false;
      }
  if (galois_group(grid_data_11(0, 0, 0)).order() != 20) return false;
  Decomposition dec = decompose(derived_quotient_extension(heisenberg(F5, 1)));
  if (!verify_galois_isomorphism(dec.system)) return false;
  return true;
}

bool crit7_abelian_kernel() {
  Algebra a = abelian(F5, 1);
  for (int g = 0; g < 5; ++g) {
    BilinearMap act(F5, 1, 1, 1);
    act.t(0, 0, 0) = Scalar::of_int(F5, g);
    auto q = h2_action(a, 1, act);
    std::size_t expected = (g == 0) ? 5 : 1;
    if (q.representatives.size() != expected) return false;
    // Cross-check against orbit counts of the full enumeration restricted
    // to this action (kernel multiplication is zero throughout).
    std::size_t orbit_classes = 0;
    auto whole = h2_nab(a, abelian(F5, 1));
    for (const auto& c : whole.classes) {
      // Count classes whose orbit lies over this action; the action is
      // invariant on orbits when the kernel multiplication is zero.
      if (c.representative.act.t(0, 0, 0).residue() ==
          static_cast<std::uint64_t>(g))
        ++orbit_classes;
    }
    if (orbit_classes != expected) return false;
  }
  return true;
}

bool crit8_property_suites() {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> d(0, 4);
  // Polarization vs exhaustive evaluation, n <= 2, all degrees <= 4.
  for (std::size_t n = 1; n <= 2; ++n)
    for (unsigned deg = 1; deg <= 4; ++deg)
      for (int trial = 0; trial < 25; ++trial) {
        // Random polynomial map built from random products of coordinates.
        std::vector<std::vector<std::size_t>> monos;
        std::vector<Scalar> coefs;
        for (int t = 0; t < 3; ++t) {
          std::vector<std::size_t> mono;
          for (unsigned k = 0; k < deg; ++k) mono.push_back(d(rng) % n);
          monos.push_back(mono);
          coefs.push_back(Scalar::of_int(F5, d(rng)));
        }
        auto q = [&](const Vec& x) {
          Scalar acc = Scalar::zero(F5);
          for (std::size_t t = 0; t < monos.size(); ++t) {
            Scalar term = coefs[t];
            for (auto i : monos[t]) term *= x[i];
            acc += term;
          }
          return Vec{acc};
        };
        bool pol = polarization_vanishes(F5, n, deg, 1, q);
        bool exact = true;
        for_each_vector(F5, n, [&](const Vec& x) {
          if (!q(x)[0].is_zero()) exact = false;
        });
        if (pol != exact) return false;
      }
  // transform_by_r: validating additive action on a non-trivial system.
  CrossedData seed = CrossedData::zero(dim2_A1(F5), 1);
  seed.act.t(0, 0, 0) = Scalar::one(F5);
  if (!validate_crossed_system(seed).pass()) return false;
  for (int t = 0; t < 200; ++t) {
    Matrix r1(F5, 1, 2), r2(F5, 1, 2);
    for (std::size_t j = 0; j < 2; ++j) {
      r1.at(0, j) = Scalar::of_int(F5, d(rng));
      r2.at(0, j) = Scalar::of_int(F5, d(rng));
    }
    auto step = transform_by_r(transform_by_r(seed, r1), r2);
    Matrix sum(F5, 1, 2);
    for (std::size_t j = 0; j < 2; ++j)
      sum.at(0, j) = r1.at(0, j) + r2.at(0, j);
    if (detail::maps_key(step) != detail::maps_key(transform_by_r(seed, sum)))
      return false;
    if (!validate_crossed_system(step).pass()) return false;
  }
  // 10^4 random crossed products satisfy all four linearized identities.
  std::uniform_int_distribution<std::size_t> nd(1, 3), md(1, 2);
  for (int t = 0; t < 10000; ++t) {
    std::size_t n = nd(rng), m = md(rng);
    BilinearMap act(F5, n, m, m), f(F5, n, n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          act.t(i, j, k) = Scalar::of_int(F5, d(rng));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Vec v = zero_vec(F5, m);
        for (auto& c : v) c = Scalar::of_int(F5, d(rng));
        f.set_symmetric(i, j, v);
      }
    // Metabelian data is always a crossed system; its product must satisfy
    // every linearized identity.
    Algebra e = metabelian_product(n, m, act, f);
    if (!check_linearized_identities(e).all_pass()) return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "dim-2 classification: 3 classes at p = 5 and p = 7",
            crit1_dim2_classification);
  criterion(2, "validator agrees with the product oracle (125 grid + 10^4 samples)",
            crit2_validator_oracle);
  criterion(3, "reconstruction round-trip through the derived quotient",
            crit3_reconstruction);
  criterion(4, "two-path cohomology agreement (functional and one-dim-base)",
            crit4_two_path);
  criterion(5, "9 classes for the one-dimensional abelian pair",
            crit5_nine_classes);
  criterion(6, "galois pairs match the enumerated automorphism groups",
            crit6_galois);
  criterion(7, "abelian-kernel class counts: 5 for zero action, 1 otherwise",
            crit7_abelian_kernel);
  criterion(8, "property suites: polarization, action, random products",
            crit8_property_suites);
  return failures == 0 ? 0 : 1;
}
