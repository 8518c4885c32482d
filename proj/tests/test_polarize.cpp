#include <doctest.h>

#include <random>

#include "fouralg/polarize.hpp"

using namespace fouralg;

namespace {

// A random homogeneous polynomial map F_5^n -> F_5 of the given degree,
// represented by a dense symmetric coefficient array over index multisets.
struct RandomForm {
  FieldSpec fs = FieldSpec::prime(5);
  std::size_t n;
  unsigned degree;
  std::vector<Scalar> coeff;  // one per non-decreasing index tuple

  static std::vector<std::vector<std::size_t>> tuples(std::size_t n,
                                                      unsigned d) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(d, 0);
    while (true) {
      out.push_back(cur);
      std::size_t k = d;
      while (k > 0 && cur[k - 1] == n - 1) --k;
      if (k == 0) break;
      std::size_t v = ++cur[k - 1];
      for (std::size_t i = k; i < d; ++i) cur[i] = v;
    }
    return out;
  }

  RandomForm(std::size_t n_, unsigned d, std::mt19937_64& rng)
      : n(n_), degree(d) {
    std::uniform_int_distribution<int> dist(0, 4);
    for (std::size_t i = 0; i < tuples(n, d).size(); ++i)
      coeff.push_back(Scalar::of_int(fs, dist(rng)));
  }

  Scalar eval(const Vec& x) const {
    auto ts = tuples(n, degree);
    Scalar acc = Scalar::zero(fs);
    for (std::size_t t = 0; t < ts.size(); ++t) {
      Scalar term = coeff[t];
      for (auto i : ts[t]) term *= x[i];
      acc += term;
    }
    return acc;
  }

  bool vanishes_exhaustively() const {
    bool all_zero = true;
    for_each_vector(fs, n, [&](const Vec& x) {
      if (!eval(x).is_zero()) all_zero = false;
    });
    return all_zero;
  }
};

}  // namespace

TEST_CASE("polarization agrees with exhaustive F5 evaluation, n <= 2, deg <= 4") {
  std::mt19937_64 rng(2024);
  auto fs = FieldSpec::prime(5);
  int vanishing_seen = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    for (unsigned d = 1; d <= 4; ++d) {
      for (int trial = 0; trial < 60; ++trial) {
        RandomForm q(n, d, rng);
        if (trial % 10 == 0) {  // include identically-zero cases
          for (auto& c : q.coeff) c = Scalar::zero(fs);
        }
        bool pol = polarization_vanishes(fs, n, d, 1, [&](const Vec& x) {
          return Vec{q.eval(x)};
        });
        bool exact = q.vanishes_exhaustively();
        CHECK(pol == exact);
        if (exact) ++vanishing_seen;
      }
    }
  }
  CHECK(vanishing_seen >= 8);
}

TEST_CASE("two-variable polarization separates bidegrees") {
  auto fs = FieldSpec::prime(5);
  // Q(a, x) = a1^2 * x1 on F5 x F5: bihomogeneous of bidegree (2, 1).
  auto q = [&](const std::vector<Vec>& args) {
    return Vec{args[0][0] * args[0][0] * args[1][0]};
  };
  CHECK(!polarization_vanishes(fs, {{1, 2}, {1, 1}}, 1, q));
  auto zero = [&](const std::vector<Vec>& args) {
    (void)args;
    return zero_vec(fs, 1);
  };
  CHECK(polarization_vanishes(fs, {{1, 2}, {1, 1}}, 1, zero));
}

TEST_CASE("polarization witness is the first violating tuple") {
  auto fs = FieldSpec::prime(5);
  // Q(x) = x2^2 on F5^2 vanishes on e1 but not e2.
  auto q = [&](const std::vector<Vec>& args) {
    return Vec{args[0][1] * args[0][1]};
  };
  auto w = polarization_witness(fs, {{2, 2}}, 1, q);
  REQUIRE(w);
  // Tuples (0,0): Q(2e1) - 2Q(e1) = 0; (0,1): Q(e1+e2) - Q(e1) - Q(e2) = 0;
  // (1,1): Q(2e2) - 2Q(e2) = 2 != 0, the first violation.
  CHECK(*w == std::vector<std::size_t>{1, 1});
}

TEST_CASE("polarization values are linear in the map") {
  auto fs = FieldSpec::prime(5);
  auto q1 = [&](const std::vector<Vec>& a) { return Vec{a[0][0] * a[0][0]}; };
  auto q2 = [&](const std::vector<Vec>& a) { return Vec{a[0][0] * a[0][1]}; };
  auto sum = [&](const std::vector<Vec>& a) {
    return Vec{a[0][0] * a[0][0] + a[0][0] * a[0][1]};
  };
  std::vector<PolarizationVar> vars = {{2, 2}};
  auto v1 = polarization_values(fs, vars, 1, q1);
  auto v2 = polarization_values(fs, vars, 1, q2);
  auto vs = polarization_values(fs, vars, 1, sum);
  CHECK(vs == add(v1, v2));
}

TEST_CASE("degree cap and small characteristics are rejected") {
  auto fs = FieldSpec::prime(5);
  auto q = [&](const std::vector<Vec>&) { return zero_vec(fs, 1); };
  CHECK_THROWS_AS(polarization_vanishes(fs, {{1, 5}}, 1, q),
                  UnsupportedDegree);
  CHECK_THROWS_AS(
      polarization_vanishes(FieldSpec::prime(5), {{1, 2}, {1, 3}}, 1, q),
      Error);  // total degree 5 meets p = 5
}
