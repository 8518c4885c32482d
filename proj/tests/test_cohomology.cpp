#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fouralg/cohomology.hpp"

using namespace fouralg;

namespace {
const FieldSpec F5 = FieldSpec::prime(5);
}

TEST_CASE("transform_by_r is an additive action preserving validity") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(0, 4);
  Algebra a = dim2_A1(F5);
  CrossedData cs = CrossedData::zero(a, 1);
  cs.act.t(0, 0, 0) = Scalar::one(F5);
  REQUIRE(validate_crossed_system(cs).pass());
  for (int t = 0; t < 50; ++t) {
    Matrix r1(F5, 1, 2), r2(F5, 1, 2);
    for (std::size_t j = 0; j < 2; ++j) {
      r1.at(0, j) = Scalar::of_int(F5, d(rng));
      r2.at(0, j) = Scalar::of_int(F5, d(rng));
    }
    auto once = transform_by_r(transform_by_r(cs, r1), r2);
    Matrix sum(F5, 1, 2);
    for (std::size_t j = 0; j < 2; ++j)
      sum.at(0, j) = r1.at(0, j) + r2.at(0, j);
    auto direct = transform_by_r(cs, sum);
    CHECK(detail::maps_key(once) == detail::maps_key(direct));
    CHECK(validate_crossed_system(once).pass());
  }
}

TEST_CASE("are_cohomologous is reflexive, symmetric and matches the action") {
  Algebra a = abelian(F5, 1);
  CrossedData cs = CrossedData::zero(a, 1);
  cs.f.t(0, 0, 0) = Scalar::of_int(F5, 2);
  CHECK(are_cohomologous(cs, cs).has_value());

  Matrix r(F5, 1, 1);
  r.at(0, 0) = Scalar::of_int(F5, 3);
  auto moved = transform_by_r(cs, r);
  auto witness = are_cohomologous(moved, cs);
  REQUIRE(witness);
  CHECK(detail::maps_key(transform_by_r(cs, *witness)) ==
        detail::maps_key(moved));
  CHECK(are_cohomologous(cs, moved).has_value());

  CrossedData other = cs;
  other.mult_v.t(0, 0, 0) = Scalar::one(F5);
  CHECK(!are_cohomologous(cs, other));  // different multV
}

TEST_CASE("gh2 of the one-dimensional abelian pair has 9 classes") {
  Algebra a = abelian(F5, 1);
  auto set = gh2(a, 1);
  CHECK(set.decomposition_label == "multV");
  CHECK(set.classes.size() == 9);
  CHECK(set.total_systems() == 25);
  // Representatives are valid, pairwise non-cohomologous, canonical.
  for (const auto& c : set.classes) {
    CHECK(validate_crossed_system(c.representative).pass());
  }
  for (std::size_t i = 0; i < set.classes.size(); ++i)
    for (std::size_t j = i + 1; j < set.classes.size(); ++j)
      CHECK(!are_cohomologous(set.classes[i].representative,
                              set.classes[j].representative));
}

TEST_CASE("h2_nab over a fixed kernel algebra is a refinement of gh2") {
  Algebra a = abelian(F5, 1);
  auto whole = gh2(a, 1);
  std::size_t total_classes = 0, total_systems = 0;
  for (const auto& v : four_algebra_tables(F5, 1)) {
    auto part = h2_nab(a, v);
    total_classes += part.classes.size();
    total_systems += part.total_systems();
  }
  CHECK(total_classes == whole.classes.size());
  CHECK(total_systems == whole.total_systems());
}

TEST_CASE("abelian-kernel linear cohomology at (1,1): 5 classes or 1") {
  Algebra a = abelian(F5, 1);
  BilinearMap zero_act(F5, 1, 1, 1);
  auto q0 = h2_action(a, 1, zero_act);
  CHECK(q0.h2_dim == 1);
  CHECK(q0.representatives.size() == 5);
  BilinearMap act(F5, 1, 1, 1);
  act.t(0, 0, 0) = Scalar::of_int(F5, 2);
  auto q1 = h2_action(a, 1, act);
  CHECK(q1.h2_dim == 0);
  CHECK(q1.representatives.size() == 1);
}

TEST_CASE("h2_action works over the rationals (dimensions only)") {
  auto fs = FieldSpec::rationals();
  Algebra a = abelian(fs, 1);
  BilinearMap zero_act(fs, 1, 1, 1);
  auto q = h2_action(a, 1, zero_act);
  CHECK(q.z2_dim == 1);
  CHECK(q.b2_dim == 0);
  CHECK(q.h2_dim == 1);
  CHECK(q.representatives.empty());
}

TEST_CASE("h2_lambda validates the functional identity") {
  Algebra a = dim2_A1(F5);  // e1^2 = e2
  // lambda(e1) = 1, lambda(e2) = 0: lambda(a) lambda(a^2) has the cross term
  // lambda(e1) lambda(e1^2) = lambda(e1) lambda(e2) = 0 and
  // (c1 e1 + c2 e2)^2 = c1^2 e2, so lambda(a) lambda(a^2) = 0. Valid.
  Vec ok = {Scalar::one(F5), Scalar::zero(F5)};
  auto q = h2_lambda(a, ok);
  CHECK(q.z2_dim <= 3);
  // lambda(e1) = 1 = lambda(e2) fails: a = e1 gives lambda(a) lambda(a^2)
  // = 1 * 1 = 1.
  Vec bad = {Scalar::one(F5), Scalar::one(F5)};
  CHECK_THROWS_AS(h2_lambda(a, bad), InvalidLambda);
}

TEST_CASE("one-dimensional extension pairs of the example family") {
  // |pairs| = 125 for the dim-3 member and 5^7 for the dim-4 member.
  CHECK(cf_pairs(example33(F5, 1)).size() == 125);
  CHECK(cf_pairs(example33(F5, 2)).size() == 78125);
  for (const auto& pair : cf_pairs(dim2_A1(F5))) {
    Algebra e = build_A_lambda_f(dim2_A1(F5), pair);
    CHECK(is_four_algebra(e).ok());
  }
}

TEST_CASE("gh2 via the functional strata matches gh2 directly") {
  for (const Algebra& a :
       {abelian(F5, 1), abelian(F5, 2), dim2_A1(F5), dim2_A2(F5)}) {
    auto direct = gh2(a, 1);
    auto via = gh2_via_cf(a);
    CHECK(direct.classes.size() == via.classes.size());
    CHECK(direct.total_systems() == via.total_systems());
    std::set<std::string> keys_direct, keys_via;
    for (const auto& c : direct.classes)
      keys_direct.insert(detail::maps_key(c.representative));
    for (const auto& c : via.classes)
      keys_via.insert(detail::maps_key(c.representative));
    CHECK(keys_direct == keys_via);
  }
}

TEST_CASE("one-dimensional-base triples match gh2 over the kernel") {
  auto direct = gh2(abelian(F5, 1), 1);
  auto via = gh2_via_ct(F5, 1);
  CHECK(direct.classes.size() == via.classes.size());
  std::set<std::string> a, b;
  for (const auto& c : direct.classes)
    a.insert(detail::maps_key(c.representative));
  for (const auto& c : via.classes)
    b.insert(detail::maps_key(c.representative));
  CHECK(a == b);
}

TEST_CASE("ct classes partition the valid triples") {
  Algebra v = abelian(F5, 1);
  auto triples = ct_triples(v);
  auto classes = ct_classes(v);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.orbit_size;
  CHECK(total == triples.size());
}

TEST_CASE("metabelian cohomology has no cocycle constraint") {
  BilinearMap act(F5, 2, 1, 1);
  act.t(0, 0, 0) = Scalar::one(F5);
  auto q = metabelian_h2(F5, 2, 1, act);
  CHECK(q.z2_dim == 3);  // all symmetric f: A x A -> V
  CHECK(q.z2_dim == q.b2_dim + q.h2_dim);
  BilinearMap f(F5, 2, 2, 1);
  f.set_symmetric(0, 1, {Scalar::one(F5)});
  Algebra e = metabelian_product(2, 1, act, f);
  CHECK(is_four_algebra(e).ok());
  CHECK(is_metabelian(e));
}

TEST_CASE("flatten and unflatten symmetric maps round-trip") {
  BilinearMap f(F5, 2, 2, 2);
  f.set_symmetric(0, 1, {Scalar::of_int(F5, 2), Scalar::of_int(F5, 3)});
  f.set_symmetric(1, 1, {Scalar::of_int(F5, 4), Scalar::zero(F5)});
  Vec flat = flatten_symmetric(f);
  CHECK(flat.size() == 6);
  BilinearMap g = unflatten_symmetric(F5, 2, 2, flat);
  CHECK(f == g);
}

TEST_CASE("four_algebra_tables in dimension 1 and 2") {
  CHECK(four_algebra_tables(F5, 1).size() == 1);  // only the zero product
  auto dim2 = four_algebra_tables(F5, 2).size();
  CHECK(dim2 == 145);
}
