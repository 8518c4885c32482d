#include <doctest.h>

#include "fouralg/classify.hpp"

using namespace fouralg;

namespace {
const FieldSpec F5 = FieldSpec::prime(5);
}

TEST_CASE("change_basis conjugates the multiplication table") {
  Algebra a = dim2_A1(F5);
  Matrix phi(F5, 2, 2);
  phi.at(0, 0) = Scalar::of_int(F5, 2);
  phi.at(1, 1) = Scalar::one(F5);
  Algebra b = change_basis(a, phi);
  // b1 = 2 e1, so b1^2 = 4 e2 = 4 b2.
  CHECK(b.basis_product(0, 0)[1].residue() == 4);
  CHECK(is_four_algebra(b).ok());
  CHECK(find_isomorphism(a, b).has_value());
}

TEST_CASE("gl_matrices enumerates the general linear group") {
  CHECK(gl_matrices(F5, 1).size() == 4);
  CHECK(gl_matrices(F5, 2).size() == 480);  // (25-1)(25-5)
  auto list = gl_matrices(F5, 2);
  for (std::size_t i = 0; i + 1 < list.size(); ++i)
    CHECK(list[i].lex_less(list[i + 1]));
}

TEST_CASE("dimension 1 has a single class") {
  auto rep = classify_brute(F5, 1);
  CHECK(rep.classes.size() == 1);
  CHECK(rep.classes[0].derived_dim == 0);
  CHECK(rep.total_count() == 1);
}

TEST_CASE("dimension 2 over F5: exactly three classes, 145 tables") {
  auto rep = classify_brute(F5, 2);
  REQUIRE(rep.classes.size() == 3);
  CHECK(rep.total_count() == 145);
  // Sorted by derived dimension: the abelian algebra first.
  CHECK(rep.classes[0].derived_dim == 0);
  CHECK(rep.classes[0].count == 1);
  CHECK(rep.classes[1].derived_dim == 1);
  CHECK(rep.classes[2].derived_dim == 1);
  // The two non-abelian classes are the square family and the weight family.
  Algebra a1 = dim2_A1(F5), a2 = dim2_A2(F5);
  bool match1 = find_isomorphism(rep.classes[1].representative, a1) ||
                find_isomorphism(rep.classes[2].representative, a1);
  bool match2 = find_isomorphism(rep.classes[1].representative, a2) ||
                find_isomorphism(rep.classes[2].representative, a2);
  CHECK(match1);
  CHECK(match2);
  // Class invariants hold for every member (spot check via representative).
  for (const auto& c : rep.classes) {
    CHECK(is_four_algebra(c.representative).ok());
    CHECK(c.metabelian == is_metabelian(c.representative));
  }
}

TEST_CASE("twisted-product classification agrees with brute force") {
  for (auto p : {std::uint64_t{5}, std::uint64_t{7}}) {
    auto fs = FieldSpec::prime(p);
    auto brute = classify_brute(fs, 2);
    auto twisted = classify_via_twisted(fs, 2);
    REQUIRE(brute.classes.size() == twisted.classes.size());
    for (std::size_t i = 0; i < brute.classes.size(); ++i) {
      CHECK(brute.classes[i].derived_dim == twisted.classes[i].derived_dim);
      CHECK(find_isomorphism(brute.classes[i].representative,
                             twisted.classes[i].representative)
                .has_value());
    }
  }
}

TEST_CASE("size guards trip without force") {
  CHECK_THROWS_AS(classify_brute(F5, 3), SizeGuard);
  CHECK_THROWS_AS(gl_matrices(F5, 4), SizeGuard);
}
