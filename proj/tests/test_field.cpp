#include <doctest.h>

#include "fouralg/field.hpp"

using namespace fouralg;

TEST_CASE("field construction accepts only char 0 or primes >= 5") {
  CHECK(FieldSpec::rationals().kind() == FieldSpec::Kind::Rationals);
  CHECK(FieldSpec::prime(5).characteristic() == 5);
  CHECK(FieldSpec::prime(7).characteristic() == 7);
  CHECK(FieldSpec::prime(101).characteristic() == 101);
  CHECK_THROWS_AS(FieldSpec::prime(2), Error);
  CHECK_THROWS_AS(FieldSpec::prime(3), Error);
  CHECK_THROWS_AS(FieldSpec::prime(4), Error);
  CHECK_THROWS_AS(FieldSpec::prime(9), Error);
  CHECK_THROWS_AS(FieldSpec::prime(0), Error);
}

TEST_CASE("prime field arithmetic is modular and canonical") {
  auto fs = FieldSpec::prime(5);
  auto a = Scalar::of_int(fs, 3);
  auto b = Scalar::of_int(fs, 4);
  CHECK((a + b).residue() == 2);
  CHECK((a * b).residue() == 2);
  CHECK((a - b).residue() == 4);
  CHECK((-a).residue() == 2);
  CHECK(a.inverse().residue() == 2);  // 3 * 2 = 6 = 1 mod 5
  CHECK(Scalar::of_int(fs, -7).residue() == 3);
  CHECK(Scalar::of_int(fs, 10).is_zero());
  CHECK_THROWS_AS(Scalar::zero(fs).inverse(), Error);
}

TEST_CASE("rational arithmetic is exact and reduced") {
  auto fs = FieldSpec::rationals();
  auto a = Scalar::parse(fs, "3/7");
  auto b = Scalar::parse(fs, "2/7");
  CHECK((a + b).str() == "5/7");
  CHECK((a * b).str() == "6/49");
  CHECK((a - a).is_zero());
  CHECK(a.inverse().str() == "7/3");
  CHECK(Scalar::parse(fs, "4/2").str() == "2");
  CHECK(Scalar::parse(fs, "-1/3").str() == "-1/3");
}

TEST_CASE("scalar parse round-trips through str") {
  auto q = FieldSpec::rationals();
  for (const char* s : {"0", "1", "-1", "3/7", "-22/7", "100000000000000003"}) {
    CHECK(Scalar::parse(q, s).str() == s);
  }
  auto f5 = FieldSpec::prime(5);
  for (int v = 0; v < 5; ++v) {
    auto x = Scalar::of_int(f5, v);
    CHECK(Scalar::parse(f5, x.str()) == x);
  }
}

TEST_CASE("scalar ordering is total within a field") {
  auto fs = FieldSpec::prime(7);
  auto a = Scalar::of_int(fs, 2);
  auto b = Scalar::of_int(fs, 5);
  CHECK(a.less(b));
  CHECK(!b.less(a));
  CHECK(!a.less(a));

  auto q = FieldSpec::rationals();
  CHECK(Scalar::parse(q, "-1/2").less(Scalar::parse(q, "1/3")));
  CHECK(Scalar::parse(q, "1/3").less(Scalar::parse(q, "1/2")));
}

TEST_CASE("mixed-field operations are rejected") {
  auto a = Scalar::of_int(FieldSpec::prime(5), 1);
  auto b = Scalar::of_int(FieldSpec::prime(7), 1);
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(Scalar::one(FieldSpec::rationals()).residue(),
                  UnsupportedOverRationals);
}
