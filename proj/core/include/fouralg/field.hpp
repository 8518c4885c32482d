#ifndef FOURALG_FIELD_HPP
#define FOURALG_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "fouralg/errors.hpp"

namespace fouralg {

/// The ground field: the rationals, or a prime field F_p with p >= 5.
/// Characteristics 2 and 3 are rejected so that 2, 3 and 4! stay invertible,
/// which the degree-<=4 polarization engine relies on.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_prime_field() const { return kind_ == Kind::PrimeField; }

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string str() const;

 private:
  FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// Exact field element in canonical form: a reduced fraction over Q, a
/// residue in 0..p-1 over F_p.  Equality is structural.
class Scalar {
 public:
  static Scalar zero(const FieldSpec& fs);
  static Scalar one(const FieldSpec& fs);
  static Scalar of_int(const FieldSpec& fs, long v);
  static Scalar parse(const FieldSpec& fs, const std::string& text);

  const FieldSpec& field() const { return fs_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws Error on zero

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Total order used for canonical/lexicographic conventions (residue order
  /// over F_p, numeric order over Q).  Only defined within one field.
  bool less(const Scalar& o) const;

  /// Residue in 0..p-1; throws UnsupportedOverRationals over Q.
  std::uint64_t residue() const;

  std::string str() const;

 private:
  Scalar(const FieldSpec& fs) : fs_(fs), v_(std::uint64_t{0}) {}
  void check_same(const Scalar& o) const;

  FieldSpec fs_;
  std::variant<std::uint64_t, mpq_class> v_;
};

}  // namespace fouralg

#endif
