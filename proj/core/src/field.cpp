#include "fouralg/field.hpp"

#include <cstdlib>

namespace fouralg {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p), a in 1..p-1
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw Error("element not invertible");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p < 5 || !is_prime_u64(p))
    throw Error("field characteristic must be 0 or a prime >= 5");
  return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::str() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "F" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& fs) {
  Scalar s(fs);
  if (!fs.is_prime_field()) s.v_ = mpq_class(0);
  return s;
}

Scalar Scalar::one(const FieldSpec& fs) { return of_int(fs, 1); }

Scalar Scalar::of_int(const FieldSpec& fs, long v) {
  Scalar s(fs);
  if (fs.is_prime_field()) {
    long long p = static_cast<long long>(fs.characteristic());
    long long r = static_cast<long long>(v) % p;
    if (r < 0) r += p;
    s.v_ = static_cast<std::uint64_t>(r);
  } else {
    s.v_ = mpq_class(v);
  }
  return s;
}

Scalar Scalar::parse(const FieldSpec& fs, const std::string& text) {
  if (text.empty()) throw ParseError("empty scalar");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw ParseError("cannot parse scalar '" + text + "'");
  q.canonicalize();
  Scalar s(fs);
  if (fs.is_prime_field()) {
    mpz_class p(static_cast<unsigned long>(fs.characteristic()));
    mpz_class den = q.get_den() % p;
    if (den < 0) den += p;
    if (den == 0)
      throw ParseError("denominator of '" + text + "' vanishes mod p");
    mpz_class num = q.get_num() % p;
    if (num < 0) num += p;
    std::uint64_t n = num.get_ui();
    std::uint64_t d = den.get_ui();
    std::uint64_t inv = mod_inverse(d, fs.characteristic());
    s.v_ = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(n) * inv) % fs.characteristic());
  } else {
    s.v_ = q;
  }
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (fs_ != o.fs_)
    throw FieldMismatch("scalars from " + fs_.str() + " and " + o.fs_.str());
}

bool Scalar::is_zero() const {
  if (fs_.is_prime_field()) return std::get<std::uint64_t>(v_) == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
  if (fs_.is_prime_field()) return std::get<std::uint64_t>(v_) == 1;
  return std::get<mpq_class>(v_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(fs_);
  if (fs_.is_prime_field()) {
    std::uint64_t p = fs_.characteristic();
    s.v_ = (std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_)) % p;
  } else {
    s.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s(fs_);
  if (fs_.is_prime_field()) {
    std::uint64_t p = fs_.characteristic();
    s.v_ = (std::get<std::uint64_t>(v_) + p - std::get<std::uint64_t>(o.v_)) % p;
  } else {
    s.v_ = mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_));
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(fs_);
  if (fs_.is_prime_field()) {
    std::uint64_t p = fs_.characteristic();
    s.v_ = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(std::get<std::uint64_t>(v_)) *
         std::get<std::uint64_t>(o.v_)) %
        p);
  } else {
    s.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(fs_);
  if (fs_.is_prime_field()) {
    std::uint64_t p = fs_.characteristic();
    s.v_ = (p - std::get<std::uint64_t>(v_)) % p;
  } else {
    s.v_ = mpq_class(-std::get<mpq_class>(v_));
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar s(fs_);
  if (fs_.is_prime_field()) {
    s.v_ = mod_inverse(std::get<std::uint64_t>(v_), fs_.characteristic());
  } else {
    s.v_ = mpq_class(1 / std::get<mpq_class>(v_));
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (fs_ != o.fs_) return false;
  if (fs_.is_prime_field())
    return std::get<std::uint64_t>(v_) == std::get<std::uint64_t>(o.v_);
  return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

bool Scalar::less(const Scalar& o) const {
  check_same(o);
  if (fs_.is_prime_field())
    return std::get<std::uint64_t>(v_) < std::get<std::uint64_t>(o.v_);
  return std::get<mpq_class>(v_) < std::get<mpq_class>(o.v_);
}

std::uint64_t Scalar::residue() const {
  if (!fs_.is_prime_field())
    throw UnsupportedOverRationals("residue() needs a prime field");
  return std::get<std::uint64_t>(v_);
}

std::string Scalar::str() const {
  if (fs_.is_prime_field()) return std::to_string(std::get<std::uint64_t>(v_));
  return std::get<mpq_class>(v_).get_str();
}

}  // namespace fouralg
