#include "tame/field.hpp"

#include <charconv>
#include <limits>

namespace tame {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
  if (p > (std::numeric_limits<std::uint32_t>::max)())
    throw Error("characteristic too large");
  Field f;
  f.p_ = p;
  return f;
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (!text.empty() && text.front() == 'F') {
    text.remove_prefix(1);
    if (!text.empty() && text.front() == '_') text.remove_prefix(1);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec == std::errc() && ptr == text.data() + text.size()) return prime(p);
  }
  throw Error("unknown field '" + std::string(text) + "' (expected Q or F<p>)");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    auto p = static_cast<long long>(field.characteristic());
    long long r = static_cast<long long>(value) % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    value_ = value;
    std::get<mpq_class>(value_).canonicalize();
    return;
  }
  const std::uint64_t p = field.characteristic();
  std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0)
    throw Error("denominator of " + value.get_str() + " is not invertible in " + field.name());
  value_ = mulmod(reduce(value.get_num(), p), powmod(den, p - 2, p), p);
}

Scalar Scalar::parse(Field f, std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) throw Error("bad scalar literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return Scalar(f, q);
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) throw Error("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

bool Scalar::is_negative() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) < 0;
  return std::get<std::uint64_t>(value_) > field_.characteristic() / 2;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    std::get<mpq_class>(r.value_) = -std::get<mpq_class>(value_);
  } else {
    auto v = std::get<std::uint64_t>(value_);
    r.value_ = v == 0 ? 0 : field_.characteristic() - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    auto p = field_.characteristic();
    auto s = std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(o.value_);
    value_ = s >= p ? s - p : s;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    value_ = mulmod(std::get<std::uint64_t>(value_), std::get<std::uint64_t>(o.value_),
                    field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar r = *this;
  if (field_.is_rational()) {
    mpq_class& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
  } else {
    auto p = field_.characteristic();
    r.value_ = powmod(std::get<std::uint64_t>(value_), p - 2, p);
  }
  return r;
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar r = one(field_);
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

mpq_class Scalar::to_rational() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_);
  auto v = std::get<std::uint64_t>(value_);
  if (is_negative()) return -mpq_class(std::to_string(field_.characteristic() - v));
  return mpq_class(std::to_string(v));
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error("residue() on a rational scalar");
  return std::get<std::uint64_t>(value_);
}

std::string Scalar::str() const { return to_rational().get_str(); }

}  // namespace tame
