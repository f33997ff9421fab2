/*
 *   Copyright 2026 The pgact Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "pgact/field.hpp"

#include <cctype>

namespace pgact {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Scalar::Scalar(mpq_class v, std::uint32_t modulus) : value_(std::move(v)), p_(modulus) {
  value_.canonicalize();
  normalize();
}

std::uint32_t Scalar::common_modulus(std::uint32_t a, std::uint32_t b) {
  if (a == b || b == 0) return a;
  if (a == 0) return b;
  throw FieldError("scalars from GF(" + std::to_string(a) + ") and GF(" + std::to_string(b) +
                   ") cannot be combined");
}

void Scalar::normalize() {
  if (p_ == 0) return;
  mpz_class p(p_);
  mpz_class num = value_.get_num() % p;
  mpz_class den = value_.get_den() % p;
  if (den == 0) {
    throw FieldError("denominator of " + value_.get_str() + " vanishes in GF(" +
                     std::to_string(p_) + ")");
  }
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  if (num < 0) num += p;
  value_ = mpq_class(num);
}

Scalar Scalar::in_field(std::uint32_t modulus) const {
  if (modulus == p_) return *this;
  if (p_ != 0) {
    throw FieldError("cannot move a GF(" + std::to_string(p_) + ") scalar into another field");
  }
  return Scalar(value_, modulus);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.value_ = -r.value_;
  r.normalize();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  p_ = common_modulus(p_, o.p_);
  value_ += o.value_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  p_ = common_modulus(p_, o.p_);
  value_ -= o.value_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  p_ = common_modulus(p_, o.p_);
  value_ *= o.value_;
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  Scalar r = *this;
  r.value_ = 1 / r.value_;
  r.normalize();
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  p_ = common_modulus(p_, o.p_);
  Scalar inv = o.in_field(p_).inverse();
  value_ *= inv.value_;
  normalize();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::common_modulus(a.p_, b.p_);
  if (a.p_ == b.p_) return a.value_ == b.value_;
  return a.in_field(p).value_ == b.in_field(p).value_;
}

std::string Scalar::to_string() const { return value_.get_str(); }

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw FieldError("modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits;
  if (text.size() > 1 && text[0] == 'F') {
    digits = text.substr(1);
  } else if (text.size() > 2 && text.substr(0, 2) == "GF") {
    digits = text.substr(2);
  } else {
    throw FieldError("unknown field '" + std::string(text) + "' (expected Q or Fp)");
  }
  std::uint64_t p = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || p > 0xFFFFFFFFull / 10) {
      throw FieldError("bad field modulus in '" + std::string(text) + "'");
    }
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (p > 0xFFFFFFFFull) throw FieldError("field modulus too large");
  return prime(static_cast<std::uint32_t>(p));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar Field::parse_scalar(std::string_view text) const {
  auto valid_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw FieldError("'" + std::string(text) + "' is not a rational number");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  std::string d(den.front() == '+' ? den.substr(1) : den);
  mpz_class dz(d);
  if (dz == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
  return Scalar(mpq_class(mpz_class(n), dz), p_);
}

}  // namespace pgact
