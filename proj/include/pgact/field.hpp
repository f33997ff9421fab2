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

#ifndef PGACT_FIELD_HPP
#define PGACT_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pgact {

// Raised when scalars from different prime fields meet, or a modulus is not
// prime, or a value cannot be represented in the requested field.
class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact scalar in Q or in GF(p).
//
// A modulus of 0 means Q. Over GF(p) the value is kept as an integer in
// [0, p). A rational scalar meeting a GF(p) scalar is reduced into GF(p), so
// integer literals can be mixed freely with typed values.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class v, std::uint32_t modulus);

  std::uint32_t modulus() const { return p_; }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  // Reinterprets this scalar in GF(p) (p = 0 leaves it in Q).
  Scalar in_field(std::uint32_t modulus) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  static std::uint32_t common_modulus(std::uint32_t a, std::uint32_t b);
  void normalize();

  mpq_class value_;
  std::uint32_t p_ = 0;
};

// The coefficient field: Q or a prime field GF(p).
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  // Accepts "Q", "QQ", "Fp" or "GFp" (p prime).
  static Field parse(std::string_view text);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  Scalar zero() const { return Scalar(mpq_class(0), p_); }
  Scalar one() const { return Scalar(mpq_class(1), p_); }
  Scalar from(long v) const { return Scalar(mpq_class(v), p_); }
  Scalar coerce(const Scalar& s) const { return s.in_field(p_); }
  // Parses "a" or "a/b" with integer a, b.
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint32_t n);

}  // namespace pgact

#endif  // PGACT_FIELD_HPP
