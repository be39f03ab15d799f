// Copyright 2026 The polycrt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>

#include "polycrt/error.hpp"

namespace polycrt {

/// The prime field F_p for a runtime prime 2 <= p <= 2^31.
///
/// A Field is a small value; two fields are the same field exactly when
/// their characteristics agree. The raw-residue helpers (add/sub/mul/...)
/// operate on integers already reduced to [0, p) and are what the
/// polynomial layer uses in its inner loops.
class Field {
 public:
  using value_type = std::uint32_t;

  static constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

  /// Throws Error{kNotPrime} unless p is a prime in [2, 2^31].
  explicit Field(std::uint64_t p);

  value_type characteristic() const noexcept { return p_; }

  value_type reduce(std::int64_t v) const noexcept;

  value_type add(value_type a, value_type b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const noexcept {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((std::uint64_t{a} * b) % p_);
  }
  /// Multiplicative inverse by the integer extended Euclidean algorithm.
  /// Throws Error{kDivisionByZero} for a == 0.
  value_type inv(value_type a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  value_type p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of F_p. Operations between elements of different fields throw
/// Error{kMixedFields}.
class FieldElement {
 public:
  FieldElement(Field field, std::int64_t value)
      : field_(field), value_(field.reduce(value)) {}

  const Field& field() const noexcept { return field_; }
  Field::value_type value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  struct Raw {};
  FieldElement(Field field, Field::value_type value, Raw)
      : field_(field), value_(value) {}

  Field field_;
  Field::value_type value_;
};

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);
FieldElement fe_neg(const FieldElement& a);
FieldElement fe_inv(const FieldElement& a);

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace polycrt
