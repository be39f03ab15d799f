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

#include "polycrt/field.hpp"

#include <ostream>
#include <string>

namespace polycrt {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kMixedFields: return "MixedFields";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kBothZero: return "BothZero";
    case ErrorCode::kZeroInput: return "ZeroInput";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kZeroModulus: return "ZeroModulus";
    case ErrorCode::kCoprimeModuli: return "CoprimeModuli";
    case ErrorCode::kDegenerateModuli: return "DegenerateModuli";
    case ErrorCode::kTooFewModuli: return "TooFewModuli";
    case ErrorCode::kDegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::kInconsistentResidues: return "InconsistentResidues";
    case ErrorCode::kInexactDivision: return "InexactDivision";
    case ErrorCode::kLevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw Error(ErrorCode::kNotPrime,
                "field characteristic " + std::to_string(p) +
                    " is not a prime in [2, 2^31]");
  }
  p_ = static_cast<value_type>(p);
}

Field::value_type Field::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

Field::value_type Field::inv(value_type a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  // Invariant: r0 = s0 * a (mod p), r1 = s1 * a (mod p).
  std::int64_t r0 = p_, r1 = a;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::kMixedFields,
                "field elements from F_" +
                    std::to_string(a.field().characteristic()) + " and F_" +
                    std::to_string(b.field().characteristic()));
  }
}

}  // namespace

FieldElement FieldElement::inverse() const {
  return FieldElement(field_, field_.inv(value_), Raw{});
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.field_.add(a.value_, b.value_),
                      FieldElement::Raw{});
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.field_.sub(a.value_, b.value_),
                      FieldElement::Raw{});
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field_, a.field_.mul(a.value_, b.value_),
                      FieldElement::Raw{});
}

FieldElement operator-(const FieldElement& a) {
  return FieldElement(a.field_, a.field_.neg(a.value_), FieldElement::Raw{});
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement fe_sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement fe_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement fe_neg(const FieldElement& a) { return -a; }
FieldElement fe_inv(const FieldElement& a) { return a.inverse(); }

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.value();
}

}  // namespace polycrt
