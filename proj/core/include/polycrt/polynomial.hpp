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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polycrt/field.hpp"

namespace polycrt {

/// Polynomial degree with deg(0) = -inf.
///
/// NegInf compares below every finite degree and absorbs addition, so
/// bounds like deg(e) <= tau hold for e = 0 at every tau.
class Degree {
 public:
  constexpr Degree() noexcept = default;  // -inf
  constexpr Degree(std::int64_t n) noexcept : value_(n) {}  // NOLINT

  static constexpr Degree neg_inf() noexcept { return Degree(); }

  constexpr bool is_finite() const noexcept { return value_ != kNegInf; }
  /// Finite value; throws Error{kZeroInput} for -inf.
  std::int64_t value() const;

  friend constexpr auto operator<=>(Degree a, Degree b) noexcept {
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(Degree a, Degree b) noexcept {
    return a.value_ == b.value_;
  }
  friend constexpr Degree operator+(Degree a, Degree b) noexcept {
    if (!a.is_finite() || !b.is_finite()) return neg_inf();
    return Degree(a.value_ + b.value_);
  }

 private:
  static constexpr std::int64_t kNegInf =
      std::numeric_limits<std::int64_t>::min();
  std::int64_t value_ = kNegInf;
};

std::ostream& operator<<(std::ostream& os, Degree d);

/// Dense univariate polynomial over F_p.
///
/// Coefficients are stored in ascending order (index i holds the coefficient
/// of x^i) and kept canonical: the highest stored coefficient is nonzero and
/// the zero polynomial stores nothing.
class Polynomial {
 public:
  using value_type = Field::value_type;

  explicit Polynomial(Field field) : field_(field) {}
  /// Coefficients are reduced mod p and trailing zeros trimmed.
  Polynomial(Field field, std::span<const std::int64_t> ascending);
  Polynomial(Field field, std::initializer_list<std::int64_t> ascending)
      : Polynomial(field, std::span<const std::int64_t>(ascending.begin(),
                                                        ascending.size())) {}

  static Polynomial constant(Field field, std::int64_t c);
  /// c * x^power
  static Polynomial monomial(Field field, std::int64_t c, std::size_t power);
  /// Builds from raw residues already in [0, p).
  static Polynomial from_raw(Field field, std::vector<value_type> ascending);

  const Field& field() const noexcept { return field_; }
  Degree degree() const noexcept {
    return coeffs_.empty() ? Degree::neg_inf()
                           : Degree(static_cast<std::int64_t>(coeffs_.size()) - 1);
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const noexcept {
    return !coeffs_.empty() && coeffs_.back() == 1;
  }

  std::span<const value_type> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  FieldElement coefficient(std::size_t i) const;
  /// Leading coefficient; throws Error{kZeroInput} on the zero polynomial.
  FieldElement leading_coefficient() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const FieldElement& c, const Polynomial& a);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() noexcept;
  void require_same_field(const Polynomial& other) const;

  Field field_;
  std::vector<value_type> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division a = q*b + r with deg(r) < deg(b).
/// Throws Error{kDivisionByZero} if b is zero.
DivMod poly_divmod(const Polynomial& a, const Polynomial& b);

/// |a|_b, the remainder of poly_divmod.
Polynomial poly_mod(const Polynomial& a, const Polynomial& b);

/// a / b when b divides a; throws Error{kInexactDivision} otherwise.
Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b);

/// Scales a nonzero polynomial to leading coefficient 1; zero stays zero.
Polynomial monic(const Polynomial& a);

/// Monic gcd. Throws Error{kBothZero} if a and b are both zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

struct Xgcd {
  Polynomial gcd;  // monic
  Polynomial s;
  Polynomial t;    // s*a + t*b == gcd
};

Xgcd poly_xgcd(const Polynomial& a, const Polynomial& b);

/// Monic lcm. Throws Error{kZeroInput} if either input is zero.
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

/// Inverse of a modulo mod, reduced below deg(mod).
/// Throws Error{kDivisionByZero} when gcd(a, mod) != 1.
Polynomial poly_inverse_mod(const Polynomial& a, const Polynomial& mod);

/// Parses either the canonical term form ("x^7+x^2+x+1", "3*x^2+5", "0")
/// or an ascending coefficient list ("[5,0,3]").
Polynomial poly_parse(std::string_view text, Field field);

/// Canonical term form, highest power first.
std::string poly_format(const Polynomial& a);

std::ostream& operator<<(std::ostream& os, const Polynomial& a);

}  // namespace polycrt
