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

#include "polycrt/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

namespace polycrt {

std::int64_t Degree::value() const {
  if (!is_finite()) {
    throw Error(ErrorCode::kZeroInput, "degree of the zero polynomial");
  }
  return value_;
}

std::ostream& operator<<(std::ostream& os, Degree d) {
  if (!d.is_finite()) return os << "-inf";
  return os << d.value();
}

Polynomial::Polynomial(Field field, std::span<const std::int64_t> ascending)
    : field_(field) {
  coeffs_.reserve(ascending.size());
  for (std::int64_t c : ascending) coeffs_.push_back(field_.reduce(c));
  trim();
}

Polynomial Polynomial::constant(Field field, std::int64_t c) {
  Polynomial p(field);
  p.coeffs_.push_back(field.reduce(c));
  p.trim();
  return p;
}

Polynomial Polynomial::monomial(Field field, std::int64_t c, std::size_t power) {
  Polynomial p(field);
  value_type v = field.reduce(c);
  if (v == 0) return p;
  p.coeffs_.assign(power + 1, 0);
  p.coeffs_[power] = v;
  return p;
}

Polynomial Polynomial::from_raw(Field field, std::vector<value_type> ascending) {
  Polynomial p(field);
  for (value_type& c : ascending) {
    if (c >= field.characteristic()) c %= field.characteristic();
  }
  p.coeffs_ = std::move(ascending);
  p.trim();
  return p;
}

FieldElement Polynomial::coefficient(std::size_t i) const {
  return FieldElement(field_, i < coeffs_.size() ? coeffs_[i] : 0);
}

FieldElement Polynomial::leading_coefficient() const {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::kZeroInput, "leading coefficient of zero");
  }
  return FieldElement(field_, coeffs_.back());
}

void Polynomial::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::require_same_field(const Polynomial& other) const {
  if (field_ != other.field_) {
    throw Error(ErrorCode::kMixedFields,
                "polynomials over F_" + std::to_string(field_.characteristic()) +
                    " and F_" + std::to_string(other.field_.characteristic()));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_field(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = field_.add(coeffs_[i], other.coeffs_[i]);
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_field(other);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = field_.sub(coeffs_[i], other.coeffs_[i]);
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_field(b);
  Polynomial out(a.field_);
  if (a.is_zero() || b.is_zero()) return out;
  const Field& f = a.field_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] =
          f.add(out.coeffs_[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  // Leading product is nonzero over a field, so no trim is needed.
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& c : out.coeffs_) c = a.field_.neg(c);
  return out;
}

Polynomial operator*(const FieldElement& c, const Polynomial& a) {
  if (c.field() != a.field_) {
    throw Error(ErrorCode::kMixedFields, "scalar and polynomial fields differ");
  }
  Polynomial out(a.field_);
  if (c.is_zero()) return out;
  out.coeffs_ = a.coeffs_;
  for (auto& v : out.coeffs_) v = a.field_.mul(v, c.value());
  return out;
}

DivMod poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::kMixedFields, "divmod operands over different fields");
  }
  if (b.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by the zero polynomial");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Polynomial(f), a};

  auto bc = b.coefficients();
  std::vector<Polynomial::value_type> rem(a.coefficients().begin(),
                                          a.coefficients().end());
  const std::size_t db = bc.size() - 1;
  const std::size_t dq = rem.size() - 1 - db;
  std::vector<Polynomial::value_type> quot(dq + 1, 0);
  const auto lead_inv = f.inv(bc.back());

  for (std::size_t k = dq + 1; k-- > 0;) {
    const auto c = f.mul(rem[k + db], lead_inv);
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k + j] = f.sub(rem[k + j], f.mul(c, bc[j]));
    }
  }
  rem.resize(db);
  return {Polynomial::from_raw(f, std::move(quot)),
          Polynomial::from_raw(f, std::move(rem))};
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) {
  return poly_divmod(a, b).remainder;
}

Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) {
    throw Error(ErrorCode::kInexactDivision,
                poly_format(b) + " does not divide " + poly_format(a));
  }
  return q;
}

Polynomial monic(const Polynomial& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return a.leading_coefficient().inverse() * a;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::kMixedFields, "gcd operands over different fields");
  }
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorCode::kBothZero, "gcd of two zero polynomials");
  }
  Polynomial r0 = a;
  Polynomial r1 = b;
  while (!r1.is_zero()) {
    Polynomial r2 = poly_mod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return monic(r0);
}

Xgcd poly_xgcd(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::kMixedFields, "xgcd operands over different fields");
  }
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorCode::kBothZero, "xgcd of two zero polynomials");
  }
  const Field& f = a.field();
  // Invariant: r_k = s_k * a + t_k * b.
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(f, 1), s1(f);
  Polynomial t0(f), t1 = Polynomial::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divmod(r0, r1);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const FieldElement scale = r0.leading_coefficient().inverse();
  return {scale * r0, scale * s0, scale * t0};
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    throw Error(ErrorCode::kZeroInput, "lcm with a zero polynomial");
  }
  return monic(poly_exact_div(a, poly_gcd(a, b)) * b);
}

Polynomial poly_inverse_mod(const Polynomial& a, const Polynomial& mod) {
  if (mod.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse modulo zero");
  if (mod.is_constant()) return Polynomial(mod.field());
  auto [g, s, t] = poly_xgcd(poly_mod(a, mod), mod);
  if (g.degree() != Degree(0)) {
    throw Error(ErrorCode::kDivisionByZero,
                poly_format(a) + " is not invertible modulo " + poly_format(mod));
  }
  return poly_mod(s, mod);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class Parser {
 public:
  Parser(std::string_view text, Field field) : text_(text), field_(field) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty input");
    Polynomial out = peek() == '[' ? parse_list() : parse_terms();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::uint64_t parse_uint() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::uint64_t{1} << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  std::uint64_t parse_coefficient() {
    const std::size_t start = pos_;
    std::uint64_t v = parse_uint();
    if (v >= field_.characteristic()) {
      pos_ = start;
      fail("coefficient " + std::to_string(v) + " not in [0, " +
           std::to_string(field_.characteristic()) + ")");
    }
    return v;
  }

  Polynomial parse_list() {
    accept('[');
    std::vector<Polynomial::value_type> coeffs;
    if (accept(']')) return Polynomial(field_);
    do {
      coeffs.push_back(static_cast<Polynomial::value_type>(parse_coefficient()));
    } while (accept(','));
    if (!accept(']')) fail("expected ',' or ']'");
    return Polynomial::from_raw(field_, std::move(coeffs));
  }

  // term := coeff | coeff '*' 'x' ['^' n] | 'x' ['^' n]
  std::pair<std::uint64_t, std::size_t> parse_term() {
    skip_space();
    std::uint64_t coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coefficient();
      has_coeff = true;
      if (!accept('*')) return {coeff, 0};
    }
    skip_space();
    if (peek() != 'x') fail(has_coeff ? "expected 'x' after '*'" : "expected a term");
    ++pos_;
    std::size_t power = 1;
    if (accept('^')) {
      std::uint64_t k = parse_uint();
      if (k > 1'000'000) fail("exponent too large");
      power = static_cast<std::size_t>(k);
    }
    return {coeff, power};
  }

  Polynomial parse_terms() {
    std::vector<Polynomial::value_type> coeffs;
    std::optional<std::size_t> last_power;
    std::size_t terms = 0;
    do {
      const std::size_t start = (skip_space(), pos_);
      auto [coeff, power] = parse_term();
      ++terms;
      if (last_power && power >= *last_power) {
        pos_ = start;
        fail("powers must be strictly descending");
      }
      if (coeff == 0 && !(terms == 1 && power == 0)) {
        pos_ = start;
        fail("zero coefficient term");
      }
      if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
      coeffs[power] = static_cast<Polynomial::value_type>(coeff);
      last_power = power;
    } while (accept('+'));
    return Polynomial::from_raw(field_, std::move(coeffs));
  }

  std::string_view text_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial poly_parse(std::string_view text, Field field) {
  return Parser(text, field).parse();
}

std::string poly_format(const Polynomial& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  auto c = a.coefficients();
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (k == 0) {
      os << c[k];
      continue;
    }
    if (c[k] != 1) os << c[k] << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& a) {
  return os << poly_format(a);
}

}  // namespace polycrt
