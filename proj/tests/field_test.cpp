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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace polycrt {
namespace {

FieldElement E(std::uint64_t p, std::int64_t v) { return FieldElement(Field(p), v); }

TEST(FieldTest, RejectsNonPrimeCharacteristic) {
  for (std::uint64_t bad : {0u, 1u, 4u, 9u, 15u, 91u}) {
    try {
      Field f(bad);
      FAIL() << bad << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kNotPrime);
    }
  }
  EXPECT_THROW(Field((std::uint64_t{1} << 31) + 11), Error);
  EXPECT_NO_THROW(Field(2147483647));  // 2^31 - 1
}

TEST(FieldTest, Addition) {
  EXPECT_EQ(fe_add(E(2, 1), E(2, 1)), E(2, 0));
  EXPECT_EQ(fe_add(E(7, 5), E(7, 4)), E(7, 2));
  EXPECT_EQ(fe_add(E(2, 0), E(2, 1)), E(2, 1));
}

TEST(FieldTest, Multiplication) {
  EXPECT_EQ(fe_mul(E(2, 1), E(2, 1)), E(2, 1));
  EXPECT_EQ(fe_mul(E(7, 3), E(7, 5)), E(7, 1));
  EXPECT_EQ(fe_mul(E(5, 2), E(5, 0)), E(5, 0));
}

TEST(FieldTest, MultiplicationTableOfF7) {
  // 3 * 5 == 1 is the only product equal to one in row 3.
  for (int b = 0; b < 7; ++b) {
    EXPECT_EQ(fe_mul(E(7, 3), E(7, b)).value(), static_cast<std::uint32_t>((3 * b) % 7));
  }
}

TEST(FieldTest, InverseMatchesExhaustiveSearch) {
  EXPECT_EQ(fe_inv(E(2, 1)), E(2, 1));
  EXPECT_EQ(oracle::inverse_by_search(7, 3), 5u);
  EXPECT_EQ(fe_inv(E(7, 3)), E(7, 5));
  EXPECT_EQ(oracle::inverse_by_search(13, 2), 7u);
  EXPECT_EQ(fe_inv(E(13, 2)), E(13, 7));

  for (std::uint64_t p = 2; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    Field f(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      const auto expected = oracle::inverse_by_search(static_cast<std::uint32_t>(p), a);
      ASSERT_TRUE(expected.has_value());
      ASSERT_EQ(f.inv(a), *expected) << "p=" << p << " a=" << a;
      ASSERT_EQ(fe_mul(FieldElement(f, a), fe_inv(FieldElement(f, a))), FieldElement(f, 1));
    }
  }
}

TEST(FieldTest, InverseOfZeroThrows) {
  try {
    fe_inv(E(13, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
}

TEST(FieldTest, NegationAndSubtraction) {
  EXPECT_EQ(fe_neg(E(2, 1)), E(2, 1));
  EXPECT_EQ(fe_neg(E(7, 3)), E(7, 4));
  EXPECT_EQ(fe_sub(E(7, 2), E(7, 5)), E(7, 4));
  EXPECT_EQ(fe_neg(E(7, 0)), E(7, 0));
}

TEST(FieldTest, MixedFieldsThrow) {
  try {
    fe_add(E(7, 1), E(13, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedFields);
  }
  EXPECT_THROW(fe_mul(E(2, 1), E(3, 1)), Error);
  EXPECT_THROW(fe_sub(E(2, 1), E(3, 1)), Error);
}

TEST(FieldTest, ReducesNegativeAndLargeInputs) {
  EXPECT_EQ(E(7, -1).value(), 6u);
  EXPECT_EQ(E(7, 15).value(), 1u);
}

TEST(FieldTest, RingAxiomsHoldOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2u, 3u, 13u, 101u, 2147483647u}) {
    Field f(p);
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    for (int n = 0; n < 500; ++n) {
      FieldElement a(f, static_cast<std::int64_t>(d(rng)));
      FieldElement b(f, static_cast<std::int64_t>(d(rng)));
      FieldElement c(f, static_cast<std::int64_t>(d(rng)));
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a - b + b, a);
      if (!a.is_zero()) {
        ASSERT_EQ(a * a.inverse(), FieldElement(f, 1));
      }
    }
  }
}

}  // namespace
}  // namespace polycrt
