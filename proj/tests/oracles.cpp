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

#include "oracles.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace polycrt::oracle {

std::optional<std::uint32_t> inverse_by_search(std::uint32_t p, std::uint32_t a) {
  for (std::uint64_t b = 1; b < p; ++b) {
    if ((std::uint64_t{a} * b) % p == 1) return static_cast<std::uint32_t>(b);
  }
  return std::nullopt;
}

void for_each_polynomial(const Field& field, int length,
                         const std::function<void(const Polynomial&)>& fn) {
  std::vector<Field::value_type> digits(static_cast<std::size_t>(std::max(length, 0)), 0);
  for (;;) {
    fn(Polynomial::from_raw(field, digits));
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (++digits[i] < field.characteristic()) break;
      digits[i] = 0;
    }
    if (i == digits.size()) return;
  }
}

std::vector<Polynomial> all_polynomials(const Field& field, int length) {
  std::vector<Polynomial> out;
  for_each_polynomial(field, length, [&](const Polynomial& p) { out.push_back(p); });
  return out;
}

std::vector<Polynomial> monic_polynomials(const Field& field, int max_degree) {
  std::vector<Polynomial> out;
  for (int d = 1; d <= max_degree; ++d) {
    const Polynomial lead = Polynomial::monomial(field, 1, static_cast<std::size_t>(d));
    for_each_polynomial(field, d, [&](const Polynomial& low) { out.push_back(lead + low); });
  }
  return out;
}

SearchDivMod divmod_by_search(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod_by_search: zero divisor");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Polynomial(f), a};
  const int qlen = static_cast<int>(a.degree().value() - b.degree().value()) + 1;
  std::optional<SearchDivMod> found;
  for_each_polynomial(f, qlen, [&](const Polynomial& q) {
    if (found) return;
    Polynomial r = a - q * b;
    if (r.degree() < b.degree()) found = SearchDivMod{q, r};
  });
  if (!found) throw std::logic_error("divmod_by_search: no quotient found");
  return *found;
}

namespace {

// Rank over F_p of a dense row-major matrix.
int rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  auto inv = [p](std::uint64_t a) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    auto& pr = rows[static_cast<std::size_t>(rank)];
    const std::uint64_t s = inv(pr[c]);
    for (auto& v : pr) v = v * s % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
      const std::uint64_t factor = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = (rows[r][k] + p * p - factor * pr[k] % p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int gcd_degree_by_sylvester(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("sylvester: zero input");
  const auto m = static_cast<std::size_t>(a.degree().value());
  const auto n = static_cast<std::size_t>(b.degree().value());
  if (m + n == 0) return 0;
  const std::size_t size = m + n;
  std::vector<std::vector<std::uint64_t>> rows;
  // n shifted copies of a and m shifted copies of b, coefficients high to low.
  auto push_shifts = [&](const Polynomial& poly, std::size_t deg, std::size_t copies) {
    auto c = poly.coefficients();
    for (std::size_t s = 0; s < copies; ++s) {
      std::vector<std::uint64_t> row(size, 0);
      for (std::size_t k = 0; k <= deg; ++k) row[s + k] = c[deg - k];
      rows.push_back(std::move(row));
    }
  };
  push_shifts(a, m, n);
  push_shifts(b, n, m);
  return static_cast<int>(size) - rank_mod_p(std::move(rows), a.field().characteristic());
}

int max_min_gcd_degree(std::span<const Polynomial> moduli) {
  int best = std::numeric_limits<int>::min();
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    int row = std::numeric_limits<int>::max();
    for (std::size_t j = 0; j < moduli.size(); ++j) {
      if (i != j) row = std::min(row, gcd_degree_by_sylvester(moduli[i], moduli[j]));
    }
    best = std::max(best, row);
  }
  return best;
}

}  // namespace polycrt::oracle
