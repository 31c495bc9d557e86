/*
 * Copyright 2026 The treexfer Authors
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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace treexfer {

/// Exact dyadic rational mantissa / 2^exponent.
///
/// Values are always kept canonical: either the mantissa is odd, or the
/// exponent is zero (which covers zero and the even integers). Two Dyadics are
/// equal iff their canonical forms are equal.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value) : mantissa_(value) {}  // NOLINT(google-explicit-constructor)

  static Dyadic normalize(mpz_class mantissa, std::uint64_t exponent);

  /// 2^e for any integer e.
  static Dyadic pow2(std::int64_t e);

  const mpz_class& mantissa() const { return mantissa_; }
  std::uint64_t exponent() const { return exponent_; }

  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return sign() == 0; }

  /// Multiply by 2^e exactly.
  Dyadic scaled(std::int64_t e) const;

  /// floor(log2(x)) for x > 0; throws OutOfRange otherwise.
  std::int64_t floor_log2() const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& rhs);
  Dyadic& operator-=(const Dyadic& rhs);
  Dyadic& operator*=(const Dyadic& rhs);

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// "m/2^k" with m in decimal.
  std::string to_string() const;

  /// Accepts "m/2^k" and bare integers (optional sign on m).
  static Dyadic parse(std::string_view text);

  /// Decimal expansion truncated toward zero after `max_fraction_digits`
  /// digits; trailing zeros are dropped. Every dyadic has a finite expansion,
  /// so a large enough bound gives the exact value. Display only.
  std::string to_decimal(std::size_t max_fraction_digits = 24) const;

  double to_double() const;
  mpq_class to_rational() const;

 private:
  mpz_class mantissa_{0};
  std::uint64_t exponent_ = 0;
};

Dyadic abs(const Dyadic& a);
inline Dyadic min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
inline Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

/// Exact comparison against an arbitrary rational threshold.
std::strong_ordering compare(const Dyadic& a, const mpq_class& q);

}  // namespace treexfer
