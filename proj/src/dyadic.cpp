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

#include "treexfer/dyadic.hpp"

#include <charconv>
#include <cmath>

#include "treexfer/errors.hpp"

namespace treexfer {

namespace {

std::strong_ordering from_cmp(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Brings both mantissas to the larger exponent.
void align(const Dyadic& a, const Dyadic& b, mpz_class& ma, mpz_class& mb,
           std::uint64_t& k) {
  k = std::max(a.exponent(), b.exponent());
  ma = a.mantissa();
  mb = b.mantissa();
  if (a.exponent() < k) mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), k - a.exponent());
  if (b.exponent() < k) mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), k - b.exponent());
}

}  // namespace

Dyadic Dyadic::normalize(mpz_class mantissa, std::uint64_t exponent) {
  Dyadic d;
  if (mantissa == 0) return d;
  if (exponent > 0) {
    const std::uint64_t tz = mpz_scan1(mantissa.get_mpz_t(), 0);
    const std::uint64_t shift = std::min(tz, exponent);
    if (shift > 0) mpz_fdiv_q_2exp(mantissa.get_mpz_t(), mantissa.get_mpz_t(), shift);
    exponent -= shift;
  }
  d.mantissa_ = std::move(mantissa);
  d.exponent_ = exponent;
  return d;
}

Dyadic Dyadic::pow2(std::int64_t e) {
  if (e >= 0) {
    mpz_class m = 1;
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return normalize(std::move(m), 0);
  }
  return normalize(1, static_cast<std::uint64_t>(-e));
}

Dyadic Dyadic::scaled(std::int64_t e) const {
  if (is_zero() || e == 0) return *this;
  if (e > 0) {
    const auto up = static_cast<std::uint64_t>(e);
    if (up <= exponent_) return normalize(mantissa_, exponent_ - up);
    mpz_class m = mantissa_;
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), up - exponent_);
    return normalize(std::move(m), 0);
  }
  return normalize(mantissa_, exponent_ + static_cast<std::uint64_t>(-e));
}

std::int64_t Dyadic::floor_log2() const {
  if (sign() <= 0) throw OutOfRange("floor_log2 of a non-positive value");
  const auto bits = static_cast<std::int64_t>(mpz_sizeinbase(mantissa_.get_mpz_t(), 2));
  return bits - 1 - static_cast<std::int64_t>(exponent_);
}

Dyadic Dyadic::operator-() const {
  Dyadic d = *this;
  d.mantissa_ = -d.mantissa_;
  return d;
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  mpz_class ma, mb;
  std::uint64_t k = 0;
  align(*this, rhs, ma, mb, k);
  *this = normalize(ma + mb, k);
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) {
  mpz_class ma, mb;
  std::uint64_t k = 0;
  align(*this, rhs, ma, mb, k);
  *this = normalize(ma - mb, k);
  return *this;
}

Dyadic& Dyadic::operator*=(const Dyadic& rhs) {
  *this = normalize(mantissa_ * rhs.mantissa_, exponent_ + rhs.exponent_);
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  if (a.exponent_ == b.exponent_) return from_cmp(cmp(a.mantissa_, b.mantissa_));
  mpz_class ma, mb;
  std::uint64_t k = 0;
  align(a, b, ma, mb, k);
  return from_cmp(cmp(ma, mb));
}

std::string Dyadic::to_string() const {
  return mantissa_.get_str(10) + "/2^" + std::to_string(exponent_);
}

Dyadic Dyadic::parse(std::string_view text) {
  auto fail = [&]() -> ParseError {
    return ParseError("malformed dyadic '" + std::string(text) + "' (expected m/2^k)");
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (num.empty()) throw fail();
  const std::size_t digits_from = (num[0] == '-' || num[0] == '+') ? 1 : 0;
  if (digits_from == num.size()) throw fail();
  for (std::size_t i = digits_from; i < num.size(); ++i) {
    if (num[i] < '0' || num[i] > '9') throw fail();
  }
  mpz_class m(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  if (slash == std::string_view::npos) return normalize(std::move(m), 0);

  const std::string_view den = text.substr(slash + 1);
  if (den.size() < 3 || den.substr(0, 2) != "2^") throw fail();
  std::uint64_t k = 0;
  const auto* first = den.data() + 2;
  const auto* last = den.data() + den.size();
  const auto [ptr, ec] = std::from_chars(first, last, k);
  if (ec != std::errc() || ptr != last) throw fail();
  return normalize(std::move(m), k);
}

std::string Dyadic::to_decimal(std::size_t max_fraction_digits) const {
  // m / 2^k = m * 5^k / 10^k.
  mpz_class scaled;
  mpz_ui_pow_ui(scaled.get_mpz_t(), 5, exponent_);
  scaled *= mantissa_;
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str(10);
  const std::size_t k = exponent_;
  if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
  std::string integer_part = digits.substr(0, digits.size() - k);
  std::string fraction = digits.substr(digits.size() - k);
  if (fraction.size() > max_fraction_digits) fraction.resize(max_fraction_digits);
  while (!fraction.empty() && fraction.back() == '0') fraction.pop_back();
  std::string out = negative ? "-" : "";
  out += integer_part;
  if (!fraction.empty()) out += "." + fraction;
  if (out == "-0") out = "0";
  return out;
}

double Dyadic::to_double() const {
  return std::ldexp(mantissa_.get_d(), -static_cast<int>(exponent_));
}

mpq_class Dyadic::to_rational() const {
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), exponent_);
  mpq_class q(mantissa_, den);
  q.canonicalize();
  return q;
}

Dyadic abs(const Dyadic& a) { return a.sign() < 0 ? -a : a; }

std::strong_ordering compare(const Dyadic& a, const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return from_cmp(cmp(a.to_rational(), c));
}

}  // namespace treexfer
