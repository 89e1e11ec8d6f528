// Copyright 2026 The mmdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mmdim/numeric.hpp"

#include <gmp.h>

#include <cmath>

#include "mmdim/error.hpp"

namespace mmdim {

double log_count(const Count& c) {
  if (c <= 0) throw UsageError("log_count: count must be positive");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, c.backend().data());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double log_ratio(const Count& a, const Count& b) {
  if (a <= 0 || b <= 0) throw UsageError("log_ratio: counts must be positive");
  Rational q(a, b);  // canonicalized
  return log_count(numerator(q)) - log_count(denominator(q));
}

std::optional<std::uint64_t> to_u64(const Count& c) {
  if (c == 0) return 0;
  if (c < 0 || msb(c) >= 64) return std::nullopt;
  return c.convert_to<std::uint64_t>();
}

std::string to_string(const Count& c) { return c.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

int scale_depth(double eps) {
  if (!(eps > 0)) throw UsageError("epsilon must be positive");
  int m = 0;
  while (std::ldexp(1.0, -m) > eps) {
    ++m;
    if (m > 1000) throw UsageError("epsilon too small");
  }
  return m;
}

std::int64_t ceil_div_real(double length, double step) {
  if (!(step > 0)) throw UsageError("ceil_div_real: step must be positive");
  if (length <= step) return 1;
  auto c = static_cast<std::int64_t>(std::ceil(length / step));
  // Division rounding can be off by one in either direction.
  while (c > 1 && static_cast<double>(c - 1) * step >= length) --c;
  while (static_cast<double>(c) * step < length) ++c;
  return c;
}

}  // namespace mmdim
