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

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace mmdim {

// Exact covering cardinalities; these overflow 64 bits quickly (2^900 in the
// Z^2 trivial-bound check).
using Count = boost::multiprecision::mpz_int;

// Exact rationals used by the tiling module.
using Rational = boost::multiprecision::mpq_rational;

// Natural logarithm of a positive count, accurate to double precision for
// arbitrarily large values.
double log_count(const Count& c);

// log(a / b) computed on the reduced fraction, so equal ratios give
// bit-identical results.
double log_ratio(const Count& a, const Count& b);

std::optional<std::uint64_t> to_u64(const Count& c);

std::string to_string(const Count& c);
std::string to_string(const Rational& q);

// Smallest m >= 0 with 2^-m <= eps. Balls of radius eps for the dyadic and
// weighted metrics are governed by this depth.
int scale_depth(double eps);

// Smallest integer c >= 1 with c * step >= length (c = 1 when length <= step).
std::int64_t ceil_div_real(double length, double step);

}  // namespace mmdim
