// Copyright 2026 The absum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ABSUM_BIGINT_HPP
#define ABSUM_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace absum {

/// Signed arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision natural number. Same representation as BigInt;
/// every operation producing a BigNat keeps it non-negative.
using BigNat = BigInt;

/// Exact rational with canonical (reduced, positive-denominator) form.
using BigRat = boost::multiprecision::cpp_rational;

/// 2^e as an exact integer.
inline BigNat pow2(unsigned e) {
    return BigNat(1) << e;
}

/// Quotient a/b, requiring the division to be exact.
/// Throws std::domain_error on a nonzero remainder or b == 0.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::domain_error("exact_div: division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0)
        throw std::domain_error("exact_div: " + a.str() + " is not divisible by " + b.str());
    return q;
}

}  // namespace absum

#endif  // ABSUM_BIGINT_HPP
