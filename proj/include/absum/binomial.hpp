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

#ifndef ABSUM_BINOMIAL_HPP
#define ABSUM_BINOMIAL_HPP

#include <vector>

#include "absum/bigint.hpp"

namespace absum {

/// Binomial coefficient C(n,k) under the zero-outside-range convention:
/// returns 0 whenever k < 0, k > n, or n < 0. Any integer arguments are
/// accepted, which lets sums run over all integers without explicit limits.
BigNat binomial(long long n, long long k);

/// Row n of Pascal's triangle: [C(n,0), ..., C(n,n)].
std::vector<BigNat> pascal_row(unsigned n);

/// Entry j of a full Pascal row under the zero convention (0 outside [0,n]).
inline const BigNat& row_at(const std::vector<BigNat>& row, long long j) {
    static const BigNat zero{0};
    if (j < 0 || j >= static_cast<long long>(row.size())) return zero;
    return row[static_cast<std::size_t>(j)];
}

}  // namespace absum

#endif  // ABSUM_BINOMIAL_HPP
