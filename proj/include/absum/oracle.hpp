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

#ifndef ABSUM_ORACLE_HPP
#define ABSUM_ORACLE_HPP

#include <map>

#include "absum/bigint.hpp"

namespace absum {

// Brute-force cross-check of the binomial sums by exhaustive enumeration
// of +-1 sequences. Nothing here touches binomial coefficients or closed
// forms: counts come from popcounts over all 2^{2k} sign vectors.

/// Enumeration ceiling: 2^{2k} vectors, about 1M at k = 10.
inline constexpr unsigned kOracleMaxDefault = 10;

/// Histogram of the half-offset p = (#plus - #minus)/2 over all length-2k
/// +-1 sequences. counts[p] is the number of sequences attaining p.
struct SumHistogram {
    unsigned k = 0;
    std::map<long long, BigNat> counts;
};

/// Enumerates all 2^{2k} sign vectors and tallies their offsets.
/// Throws std::domain_error if k > max_k (cost guard).
SumHistogram enumerate_histogram(unsigned k, unsigned max_k = kOracleMaxDefault);

/// sum_p counts[p] |p| from the enumeration histogram alone.
BigNat oracle_s0(unsigned k, unsigned max_k = kOracleMaxDefault);

/// sum_{p,q} counts[p] counts[q] |p^2-q^2| from the histogram alone.
/// Exact despite never enumerating pairs: the p and q weights factorize.
BigNat oracle_s1(unsigned k, unsigned max_k = kOracleMaxDefault);

}  // namespace absum

#endif  // ABSUM_ORACLE_HPP
