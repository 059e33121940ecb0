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

#include "absum/binomial.hpp"

namespace absum {

BigNat binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return BigNat(0);
    // Multiplicative formula with exact intermediate divisions:
    // the running product after i steps is C(n-k+i, i), an integer.
    long long m = std::min(k, n - k);
    BigNat c(1);
    for (long long i = 1; i <= m; ++i) {
        c *= (n - m + i);
        c /= i;
    }
    return c;
}

std::vector<BigNat> pascal_row(unsigned n) {
    std::vector<BigNat> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    // Neighbor ratio C(n,j+1) = C(n,j) (n-j)/(j+1), exact at every step.
    for (unsigned j = 0; j < n; ++j) {
        row[j + 1] = row[j] * (n - j);
        row[j + 1] /= (j + 1);
    }
    return row;
}

}  // namespace absum
