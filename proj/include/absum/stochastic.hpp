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

#ifndef ABSUM_STOCHASTIC_HPP
#define ABSUM_STOCHASTIC_HPP

#include <cstdint>
#include <string>

#include "absum/bigint.hpp"

namespace absum {

// Monte Carlo layer: the half-offset p of a sum of 2k fair +-1 draws
// follows the law P(p) = C(2k,k+p)/4^k, so E|p| = S0/4^k and, for an
// independent pair, E|p^2-q^2| = S1/16^k. Estimates are checked against
// those exact rational targets.

inline constexpr const char* kRngAlgorithm = "splitmix64-counter";

/// Full description of a deterministic sample stream. Identical specs
/// produce identical sample sequences on every platform.
struct RngSpec {
    std::string algorithm = kRngAlgorithm;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// Counter-based SplitMix64: word i is a pure function of (seed, stream, i),
/// so sampling can be split across counter ranges with results independent
/// of the split. Throws std::invalid_argument for an unknown algorithm id.
class CounterRng {
public:
    explicit CounterRng(const RngSpec& spec);

    /// Word at an absolute counter position (pure).
    std::uint64_t at(std::uint64_t counter) const;

    /// Word at the current position, then advance.
    std::uint64_t next() { return at(counter_++); }

    std::uint64_t counter() const { return counter_; }
    void seek(std::uint64_t counter) { counter_ = counter; }

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

/// One draw of the half-offset p in [-k, k]: 2k fair coin flips taken from
/// the generator word stream, popcounted.
long long sample_offset(unsigned k, CounterRng& rng);

/// A Monte Carlo estimate against an exact rational target.
struct MCEstimate {
    std::uint64_t n = 0;       // sample count
    double mean = 0.0;         // empirical mean
    double std_err = 0.0;      // standard error of the mean
    BigNat target_num;         // exact target expectation, reduced
    BigNat target_den;
    double z = 0.0;            // (mean - target)/std_err
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string algorithm;
};

/// Estimates E|p| over n draws; target S0/4^k. Requires n >= 2.
MCEstimate mc_mean_abs(unsigned k, std::uint64_t n, const RngSpec& spec);

/// Estimates E|p^2-q^2| for independent p,q over n draws; target S1/16^k.
/// Requires n >= 2.
MCEstimate mc_mean_absdiffsq(unsigned k, std::uint64_t n, const RngSpec& spec);

/// Pearson chi-squared goodness of fit of the empirical sample_offset law
/// against C(2k,k+p)/4^k, with the critical value at the given p-value
/// floor (Wilson-Hilferty quantile).
struct Chi2Result {
    double statistic = 0.0;
    double critical = 0.0;
    unsigned dof = 0;
    bool pass = false;
};

Chi2Result sample_law_chi2(unsigned k, std::uint64_t n, const RngSpec& spec,
                           double pvalue_floor = 1e-4);

}  // namespace absum

#endif  // ABSUM_STOCHASTIC_HPP
