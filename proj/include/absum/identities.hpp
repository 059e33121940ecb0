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

#ifndef ABSUM_IDENTITIES_HPP
#define ABSUM_IDENTITIES_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "absum/bigint.hpp"

namespace absum {

// The family of absolute-value binomial sums, all over row 2k of Pascal's
// triangle and indexed by the half-offset p of a length-2k +-1 sequence:
//
//   S0 = sum_p C(2k,k+p) |p|                         = k C(2k,k)
//   S1 = sum_{p,q} C(2k,k+p) C(2k,k+q) |p^2-q^2|     = 2 k^2 C(2k,k)^2
//   S2 = (p=0 or q=0 slice of S1)                    = k 2^{2k} C(2k,k)
//   S3 = (p,q != 0 remainder; S1 = S2 + S3)
//
// Each verifier below checks one step of the derivation as an exact
// integer identity; direct summation and closed form are independent
// evaluation routes throughout.

/// Labels for the individual identities checked by the verifiers.
enum class IdentityId {
    EQ1,         // S0 = 2 sum_{p>0} p C(2k,k+p)
    P_REWRITE,   // p C(2k,k+p) = 2k C(2k-1,k+p-1) - k C(2k,k+p)
    LEMMA1,      // S0 direct = k C(2k,k)
    MOMENT2,     // sum_p C(2k,k+p) p^2 = k 2^{2k-1}, both summation routes
    ODD_MOMENT,  // signed moments of odd order vanish
    S2_CLOSED,   // S2 direct = k 2^{2k} C(2k,k)
    DECOMP,      // termwise p^2-q^2 decomposition over row 2k-2
    TRINOMIAL,   // C(2k,k+p) = C(2k-2,k+p) + 2 C(2k-2,k+p-1) + C(2k-2,k+p-2)
    TELESCOPE,   // two-variable telescoping collapse of S3/8
    S3_CLOSED,   // S3 direct = closed form
    RECOMBINE,   // S1 = S2 + S3
    THEOREM1,    // S1 direct = 2 k^2 C(2k,k)^2
};

inline constexpr std::array<IdentityId, 12> kAllIdentities = {
    IdentityId::EQ1,       IdentityId::P_REWRITE, IdentityId::LEMMA1,
    IdentityId::MOMENT2,   IdentityId::ODD_MOMENT, IdentityId::S2_CLOSED,
    IdentityId::DECOMP,    IdentityId::TRINOMIAL, IdentityId::TELESCOPE,
    IdentityId::S3_CLOSED, IdentityId::RECOMBINE, IdentityId::THEOREM1,
};

const char* to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

/// Outcome of one identity check at one k. `equal` is true iff lhs == rhs
/// exactly (checks that compare more than two quantities fold the extra
/// comparisons into `equal` as well).
struct IdentityReport {
    IdentityId id;
    unsigned k = 0;
    BigInt lhs;
    BigInt rhs;
    bool equal = false;
};

/// A moment of the row-2k binomial weights.
struct Moment {
    unsigned k = 0;
    unsigned order = 0;
    bool absolute = false;  // |p|^r weights instead of p^r
    BigNat value;
};

Moment make_moment(unsigned k, unsigned order, bool absolute);

// Default sweep ceilings, chosen so the full verification suite stays
// fast: O(k) checks to 1000, O(k^2) double sums to 300, O(k^2)-per-k
// proof-step sweeps to 50. All overridable from the CLI.
inline constexpr unsigned kMaxClosedDefault = 1000;
inline constexpr unsigned kMaxDoubleSumDefault = 300;
inline constexpr unsigned kMaxProofStepDefault = 50;

/// S0 by direct summation of C(2k,k+p)|p| over p in [-k-2, k+2].
BigNat s0_direct(unsigned k);

/// S0 closed form k C(2k,k).
BigNat s0_closed(unsigned k);

/// S0 = 2 sum_{p>0} p C(2k,k+p): the p=0 term vanishes and the halves match.
IdentityReport verify_eq1(unsigned k);

/// Termwise rewrite p C(2k,k+p) = 2k C(2k-1,k+p-1) - k C(2k,k+p).
IdentityReport verify_p_rewrite(unsigned k, long long p);

/// Signed moment sum_p p^r C(2k,k+p) by direct summation.
/// Zero for odd r; k 2^{2k-1} for r = 2; 2^{2k} for r = 0.
BigInt moment(unsigned k, unsigned r);

/// The same moment through the generating-function pipeline
/// (poly_binomial_power, r applications of x d/dx, evaluation at 1) with
/// no direct p-summation anywhere on the path.
BigInt moment_via_genfun(unsigned k, unsigned r);

/// S1 by the direct double loop over p,q in [-k-2, k+2]. O(k^2).
BigNat s1_direct(unsigned k);

/// S1 closed form 2 k^2 C(2k,k)^2.
BigNat s1_closed(unsigned k);

/// S2 summed as 2 C(2k,k) sum_p C(2k,k+p) p^2.
BigNat s2_direct(unsigned k);

/// S2 closed form k 2^{2k} C(2k,k).
BigNat s2_closed(unsigned k);

/// S3 by direct summation, computed over both the octant p > q > 0 (times 8)
/// and the full p,q != 0 region; throws std::logic_error if the two
/// disagree (octant-symmetry check).
BigNat s3_direct(unsigned k);

/// S3 closed form
/// 8k(2k-1) { C(2k-2,k)[2^{2k-2} - C(2k-2,k-1)]
///            - C(2k-2,k-1)[2^{2k-2} - 2 C(2k-2,k) - C(2k-2,k-1)] }.
BigNat s3_closed(unsigned k);

/// Termwise decomposition
/// C(2k,k+p)C(2k,k+q)(p^2-q^2) =
///   2k(2k-1)[-C(2k-2,k+p-1)C(2k,k+q) + C(2k,k+p)C(2k-2,k+q-1)],
/// valid for all integer p,q once k >= 1 (the zero convention totalizes it).
IdentityReport verify_decomposition_term(unsigned k, long long p, long long q);

/// C(2k,k+p) = C(2k-2,k+p) + 2 C(2k-2,k+p-1) + C(2k-2,k+p-2), k >= 1.
IdentityReport verify_trinomial(unsigned k, long long p);

/// The telescoping collapse of S3/8: evaluates the four-double-sum form
/// before and after the change of variables, the collapsed q=0 boundary
/// form, and s3_direct(k)/8, requiring four-way equality. Throws
/// std::domain_error if s3_direct(k) is not divisible by 8.
IdentityReport verify_telescope(unsigned k);

/// S1 = S2 + S3 with S1 evaluated both directly and in closed form.
IdentityReport verify_recombination(unsigned k);

/// Runs every verifier at one k (DECOMP/TRINOMIAL/P_REWRITE swept over all
/// |p|,|q| <= k+2) and returns one report per IdentityId. Sweeps that
/// require k >= 1 report a degenerate pass at k = 0.
std::vector<IdentityReport> verify_all(unsigned k);

bool all_pass(const std::vector<IdentityReport>& reports);

}  // namespace absum

#endif  // ABSUM_IDENTITIES_HPP
