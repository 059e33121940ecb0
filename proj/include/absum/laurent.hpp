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

#ifndef ABSUM_LAURENT_HPP
#define ABSUM_LAURENT_HPP

#include <map>
#include <ostream>
#include <utility>

#include "absum/bigint.hpp"

namespace absum {

/// Integer-coefficient polynomial with possibly negative exponents,
/// stored sparsely as exponent -> coefficient. Zero coefficients are
/// never stored; the zero polynomial is the empty map.
class LaurentPoly {
public:
    using CoeffMap = std::map<long long, BigInt>;

    LaurentPoly() = default;
    explicit LaurentPoly(CoeffMap coeffs) : coeffs_(std::move(coeffs)) { strip_zeros(); }

    static LaurentPoly monomial(long long exponent, BigInt coefficient) {
        LaurentPoly p;
        p.add_term(exponent, coefficient);
        return p;
    }

    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^e (0 if absent).
    BigInt coeff(long long e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    /// Adds c to the coefficient of x^e, dropping the term if it cancels.
    void add_term(long long e, const BigInt& c);

    /// Multiplies by x^s (shifts every exponent by s).
    LaurentPoly shifted(long long s) const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

private:
    void strip_zeros();

    CoeffMap coeffs_;
};

/// The generating function x^{-k}(1+x)^{2k}, whose coefficient of x^p is
/// C(2k,k+p). Built by repeated polynomial convolution, independently of
/// binomial(); the agreement of the two routes is a tested invariant.
LaurentPoly poly_binomial_power(unsigned k);

/// The operator x d/dx: weights the coefficient of x^p by p, annihilating
/// the exponent-0 term.
LaurentPoly apply_x_ddx(const LaurentPoly& f);

/// Evaluation at x = 1, i.e. the sum of all coefficients.
BigInt eval_at_one(const LaurentPoly& f);

}  // namespace absum

#endif  // ABSUM_LAURENT_HPP
