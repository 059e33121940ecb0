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

#include "absum/laurent.hpp"

#include <vector>

namespace absum {

void LaurentPoly::strip_zeros() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

void LaurentPoly::add_term(long long e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::shifted(long long s) const {
    CoeffMap m;
    for (const auto& [e, c] : coeffs_) m.emplace(e + s, c);
    LaurentPoly p;
    p.coeffs_ = std::move(m);
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [e, c] : p.coeffs()) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        BigInt mag = abs(c);
        if (mag != 1 || e == 0) os << mag.str();
        if (e != 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (e != 1) os << "^" << e;
        }
    }
    return os;
}

LaurentPoly poly_binomial_power(unsigned k) {
    // (1+x)^{2k} by 2k in-place convolutions with (1+x), shifted by x^{-k}.
    std::vector<BigInt> c(2 * static_cast<std::size_t>(k) + 1);
    c[0] = 1;
    for (unsigned n = 1; n <= 2 * k; ++n)
        for (unsigned j = n; j >= 1; --j) c[j] += c[j - 1];
    LaurentPoly::CoeffMap m;
    for (unsigned j = 0; j <= 2 * k; ++j)
        m.emplace(static_cast<long long>(j) - k, std::move(c[j]));
    return LaurentPoly(std::move(m));
}

LaurentPoly apply_x_ddx(const LaurentPoly& f) {
    LaurentPoly::CoeffMap m;
    for (const auto& [e, c] : f.coeffs())
        if (e != 0) m.emplace(e, c * e);
    return LaurentPoly(std::move(m));
}

BigInt eval_at_one(const LaurentPoly& f) {
    BigInt s(0);
    for (const auto& [e, c] : f.coeffs()) s += c;
    return s;
}

}  // namespace absum
