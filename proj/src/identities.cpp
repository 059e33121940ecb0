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

#include "absum/identities.hpp"

#include <cstdlib>
#include <stdexcept>

#include "absum/binomial.hpp"
#include "absum/laurent.hpp"

namespace absum {

namespace {

// Direct sums iterate p,q in [-k-2, k+2]: two beyond the support, so the
// zero-outside-range boundary is part of every evaluation.
long long sweep_bound(unsigned k) { return static_cast<long long>(k) + 2; }

IdentityReport make_report(IdentityId id, unsigned k, BigInt lhs, BigInt rhs) {
    bool equal = lhs == rhs;
    return IdentityReport{id, k, std::move(lhs), std::move(rhs), equal};
}

// Aggregates a termwise sweep into one report: while every term passes the
// two sides accumulate (and stay equal); the first failing term freezes its
// own sides into the report.
class SweepReport {
public:
    SweepReport(IdentityId id, unsigned k) : report_{id, k, 0, 0, true} {}

    void feed(const IdentityReport& term) {
        if (!report_.equal) return;
        if (term.equal) {
            report_.lhs += term.lhs;
            report_.rhs += term.rhs;
        } else {
            report_.lhs = term.lhs;
            report_.rhs = term.rhs;
            report_.equal = false;
        }
    }

    IdentityReport take() { return std::move(report_); }

private:
    IdentityReport report_;
};

}  // namespace

const char* to_string(IdentityId id) {
    switch (id) {
        case IdentityId::EQ1: return "EQ1";
        case IdentityId::P_REWRITE: return "P_REWRITE";
        case IdentityId::LEMMA1: return "LEMMA1";
        case IdentityId::MOMENT2: return "MOMENT2";
        case IdentityId::ODD_MOMENT: return "ODD_MOMENT";
        case IdentityId::S2_CLOSED: return "S2_CLOSED";
        case IdentityId::DECOMP: return "DECOMP";
        case IdentityId::TRINOMIAL: return "TRINOMIAL";
        case IdentityId::TELESCOPE: return "TELESCOPE";
        case IdentityId::S3_CLOSED: return "S3_CLOSED";
        case IdentityId::RECOMBINE: return "RECOMBINE";
        case IdentityId::THEOREM1: return "THEOREM1";
    }
    return "UNKNOWN";
}

std::optional<IdentityId> identity_from_string(std::string_view name) {
    for (IdentityId id : kAllIdentities)
        if (name == to_string(id)) return id;
    return std::nullopt;
}

Moment make_moment(unsigned k, unsigned order, bool absolute) {
    const auto row = pascal_row(2 * k);
    const long long bound = sweep_bound(k);
    BigInt value(0);
    for (long long p = -bound; p <= bound; ++p) {
        BigInt w = boost::multiprecision::pow(BigInt(absolute ? std::llabs(p) : p), order);
        value += row_at(row, k + p) * w;
    }
    // Non-negative in both modes: odd signed moments vanish by symmetry.
    return Moment{k, order, absolute, BigNat(std::move(value))};
}

BigNat s0_direct(unsigned k) {
    const auto row = pascal_row(2 * k);
    const long long bound = sweep_bound(k);
    BigNat s(0);
    for (long long p = -bound; p <= bound; ++p) s += row_at(row, k + p) * std::llabs(p);
    return s;
}

BigNat s0_closed(unsigned k) { return k * binomial(2 * k, k); }

IdentityReport verify_eq1(unsigned k) {
    const auto row = pascal_row(2 * k);
    BigNat half(0);
    for (long long p = 1; p <= sweep_bound(k); ++p) half += row_at(row, k + p) * p;
    return make_report(IdentityId::EQ1, k, s0_direct(k), 2 * half);
}

IdentityReport verify_p_rewrite(unsigned k, long long p) {
    const long long n = 2LL * k;
    BigInt lhs = p * BigInt(binomial(n, k + p));
    BigInt rhs = n * BigInt(binomial(n - 1, k + p - 1)) - k * BigInt(binomial(n, k + p));
    return make_report(IdentityId::P_REWRITE, k, std::move(lhs), std::move(rhs));
}

BigInt moment(unsigned k, unsigned r) {
    const auto row = pascal_row(2 * k);
    const long long bound = sweep_bound(k);
    BigInt s(0);
    for (long long p = -bound; p <= bound; ++p)
        s += row_at(row, k + p) * boost::multiprecision::pow(BigInt(p), r);
    return s;
}

BigInt moment_via_genfun(unsigned k, unsigned r) {
    LaurentPoly f = poly_binomial_power(k);
    for (unsigned i = 0; i < r; ++i) f = apply_x_ddx(f);
    return eval_at_one(f);
}

BigNat s1_direct(unsigned k) {
    const auto row = pascal_row(2 * k);
    const long long bound = sweep_bound(k);
    BigNat s(0);
    BigNat inner;
    for (long long p = -bound; p <= bound; ++p) {
        const BigNat& wp = row_at(row, k + p);
        if (wp == 0) continue;
        inner = 0;
        for (long long q = -bound; q <= bound; ++q) {
            long long w = std::llabs(p * p - q * q);
            if (w == 0) continue;
            inner += row_at(row, k + q) * w;
        }
        s += wp * inner;
    }
    return s;
}

BigNat s1_closed(unsigned k) {
    BigNat c = binomial(2 * k, k);
    return 2 * k * BigNat(k) * c * c;
}

BigNat s2_direct(unsigned k) { return 2 * binomial(2 * k, k) * BigNat(moment(k, 2)); }

BigNat s2_closed(unsigned k) { return k * pow2(2 * k) * binomial(2 * k, k); }

BigNat s3_direct(unsigned k) {
    const auto row = pascal_row(2 * k);
    const long long bound = sweep_bound(k);

    // Octant route: 8 sum_{p>q>0} with the absolute value already resolved.
    BigNat octant(0);
    for (long long p = 2; p <= bound; ++p) {
        const BigNat& wp = row_at(row, k + p);
        if (wp == 0) continue;
        BigNat inner(0);
        for (long long q = 1; q < p; ++q) inner += row_at(row, k + q) * (p * p - q * q);
        octant += wp * inner;
    }
    octant *= 8;

    // Full route: every p,q != 0 with |p^2 - q^2|.
    BigNat full(0);
    for (long long p = -bound; p <= bound; ++p) {
        if (p == 0) continue;
        const BigNat& wp = row_at(row, k + p);
        if (wp == 0) continue;
        BigNat inner(0);
        for (long long q = -bound; q <= bound; ++q) {
            if (q == 0) continue;
            long long w = std::llabs(p * p - q * q);
            if (w == 0) continue;
            inner += row_at(row, k + q) * w;
        }
        full += wp * inner;
    }

    if (octant != full)
        throw std::logic_error("s3_direct: octant symmetry violated at k=" + std::to_string(k));
    return full;
}

BigNat s3_closed(unsigned k) {
    if (k == 0) return BigNat(0);  // prefactor 8k(2k-1) vanishes
    const BigNat a = binomial(2 * k - 2, k);      // C(2k-2,k)
    const BigNat b = binomial(2 * k - 2, k - 1);  // C(2k-2,k-1)
    const BigNat h = pow2(2 * k - 2);
    BigInt braces = BigInt(a) * (h - b) - BigInt(b) * (h - 2 * a - b);
    return BigNat(8 * k * (2 * BigInt(k) - 1) * braces);
}

IdentityReport verify_decomposition_term(unsigned k, long long p, long long q) {
    const long long n = 2LL * k;
    BigInt cp = binomial(n, k + p);
    BigInt cq = binomial(n, k + q);
    BigInt lhs = cp * cq * (BigInt(p) * p - BigInt(q) * q);
    BigInt bracket = -BigInt(binomial(n - 2, k + p - 1)) * cq +
                     cp * BigInt(binomial(n - 2, k + q - 1));
    BigInt rhs = n * (n - 1) * bracket;
    return make_report(IdentityId::DECOMP, k, std::move(lhs), std::move(rhs));
}

IdentityReport verify_trinomial(unsigned k, long long p) {
    const long long n = 2LL * k;
    BigInt lhs = binomial(n, k + p);
    BigInt rhs = BigInt(binomial(n - 2, k + p)) + 2 * BigInt(binomial(n - 2, k + p - 1)) +
                 BigInt(binomial(n - 2, k + p - 2));
    return make_report(IdentityId::TRINOMIAL, k, std::move(lhs), std::move(rhs));
}

IdentityReport verify_telescope(unsigned k) {
    BigInt lhs = exact_div(s3_direct(k), 8);
    if (k == 0)
        return make_report(IdentityId::TELESCOPE, 0, std::move(lhs), BigInt(0));

    const auto row = pascal_row(2 * k - 2);  // all sums run over row 2k-2
    const long long bound = sweep_bound(k);
    auto f = [&](long long j) -> const BigNat& { return row_at(row, j); };
    const BigInt prefactor = 2 * k * (2 * BigInt(k) - 1);

    // Four-double-sum form straight after the cancellation, all over p>q>0.
    BigInt a1(0), a2(0), a3(0), a4(0);
    for (long long p = 2; p <= bound; ++p)
        for (long long q = 1; q < p; ++q) {
            a1 += f(k + p) * f(k + q - 1);
            a2 += f(k + p - 1) * f(k + q - 2);
            a3 += f(k + p - 2) * f(k + q - 1);
            a4 += f(k + p - 1) * f(k + q);
        }
    BigInt before_change = prefactor * ((a1 - a2) + (a3 - a4));

    // Same expression after the change of variables: the inner sums now run
    // over p>q>=0 and each bracket pairs sums differing only in that bound.
    BigInt c2(0), c3(0);
    for (long long p = 1; p <= bound; ++p)
        for (long long q = 0; q < p; ++q) {
            c2 += f(k + p) * f(k + q - 1);
            c3 += f(k + p - 1) * f(k + q);
        }
    BigInt after_change = prefactor * ((a1 - c2) + (c3 - a4));

    // Telescoping: only the q=0 boundary terms survive.
    BigInt b1(0), b2(0);
    for (long long p = 1; p <= bound; ++p) {
        b1 += f(k + p - 1);
        b2 += f(k + p);
    }
    BigInt collapsed = prefactor * (b1 * f(k) - b2 * f(k - 1));

    bool equal = lhs == collapsed && before_change == collapsed && after_change == collapsed;
    return IdentityReport{IdentityId::TELESCOPE, k, std::move(lhs), std::move(collapsed), equal};
}

IdentityReport verify_recombination(unsigned k) {
    BigInt rhs = BigInt(s2_closed(k)) + BigInt(s3_closed(k));
    BigInt lhs = s1_direct(k);
    bool equal = lhs == rhs && BigInt(s1_closed(k)) == rhs;
    return IdentityReport{IdentityId::RECOMBINE, k, std::move(lhs), std::move(rhs), equal};
}

std::vector<IdentityReport> verify_all(unsigned k) {
    const long long bound = sweep_bound(k);
    std::vector<IdentityReport> reports;
    reports.reserve(kAllIdentities.size());

    reports.push_back(verify_eq1(k));

    {
        SweepReport sweep(IdentityId::P_REWRITE, k);
        if (k >= 1)
            for (long long p = -bound; p <= bound; ++p) sweep.feed(verify_p_rewrite(k, p));
        reports.push_back(sweep.take());
    }

    reports.push_back(make_report(IdentityId::LEMMA1, k, s0_direct(k), s0_closed(k)));

    {
        BigInt m2 = moment(k, 2);
        BigInt closed = k == 0 ? BigInt(0) : BigInt(k * pow2(2 * k - 1));
        bool equal = m2 == closed && moment_via_genfun(k, 2) == m2;
        reports.push_back(IdentityReport{IdentityId::MOMENT2, k, std::move(m2), std::move(closed), equal});
    }

    {
        SweepReport sweep(IdentityId::ODD_MOMENT, k);
        for (unsigned r : {1u, 3u, 5u})
            sweep.feed(make_report(IdentityId::ODD_MOMENT, k, moment(k, r), BigInt(0)));
        reports.push_back(sweep.take());
    }

    reports.push_back(make_report(IdentityId::S2_CLOSED, k, s2_direct(k), s2_closed(k)));

    {
        SweepReport sweep(IdentityId::DECOMP, k);
        if (k >= 1)
            for (long long p = -bound; p <= bound; ++p)
                for (long long q = -bound; q <= bound; ++q)
                    sweep.feed(verify_decomposition_term(k, p, q));
        reports.push_back(sweep.take());
    }

    {
        SweepReport sweep(IdentityId::TRINOMIAL, k);
        if (k >= 1)
            for (long long p = -bound; p <= bound; ++p) sweep.feed(verify_trinomial(k, p));
        reports.push_back(sweep.take());
    }

    reports.push_back(verify_telescope(k));
    reports.push_back(make_report(IdentityId::S3_CLOSED, k, s3_direct(k), s3_closed(k)));
    reports.push_back(verify_recombination(k));
    reports.push_back(make_report(IdentityId::THEOREM1, k, s1_direct(k), s1_closed(k)));

    return reports;
}

bool all_pass(const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports)
        if (!r.equal) return false;
    return true;
}

}  // namespace absum
