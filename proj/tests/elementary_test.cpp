#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "pnc/canonical.hpp"
#include "pnc/core.hpp"
#include "pnc/elementary.hpp"
#include "support/checks.hpp"
#include "support/oracles.hpp"

using namespace pnc;
using checks::close;

namespace {

// Random point with every sector magnitude in [lo, hi]: safely inside the
// log/power domain.
PolarNComplex in_domain(oracle::Rng& rng, std::size_t n, double lo, double hi) {
    CanonicalCoords c;
    c.n = n;
    c.v_plus = rng.uniform(lo, hi);
    if (n % 2 == 0) c.v_minus = rng.uniform(lo, hi);
    for (std::size_t k = 0; k < pair_count(n); ++k) {
        const double r = rng.uniform(lo, hi);
        const double a = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
        c.pairs.emplace_back(r * std::cos(a), r * std::sin(a));
    }
    return from_canonical(c);
}

// Truncated series evaluation straight from the coefficients 1/l!, the
// independent check that sector-wise evaluation equals the series definition.
PolarNComplex exp_series(const PolarNComplex& u, int terms) {
    PolarNComplex sum = PolarNComplex::one(u.dim());
    PolarNComplex term = PolarNComplex::one(u.dim());
    for (int l = 1; l < terms; ++l) {
        term = scale(mul(term, u), 1.0 / l);
        sum = add(sum, term);
    }
    return sum;
}

PolarNComplex alternating_series(const PolarNComplex& u, bool even_powers, bool alternate,
                                 int terms) {
    // cos/sin/cosh/sinh from their power series
    const std::size_t n = u.dim();
    PolarNComplex sum(n);
    PolarNComplex power = PolarNComplex::one(n);  // u^0
    int idx = 0;
    for (int p = 0; p < terms; ++p) {
        const bool wanted = even_powers ? p % 2 == 0 : p % 2 == 1;
        if (wanted) {
            double coeff = 1.0;
            for (int j = 2; j <= p; ++j) coeff /= j;
            if (alternate && idx % 2 == 1) coeff = -coeff;
            sum = add(sum, scale(power, coeff));
            ++idx;
        }
        power = mul(power, u);
    }
    return sum;
}

}  // namespace

TEST_CASE("exp basics") {
    CHECK(close(exp(PolarNComplex(4)), PolarNComplex::one(4), 1e-15));

    oracle::Rng rng(301);
    for (std::size_t n : {2, 3, 5, 6}) {
        for (int i = 0; i < 25; ++i) {
            const auto u = rng.vec(n, -1.0, 1.0), v = rng.vec(n, -1.0, 1.0);
            CHECK(close(exp(add(u, v)), mul(exp(u), exp(v)), 1e-10));
        }
    }
    CHECK_THROWS_AS(exp(scale(PolarNComplex::one(3), 800.0)), Error);  // sector exponent 800
}

TEST_CASE("exp equals its series") {
    oracle::Rng rng(302);
    for (std::size_t n : {2, 3, 4, 7}) {
        for (int i = 0; i < 10; ++i) {
            auto u = rng.vec(n, -0.5, 0.5);
            if (modulus(u) > 2.0) continue;
            CHECK(close(exp(u), exp_series(u, 40), 1e-9));
        }
    }
}

TEST_CASE("log") {
    CHECK(modulus(log(PolarNComplex::one(6))) <= 1e-15);

    oracle::Rng rng(303);
    for (std::size_t n : {2, 3, 4, 5, 8}) {
        for (int i = 0; i < 30; ++i) {
            const auto u = in_domain(rng, n, 0.1, 3.0);
            CHECK(close(exp(log(u)), u, 1e-10));
        }
    }

    // log(uv) = log u + log v up to 2 pi et_k
    for (std::size_t n : {3, 4, 6}) {
        for (int i = 0; i < 30; ++i) {
            const auto u = in_domain(rng, n, 0.2, 2.0), v = in_domain(rng, n, 0.2, 2.0);
            const auto lhs = to_canonical(log(mul(u, v)));
            const auto rhs = to_canonical(add(log(u), log(v)));
            CHECK(close(lhs.v_plus, rhs.v_plus, 1e-10));
            if (lhs.v_minus) CHECK(close(*lhs.v_minus, *rhs.v_minus, 1e-10));
            for (std::size_t k = 0; k < lhs.pairs.size(); ++k) {
                CHECK(close(lhs.pairs[k].real(), rhs.pairs[k].real(), 1e-10));
                const double diff = lhs.pairs[k].imag() - rhs.pairs[k].imag();
                const double wrapped =
                    std::abs(diff - 2.0 * 3.14159265358979323846 * std::round(
                                         diff / (2.0 * 3.14159265358979323846)));
                CHECK(wrapped <= 1e-10);
            }
        }
    }

    try {
        log(PolarNComplex{-1, 0, 0});
        FAIL("expected OutsideDomain");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OutsideDomain);
    }
}

TEST_CASE("pow") {
    oracle::Rng rng(304);
    for (std::size_t n : {2, 3, 5, 6}) {
        for (int i = 0; i < 25; ++i) {
            const auto u = rng.vec(n);
            CHECK(close(pow(u, 1.0), u, 1e-12));
            CHECK(close(pow(u, 3.0), mul(mul(u, u), u), 1e-10));
            CHECK(close(pow(u, 0.0), PolarNComplex::one(n), 1e-12));

            const auto v = rng.vec(n);
            CHECK(close(pow(mul(u, v), 2.0), mul(pow(u, 2.0), pow(v, 2.0)), 1e-10));
        }
        // non-integer power on the log domain round-trips through mul
        for (int i = 0; i < 15; ++i) {
            const auto u = in_domain(rng, n, 0.3, 2.0);
            CHECK(close(mul(pow(u, 0.5), pow(u, 0.5)), u, 1e-10));
        }
    }

    CHECK_THROWS_AS(pow(PolarNComplex{1, 1}, -1.0), Error);       // nodal, negative integer
    CHECK_THROWS_AS(pow(PolarNComplex{-2, 0, 0}, 0.5), Error);    // off the log domain
    CHECK(close(pow(PolarNComplex{1, 1}, 2.0), mul({1, 1}, {1, 1}), 1e-12));  // nodal, positive
}

TEST_CASE("trigonometric functions") {
    CHECK(close(cos(PolarNComplex(5)), PolarNComplex::one(5), 1e-15));
    CHECK(modulus(sin(PolarNComplex(5))) <= 1e-15);

    oracle::Rng rng(305);
    for (std::size_t n : {2, 3, 4, 7}) {
        for (int i = 0; i < 25; ++i) {
            const auto u = rng.vec(n, -1.5, 1.5), v = rng.vec(n, -1.5, 1.5);
            CHECK(close(sin(add(u, v)), add(mul(sin(u), cos(v)), mul(cos(u), sin(v))), 1e-10));
            CHECK(close(cos(add(u, v)), sub(mul(cos(u), cos(v)), mul(sin(u), sin(v))), 1e-10));
            CHECK(close(add(mul(cos(u), cos(u)), mul(sin(u), sin(u))), PolarNComplex::one(n),
                        1e-10));
        }
        // against the defining series
        for (int i = 0; i < 8; ++i) {
            const auto u = rng.vec(n, -0.6, 0.6);
            CHECK(close(cos(u), alternating_series(u, true, true, 24), 1e-9));
            CHECK(close(sin(u), alternating_series(u, false, true, 24), 1e-9));
        }
    }
}

TEST_CASE("hyperbolic functions") {
    CHECK(close(cosh(PolarNComplex(3)), PolarNComplex::one(3), 1e-15));
    CHECK(modulus(sinh(PolarNComplex(3))) <= 1e-15);

    oracle::Rng rng(306);
    for (std::size_t n : {2, 3, 4, 6}) {
        for (int i = 0; i < 25; ++i) {
            const auto u = rng.vec(n, -1.5, 1.5), v = rng.vec(n, -1.5, 1.5);
            CHECK(close(cosh(add(u, v)), add(mul(cosh(u), cosh(v)), mul(sinh(u), sinh(v))),
                        1e-10));
            CHECK(close(sinh(add(u, v)), add(mul(sinh(u), cosh(v)), mul(cosh(u), sinh(v))),
                        1e-10));
            CHECK(close(sub(mul(cosh(u), cosh(u)), mul(sinh(u), sinh(u))),
                        PolarNComplex::one(n), 1e-10));

            // cosh u = (e^u + e^-u)/2, sinh the odd part
            CHECK(close(cosh(u), scale(add(exp(u), exp(neg(u))), 0.5), 1e-12));
            CHECK(close(sinh(u), scale(sub(exp(u), exp(neg(u))), 0.5), 1e-12));
        }
        for (int i = 0; i < 8; ++i) {
            const auto u = rng.vec(n, -0.6, 0.6);
            CHECK(close(cosh(u), alternating_series(u, true, false, 24), 1e-9));
            CHECK(close(sinh(u), alternating_series(u, false, false, 24), 1e-9));
        }
    }
}

TEST_CASE("branch consistency") {
    oracle::Rng rng(307);
    for (std::size_t n : {3, 4, 5}) {
        for (int i = 0; i < 30; ++i) {
            // sector angles of w in [0, 2 pi) and positive real parts keep
            // exp(w) inside the log domain
            CanonicalCoords c;
            c.n = n;
            c.v_plus = rng.uniform(-1.0, 1.0);
            if (n % 2 == 0) c.v_minus = rng.uniform(-1.0, 1.0);
            for (std::size_t k = 0; k < pair_count(n); ++k)
                c.pairs.emplace_back(rng.uniform(-1.0, 1.0), rng.uniform(0.0, 6.28));
            const auto w = from_canonical(c);
            CHECK(close(log(exp(w)), w, 1e-9));
        }
    }
}
