#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "pnc/canonical.hpp"
#include "pnc/core.hpp"
#include "pnc/cosexp.hpp"
#include "pnc/elementary.hpp"
#include "support/checks.hpp"

using namespace pnc;

TEST_CASE("closed form at reference values") {
    for (std::size_t n : {2, 3, 5, 8}) {
        CHECK(g_closed(n, 0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
        for (std::size_t k = 1; k < n; ++k) CHECK(std::abs(g_closed(n, k, 0.0)) < 1e-14);
    }
    // n=2 reduces to cosh/sinh; the n=3 value is frozen from the series oracle
    CHECK(g_closed(2, 0, 1.0) == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
    CHECK(g_closed(3, 0, 1.0) == doctest::Approx(1.1680583133759186).epsilon(1e-14));
    CHECK(g_series(2, 1, 1.0, 30) == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
}

TEST_CASE("series truncations") {
    CHECK(g_series(4, 1, 0.0, 10) == 0.0);
    CHECK(g_series(3, 0, 0.0, 10) == 1.0);

    for (std::size_t n = 2; n <= 8; ++n)
        for (std::size_t k = 0; k < n; ++k)
            for (double y = -5.0; y <= 5.0; y += 0.5)
                CHECK(std::abs(g_series(n, k, y, 40) - g_closed(n, k, y)) <= 1e-10);

    // the self-truncating oracle stays accurate out to larger arguments
    for (std::size_t n : {2, 3, 5, 8})
        for (std::size_t k = 0; k < n; ++k)
            for (double y : {-12.0, -7.5, 9.0, 15.0}) {
                const double want = g_closed(n, k, y);
                CHECK(std::abs(g_series_auto(n, k, y) - want) <=
                      1e-11 * std::exp(std::abs(y)));
            }
}

TEST_CASE("row sums and parity") {
    for (std::size_t n : {2, 3, 4, 6, 7, 8}) {
        for (double y = -4.0; y <= 4.0; y += 0.37) {
            const auto g = g_all(n, y);
            double sum = 0.0, alt = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                sum += g.values[k];
                alt += (k % 2 == 0 ? g.values[k] : -g.values[k]);
            }
            const double scale = std::exp(std::abs(y));
            CHECK(std::abs(sum - std::exp(y)) <= 1e-12 * scale);
            if (n % 2 == 0) CHECK(std::abs(alt - std::exp(-y)) <= 1e-12 * scale);

            if (n % 2 == 0) {
                const auto gm = g_all(n, -y);
                for (std::size_t k = 0; k < n; ++k) {
                    const double want = k % 2 == 0 ? g.values[k] : -g.values[k];
                    CHECK(std::abs(gm.values[k] - want) <= 1e-12 * scale);
                }
            }
        }
    }
}

TEST_CASE("squared sums") {
    for (std::size_t n : {3, 4, 5, 8}) {
        for (double y = -3.0; y <= 3.0; y += 0.61) {
            const auto g = g_all(n, y);
            double s2 = 0.0;
            for (double v : g.values) s2 += v * v;
            const auto tt = TrigTable::get(n);
            double want = 0.0;
            for (std::size_t l = 0; l < n; ++l) want += std::exp(2.0 * y * tt->cos_at(l));
            want /= static_cast<double>(n);
            CHECK(checks::close(s2, want, 1e-10));
        }
    }
    // alternating squared sum, n a multiple of 4 (exponential-free form)
    for (std::size_t n : {4, 8, 12}) {
        for (double y = -3.0; y <= 3.0; y += 0.61) {
            const auto g = g_all(n, y);
            double alt = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                alt += (k % 2 == 0 ? 1.0 : -1.0) * g.values[k] * g.values[k];
            const auto tt = TrigTable::get(n);
            double want = 1.0 + std::cos(2.0 * y);
            for (std::size_t l = 1; l < n / 4; ++l)
                want += 2.0 * std::cos(2.0 * y * tt->cos_at(l));
            want *= 2.0 / static_cast<double>(n);
            CHECK(checks::close(alt, want, 1e-10));
        }
    }
}

TEST_CASE("addition theorem as cyclic convolution") {
    for (std::size_t n : {2, 3, 4, 7}) {
        for (double y : {0.3, 1.7, -2.1}) {
            for (double z : {0.9, -0.4}) {
                const auto gy = g_all(n, y), gz = g_all(n, z), gs = g_all(n, y + z);
                const double scale = std::exp(std::abs(y) + std::abs(z));
                for (std::size_t k = 0; k < n; ++k) {
                    double conv = 0.0;
                    for (std::size_t j = 0; j < n; ++j)
                        conv += gy.values[j] * gz.values[(k + n - j) % n];
                    CHECK(std::abs(conv - gs.values[k]) <= 1e-10 * scale);
                }
            }
        }
    }
}

TEST_CASE("exp_hk") {
    for (std::size_t n : {2, 3, 4, 6})
        for (std::size_t k = 1; k < n; ++k)
            CHECK(checks::close(exp_hk(n, k, 0.0), PolarNComplex::one(n), 1e-14));

    // n=2: exp(h1 y) = (cosh y, sinh y)
    const auto e2 = exp_hk(2, 1, 0.8);
    CHECK(e2[0] == doctest::Approx(std::cosh(0.8)).epsilon(1e-13));
    CHECK(e2[1] == doctest::Approx(std::sinh(0.8)).epsilon(1e-13));

    // agrees with the canonical exponential of h_k y (also when gcd(k,n) > 1)
    for (std::size_t n : {3, 4, 5, 6, 8})
        for (std::size_t k = 1; k < n; ++k)
            for (double y : {0.5, -1.3, 2.0}) {
                const auto direct = exp(scale(PolarNComplex::h(n, k), y));
                CHECK(checks::close(exp_hk(n, k, y), direct, 1e-11));
            }
}

TEST_CASE("power identity") {
    for (std::size_t n : {3, 4, 5})
        for (std::size_t k = 1; k < n; ++k)
            for (double y : {0.4, -0.9}) {
                PolarNComplex p = exp_hk(n, k, y);
                PolarNComplex acc = p;
                for (int l = 2; l <= 5; ++l) {
                    acc = mul(acc, p);
                    CHECK(checks::close(acc, exp_hk(n, k, l * y), 1e-10));
                }
            }
}

TEST_CASE("trig_hk and hyp_hk") {
    for (std::size_t n : {2, 3, 4, 5, 6}) {
        for (std::size_t k = 1; k < n; ++k) {
            {
                const auto [c, s] = trig_hk(n, k, 0.0);
                CHECK(checks::close(c, PolarNComplex::one(n), 1e-14));
                CHECK(modulus(s) <= 1e-14);
            }
            for (double y : {0.7, -1.9}) {
                const auto [c, s] = trig_hk(n, k, y);
                const auto hk_y = scale(PolarNComplex::h(n, k), y);
                CHECK(checks::close(add(mul(c, c), mul(s, s)), PolarNComplex::one(n), 1e-10));
                CHECK(checks::close(c, cos(hk_y), 1e-10));
                CHECK(checks::close(s, sin(hk_y), 1e-10));

                const auto [ch, sh] = hyp_hk(n, k, y);
                CHECK(checks::close(sub(mul(ch, ch), mul(sh, sh)), PolarNComplex::one(n), 1e-10));
                CHECK(checks::close(ch, cosh(hk_y), 1e-10));
                CHECK(checks::close(sh, sinh(hk_y), 1e-10));
                CHECK(checks::close(add(ch, sh), exp_hk(n, k, y), 1e-12));
            }
            {
                const auto [ch, sh] = hyp_hk(n, k, 0.0);
                CHECK(checks::close(ch, PolarNComplex::one(n), 1e-14));
                CHECK(modulus(sh) <= 1e-14);
            }
        }
    }
}

TEST_CASE("a_k b_k closed forms and unit products") {
    for (std::size_t n : {3, 4, 6, 8}) {
        const auto tt = TrigTable::get(n);
        for (double y = -3.0; y <= 3.0; y += 0.75) {
            const auto g = g_all(n, y);
            std::vector<double> a(n, 0.0), b(n, 0.0);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t p = 0; p < n; ++p) {
                    a[k] += g.values[p] * tt->cos_kp(k, p);
                    b[k] += g.values[p] * tt->sin_kp(k, p);
                }
            for (std::size_t k = 0; k < n; ++k) {
                const double ew = std::exp(y * tt->cos_at(k));
                CHECK(checks::close(a[k], ew * std::cos(y * tt->sin_at(k)), 1e-10));
                if (k >= 1) {
                    CHECK(checks::close(b[k], ew * std::sin(y * tt->sin_at(k)), 1e-10));
                    const double g2 = a[k] * a[k] + b[k] * b[k];
                    CHECK(checks::close(g2, std::exp(2.0 * y * tt->cos_at(k)), 1e-10));
                }
            }
            // G_+ [G_-] prod G_k^2 = 1
            double prod = a[0];
            if (n % 2 == 0) prod *= a[n / 2];
            for (std::size_t k = 1; k <= pair_count(n); ++k)
                prod *= a[k] * a[k] + b[k] * b[k];
            CHECK(checks::close(prod, 1.0, 1e-10));
        }
    }
}

TEST_CASE("derivative chain by finite differences") {
    const double h = 1e-5;
    for (std::size_t n : {2, 3, 5, 8})
        for (std::size_t k = 0; k < n; ++k)
            for (double y : {-2.0, 0.3, 1.8}) {
                const double fd = (g_closed(n, k, y + h) - g_closed(n, k, y - h)) / (2.0 * h);
                const double want = g_closed(n, (k + n - 1) % n, y);
                CHECK(std::abs(fd - want) <= 1e-6);
            }
}

TEST_CASE("nth-order differential equation") {
    // n-th central difference of g_nk reproduces g_nk (loose: high-order FD)
    for (std::size_t n : {2, 3, 4}) {
        const double h = 0.01;
        std::vector<double> binom(n + 1, 1.0);
        for (std::size_t j = 1; j <= n; ++j)
            binom[j] = binom[j - 1] * static_cast<double>(n - j + 1) / static_cast<double>(j);
        for (std::size_t k = 0; k < n; ++k)
            for (double y : {0.2, 0.9}) {
                double acc = 0.0;
                for (std::size_t j = 0; j <= n; ++j) {
                    const double off = (static_cast<double>(n) / 2.0 - static_cast<double>(j)) * h;
                    acc += (j % 2 == 0 ? 1.0 : -1.0) * binom[j] * g_closed(n, k, y + off);
                }
                acc /= std::pow(h, static_cast<double>(n));
                CHECK(std::abs(acc - g_closed(n, k, y)) <= 1e-4);
            }
    }
}

TEST_CASE("table matches serial reference") {
    std::vector<double> ys;
    for (double y = -5.0; y <= 5.0; y += 0.05) ys.push_back(y);
    const auto par = table(6, ys);
    const auto ser = table_serial(6, ys);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i)
        for (std::size_t k = 0; k < 6; ++k)
            CHECK(par[i].values[k] == ser[i].values[k]);
}

TEST_CASE("index validation") {
    CHECK_THROWS_AS(g_closed(4, 4, 1.0), Error);
    CHECK_THROWS_AS(exp_hk(4, 0, 1.0), Error);
    CHECK_THROWS_AS(g_series(3, 1, 1.0, 0), Error);
}
