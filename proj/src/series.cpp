#include "pnc/series.hpp"

#include <algorithm>
#include <cmath>

#include "pnc/core.hpp"

namespace pnc {

std::size_t PowerSeries::dim() const {
    if (coeffs.empty()) throw Error(ErrorKind::InsufficientCoefficients, "empty series");
    const std::size_t n = coeffs.front().dim();
    for (const auto& a : coeffs) require_same_dim(coeffs.front(), a);
    return n;
}

SectorCoefficients sector_coefficients(const PowerSeries& s) {
    const std::size_t n = s.dim();
    SectorCoefficients sc;
    sc.n = n;
    sc.pairs.resize(pair_count(n));
    for (const auto& a : s.coeffs) {
        const CanonicalCoords c = to_canonical(a);
        sc.plus.push_back(c.v_plus);
        if (c.v_minus) sc.minus.push_back(*c.v_minus);
        for (std::size_t k = 0; k < c.pairs.size(); ++k) sc.pairs[k].push_back(c.pairs[k]);
    }
    return sc;
}

namespace {

double ratio_limit(const std::vector<double>& mags, int tail) {
    const std::size_t count = mags.size();
    std::vector<double> ratios;
    ratios.reserve(tail);
    for (std::size_t l = count - static_cast<std::size_t>(tail) - 1; l + 1 < count; ++l) {
        double r;
        if (mags[l + 1] == 0.0)
            r = ConvergenceRadii::infinite;
        else
            r = mags[l] / mags[l + 1];
        if (r > 1e12) r = ConvergenceRadii::infinite;
        ratios.push_back(r);
    }
    std::sort(ratios.begin(), ratios.end());
    const std::size_t m = ratios.size();
    if (m % 2 == 1) return ratios[m / 2];
    const double lo = ratios[m / 2 - 1], hi = ratios[m / 2];
    if (std::isinf(lo) || std::isinf(hi)) return std::isinf(lo) ? lo : hi;
    return 0.5 * (lo + hi);
}

}  // namespace

ConvergenceRadii radii(const PowerSeries& s, int tail) {
    if (tail < 2) throw Error(ErrorKind::InvalidValue, "tail must be >= 2");
    const std::size_t n = s.dim();
    if (s.coeffs.size() < static_cast<std::size_t>(tail) + 1)
        throw Error(ErrorKind::InsufficientCoefficients,
                    "need at least tail+1 = " + std::to_string(tail + 1) + " coefficients");
    const SectorCoefficients sc = sector_coefficients(s);

    ConvergenceRadii r;
    auto abses = [](const std::vector<double>& v) {
        std::vector<double> a(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) a[i] = std::abs(v[i]);
        return a;
    };
    r.c_plus = ratio_limit(abses(sc.plus), tail);
    double cmin = r.c_plus;
    if (n % 2 == 0) {
        r.c_minus = ratio_limit(abses(sc.minus), tail);
        cmin = std::min(cmin, *r.c_minus);
    }
    for (const auto& pk : sc.pairs) {
        std::vector<double> mags(pk.size());
        for (std::size_t i = 0; i < pk.size(); ++i) mags[i] = std::abs(pk[i]);
        r.c_k.push_back(ratio_limit(mags, tail));
        cmin = std::min(cmin, r.c_k.back());
    }
    r.c = cmin / std::sqrt(static_cast<double>(n));
    return r;
}

PolarNComplex evaluate(const PowerSeries& s, const PolarNComplex& u, double tol) {
    const std::size_t n = s.dim();
    require_same_dim(s.coeffs.front(), u);
    const CanonicalCoords cu = to_canonical(u);

    // Enforce the convergence cylinder when the series is long enough for a
    // meaningful ratio estimate; short series are treated as polynomials.
    if (s.coeffs.size() >= 8) {
        const int tail = static_cast<int>(std::min<std::size_t>(16, s.coeffs.size() - 1));
        const ConvergenceRadii r = radii(s, tail);
        if (std::abs(cu.v_plus) >= r.c_plus)
            throw Error(ErrorKind::OutsideConvergenceRegion, "v_plus");
        if (cu.v_minus && std::abs(*cu.v_minus) >= *r.c_minus)
            throw Error(ErrorKind::OutsideConvergenceRegion, "v_minus");
        for (std::size_t k = 0; k < cu.pairs.size(); ++k)
            if (std::abs(cu.pairs[k]) >= r.c_k[k])
                throw Error(ErrorKind::OutsideConvergenceRegion,
                            "pair_" + std::to_string(k + 1));
    }

    const SectorCoefficients sc = sector_coefficients(s);
    CanonicalCoords acc;
    acc.n = n;
    acc.v_plus = 0.0;
    if (n % 2 == 0) acc.v_minus = 0.0;
    acc.pairs.assign(pair_count(n), {0.0, 0.0});

    double pp = 1.0, pm = 1.0;
    std::vector<std::complex<double>> ppair(pair_count(n), {1.0, 0.0});
    int quiet = 0;
    for (std::size_t l = 0; l < s.coeffs.size(); ++l) {
        double worst = 0.0;
        const double ip = sc.plus[l] * pp;
        acc.v_plus += ip;
        worst = std::max(worst, std::abs(ip));
        pp *= cu.v_plus;
        if (acc.v_minus) {
            const double im = sc.minus[l] * pm;
            *acc.v_minus += im;
            worst = std::max(worst, std::abs(im));
            pm *= *cu.v_minus;
        }
        for (std::size_t k = 0; k < acc.pairs.size(); ++k) {
            const std::complex<double> ik = sc.pairs[k][l] * ppair[k];
            acc.pairs[k] += ik;
            worst = std::max(worst, std::abs(ik));
            ppair[k] *= cu.pairs[k];
        }
        if (tol > 0.0) {
            quiet = worst < tol ? quiet + 1 : 0;
            if (quiet >= 2) break;
        }
    }
    return from_canonical(acc);
}

PowerSeries recenter(const PowerSeries& s, const PolarNComplex& u0, std::size_t degree) {
    const std::size_t n = s.dim();
    require_same_dim(s.coeffs.front(), u0);
    if (degree > s.coeffs.size())
        throw Error(ErrorKind::InsufficientCoefficients, "degree exceeds series length");
    const std::size_t L = s.coeffs.size() - 1;

    std::vector<PolarNComplex> powers;
    powers.reserve(L + 1);
    powers.push_back(PolarNComplex::one(n));
    for (std::size_t l = 1; l <= L; ++l) powers.push_back(mul(powers.back(), u0));

    PowerSeries out;
    for (std::size_t k = 0; k <= degree; ++k) {
        PolarNComplex ck(n);
        double binom = 1.0;  // binom(k + l, l), advanced in l
        for (std::size_t l = 0; k + l <= L; ++l) {
            ck = add(ck, scale(mul(s.coeffs[k + l], powers[l]), binom));
            binom = binom * static_cast<double>(k + l + 1) / static_cast<double>(l + 1);
        }
        out.coeffs.push_back(ck);
    }
    return out;
}

PowerSeries recenter(const PowerSeries& s, const PolarNComplex& u0) {
    return recenter(s, u0, s.degree());
}

PolarNComplex derivative_fd(const NFunction& f, const PolarNComplex& u0,
                            const PolarNComplex& dir, double h) {
    if (!(h > 0.0)) throw Error(ErrorKind::InvalidValue, "step must be positive");
    const PolarNComplex step = scale(dir, h);
    const PolarNComplex diff = sub(f(add(u0, step)), f(sub(u0, step)));
    return mul(diff, inverse(scale(dir, 2.0 * h)));
}

PolarNComplex derivative_fd(const NFunction& f, const PolarNComplex& u0,
                            const PolarNComplex& dir) {
    return derivative_fd(f, u0, dir, 1e-6 * std::max(1.0, modulus(u0)));
}

CRReport cr_check(const NFunction& f, const PolarNComplex& u0, double h) {
    const std::size_t n = u0.dim();
    auto shifted = [&](std::size_t a, double da, std::size_t b, double db) {
        std::vector<double> x(u0.coords().begin(), u0.coords().end());
        x[a] += da;
        x[b] += db;
        return PolarNComplex(std::move(x));
    };

    // First-order: J[k][l] = dP_k / dx_l.
    std::vector<std::vector<double>> J(n, std::vector<double>(n));
    for (std::size_t l = 0; l < n; ++l) {
        const PolarNComplex fp = f(shifted(l, h, l, 0.0));
        const PolarNComplex fm = f(shifted(l, -h, l, 0.0));
        for (std::size_t k = 0; k < n; ++k) J[k][l] = (fp[k] - fm[k]) / (2.0 * h);
    }

    CRReport rep{u0, 0.0, std::vector<double>(n, 0.0), 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        double lo = J[k][0], hi = J[k][0];
        for (std::size_t j = 1; j < n; ++j) {
            const double v = J[(k + j) % n][j];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        rep.chain_residuals[k] = hi - lo;
        rep.max_residual = std::max(rep.max_residual, hi - lo);
    }

    // Second-order: all d2 P_k / dx_a dx_b with a + b fixed mod n are equal.
    std::vector<std::vector<std::vector<double>>> H(
        n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            PolarNComplex fpp = f(shifted(a, h, b, h));
            PolarNComplex fpm = f(shifted(a, h, b, -h));
            PolarNComplex fmp = f(shifted(a, -h, b, h));
            PolarNComplex fmm = f(shifted(a, -h, b, -h));
            for (std::size_t k = 0; k < n; ++k) {
                const double v = (fpp[k] - fpm[k] - fmp[k] + fmm[k]) / (4.0 * h * h);
                H[k][a][b] = v;
                H[k][b][a] = v;
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            double lo = H[k][0][l % n], hi = lo;
            for (std::size_t a = 1; a < n; ++a) {
                const double v = H[k][a][(l + n - a) % n];
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            rep.second_order_max = std::max(rep.second_order_max, hi - lo);
        }
    return rep;
}

}  // namespace pnc
