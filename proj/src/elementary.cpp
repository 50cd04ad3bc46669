#include "pnc/elementary.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pnc/canonical.hpp"
#include "pnc/core.hpp"

namespace pnc {

namespace {

constexpr double kExpLimit = 700.0;

// phi in [0, 2 pi): the principal branch shared by log, pow and the polar
// decomposition.
double azimuth(const std::complex<double>& z) {
    double phi = std::atan2(z.imag(), z.real());
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    return phi;
}

}  // namespace

PolarNComplex exp(const PolarNComplex& u) {
    const CanonicalCoords c = to_canonical(u);
    CanonicalCoords r;
    r.n = c.n;
    if (c.v_plus > kExpLimit) throw Error(ErrorKind::Overflow, "v_plus sector");
    r.v_plus = std::exp(c.v_plus);
    if (c.v_minus) {
        if (*c.v_minus > kExpLimit) throw Error(ErrorKind::Overflow, "v_minus sector");
        r.v_minus = std::exp(*c.v_minus);
    }
    r.pairs.reserve(c.pairs.size());
    for (std::size_t k = 0; k < c.pairs.size(); ++k) {
        const auto& z = c.pairs[k];
        if (z.real() > kExpLimit)
            throw Error(ErrorKind::Overflow, "pair_" + std::to_string(k + 1) + " sector");
        const double e = std::exp(z.real());
        r.pairs.emplace_back(e * std::cos(z.imag()), e * std::sin(z.imag()));
    }
    return from_canonical(r);
}

PolarNComplex log(const PolarNComplex& u) {
    const CanonicalCoords c = to_canonical(u);
    const double tol = nodal_tolerance(u);
    if (c.v_plus <= tol) throw Error(ErrorKind::OutsideDomain, "v_plus must be positive");
    if (c.v_minus && *c.v_minus <= tol)
        throw Error(ErrorKind::OutsideDomain, "v_minus must be positive");
    CanonicalCoords r;
    r.n = c.n;
    r.v_plus = std::log(c.v_plus);
    if (c.v_minus) r.v_minus = std::log(*c.v_minus);
    r.pairs.reserve(c.pairs.size());
    for (std::size_t k = 0; k < c.pairs.size(); ++k) {
        const auto& z = c.pairs[k];
        const double rho = std::abs(z);
        if (rho <= tol)
            throw Error(ErrorKind::OutsideDomain, "pair_" + std::to_string(k + 1) + " radius zero");
        r.pairs.emplace_back(std::log(rho), azimuth(z));
    }
    return from_canonical(r);
}

PolarNComplex pow(const PolarNComplex& u, double m) {
    const bool integral = std::isfinite(m) && m == std::trunc(m);
    const CanonicalCoords c = to_canonical(u);
    const double tol = nodal_tolerance(u);
    if (!integral) {
        if (c.v_plus <= tol || (c.v_minus && *c.v_minus <= tol))
            throw Error(ErrorKind::OutsideDomain, "non-integer power off the log domain");
        for (const auto& z : c.pairs)
            if (std::abs(z) <= tol)
                throw Error(ErrorKind::OutsideDomain, "non-integer power off the log domain");
    } else if (m < 0.0) {
        if (std::abs(c.v_plus) <= tol) throw Error(ErrorKind::NotInvertible, "v_plus");
        if (c.v_minus && std::abs(*c.v_minus) <= tol)
            throw Error(ErrorKind::NotInvertible, "v_minus");
        for (std::size_t k = 0; k < c.pairs.size(); ++k)
            if (std::abs(c.pairs[k]) <= tol)
                throw Error(ErrorKind::NotInvertible, "pair_" + std::to_string(k + 1));
    }
    CanonicalCoords r;
    r.n = c.n;
    r.v_plus = std::pow(c.v_plus, m);
    if (c.v_minus) r.v_minus = std::pow(*c.v_minus, m);
    r.pairs.reserve(c.pairs.size());
    for (const auto& z : c.pairs) {
        const double rho = std::abs(z);
        if (rho == 0.0 && integral && m > 0.0) {
            r.pairs.emplace_back(0.0, 0.0);
            continue;
        }
        const double rm = std::pow(rho, m);
        const double phi = azimuth(z);
        r.pairs.emplace_back(rm * std::cos(m * phi), rm * std::sin(m * phi));
    }
    return from_canonical(r);
}

PolarNComplex cos(const PolarNComplex& u) {
    const CanonicalCoords c = to_canonical(u);
    CanonicalCoords r;
    r.n = c.n;
    r.v_plus = std::cos(c.v_plus);
    if (c.v_minus) r.v_minus = std::cos(*c.v_minus);
    for (const auto& z : c.pairs)
        r.pairs.emplace_back(std::cos(z.real()) * std::cosh(z.imag()),
                             -std::sin(z.real()) * std::sinh(z.imag()));
    return from_canonical(r);
}

PolarNComplex sin(const PolarNComplex& u) {
    const CanonicalCoords c = to_canonical(u);
    CanonicalCoords r;
    r.n = c.n;
    r.v_plus = std::sin(c.v_plus);
    if (c.v_minus) r.v_minus = std::sin(*c.v_minus);
    for (const auto& z : c.pairs)
        r.pairs.emplace_back(std::sin(z.real()) * std::cosh(z.imag()),
                             std::cos(z.real()) * std::sinh(z.imag()));
    return from_canonical(r);
}

PolarNComplex cosh(const PolarNComplex& u) {
    const CanonicalCoords c = to_canonical(u);
    CanonicalCoords r;
    r.n = c.n;
    r.v_plus = std::cosh(c.v_plus);
    if (c.v_minus) r.v_minus = std::cosh(*c.v_minus);
    for (const auto& z : c.pairs)
        r.pairs.emplace_back(std::cosh(z.real()) * std::cos(z.imag()),
                             std::sinh(z.real()) * std::sin(z.imag()));
    return from_canonical(r);
}

PolarNComplex sinh(const PolarNComplex& u) {
    const CanonicalCoords c = to_canonical(u);
    CanonicalCoords r;
    r.n = c.n;
    r.v_plus = std::sinh(c.v_plus);
    if (c.v_minus) r.v_minus = std::sinh(*c.v_minus);
    for (const auto& z : c.pairs)
        r.pairs.emplace_back(std::sinh(z.real()) * std::cos(z.imag()),
                             std::cosh(z.real()) * std::sin(z.imag()));
    return from_canonical(r);
}

}  // namespace pnc
