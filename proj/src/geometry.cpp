#include "pnc/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pnc/core.hpp"
#include "pnc/elementary.hpp"

namespace pnc {

namespace {

double azimuth(const std::complex<double>& z) {
    double phi = std::atan2(z.imag(), z.real());
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    return phi;
}

void require_form_domain(const CanonicalCoords& c, double tol) {
    if (c.v_plus <= tol) throw Error(ErrorKind::OutsideDomain, "v_plus must be positive");
    if (c.v_minus && *c.v_minus <= tol)
        throw Error(ErrorKind::OutsideDomain, "v_minus must be positive");
    for (std::size_t k = 0; k < c.pairs.size(); ++k)
        if (std::abs(c.pairs[k]) <= tol)
            throw Error(ErrorKind::OutsideDomain,
                        "pair_" + std::to_string(k + 1) + " radius zero");
}

}  // namespace

PolarForm polar_decompose(const PolarNComplex& u) {
    const CanonicalCoords c = to_canonical(u);
    const double d = modulus(u);
    if (d == 0.0) throw Error(ErrorKind::DegenerateDirection, "zero vector");
    const double tol = nodal_tolerance(u);

    PolarForm f;
    f.n = u.dim();
    f.d = d;
    // rho is reported only off the nodal hypersurfaces: a v_plus/v_minus
    // magnitude under the tolerance means nu is zero up to rounding.
    const bool nodal = std::abs(c.v_plus) <= tol ||
                       (c.v_minus && std::abs(*c.v_minus) <= tol);
    const double v = nu(u);
    if (!nodal && v > 0.0) f.rho = std::pow(v, 1.0 / static_cast<double>(u.dim()));

    f.rho_k.reserve(c.K());
    f.phi.reserve(c.K());
    for (std::size_t k = 0; k < c.K(); ++k) {
        const double rk = std::abs(c.pairs[k]);
        if (rk <= tol)
            throw Error(ErrorKind::DegenerateDirection, "pair_" + std::to_string(k + 1));
        f.rho_k.push_back(rk);
        f.phi.push_back(azimuth(c.pairs[k]));
    }

    const double rho1 = c.K() >= 1 ? f.rho_k[0] : 0.0;
    const double sq2 = std::numbers::sqrt2;
    f.theta_plus = std::atan2(sq2 * rho1, c.v_plus);
    if (c.v_minus) f.theta_minus = std::atan2(sq2 * rho1, *c.v_minus);
    for (std::size_t k = 2; k <= c.K(); ++k)
        f.psi.push_back(std::atan2(rho1, f.rho_k[k - 1]));
    return f;
}

PolarNComplex exponential_form(const PolarNComplex& u) {
    const std::size_t n = u.dim();
    const CanonicalCoords c = to_canonical(u);
    require_form_domain(c, nodal_tolerance(u));
    const double rho = amplitude(u);

    if (pair_count(n) == 0) {
        // n = 2 has no pair sectors; the form collapses to the canonical
        // logarithm identity u = rho * exp(h_1 * ln(v_+/v_-) / 2).
        std::vector<double> s(n, 0.0);
        s[1] = 0.5 * std::log(c.v_plus / *c.v_minus);
        return scale(exp(PolarNComplex(std::move(s))), rho);
    }

    const PolarForm f = polar_decompose(u);
    const auto tt = TrigTable::get(n);
    const double sq2 = std::numbers::sqrt2;
    const double inv_n = 1.0 / static_cast<double>(n);

    std::vector<double> s(n, 0.0);
    for (std::size_t p = 1; p < n; ++p) {
        double coeff = inv_n * std::log(sq2 / std::tan(f.theta_plus));
        if (f.theta_minus)
            coeff += (p % 2 == 0 ? inv_n : -inv_n) * std::log(sq2 / std::tan(*f.theta_minus));
        for (std::size_t k = 2; k <= pair_count(n); ++k)
            coeff -= 2.0 * inv_n * tt->cos_kp(k, p) * std::log(std::tan(f.psi[k - 2]));
        s[p] = coeff;
    }
    // Add the azimuthal part Sum_k et_k phi_k.
    for (std::size_t k = 1; k <= pair_count(n); ++k)
        for (std::size_t p = 0; p < n; ++p)
            s[p] += 2.0 * inv_n * tt->sin_kp(k, p) * f.phi[k - 1];
    return scale(exp(PolarNComplex(std::move(s))), rho);
}

PolarNComplex trigonometric_form(const PolarNComplex& u) {
    const std::size_t n = u.dim();
    const CanonicalCoords c = to_canonical(u);
    require_form_domain(c, nodal_tolerance(u));
    const double d = modulus(u);
    if (d == 0.0) throw Error(ErrorKind::OutsideDomain, "zero modulus");

    const CanonicalBasis b = basis(n);
    if (pair_count(n) == 0) {
        // n = 2: the angular factor degenerates; u = d * (e_+ v_+ + e_- v_-)/d.
        PolarNComplex f = add(scale(b.e_plus, c.v_plus / d), scale(*b.e_minus, *c.v_minus / d));
        return scale(f, d);
    }

    const PolarForm f = polar_decompose(u);
    const double sq2 = std::numbers::sqrt2;

    double sum = 1.0 + 1.0 / std::pow(std::tan(f.theta_plus), 2);
    if (f.theta_minus) sum += 1.0 / std::pow(std::tan(*f.theta_minus), 2);
    for (double ps : f.psi) sum += 1.0 / std::pow(std::tan(ps), 2);

    PolarNComplex factor = scale(b.e_plus, sq2 / std::tan(f.theta_plus));
    if (b.e_minus) factor = add(factor, scale(*b.e_minus, sq2 / std::tan(*f.theta_minus)));
    factor = add(factor, b.pairs[0].first);
    for (std::size_t k = 2; k <= pair_count(n); ++k)
        factor = add(factor, scale(b.pairs[k - 1].first, 1.0 / std::tan(f.psi[k - 2])));

    PolarNComplex phase(n);
    for (std::size_t k = 1; k <= pair_count(n); ++k)
        phase = add(phase, scale(b.pairs[k - 1].second, f.phi[k - 1]));

    const double front = d * std::sqrt(static_cast<double>(n) / 2.0) / std::sqrt(sum);
    return scale(mul(factor, exp(phase)), front);
}

}  // namespace pnc
