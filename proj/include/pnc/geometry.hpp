#pragma once

#include <optional>
#include <vector>

#include "pnc/canonical.hpp"
#include "pnc/types.hpp"

namespace pnc {

/// Polar description of a point: modulus d, amplitude rho (when nu > 0), the
/// polar angles theta_+/theta_-, planar angles psi_1..psi_{K-1} and azimuthal
/// angles phi_1..phi_K with pair radii rho_1..rho_K.
struct PolarForm {
    std::size_t n = 0;
    double d = 0.0;
    std::optional<double> rho;
    double theta_plus = 0.0;
    std::optional<double> theta_minus;
    std::vector<double> psi;    // tan(psi[k-2]) = rho_1 / rho_k, k = 2..K
    std::vector<double> phi;    // azimuth of pair k, in [0, 2 pi)
    std::vector<double> rho_k;  // |pair k|
};

/// Extracts the full angle set.  Throws DegenerateDirection when some pair
/// radius vanishes (or d = 0); theta angles use atan2 so v_plus = 0 yields
/// pi/2 rather than an error.
PolarForm polar_decompose(const PolarNComplex& u);

/// Evaluates the amplitude-and-angles exponential form and returns the
/// reconstructed number (equal to u on the domain v_plus > 0 [, v_minus > 0],
/// all rho_k > 0).  Throws OutsideDomain otherwise.
PolarNComplex exponential_form(const PolarNComplex& u);

/// Evaluates the modulus-and-angles trigonometric form; same domain as the
/// exponential form plus d > 0.
PolarNComplex trigonometric_form(const PolarNComplex& u);

}  // namespace pnc
