#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "pnc/canonical.hpp"
#include "pnc/types.hpp"

namespace pnc {

/// Power series sum_l a_l u^l given by its coefficients a_0..a_L.
struct PowerSeries {
    std::vector<PolarNComplex> coeffs;

    std::size_t dim() const;
    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Sector images A_{l+}, A_{l-}, (A_{lk}, At_{lk}) of a coefficient sequence.
struct SectorCoefficients {
    std::size_t n = 0;
    std::vector<double> plus;
    std::vector<double> minus;  // empty when n is odd
    std::vector<std::vector<std::complex<double>>> pairs;  // pairs[k-1][l]
};

/// Convergence radii: the cylinder bounds c_+, c_-, c_k and the spherical bound
/// c = min(sector radii) / sqrt(n).  +infinity is the entire-function sentinel.
struct ConvergenceRadii {
    double c = 0.0;
    double c_plus = 0.0;
    std::optional<double> c_minus;
    std::vector<double> c_k;

    static constexpr double infinite = std::numeric_limits<double>::infinity();
};

/// Residuals of the component-derivative equality chains at a point.
struct CRReport {
    PolarNComplex point;
    double max_residual = 0.0;               // worst first-order chain spread
    std::vector<double> chain_residuals;     // one per chain k = 0..n-1
    double second_order_max = 0.0;           // worst mixed-second-derivative spread
};

using NFunction = std::function<PolarNComplex(const PolarNComplex&)>;

SectorCoefficients sector_coefficients(const PowerSeries& s);

/// Sector-wise ratio limits estimated as the median of the last `tail`
/// consecutive ratios |A_l| / |A_{l+1}|.  A ratio is +infinity when it exceeds
/// 1e12 or when the denominator coefficient is exactly zero (trailing zeros
/// mean a polynomial / entire tail).
ConvergenceRadii radii(const PowerSeries& s, int tail = 16);

/// Sector-wise summation of the series at u; throws OutsideConvergenceRegion
/// when u falls outside the estimated convergence cylinder.  With tol > 0 the
/// summation stops once two consecutive increments fall below tol in every
/// sector; tol = 0 sums all coefficients.
PolarNComplex evaluate(const PowerSeries& s, const PolarNComplex& u, double tol = 0.0);

/// Taylor recentering: coefficients of the expansion around u0, truncated at
/// `degree` (c_k = sum_l binom(k+l, l) a_{k+l} u0^l).
PowerSeries recenter(const PowerSeries& s, const PolarNComplex& u0, std::size_t degree);
PowerSeries recenter(const PowerSeries& s, const PolarNComplex& u0);

/// Central-difference derivative [f(u0 + h dir) - f(u0 - h dir)] / (2 h dir);
/// direction-independent for analytic f.  dir must have no vanishing sector.
PolarNComplex derivative_fd(const NFunction& f, const PolarNComplex& u0,
                            const PolarNComplex& dir, double h);
PolarNComplex derivative_fd(const NFunction& f, const PolarNComplex& u0,
                            const PolarNComplex& dir);

/// Estimates all component partial derivatives by central differences and
/// reports how far f is from satisfying the first- and second-order
/// equality chains.  Residuals are reported, not judged.
CRReport cr_check(const NFunction& f, const PolarNComplex& u0, double h);

}  // namespace pnc
