#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pnc/types.hpp"

namespace pnc {

/// One row of cosexponential values g_n0(y)..g_n,n-1(y).
struct CosexpValue {
    std::size_t n = 0;
    double y = 0.0;
    std::vector<double> values;
};

/// g_nk(y) = (1/n) sum_l exp(y cos(2 pi l/n)) cos(y sin(2 pi l/n) - 2 pi k l/n).
/// This closed form is the production path; the series below is the oracle.
double g_closed(std::size_t n, std::size_t k, double y);

/// All n values at once (shares the per-l exponentials).
CosexpValue g_all(std::size_t n, double y);

/// Truncated series sum_{p<terms} y^(k+pn) / (k+pn)!.
double g_series(std::size_t n, std::size_t k, double y, int terms);

/// Series summed adaptively until the next term falls below 1e-17 of the
/// partial sum (at most 200 terms).
double g_series_auto(std::size_t n, std::size_t k, double y);

/// exp(h_k y): g_np(y) scattered onto coordinate (k p) mod n.
PolarNComplex exp_hk(std::size_t n, std::size_t k, double y);

/// cos(h_k y), sin(h_k y) assembled from the circular parts of g_np.
std::pair<PolarNComplex, PolarNComplex> trig_hk(std::size_t n, std::size_t k, double y);

/// cosh(h_k y), sinh(h_k y) assembled from the even/odd parts of g_np.
std::pair<PolarNComplex, PolarNComplex> hyp_hk(std::size_t n, std::size_t k, double y);

/// Rows of g_all over a y grid.  The dispatching version parallelizes over
/// rows for large grids; the serial version is the reference.
std::vector<CosexpValue> table(std::size_t n, std::span<const double> ys);
std::vector<CosexpValue> table_serial(std::size_t n, std::span<const double> ys);

inline constexpr std::size_t table_parallel_cutoff = 64;

}  // namespace pnc
