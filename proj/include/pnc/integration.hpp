#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pnc/series.hpp"
#include "pnc/types.hpp"

namespace pnc {

/// Polyline path; when closed the final segment back to the first vertex is
/// implicit.  Consecutive duplicate vertices are rejected.
struct ClosedPath {
    std::vector<PolarNComplex> vertices;
    bool closed = true;
};

ClosedPath make_path(std::vector<PolarNComplex> vertices, bool closed = true);

struct Point2 {
    double a = 0.0, b = 0.0;
};
using Loop2 = std::vector<Point2>;

/// Projection onto the (xi_k, eta_k) plane, 1 <= k <= K.
Point2 project(const PolarNComplex& u, std::size_t k);
Loop2 project(const ClosedPath& path, std::size_t k);

/// Integer winding number of the loop around m by summed signed angle
/// increments; 1/0 for simple loops (interior/exterior).  Throws PointOnPath
/// when m lies on the loop (distance <= 1e-12 * loop diameter).
int winding(const Point2& m, const Loop2& c);

/// Line integral of f(u) du over the path: fixed 16-node Gauss-Legendre per
/// subdivision, steps_per_segment subdivisions per polyline segment.  The
/// dispatching version parallelizes over segment-steps when the estimated
/// work (chunks * n^2) is large; the serial and parallel variants force one
/// path and agree bitwise.
PolarNComplex contour_integral(const NFunction& f, const ClosedPath& path,
                               int steps_per_segment = 4);
PolarNComplex contour_integral_serial(const NFunction& f, const ClosedPath& path,
                                      int steps_per_segment = 4);
PolarNComplex contour_integral_parallel(const NFunction& f, const ClosedPath& path,
                                        int steps_per_segment = 4);

inline constexpr std::size_t contour_parallel_min_work = 131072;  // chunks * n^2

/// Closed form of the loop integral of 1/(u - u0):
/// sum_k 2 pi et_k * winding(projections).
PolarNComplex residue_value(const PolarNComplex& u0, const ClosedPath& path);

/// Closed form of the loop integral of f(u)/(u - u0) for analytic f.
PolarNComplex cauchy_eval(const NFunction& f, const PolarNComplex& u0,
                          const ClosedPath& path);

/// Loop integral of f(u)/(u - u0)^(order+1), as the (quadrature, closed-form)
/// pair; the closed form takes the order-th derivative from the recentered
/// series of f.
struct DerivativePair {
    PolarNComplex numeric;
    PolarNComplex closed_form;
};
DerivativePair cauchy_derivative(const PowerSeries& f, const PolarNComplex& u0,
                                 const ClosedPath& path, int order,
                                 int steps_per_segment = 8);

/// Loop integral of sum_l r_l / (u - u_l):
/// 2 pi sum_l sum_k et_k winding_k(u_l) r_l.
PolarNComplex residue_sum(
    std::span<const std::pair<PolarNComplex, PolarNComplex>> poles,
    const ClosedPath& path);

/// Nodes/weights of the m-point Gauss-Legendre rule on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int m);

}  // namespace pnc
