#include "pnc/integration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pnc/core.hpp"
#include "pnc/elementary.hpp"
#include "pnc/kernels.hpp"

namespace pnc {

ClosedPath make_path(std::vector<PolarNComplex> vertices, bool closed) {
    if (vertices.size() < (closed ? 3u : 2u))
        throw Error(ErrorKind::InvalidValue, "path needs at least 3 (closed) or 2 vertices");
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        require_same_dim(vertices[0], vertices[i]);
        if (vertices[i] == vertices[i - 1])
            throw Error(ErrorKind::InvalidValue, "consecutive duplicate vertices");
    }
    if (closed && vertices.front() == vertices.back())
        throw Error(ErrorKind::InvalidValue,
                    "closed paths end implicitly at the first vertex");
    return ClosedPath{std::move(vertices), closed};
}

Point2 project(const PolarNComplex& u, std::size_t k) {
    const std::size_t K = pair_count(u.dim());
    if (k < 1 || k > K) throw Error(ErrorKind::InvalidValue, "pair index out of range");
    const CanonicalCoords c = to_canonical(u);
    const double s = std::sqrt(2.0 / static_cast<double>(u.dim()));
    return {s * c.pairs[k - 1].real(), s * c.pairs[k - 1].imag()};
}

Loop2 project(const ClosedPath& path, std::size_t k) {
    Loop2 loop;
    loop.reserve(path.vertices.size());
    for (const auto& v : path.vertices) loop.push_back(project(v, k));
    return loop;
}

namespace {

double segment_distance(const Point2& m, const Point2& a, const Point2& b) {
    const double dx = b.a - a.a, dy = b.b - a.b;
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((m.a - a.a) * dx + (m.b - a.b) * dy) / len2, 0.0, 1.0);
    const double px = a.a + t * dx - m.a, py = a.b + t * dy - m.b;
    return std::hypot(px, py);
}

double loop_diameter(const Loop2& c) {
    double lo_a = c[0].a, hi_a = c[0].a, lo_b = c[0].b, hi_b = c[0].b;
    for (const auto& p : c) {
        lo_a = std::min(lo_a, p.a);
        hi_a = std::max(hi_a, p.a);
        lo_b = std::min(lo_b, p.b);
        hi_b = std::max(hi_b, p.b);
    }
    return std::hypot(hi_a - lo_a, hi_b - lo_b);
}

}  // namespace

int winding(const Point2& m, const Loop2& c) {
    if (c.size() < 3) throw Error(ErrorKind::InvalidValue, "loop needs at least 3 points");
    // Proximity is relative to the loop diameter, with an absolute floor at
    // the coordinate rounding scale: a point within noise distance of a
    // noise-sized loop has no certifiable winding number.
    double scale = std::hypot(m.a, m.b);
    for (const auto& p : c) scale = std::max(scale, std::hypot(p.a, p.b));
    const double tol = std::max(1e-12 * loop_diameter(c), 1e-14 * (1.0 + scale));
    double total = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Point2& a = c[i];
        const Point2& b = c[(i + 1) % c.size()];
        if (segment_distance(m, a, b) <= tol)
            throw Error(ErrorKind::PointOnPath, "projected point on projected loop");
        const double ax = a.a - m.a, ay = a.b - m.b;
        const double bx = b.a - m.a, by = b.b - m.b;
        total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int m) {
    // Newton iteration on the Legendre polynomial; standard and deterministic.
    std::vector<double> x(m), w(m);
    const int half = (m + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < m; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = m * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[m - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[m - 1 - i] = w[i];
    }
    return {x, w};
}

namespace {

struct Chunk {
    std::size_t seg;
    int step;
};

PolarNComplex chunk_integral(const NFunction& f, const PolarNComplex& a,
                             const PolarNComplex& b, int step, int steps,
                             std::span<const double> nodes, std::span<const double> weights) {
    const std::size_t n = a.dim();
    const double t0 = static_cast<double>(step) / steps;
    const double t1 = static_cast<double>(step + 1) / steps;
    const double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);

    std::vector<double> dir(n), point(n), acc(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) dir[i] = b[i] - a[i];
    for (std::size_t q = 0; q < nodes.size(); ++q) {
        const double t = mid + half * nodes[q];
        for (std::size_t i = 0; i < n; ++i) point[i] = a[i] + t * dir[i];
        const PolarNComplex fu = f(PolarNComplex(point));
        const double w = weights[q] * half;
        for (std::size_t i = 0; i < n; ++i) acc[i] += w * fu[i];
    }
    std::vector<double> out(n);
    kernels::cyclic_convolve_serial(acc, dir, out);
    return PolarNComplex(std::move(out));
}

enum class Exec { serial, parallel, automatic };

PolarNComplex integrate_path(const NFunction& f, const ClosedPath& path,
                             int steps_per_segment, Exec exec) {
    if (steps_per_segment < 1)
        throw Error(ErrorKind::InvalidValue, "steps_per_segment must be >= 1");
    static const auto rule = gauss_legendre(16);
    const std::size_t n = path.vertices[0].dim();
    const std::size_t nseg = path.vertices.size() - (path.closed ? 0 : 1);

    std::vector<Chunk> chunks;
    chunks.reserve(nseg * static_cast<std::size_t>(steps_per_segment));
    for (std::size_t s = 0; s < nseg; ++s)
        for (int j = 0; j < steps_per_segment; ++j) chunks.push_back({s, j});

    std::vector<PolarNComplex> partial(chunks.size(), PolarNComplex(n));
    const bool parallel =
        exec == Exec::parallel ||
        (exec == Exec::automatic && parallel::enabled() &&
         chunks.size() * n * n >= contour_parallel_min_work);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (long long i = 0; i < static_cast<long long>(chunks.size()); ++i) {
        const Chunk& ch = chunks[static_cast<std::size_t>(i)];
        const PolarNComplex& a = path.vertices[ch.seg];
        const PolarNComplex& b = path.vertices[(ch.seg + 1) % path.vertices.size()];
        partial[static_cast<std::size_t>(i)] =
            chunk_integral(f, a, b, ch.step, steps_per_segment, rule.first, rule.second);
    }
    (void)parallel;
    // In-order reduction keeps the result identical to the serial path.
    PolarNComplex total(n);
    for (const auto& p : partial) total = add(total, p);
    return total;
}

}  // namespace

PolarNComplex contour_integral(const NFunction& f, const ClosedPath& path,
                               int steps_per_segment) {
    return integrate_path(f, path, steps_per_segment, Exec::automatic);
}

PolarNComplex contour_integral_serial(const NFunction& f, const ClosedPath& path,
                                      int steps_per_segment) {
    return integrate_path(f, path, steps_per_segment, Exec::serial);
}

PolarNComplex contour_integral_parallel(const NFunction& f, const ClosedPath& path,
                                        int steps_per_segment) {
    return integrate_path(f, path, steps_per_segment, Exec::parallel);
}

namespace {

/// sum_k et_k * winding(project(u0, k), project(path, k)); throws PointOnPath
/// naming the sector.
PolarNComplex winding_combination(const PolarNComplex& u0, const ClosedPath& path) {
    require_same_dim(u0, path.vertices[0]);
    const std::size_t n = u0.dim();
    const CanonicalBasis b = basis(n);
    PolarNComplex acc(n);
    for (std::size_t k = 1; k <= pair_count(n); ++k) {
        int w;
        try {
            w = winding(project(u0, k), project(path, k));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::PointOnPath)
                throw Error(ErrorKind::PointOnPath, "pair_" + std::to_string(k));
            throw;
        }
        if (w != 0) acc = add(acc, scale(b.pairs[k - 1].second, static_cast<double>(w)));
    }
    return acc;
}

}  // namespace

PolarNComplex residue_value(const PolarNComplex& u0, const ClosedPath& path) {
    return scale(winding_combination(u0, path), 2.0 * std::numbers::pi);
}

PolarNComplex cauchy_eval(const NFunction& f, const PolarNComplex& u0,
                          const ClosedPath& path) {
    return scale(mul(f(u0), winding_combination(u0, path)), 2.0 * std::numbers::pi);
}

DerivativePair cauchy_derivative(const PowerSeries& f, const PolarNComplex& u0,
                                 const ClosedPath& path, int order,
                                 int steps_per_segment) {
    if (order < 1) throw Error(ErrorKind::InvalidValue, "order must be >= 1");
    const PolarNComplex numeric = contour_integral(
        [&](const PolarNComplex& u) {
            return mul(evaluate(f, u), pow(sub(u, u0), -(order + 1)));
        },
        path, steps_per_segment);
    // Around u0 the series coefficient of (u - u0)^order is f^(order)(u0)/order!,
    // identically zero past the series length.
    const std::size_t n = u0.dim();
    PolarNComplex c_order(n);
    if (static_cast<std::size_t>(order) < f.coeffs.size())
        c_order = recenter(f, u0, static_cast<std::size_t>(order))
                      .coeffs[static_cast<std::size_t>(order)];
    const PolarNComplex closed =
        scale(mul(c_order, winding_combination(u0, path)), 2.0 * std::numbers::pi);
    return {numeric, closed};
}

PolarNComplex residue_sum(
    std::span<const std::pair<PolarNComplex, PolarNComplex>> poles,
    const ClosedPath& path) {
    if (poles.empty()) throw Error(ErrorKind::InvalidValue, "no poles given");
    PolarNComplex acc(poles[0].first.dim());
    for (const auto& [u_l, r_l] : poles)
        acc = add(acc, mul(winding_combination(u_l, path), r_l));
    return scale(acc, 2.0 * std::numbers::pi);
}

}  // namespace pnc
