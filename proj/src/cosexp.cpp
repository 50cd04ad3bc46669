#include "pnc/cosexp.hpp"

#include <cmath>
#include <string>

#include "pnc/canonical.hpp"
#include "pnc/kernels.hpp"

namespace pnc {

namespace {

void check_nk(std::size_t n, std::size_t k, std::size_t kmin) {
    if (n < 2) throw Error(ErrorKind::InvalidValue, "dimension must be at least 2");
    if (k < kmin || k >= n)
        throw Error(ErrorKind::InvalidValue, "index k=" + std::to_string(k) + " out of range");
}

}  // namespace

double g_closed(std::size_t n, std::size_t k, double y) {
    check_nk(n, k, 0);
    const auto tt = TrigTable::get(n);
    double s = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        const double ang = y * tt->sin_at(l);
        // cos(ang - 2 pi k l / n) expanded so the table supplies the exact phase.
        s += std::exp(y * tt->cos_at(l)) *
             (std::cos(ang) * tt->cos_kp(k, l) + std::sin(ang) * tt->sin_kp(k, l));
    }
    return s / static_cast<double>(n);
}

CosexpValue g_all(std::size_t n, double y) {
    check_nk(n, 0, 0);
    const auto tt = TrigTable::get(n);
    CosexpValue out{n, y, std::vector<double>(n, 0.0)};
    for (std::size_t l = 0; l < n; ++l) {
        const double e = std::exp(y * tt->cos_at(l));
        const double c = std::cos(y * tt->sin_at(l));
        const double s = std::sin(y * tt->sin_at(l));
        for (std::size_t k = 0; k < n; ++k)
            out.values[k] += e * (c * tt->cos_kp(k, l) + s * tt->sin_kp(k, l));
    }
    for (double& v : out.values) v /= static_cast<double>(n);
    return out;
}

double g_series(std::size_t n, std::size_t k, double y, int terms) {
    check_nk(n, k, 0);
    if (terms < 1) throw Error(ErrorKind::InvalidValue, "terms must be >= 1");
    double term = 1.0;
    for (std::size_t j = 1; j <= k; ++j) term *= y / static_cast<double>(j);
    double sum = term;
    for (int p = 1; p < terms; ++p) {
        const std::size_t base = k + static_cast<std::size_t>(p - 1) * n;
        for (std::size_t j = 1; j <= n; ++j) term *= y / static_cast<double>(base + j);
        sum += term;
    }
    return sum;
}

double g_series_auto(std::size_t n, std::size_t k, double y) {
    check_nk(n, k, 0);
    double term = 1.0;
    for (std::size_t j = 1; j <= k; ++j) term *= y / static_cast<double>(j);
    double sum = term;
    for (int p = 1; p < 200; ++p) {
        const std::size_t base = k + static_cast<std::size_t>(p - 1) * n;
        for (std::size_t j = 1; j <= n; ++j) term *= y / static_cast<double>(base + j);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

PolarNComplex exp_hk(std::size_t n, std::size_t k, double y) {
    check_nk(n, k, 1);
    const CosexpValue g = g_all(n, y);
    std::vector<double> x(n, 0.0);
    // Coordinates accumulate: distinct p can land on the same index when
    // gcd(k, n) > 1.
    for (std::size_t p = 0; p < n; ++p) x[(k * p) % n] += g.values[p];
    return PolarNComplex(std::move(x));
}

namespace {

// Circular and hyperbolic splittings of g_np.  Real arithmetic throughout.
struct GParts {
    std::vector<double> plus, minus;
};

GParts g_circular_parts(std::size_t n, double y) {
    const auto tt = TrigTable::get(n);
    GParts g{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    for (std::size_t l = 0; l < n; ++l) {
        const double cy = std::cos(y * tt->cos_at(l));
        const double sy = std::sin(y * tt->cos_at(l));
        const double ch = std::cosh(y * tt->sin_at(l));
        const double sh = std::sinh(y * tt->sin_at(l));
        for (std::size_t p = 0; p < n; ++p) {
            g.plus[p] += cy * ch * tt->cos_kp(l, p) - sy * sh * tt->sin_kp(l, p);
            g.minus[p] += sy * ch * tt->cos_kp(l, p) + cy * sh * tt->sin_kp(l, p);
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        g.plus[p] /= static_cast<double>(n);
        g.minus[p] /= static_cast<double>(n);
    }
    return g;
}

GParts g_hyperbolic_parts(std::size_t n, double y) {
    const auto tt = TrigTable::get(n);
    GParts g{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    for (std::size_t l = 0; l < n; ++l) {
        const double ch = std::cosh(y * tt->cos_at(l));
        const double sh = std::sinh(y * tt->cos_at(l));
        const double cy = std::cos(y * tt->sin_at(l));
        const double sy = std::sin(y * tt->sin_at(l));
        for (std::size_t p = 0; p < n; ++p) {
            g.plus[p] += ch * cy * tt->cos_kp(l, p) + sh * sy * tt->sin_kp(l, p);
            g.minus[p] += sh * cy * tt->cos_kp(l, p) + ch * sy * tt->sin_kp(l, p);
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        g.plus[p] /= static_cast<double>(n);
        g.minus[p] /= static_cast<double>(n);
    }
    return g;
}

std::pair<PolarNComplex, PolarNComplex> scatter_pair(std::size_t n, std::size_t k,
                                                     const GParts& g) {
    std::vector<double> xc(n, 0.0), xs(n, 0.0);
    for (std::size_t p = 0; p < n; ++p) {
        xc[(k * p) % n] += g.plus[p];
        xs[(k * p) % n] += g.minus[p];
    }
    return {PolarNComplex(std::move(xc)), PolarNComplex(std::move(xs))};
}

}  // namespace

std::pair<PolarNComplex, PolarNComplex> trig_hk(std::size_t n, std::size_t k, double y) {
    check_nk(n, k, 1);
    return scatter_pair(n, k, g_circular_parts(n, y));
}

std::pair<PolarNComplex, PolarNComplex> hyp_hk(std::size_t n, std::size_t k, double y) {
    check_nk(n, k, 1);
    return scatter_pair(n, k, g_hyperbolic_parts(n, y));
}

std::vector<CosexpValue> table_serial(std::size_t n, std::span<const double> ys) {
    std::vector<CosexpValue> rows;
    rows.reserve(ys.size());
    for (double y : ys) rows.push_back(g_all(n, y));
    return rows;
}

std::vector<CosexpValue> table(std::size_t n, std::span<const double> ys) {
    if (!parallel::enabled() || ys.size() < table_parallel_cutoff) return table_serial(n, ys);
    TrigTable::get(n);  // build the shared table before the parallel region
    std::vector<CosexpValue> rows(ys.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < static_cast<long long>(ys.size()); ++i)
        rows[static_cast<std::size_t>(i)] = g_all(n, ys[static_cast<std::size_t>(i)]);
    return rows;
}

}  // namespace pnc
