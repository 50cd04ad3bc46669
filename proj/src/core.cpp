#include "pnc/core.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "pnc/canonical.hpp"
#include "pnc/kernels.hpp"

namespace pnc {

PolarNComplex add(const PolarNComplex& u, const PolarNComplex& v) {
    require_same_dim(u, v);
    std::vector<double> x(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) x[i] = u[i] + v[i];
    return PolarNComplex(std::move(x));
}

PolarNComplex sub(const PolarNComplex& u, const PolarNComplex& v) {
    require_same_dim(u, v);
    std::vector<double> x(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) x[i] = u[i] - v[i];
    return PolarNComplex(std::move(x));
}

PolarNComplex neg(const PolarNComplex& u) {
    std::vector<double> x(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) x[i] = -u[i];
    return PolarNComplex(std::move(x));
}

PolarNComplex scale(const PolarNComplex& u, double s) {
    std::vector<double> x(u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) x[i] = s * u[i];
    return PolarNComplex(std::move(x));
}

PolarNComplex mul(const PolarNComplex& u, const PolarNComplex& v) {
    require_same_dim(u, v);
    std::vector<double> x(u.dim());
    kernels::cyclic_convolve(u.coords(), v.coords(), x);
    return PolarNComplex(std::move(x));
}

RealMatrix to_matrix(const PolarNComplex& u) {
    const std::size_t n = u.dim();
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = u[(j + n - i) % n];
    return m;
}

double nu(const PolarNComplex& u) {
    const CanonicalCoords c = to_canonical(u);
    double prod = c.v_plus;
    if (c.v_minus) prod *= *c.v_minus;
    for (const auto& z : c.pairs) prod *= std::norm(z);
    return prod;
}

double amplitude(const PolarNComplex& u) {
    const double v = nu(u);
    if (!(v > 0.0)) throw Error(ErrorKind::NonPositiveNu, "nu = " + std::to_string(v));
    return std::pow(v, 1.0 / static_cast<double>(u.dim()));
}

double modulus(const PolarNComplex& u) {
    double s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * u[i];
    return std::sqrt(s);
}

double nodal_tolerance(const PolarNComplex& u) {
    return std::max(1e-12 * modulus(u), 1e-300);
}

PolarNComplex inverse(const PolarNComplex& u) {
    const CanonicalCoords c = to_canonical(u);
    const double tol = nodal_tolerance(u);
    if (std::abs(c.v_plus) <= tol) throw Error(ErrorKind::NotInvertible, "v_plus");
    if (c.v_minus && std::abs(*c.v_minus) <= tol)
        throw Error(ErrorKind::NotInvertible, "v_minus");
    CanonicalCoords r;
    r.n = c.n;
    r.v_plus = 1.0 / c.v_plus;
    if (c.v_minus) r.v_minus = 1.0 / *c.v_minus;
    r.pairs.reserve(c.pairs.size());
    for (std::size_t k = 0; k < c.pairs.size(); ++k) {
        if (std::abs(c.pairs[k]) <= tol)
            throw Error(ErrorKind::NotInvertible, "pair_" + std::to_string(k + 1));
        r.pairs.push_back(1.0 / c.pairs[k]);
    }
    return from_canonical(r);
}

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
    RealMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

std::vector<double> matvec(const RealMatrix& a, std::span<const double> x) {
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

}  // namespace pnc
