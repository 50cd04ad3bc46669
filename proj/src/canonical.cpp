#include "pnc/canonical.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "pnc/kernels.hpp"

namespace pnc {

TrigTable::TrigTable(std::size_t n) : n_(n), cos_(n), sin_(n) {
    for (std::size_t j = 0; j < n; ++j) {
        // Exact values on the quadrant angles, and bitwise half-turn symmetry
        // (entry n-j mirrors entry j) so that conjugate terms cancel exactly.
        if (4 * j % n == 0) {
            switch (4 * j / n) {
                case 0: cos_[j] = 1.0; sin_[j] = 0.0; continue;
                case 1: cos_[j] = 0.0; sin_[j] = 1.0; continue;
                case 2: cos_[j] = -1.0; sin_[j] = 0.0; continue;
                case 3: cos_[j] = 0.0; sin_[j] = -1.0; continue;
            }
        }
        if (2 * j > n) {
            cos_[j] = cos_[n - j];
            sin_[j] = -sin_[n - j];
            continue;
        }
        const double a = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        cos_[j] = std::cos(a);
        sin_[j] = std::sin(a);
    }
}

std::shared_ptr<const TrigTable> TrigTable::get(std::size_t n) {
    // Per-thread single-slot memo: repeated same-n lookups (the common case in
    // hot loops) never touch the shared registry lock.
    thread_local std::size_t memo_n = 0;
    thread_local std::shared_ptr<const TrigTable> memo;
    if (memo_n == n) return memo;

    static std::mutex mu;
    static std::map<std::size_t, std::shared_ptr<const TrigTable>> cache;
    std::shared_ptr<const TrigTable> table;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) {
            table = it->second;
        } else {
            table = std::shared_ptr<const TrigTable>(new TrigTable(n));
            cache.emplace(n, table);
        }
    }
    memo = table;
    memo_n = n;
    return table;
}

CanonicalCoords to_canonical(const PolarNComplex& u) {
    const std::size_t n = u.dim();
    const auto tt = TrigTable::get(n);
    CanonicalCoords c;
    c.n = n;
    double vp = 0.0;
    for (std::size_t p = 0; p < n; ++p) vp += u[p];
    c.v_plus = vp;
    if (n % 2 == 0) {
        double vm = 0.0;
        for (std::size_t p = 0; p < n; ++p) vm += (p % 2 == 0 ? u[p] : -u[p]);
        c.v_minus = vm;
    }
    const std::size_t K = pair_count(n);
    std::vector<double> vk(K), vt(K);
    kernels::canonical_pairs(u.coords(), tt->cos_row(), tt->sin_row(), vk, vt);
    c.pairs.reserve(K);
    for (std::size_t k = 0; k < K; ++k) c.pairs.emplace_back(vk[k], vt[k]);
    return c;
}

PolarNComplex from_canonical(const CanonicalCoords& c) {
    const std::size_t n = c.n;
    if (n < 2 || c.pairs.size() != pair_count(n) || c.v_minus.has_value() != (n % 2 == 0))
        throw Error(ErrorKind::InvalidValue, "malformed canonical coordinates");
    const auto tt = TrigTable::get(n);
    std::vector<double> x(n, 0.0);
    for (std::size_t p = 0; p < n; ++p) {
        double s = c.v_plus / static_cast<double>(n);
        if (c.v_minus) s += (p % 2 == 0 ? *c.v_minus : -*c.v_minus) / static_cast<double>(n);
        for (std::size_t k = 1; k <= c.pairs.size(); ++k) {
            const auto& z = c.pairs[k - 1];
            s += 2.0 / static_cast<double>(n) *
                 (tt->cos_kp(k, p) * z.real() + tt->sin_kp(k, p) * z.imag());
        }
        x[p] = s;
    }
    return PolarNComplex(std::move(x));
}

CanonicalBasis basis(std::size_t n) {
    if (n < 2) throw Error(ErrorKind::InvalidValue, "dimension must be at least 2");
    const auto tt = TrigTable::get(n);
    const double inv_n = 1.0 / static_cast<double>(n);

    std::vector<double> ep(n, inv_n);
    CanonicalBasis b{PolarNComplex(std::move(ep)), std::nullopt, {}};
    if (n % 2 == 0) {
        std::vector<double> em(n);
        for (std::size_t p = 0; p < n; ++p) em[p] = (p % 2 == 0 ? inv_n : -inv_n);
        b.e_minus = PolarNComplex(std::move(em));
    }
    for (std::size_t k = 1; k <= pair_count(n); ++k) {
        std::vector<double> ek(n), etk(n);
        for (std::size_t p = 0; p < n; ++p) {
            ek[p] = 2.0 * inv_n * tt->cos_kp(k, p);
            etk[p] = 2.0 * inv_n * tt->sin_kp(k, p);
        }
        b.pairs.emplace_back(PolarNComplex(std::move(ek)), PolarNComplex(std::move(etk)));
    }
    return b;
}

RotatedCoords rotated(const PolarNComplex& u) {
    const std::size_t n = u.dim();
    const CanonicalCoords c = to_canonical(u);
    RotatedCoords r;
    const double sn = std::sqrt(static_cast<double>(n));
    const double s2 = std::sqrt(static_cast<double>(n) / 2.0);
    r.xi_plus = c.v_plus / sn;
    if (c.v_minus) r.xi_minus = *c.v_minus / sn;
    r.pairs.reserve(c.pairs.size());
    for (const auto& z : c.pairs) r.pairs.emplace_back(z.real() / s2, z.imag() / s2);
    return r;
}

RealMatrix block_diagonalize(const PolarNComplex& u) {
    const std::size_t n = u.dim();
    const CanonicalCoords c = to_canonical(u);
    RealMatrix m(n, n);
    std::size_t i = 0;
    m(i, i) = c.v_plus;
    ++i;
    if (c.v_minus) {
        m(i, i) = *c.v_minus;
        ++i;
    }
    for (const auto& z : c.pairs) {
        m(i, i) = z.real();
        m(i, i + 1) = z.imag();
        m(i + 1, i) = -z.imag();
        m(i + 1, i + 1) = z.real();
        i += 2;
    }
    return m;
}

RealMatrix rotation_matrix(std::size_t n) {
    if (n < 2) throw Error(ErrorKind::InvalidValue, "dimension must be at least 2");
    const auto tt = TrigTable::get(n);
    RealMatrix t(n, n);
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    const double b = std::sqrt(2.0 / static_cast<double>(n));
    std::size_t row = 0;
    for (std::size_t p = 0; p < n; ++p) t(row, p) = a;
    ++row;
    if (n % 2 == 0) {
        for (std::size_t p = 0; p < n; ++p) t(row, p) = (p % 2 == 0 ? a : -a);
        ++row;
    }
    for (std::size_t k = 1; k <= pair_count(n); ++k) {
        for (std::size_t p = 0; p < n; ++p) t(row, p) = b * tt->cos_kp(k, p);
        for (std::size_t p = 0; p < n; ++p) t(row + 1, p) = b * tt->sin_kp(k, p);
        row += 2;
    }
    return t;
}

}  // namespace pnc
