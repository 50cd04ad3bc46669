#include "pnc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>

#include "pnc/core.hpp"

namespace pnc {

std::size_t NPolynomial::dim() const {
    if (coeffs.empty()) throw Error(ErrorKind::InvalidValue, "degree must be >= 1");
    for (const auto& a : coeffs) require_same_dim(coeffs.front(), a);
    return coeffs.front().dim();
}

SectorCoefficients sector_polynomials(const NPolynomial& P) {
    PowerSeries s{P.coeffs};
    SectorCoefficients sc = sector_coefficients(s);
    return sc;
}

namespace {

// Roots of the monic complex polynomial z^m + c[0] z^(m-1) + ... + c[m-1] by
// Durand-Kerner iteration from deterministic points on a circle.
std::vector<std::complex<double>> durand_kerner(
    const std::vector<std::complex<double>>& c, const std::string& sector) {
    const std::size_t m = c.size();
    double cmax = 0.0;
    for (const auto& z : c) cmax = std::max(cmax, std::abs(z));
    const double radius = 1.0 + cmax;

    std::vector<std::complex<double>> r(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double ang =
            2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m) + 0.4;
        r[i] = std::polar(radius, ang);
    }
    auto eval = [&](std::complex<double> z) {
        std::complex<double> p(1.0, 0.0);
        for (std::size_t l = 0; l < m; ++l) p = p * z + c[l];
        return p;
    };
    // Near-multiple roots leave the sweep oscillating at the rounding floor
    // of the correction denominators, so stagnation below 1e-10 also counts
    // as converged.
    double best = std::numeric_limits<double>::infinity();
    int stale = 0;
    for (int it = 0; it < 500; ++it) {
        double worst = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            std::complex<double> den(1.0, 0.0);
            for (std::size_t j = 0; j < m; ++j)
                if (j != i) den *= r[i] - r[j];
            const std::complex<double> step = eval(r[i]) / den;
            r[i] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(r[i])));
        }
        if (worst <= 1e-13) return r;
        if (worst < best) {
            best = worst;
            stale = 0;
        } else if (++stale >= 20 && best <= 1e-10) {
            return r;
        }
    }
    throw Error(ErrorKind::NoConvergence, sector);
}

// Real-coefficient sectors get their root lists closed under conjugation
// exactly: near-real roots are snapped to the axis, the rest paired up.
void close_under_conjugation(std::vector<std::complex<double>>& r) {
    double scale = 1.0;
    for (const auto& z : r) scale = std::max(scale, std::abs(z));
    const double tol = 1e-8 * scale;
    std::vector<bool> done(r.size(), false);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (done[i]) continue;
        if (std::abs(r[i].imag()) <= tol) {
            r[i] = {r[i].real(), 0.0};
            done[i] = true;
            continue;
        }
        std::size_t best = i;
        double bestd = std::numeric_limits<double>::infinity();
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            if (done[j]) continue;
            const double d = std::abs(r[j] - std::conj(r[i]));
            if (d < bestd) {
                bestd = d;
                best = j;
            }
        }
        if (best != i && bestd <= 1e-6 * scale) {
            r[best] = std::conj(r[i]);
            done[i] = done[best] = true;
        } else {
            done[i] = true;  // leave as is; assembly will reject it
        }
    }
}

std::vector<std::complex<double>> sector_coeff_column(const SectorCoefficients& sc,
                                                      int which, std::size_t k) {
    std::vector<std::complex<double>> c;
    const std::size_t m = sc.plus.size();
    c.reserve(m);
    for (std::size_t l = 0; l < m; ++l) {
        if (which == 0)
            c.emplace_back(sc.plus[l], 0.0);
        else if (which == 1)
            c.emplace_back(sc.minus[l], 0.0);
        else
            c.push_back(sc.pairs[k][l]);
    }
    return c;
}

}  // namespace

SectorRoots sector_roots(const NPolynomial& P) {
    const std::size_t n = P.dim();
    const SectorCoefficients sc = sector_polynomials(P);
    SectorRoots out;
    out.n = n;
    out.plus = durand_kerner(sector_coeff_column(sc, 0, 0), "v_plus");
    close_under_conjugation(out.plus);
    if (n % 2 == 0) {
        out.minus = durand_kerner(sector_coeff_column(sc, 1, 0), "v_minus");
        close_under_conjugation(out.minus);
    }
    for (std::size_t k = 0; k < pair_count(n); ++k)
        out.pairs.push_back(
            durand_kerner(sector_coeff_column(sc, 2, k), "pair_" + std::to_string(k + 1)));
    return out;
}

namespace {

bool is_permutation_of_positions(const std::vector<std::size_t>& sel, std::size_t m) {
    if (sel.size() != m) return false;
    std::vector<bool> seen(m, false);
    for (std::size_t v : sel) {
        if (v >= m || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

RootSet assemble_impl(std::size_t n, std::size_t m, const SectorRoots& roots,
                      const Selection& sel) {
    const bool even = n % 2 == 0;
    const std::size_t sectors = roots.sector_count();
    if (sel.size() != sectors)
        throw Error(ErrorKind::InvalidValue, "selection must cover every sector");
    for (const auto& s : sel)
        if (!is_permutation_of_positions(s, m))
            throw Error(ErrorKind::InvalidValue, "selection is not a permutation");

    double scale = 1.0;
    for (const auto& z : roots.plus) scale = std::max(scale, std::abs(z));
    for (const auto& z : roots.minus) scale = std::max(scale, std::abs(z));
    const double tol = 1e-9 * scale;

    RootSet rs;
    rs.roots.reserve(m);
    for (std::size_t p = 0; p < m; ++p) {
        const std::complex<double> vp = roots.plus[sel[0][p]];
        if (std::abs(vp.imag()) > tol)
            throw Error(ErrorKind::NonRealAssembly, "v_plus root at position " +
                                                        std::to_string(p + 1));
        CanonicalCoords c;
        c.n = n;
        c.v_plus = vp.real();
        std::size_t s = 1;
        if (even) {
            const std::complex<double> vm = roots.minus[sel[s][p]];
            if (std::abs(vm.imag()) > tol)
                throw Error(ErrorKind::NonRealAssembly, "v_minus root at position " +
                                                            std::to_string(p + 1));
            c.v_minus = vm.real();
            ++s;
        }
        for (std::size_t k = 0; k < roots.pairs.size(); ++k, ++s)
            c.pairs.push_back(roots.pairs[k][sel[s][p]]);
        rs.roots.push_back(from_canonical(c));
    }
    return rs;
}

}  // namespace

RootSet assemble(const NPolynomial& P, const SectorRoots& roots, const Selection& sel) {
    return assemble_impl(P.dim(), P.degree(), roots, sel);
}

Enumeration enumerate_rootsets(const NPolynomial& P, std::size_t cap) {
    if (cap < 1) throw Error(ErrorKind::InvalidValue, "cap must be >= 1");
    const std::size_t n = P.dim();
    const std::size_t m = P.degree();
    const SectorRoots roots = sector_roots(P);
    const std::size_t sectors = roots.sector_count();

    // The v_plus order stays fixed (that quotient removes the global position
    // permutation); the remaining sectors run through all m! orderings each,
    // lexicographically.
    std::vector<std::size_t> identity(m);
    for (std::size_t i = 0; i < m; ++i) identity[i] = i;
    std::vector<std::vector<std::size_t>> dials(sectors > 1 ? sectors - 1 : 0, identity);

    const std::size_t budget =
        cap > std::numeric_limits<std::size_t>::max() / 1000
            ? std::numeric_limits<std::size_t>::max()
            : cap * 1000;
    Enumeration out;

    // Sets compare as position-sorted coordinate vectors quantized at 1e-7,
    // which also bounds dedup cost on large candidate spaces.
    std::set<std::vector<long long>> seen;
    auto key_of = [&](const RootSet& rs) {
        std::vector<std::vector<long long>> per_root;
        per_root.reserve(m);
        for (const auto& r : rs.roots) {
            std::vector<long long> q(n);
            for (std::size_t i = 0; i < n; ++i) q[i] = std::llround(r[i] * 1e7);
            per_root.push_back(std::move(q));
        }
        std::sort(per_root.begin(), per_root.end());
        std::vector<long long> flat;
        flat.reserve(m * n);
        for (const auto& q : per_root) flat.insert(flat.end(), q.begin(), q.end());
        return flat;
    };

    std::size_t examined = 0;
    bool exhausted = false;
    while (true) {
        if (examined >= budget) break;
        ++examined;
        Selection sel;
        sel.reserve(sectors);
        sel.push_back(identity);
        for (const auto& d : dials) sel.push_back(d);
        try {
            RootSet rs = assemble_impl(n, m, roots, sel);
            if (seen.insert(key_of(rs)).second && out.sets.size() < cap)
                out.sets.push_back(std::move(rs));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NonRealAssembly) throw;
        }
        // Advance the odometer of sector permutations.
        std::size_t d = dials.size();
        while (d > 0) {
            if (std::next_permutation(dials[d - 1].begin(), dials[d - 1].end())) break;
            --d;  // wrapped to identity, carry into the next dial
        }
        if (d == 0) {
            exhausted = true;
            break;
        }
    }
    out.total_count = seen.size();
    out.truncated = !exhausted;
    return out;
}

double verify_factorization(const NPolynomial& P, const RootSet& rs) {
    const std::size_t n = P.dim();
    const std::size_t m = P.degree();
    if (rs.roots.size() != m)
        throw Error(ErrorKind::InvalidValue, "root count does not match the degree");

    // Expand prod (u - u_p): poly[i] is the coefficient of u^(m-i).
    std::vector<PolarNComplex> poly{PolarNComplex::one(n)};
    for (const auto& r : rs.roots) {
        std::vector<PolarNComplex> next(poly.size() + 1, PolarNComplex(n));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] = add(next[i], poly[i]);
            next[i + 1] = sub(next[i + 1], mul(poly[i], r));
        }
        poly = std::move(next);
    }
    double worst = 0.0;
    for (std::size_t l = 1; l <= m; ++l)
        worst = std::max(worst, modulus(sub(poly[l], P.coeffs[l - 1])));
    return worst;
}

PolarNComplex eval_poly(const NPolynomial& P, const PolarNComplex& u) {
    require_same_dim(P.coeffs.front(), u);
    PolarNComplex r = add(u, P.coeffs[0]);
    for (std::size_t l = 1; l < P.degree(); ++l) r = add(mul(r, u), P.coeffs[l]);
    return r;
}

}  // namespace pnc
