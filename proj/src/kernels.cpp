#include "pnc/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pnc::parallel {

namespace {
std::atomic<bool> g_enabled{
#ifdef _OPENMP
    true
#else
    false
#endif
};
}  // namespace

bool enabled() noexcept { return g_enabled.load(std::memory_order_relaxed); }
void set_enabled(bool on) noexcept { g_enabled.store(on, std::memory_order_relaxed); }

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace pnc::parallel

namespace pnc::kernels {

namespace {

// One output coordinate of the cyclic convolution.  Terms are accumulated by
// unordered index pair {l, m}, l + m = k (mod n); with commutative IEEE
// multiply/add this makes mul(a, b) bitwise equal to mul(b, a).
inline double convolve_at(std::span<const double> a, std::span<const double> b,
                          std::size_t k) {
    const std::size_t n = a.size();
    double s = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        const std::size_t m = l <= k ? k - l : n + k - l;
        if (l < m)
            s += a[l] * b[m] + a[m] * b[l];
        else if (l == m)
            s += a[l] * b[l];
    }
    return s;
}

}  // namespace

void cyclic_convolve_serial(std::span<const double> a, std::span<const double> b,
                            std::span<double> out) {
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = convolve_at(a, b, k);
}

void cyclic_convolve_parallel(std::span<const double> a, std::span<const double> b,
                              std::span<double> out) {
#ifdef _OPENMP
    const long long n = static_cast<long long>(a.size());
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < n; ++k)
        out[static_cast<std::size_t>(k)] = convolve_at(a, b, static_cast<std::size_t>(k));
#else
    cyclic_convolve_serial(a, b, out);
#endif
}

void cyclic_convolve(std::span<const double> a, std::span<const double> b,
                     std::span<double> out) {
    if (parallel::enabled() && a.size() >= convolve_parallel_cutoff)
        cyclic_convolve_parallel(a, b, out);
    else
        cyclic_convolve_serial(a, b, out);
}

namespace {

// Dot products against the cos/sin rows for one pair index k; the angle
// k*p mod n indexes the precomputed tables exactly (no large-argument trig).
inline void pair_at(std::span<const double> x, std::span<const double> cs,
                    std::span<const double> sn, std::size_t k, double& vk, double& vt) {
    const std::size_t n = x.size();
    double sc = 0.0, ss = 0.0;
    std::size_t j = 0;  // (k * p) mod n, maintained incrementally
    for (std::size_t p = 0; p < n; ++p) {
        sc += x[p] * cs[j];
        ss += x[p] * sn[j];
        j += k;
        if (j >= n) j -= n;
    }
    vk = sc;
    vt = ss;
}

}  // namespace

void canonical_pairs_serial(std::span<const double> x, std::span<const double> cs,
                            std::span<const double> sn, std::span<double> vk,
                            std::span<double> vt) {
    for (std::size_t k = 1; k <= vk.size(); ++k) pair_at(x, cs, sn, k, vk[k - 1], vt[k - 1]);
}

void canonical_pairs_parallel(std::span<const double> x, std::span<const double> cs,
                              std::span<const double> sn, std::span<double> vk,
                              std::span<double> vt) {
#ifdef _OPENMP
    const long long kcount = static_cast<long long>(vk.size());
#pragma omp parallel for schedule(static)
    for (long long k = 1; k <= kcount; ++k)
        pair_at(x, cs, sn, static_cast<std::size_t>(k), vk[static_cast<std::size_t>(k - 1)],
                vt[static_cast<std::size_t>(k - 1)]);
#else
    canonical_pairs_serial(x, cs, sn, vk, vt);
#endif
}

void canonical_pairs(std::span<const double> x, std::span<const double> cs,
                     std::span<const double> sn, std::span<double> vk,
                     std::span<double> vt) {
    if (parallel::enabled() && x.size() >= pairs_parallel_cutoff)
        canonical_pairs_parallel(x, cs, sn, vk, vt);
    else
        canonical_pairs_serial(x, cs, sn, vk, vt);
}

}  // namespace pnc::kernels
