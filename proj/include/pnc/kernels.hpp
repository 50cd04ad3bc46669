#pragma once

#include <cstddef>
#include <span>

namespace pnc::parallel {

/// Runtime switch for the OpenMP paths; defaults to on when built with OpenMP.
/// Kernels fall back to their serial reference below a size threshold either way.
bool enabled() noexcept;
void set_enabled(bool on) noexcept;
int max_threads() noexcept;

}  // namespace pnc::parallel

namespace pnc::kernels {

/// out[k] = sum_l a[l] * b[(k - l) mod n].  All spans length n; out distinct from inputs.
void cyclic_convolve(std::span<const double> a, std::span<const double> b,
                     std::span<double> out);
void cyclic_convolve_serial(std::span<const double> a, std::span<const double> b,
                            std::span<double> out);
void cyclic_convolve_parallel(std::span<const double> a, std::span<const double> b,
                              std::span<double> out);

/// Pair parts of the canonical transform: for k = 1..K writes
/// vk[k-1] = sum_p x[p] cos(2 pi k p / n) and vt[k-1] = the sine sum.
/// cs/sn are tables of cos/sin(2 pi j / n) for j = 0..n-1.
void canonical_pairs(std::span<const double> x, std::span<const double> cs,
                     std::span<const double> sn, std::span<double> vk,
                     std::span<double> vt);
void canonical_pairs_serial(std::span<const double> x, std::span<const double> cs,
                            std::span<const double> sn, std::span<double> vk,
                            std::span<double> vt);
void canonical_pairs_parallel(std::span<const double> x, std::span<const double> cs,
                              std::span<const double> sn, std::span<double> vk,
                              std::span<double> vt);

/// Work sizes below which the dispatching kernels always run serially.
inline constexpr std::size_t convolve_parallel_cutoff = 256;
inline constexpr std::size_t pairs_parallel_cutoff = 256;

}  // namespace pnc::kernels
