#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pnc/types.hpp"

namespace pnc {

/// Number of (v_k, vt_k) pair sectors: K = floor((n-1)/2).  Every even/odd
/// shape decision in the library keys off this together with n % 2.
inline std::size_t pair_count(std::size_t n) { return (n - 1) / 2; }

/// Shared per-n table of cos/sin(2 pi j / n), j = 0..n-1, with exact values on
/// the quadrant angles.  Built once per n, read-only afterwards.
class TrigTable {
public:
    static std::shared_ptr<const TrigTable> get(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    double cos_at(std::size_t j) const noexcept { return cos_[j % n_]; }
    double sin_at(std::size_t j) const noexcept { return sin_[j % n_]; }
    /// cos/sin(2 pi k p / n) via exact index reduction.
    double cos_kp(std::size_t k, std::size_t p) const noexcept { return cos_[(k * p) % n_]; }
    double sin_kp(std::size_t k, std::size_t p) const noexcept { return sin_[(k * p) % n_]; }
    std::span<const double> cos_row() const noexcept { return cos_; }
    std::span<const double> sin_row() const noexcept { return sin_; }

private:
    explicit TrigTable(std::size_t n);
    std::size_t n_;
    std::vector<double> cos_, sin_;
};

/// The image of a number under the canonical isomorphism: multiplication acts
/// component-wise here (real on v_plus / v_minus, complex on each pair).
struct CanonicalCoords {
    std::size_t n = 0;
    double v_plus = 0.0;
    std::optional<double> v_minus;                 // present iff n is even
    std::vector<std::complex<double>> pairs;       // v_k + i vt_k, k = 1..K

    std::size_t K() const noexcept { return pairs.size(); }
};

/// Idempotent basis e_+, e_-, e_k and the partners et_k.
struct CanonicalBasis {
    PolarNComplex e_plus;
    std::optional<PolarNComplex> e_minus;
    std::vector<std::pair<PolarNComplex, PolarNComplex>> pairs;  // (e_k, et_k)
};

/// Orthonormal rotated coordinates; same data as CanonicalCoords up to the
/// scale factors sqrt(n) and sqrt(n/2).
struct RotatedCoords {
    double xi_plus = 0.0;
    std::optional<double> xi_minus;
    std::vector<std::pair<double, double>> pairs;  // (xi_k, eta_k)
};

CanonicalCoords to_canonical(const PolarNComplex& u);
PolarNComplex from_canonical(const CanonicalCoords& c);
CanonicalBasis basis(std::size_t n);
RotatedCoords rotated(const PolarNComplex& u);

/// Block-diagonal irreducible representation diag(v_+, [v_-,] V_1..V_K) with
/// V_k = [[v_k, vt_k], [-vt_k, v_k]].
RealMatrix block_diagonalize(const PolarNComplex& u);

/// The orthogonal rotation matrix whose rows are the xi/eta axes; satisfies
/// rotation_matrix(n) * to_matrix(u) * transpose == block_diagonalize(u).
RealMatrix rotation_matrix(std::size_t n);

}  // namespace pnc
