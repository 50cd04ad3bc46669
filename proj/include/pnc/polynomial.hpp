#pragma once

#include <complex>
#include <vector>

#include "pnc/series.hpp"
#include "pnc/types.hpp"

namespace pnc {

/// Monic polynomial u^m + a_1 u^(m-1) + ... + a_m; coeffs holds a_1..a_m.
struct NPolynomial {
    std::vector<PolarNComplex> coeffs;

    std::size_t degree() const { return coeffs.size(); }
    std::size_t dim() const;
};

/// The m roots of each sector polynomial.  The v_plus / v_minus lists are
/// conjugate-closed; pair-sector roots are free complex numbers.
struct SectorRoots {
    std::size_t n = 0;
    std::vector<std::complex<double>> plus;
    std::vector<std::complex<double>> minus;  // empty when n is odd
    std::vector<std::vector<std::complex<double>>> pairs;

    std::size_t sector_count() const { return 1 + (minus.empty() ? 0 : 1) + pairs.size(); }
};

/// One choice of m n-complex roots whose linear factors multiply back to P.
struct RootSet {
    std::vector<PolarNComplex> roots;
};

/// Per-position root indices for each sector, in the order
/// v_plus [, v_minus], pair_1..pair_K; selection[s][p] picks the sector-s root
/// assigned to position p.
using Selection = std::vector<std::vector<std::size_t>>;

struct Enumeration {
    std::vector<RootSet> sets;    // at most cap, lexicographic in the selection
    std::size_t total_count = 0;  // distinct valid sets seen
    bool truncated = false;       // candidate space not exhausted
};

/// Sector images of the coefficients a_1..a_m (index l-1 holds degree-l data).
SectorCoefficients sector_polynomials(const NPolynomial& P);

/// All sector roots by deterministic simultaneous iteration; throws
/// NoConvergence naming the sector.
SectorRoots sector_roots(const NPolynomial& P);

/// Recombine one root per sector for every position; throws NonRealAssembly
/// when the v_plus / v_minus values picked for some position are not real.
RootSet assemble(const NPolynomial& P, const SectorRoots& roots, const Selection& sel);

/// All distinct valid root sets up to simultaneous permutation of the
/// positions (the v_plus assignment order is fixed, other sectors permute).
Enumeration enumerate_rootsets(const NPolynomial& P, std::size_t cap = 1024);

/// Max coefficient deviation between the expanded product of (u - u_p) and P.
double verify_factorization(const NPolynomial& P, const RootSet& rs);

PolarNComplex eval_poly(const NPolynomial& P, const PolarNComplex& u);

}  // namespace pnc
