#pragma once

#include "pnc/types.hpp"

namespace pnc {

PolarNComplex add(const PolarNComplex& u, const PolarNComplex& v);
PolarNComplex sub(const PolarNComplex& u, const PolarNComplex& v);
PolarNComplex neg(const PolarNComplex& u);
PolarNComplex scale(const PolarNComplex& u, double s);

/// Ring product: cyclic convolution of the coordinate vectors.
PolarNComplex mul(const PolarNComplex& u, const PolarNComplex& v);

/// Circulant representation: first row x_0..x_{n-1}, each row rotated right by
/// one.  mul(u, v) equals row 0 of to_matrix(u) * to_matrix(v).
RealMatrix to_matrix(const PolarNComplex& u);

/// Determinant of the representation matrix, computed as the canonical sector
/// product v_+ [v_-] prod_k (v_k^2 + vt_k^2).  Multiplicative.
double nu(const PolarNComplex& u);

/// nu^(1/n); requires nu > 0, throws NonPositiveNu otherwise.
double amplitude(const PolarNComplex& u);

/// Sector-wise reciprocal mapped back; throws NotInvertible naming the nodal
/// hypersurface (v_plus, v_minus, or pair_k) whose sector is below tolerance.
PolarNComplex inverse(const PolarNComplex& u);

/// Euclidean norm of the coordinates.
double modulus(const PolarNComplex& u);

/// A canonical sector magnitude is treated as zero below this scale-invariant
/// threshold (relative to modulus, with an absolute floor).
double nodal_tolerance(const PolarNComplex& u);

inline PolarNComplex operator+(const PolarNComplex& a, const PolarNComplex& b) { return add(a, b); }
inline PolarNComplex operator-(const PolarNComplex& a, const PolarNComplex& b) { return sub(a, b); }
inline PolarNComplex operator-(const PolarNComplex& a) { return neg(a); }
inline PolarNComplex operator*(const PolarNComplex& a, const PolarNComplex& b) { return mul(a, b); }
inline PolarNComplex operator*(double s, const PolarNComplex& a) { return scale(a, s); }
inline PolarNComplex operator*(const PolarNComplex& a, double s) { return scale(a, s); }

}  // namespace pnc
