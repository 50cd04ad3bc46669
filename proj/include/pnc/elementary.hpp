#pragma once

#include "pnc/types.hpp"

namespace pnc {

/// Elementary functions of a full n-complex argument, evaluated sector-wise in
/// canonical coordinates and mapped back.  exp throws Overflow when a sector
/// exponent exceeds 700; log/pow throw OutsideDomain off their domains.
PolarNComplex exp(const PolarNComplex& u);
PolarNComplex log(const PolarNComplex& u);
PolarNComplex pow(const PolarNComplex& u, double m);
PolarNComplex cos(const PolarNComplex& u);
PolarNComplex sin(const PolarNComplex& u);
PolarNComplex cosh(const PolarNComplex& u);
PolarNComplex sinh(const PolarNComplex& u);

}  // namespace pnc
