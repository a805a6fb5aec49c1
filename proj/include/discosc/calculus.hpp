#pragma once

#include "discosc/oracle.hpp"

namespace discosc {

/// Schwarzian derivative S_w(z) = w'''/w' - (3/2)(w''/w')^2 from the
/// order-3 jet. Throws std::domain_error at critical points
/// (|w'| below 1e-14 in scaled units).
cplx schwarzian(const AnalyticOracle& w, cplx z);
cplx schwarzian(const Jet& w3);

/// Spherical derivative w^# = |w'| / (1 + |w|^2). When |w(z)| > 1 the
/// reciprocal jet 1/w is used instead ((1/w)^# = w^#), which keeps the
/// computation well-scaled toward poles.
double spherical_derivative(const AnalyticOracle& w, cplx z);
double spherical_derivative(const Jet& w1);

/// Spherical derivative of the quotient n/d from jets of numerator and
/// denominator: |n'd - nd'| / (|n|^2 + |d|^2). Pole-safe; this is the form
/// used for quotients of basis solutions and for logarithmic derivatives.
double spherical_derivative_quotient(const Jet& n, const Jet& d);

}  // namespace discosc
