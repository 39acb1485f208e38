#pragma once

#include <complex>

#include "braidrep/cyclo.hpp"
#include "braidrep/hseries.hpp"
#include "braidrep/poly.hpp"
#include "braidrep/rational.hpp"

namespace braidrep {

// Rational functions in formal q over Q (the coefficient field of the
// symbolic U_q(sl2) kernel).
using QRat = RatFunc<Rational>;

// Rational functions in the formal weight lambda over Q(zeta_N). The exact
// representation pipeline keeps every matrix entry in this field; the ABRR
// solver asserts polynomiality (denominator-freeness) of its output.
using LambdaRat = RatFunc<CycloScalar>;

inline LambdaRat lambda_symbol() { return LambdaRat::x(); }

inline LambdaRat lambdarat_from(const CycloScalar& v) { return LambdaRat(v); }
inline LambdaRat lambdarat_from(const Rational& v) { return LambdaRat(CycloScalar(v)); }

// lambda -> lambda + w, used for grouped-leg Psi insertions.
inline LambdaRat lambda_shift(const LambdaRat& f, const LambdaRat& w) {
  LambdaRat arg = lambda_symbol() + w;
  return f.eval(arg, [](const CycloScalar& s) { return LambdaRat(s); });
}
inline LambdaRat lambda_shift(const LambdaRat& f, const Rational& w) {
  return lambda_shift(f, lambdarat_from(w));
}

inline std::complex<double> evaluate(const LambdaRat& f, std::complex<double> lambda) {
  return f.eval(lambda, [](const CycloScalar& s) { return s.to_complex(); });
}

inline HSeries<std::complex<double>> to_numeric(const HSeries<LambdaRat>& s,
                                                std::complex<double> lambda) {
  HSeries<std::complex<double>> r(s.K);
  for (int k = 0; k <= s.K; ++k) r.c[k] = evaluate(s.c[k], lambda);
  return r;
}

}  // namespace braidrep
