#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidrep/cyclo.hpp"
#include "braidrep/hseries.hpp"
#include "braidrep/poly.hpp"
#include "braidrep/scalars.hpp"

// Symbolic kernel for U_q(sl2): PBW normal forms, the Shapovalov pairing H,
// its inverse tensor K_m, the De Concini-Kac determinant, the K_m recursion
// and the dynamical twist term Psi_{q,m}. Rank is fixed to 1; everything here
// serves as an independent oracle for the module-level ABRR solver.
namespace braidrep::uqsl2 {

// Coefficients rational in q over Q(zeta_N); plain Q is the N=1 case.
using QC = RatFunc<CycloScalar>;
// Rational functions of k (the Cartan generator k = q^h) over QC.
using KRat = RatFunc<QC>;
// Bivariate: rational in k2 with KRat (k1-rational) coefficients.
using K2Rat = RatFunc<KRat>;

inline QC q_sym() { return QC::x(); }

// q^n for n in Z.
QC q_pow(long n);
// Symmetric q-integer [n]_q and q-factorial.
QC q_int(long n);
QC q_fact(long n);
// Coefficient of e^m (x) f^m in Rbar: q^{m(m-1)/2} (q-q^{-1})^m / [m]_q!.
QC rbar_coeff(long m);

// k^n for n in Z as a KRat.
KRat k_pow(long n);

// Element of U_q(sl2) in PBW normal form: sum of coeff * f^a k^b e^c.
struct PBWElement {
  std::map<std::array<long, 3>, QC> terms;  // (a, b, c) -> coeff

  static PBWElement zero() { return {}; }
  static PBWElement monomial(long a, long b, long c, QC coeff = QC(1));
  static PBWElement one() { return monomial(0, 0, 0); }
  static PBWElement e() { return monomial(0, 0, 1); }
  static PBWElement f() { return monomial(1, 0, 0); }
  static PBWElement k(long power = 1) { return monomial(0, power, 0); }

  bool is_zero() const { return terms.empty(); }
  void add_term(long a, long b, long c, const QC& coeff);

  friend PBWElement operator+(const PBWElement& x, const PBWElement& y);
  friend PBWElement operator-(const PBWElement& x);
  friend PBWElement operator-(const PBWElement& x, const PBWElement& y);
  friend bool operator==(const PBWElement& x, const PBWElement& y);

  PBWElement scaled(const QC& s) const;
};

// Normal-ordered product via the straightening rules
// ke = q^2 ek, kf = q^{-2} fk, ef = fe + (k - k^{-1})/(q - q^{-1}).
PBWElement pbw_mul(const PBWElement& x, const PBWElement& y);
PBWElement pbw_pow(const PBWElement& x, long n);

// Antipode: antihomomorphism with S(e) = -ek^{-1}, S(f) = -kf, S(k) = k^{-1}.
PBWElement antipode(const PBWElement& x);

// Shapovalov projection onto the Cartan part: H(f^a k^b e^c) = k^b iff a=c=0.
KRat shapovalov_H(const PBWElement& x);

// Gram scalar of the m-th weight space: g_m = H(e^m f^m).
KRat gram(long m);

struct ShapovalovInverse {
  PBWElement K1;  // f^m
  PBWElement K2;  // e^m
  KRat K3;        // g_m^{-1}
};
ShapovalovInverse shapovalov_inverse(long m);

// Rank-1 De Concini-Kac determinant in the convention of the pairing H:
// prod_{i=1}^m (1 - k^2 q^{-2(i-1)}). Matches gram(m) up to a monomial unit
// c(q) k^a; see the ledger note on the exponent convention.
KRat dck_determinant(long m);

// Per-m residuals of the K_m recursion (eq. ABRR-K); all must be zero.
std::vector<KRat> verify_k_recursion(long m_max);

// The twist term Psi_{q,m} (optionally shifted by Sh_nu on the first leg),
// represented as F(k1, k2) * (1 (x) e^m (x) f^m) where the k2-dependence of F
// is ordered to the left of e^m in the second leg.
struct TwistTriple {
  long m = 0;
  K2Rat F;
};
TwistTriple twist_term(long m, std::optional<CycloScalar> shift = std::nullopt);

// --- evaluation into truncated series over LambdaRat ---

using LSeries = HSeries<LambdaRat>;

// exp(hbar * w) as a truncated series.
LSeries exp_h(const LambdaRat& w, int K);

// Substitutions are specified by exponents: the variable is set to
// exp(hbar * exponent). Working at a fixed truncation order, the quotient of
// two series loses its top val(denominator) coefficients, so evaluation
// internally recomputes with that much headroom and truncates back to K.
LSeries eval_qc(const QC& v, const LambdaRat& q_exp, int K);
LSeries eval_krat(const KRat& v, const LambdaRat& k_exp, const LambdaRat& q_exp, int K);
LSeries eval_k2rat(const K2Rat& v, const LambdaRat& k1_exp, const LambdaRat& k2_exp,
                   const LambdaRat& q_exp, int K);

// --- printing (CLI dumps) ---
std::string to_string(const QC& v);
std::string to_string(const KRat& v);
std::string to_string(const PBWElement& x);

}  // namespace braidrep::uqsl2
