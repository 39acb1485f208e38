#include "braidrep/uqsl2.hpp"

#include <sstream>
#include <stdexcept>

namespace braidrep::uqsl2 {

QC q_pow(long n) {
  QC q = q_sym();
  QC r(1);
  for (long i = 0; i < (n >= 0 ? n : -n); ++i) r = r * q;
  return n >= 0 ? r : QC(1) / r;
}

QC q_int(long n) {
  // [n]_q = (q^n - q^{-n}) / (q - q^{-1})
  return (q_pow(n) - q_pow(-n)) / (q_pow(1) - q_pow(-1));
}

QC q_fact(long n) {
  QC r(1);
  for (long i = 2; i <= n; ++i) r = r * q_int(i);
  return r;
}

QC rbar_coeff(long m) {
  QC d = q_pow(1) - q_pow(-1);
  QC num = q_pow(m * (m - 1) / 2);
  for (long i = 0; i < m; ++i) num = num * d;
  return num / q_fact(m);
}

KRat k_pow(long n) {
  KRat k = KRat::x();
  KRat r(1);
  for (long i = 0; i < (n >= 0 ? n : -n); ++i) r = r * k;
  return n >= 0 ? r : KRat(1) / r;
}

PBWElement PBWElement::monomial(long a, long b, long c, QC coeff) {
  PBWElement x;
  if (!braidrep::is_zero(coeff)) x.terms[{a, b, c}] = std::move(coeff);
  return x;
}

void PBWElement::add_term(long a, long b, long c, const QC& coeff) {
  auto key = std::array<long, 3>{a, b, c};
  auto it = terms.find(key);
  if (it == terms.end()) {
    if (!braidrep::is_zero(coeff)) terms.emplace(key, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (braidrep::is_zero(it->second)) terms.erase(it);
}

PBWElement operator+(const PBWElement& x, const PBWElement& y) {
  PBWElement r = x;
  for (auto& [key, co] : y.terms) r.add_term(key[0], key[1], key[2], co);
  return r;
}

PBWElement operator-(const PBWElement& x) {
  PBWElement r;
  for (auto& [key, co] : x.terms) r.terms[key] = -co;
  return r;
}

PBWElement operator-(const PBWElement& x, const PBWElement& y) { return x + (-y); }

bool operator==(const PBWElement& x, const PBWElement& y) {
  return (x - y).is_zero();
}

PBWElement PBWElement::scaled(const QC& s) const {
  PBWElement r;
  if (braidrep::is_zero(s)) return r;
  for (auto& [key, co] : terms) r.terms[key] = co * s;
  return r;
}

namespace {

// e * (f^a k^b e^c), normal ordered.
PBWElement leftmul_e_mono(long a, long b, long c) {
  if (a == 0)
    return PBWElement::monomial(0, b, c + 1, q_pow(-2 * b));
  // e f^a = f (e f^{a-1}) + f^{a-1} (q^{-2(a-1)} k - q^{2(a-1)} k^{-1})/(q-q^{-1})
  PBWElement rec = leftmul_e_mono(a - 1, b, c);
  PBWElement r;
  for (auto& [key, co] : rec.terms) r.add_term(key[0] + 1, key[1], key[2], co);
  QC den = q_pow(1) - q_pow(-1);
  r.add_term(a - 1, b + 1, c, q_pow(-2 * (a - 1)) / den);
  r.add_term(a - 1, b - 1, c, -q_pow(2 * (a - 1)) / den);
  return r;
}

PBWElement leftmul_gen(char gen, long power, const PBWElement& x) {
  PBWElement r;
  for (auto& [key, co] : x.terms) {
    auto [a, b, c] = key;
    switch (gen) {
      case 'f':
        r.add_term(a + power, b, c, co);
        break;
      case 'k':
        // k^p f^a = q^{-2ap} f^a k^p
        r.add_term(a, b + power, c, co * q_pow(-2 * a * power));
        break;
      case 'e': {
        PBWElement m = leftmul_e_mono(a, b, c).scaled(co);
        for (auto& [k2, c2] : m.terms) r.add_term(k2[0], k2[1], k2[2], c2);
        break;
      }
      default:
        throw std::logic_error("leftmul_gen: bad generator");
    }
  }
  return r;
}

}  // namespace

PBWElement pbw_mul(const PBWElement& x, const PBWElement& y) {
  PBWElement r;
  for (auto& [key, co] : x.terms) {
    auto [a, b, c] = key;
    PBWElement acc = y;
    for (long i = 0; i < c; ++i) acc = leftmul_gen('e', 1, acc);
    if (b != 0) acc = leftmul_gen('k', b, acc);
    if (a != 0) acc = leftmul_gen('f', a, acc);
    acc = acc.scaled(co);
    for (auto& [k2, c2] : acc.terms) r.add_term(k2[0], k2[1], k2[2], c2);
  }
  return r;
}

PBWElement pbw_pow(const PBWElement& x, long n) {
  PBWElement r = PBWElement::one();
  for (long i = 0; i < n; ++i) r = pbw_mul(r, x);
  return r;
}

PBWElement antipode(const PBWElement& x) {
  // S(e) = -ek^{-1} = -q^2 k^{-1} e,  S(f) = -kf = -q^{-2} f k,  S(k) = k^{-1}
  const PBWElement Se = PBWElement::monomial(0, -1, 1, -q_pow(2));
  const PBWElement Sf = PBWElement::monomial(1, 1, 0, -q_pow(-2));
  PBWElement r;
  for (auto& [key, co] : x.terms) {
    auto [a, b, c] = key;
    PBWElement acc = PBWElement::monomial(0, -b, 0, co);
    acc = pbw_mul(pbw_pow(Se, c), acc);
    acc = pbw_mul(acc, pbw_pow(Sf, a));
    for (auto& [k2, c2] : acc.terms) r.add_term(k2[0], k2[1], k2[2], c2);
  }
  return r;
}

KRat shapovalov_H(const PBWElement& x) {
  KRat r;
  for (auto& [key, co] : x.terms) {
    auto [a, b, c] = key;
    if (a == 0 && c == 0) r = r + k_pow(b) * KRat(Poly<QC>(co));
  }
  return r;
}

KRat gram(long m) {
  PBWElement em = pbw_pow(PBWElement::e(), m);
  PBWElement fm = pbw_pow(PBWElement::f(), m);
  return shapovalov_H(pbw_mul(em, fm));
}

ShapovalovInverse shapovalov_inverse(long m) {
  ShapovalovInverse r;
  r.K1 = pbw_pow(PBWElement::f(), m);
  r.K2 = pbw_pow(PBWElement::e(), m);
  r.K3 = m == 0 ? KRat(1) : gram(m).inv();
  return r;
}

KRat dck_determinant(long m) {
  KRat r(1);
  for (long i = 1; i <= m; ++i) {
    KRat factor = KRat(1) - k_pow(2) * KRat(Poly<QC>(q_pow(-2 * (i - 1))));
    r = r * factor;
  }
  return r;
}

std::vector<KRat> verify_k_recursion(long m_max) {
  // Rank-1 scalar form of eq. ABRR-K with K_m = f^m (x) e^m (x) g_m^{-1}:
  // the f- and e-legs reproduce f^m, e^m term by term, S^2(f^{m''}) =
  // q^{-2 m''} f^{m''}, and the Cartan legs collect
  //   g_{m''}^{-1} k^{-2m''} q^{mu(m'')} k^{-m'} q^{2 m' m''},  mu(m) = 2m^2.
  std::vector<KRat> residuals;
  for (long m = 0; m <= m_max; ++m) {
    KRat rhs;
    for (long m2 = 0; m2 <= m; ++m2) {  // m2 = m'', m1 = m'
      long m1 = m - m2;
      KRat term = (m2 == 0 ? KRat(1) : gram(m2).inv());
      QC scalar = rbar_coeff(m1) * q_pow(-2 * m2) * q_pow(2 * m2 * m2) *
                  q_pow(2 * m1 * m2);
      term = term * k_pow(-2 * m2) * k_pow(-m1) * KRat(Poly<QC>(scalar));
      rhs = rhs + term;
    }
    KRat lhs = m == 0 ? KRat(1) : gram(m).inv();
    residuals.push_back(lhs - rhs);
  }
  return residuals;
}

namespace {

K2Rat lift_qc(const QC& v) { return K2Rat(Poly<KRat>(KRat(Poly<QC>(v)))); }

K2Rat k1_var() { return K2Rat(Poly<KRat>(KRat::x())); }
K2Rat k2_var() { return K2Rat::x(); }

}  // namespace

TwistTriple twist_term(long m, std::optional<CycloScalar> shift) {
  if (shift && *shift == CycloScalar(1))
    throw std::domain_error("twist_term: shift nu must differ from 1");
  TwistTriple t;
  t.m = m;
  if (m == 0) {
    t.F = K2Rat(1);
    return t;
  }

  // s_m(q): S(e^m) = s_m k^{-m} e^m, read off from the antipode engine.
  PBWElement sem = antipode(pbw_pow(PBWElement::e(), m));
  if (sem.terms.size() != 1) throw std::logic_error("twist_term: S(e^m) not a monomial");
  auto it = sem.terms.begin();
  if (it->first != std::array<long, 3>{0, -m, m})
    throw std::logic_error("twist_term: unexpected S(e^m) normal form");
  QC s_m = it->second;

  // J_m joint Cartan function: (S(x)S)(Delta(g_m^{-1})) evaluated with the
  // second leg's k2-dependence moved left past e^m (k2 -> q^{-2m} k2), times
  // S(e^m)'s k2^{-m} and the m-th power weight factor from Ad(q^{-t_h/2}):
  //   F = s_m * k2^{-m} * g_m(x)^{-1} * k1^{-m},  x = q^{2m}(k1 k2)^{-1}.
  // Factor g_m = c * k^a * prod_{i=1}^m (1 - k^2 q^{-2(i-1)}) through the
  // determinant so that F splits into one k1^{a-m}-monomial (even power) and
  // a function of (k1 k2)^2. The Cartan leg is generated by k1^{+-2}, so
  // sh_{rho*} sends k1^2 -> q^2 k1^2 and Sh_nu sends k1^2 -> nu k1^2; both
  // act once per power of k1^2.
  KRat unit = gram(m) / dck_determinant(m);
  auto mono = [](const Poly<QC>& p) {
    long idx = -1;
    for (long i = 0; i < static_cast<long>(p.c.size()); ++i)
      if (!braidrep::is_zero(p.c[i])) {
        if (idx >= 0) throw std::logic_error("twist_term: gram/dck unit not a monomial");
        idx = i;
      }
    if (idx < 0) throw std::logic_error("twist_term: zero gram/dck unit");
    return idx;
  };
  long an = mono(unit.num), ad = mono(unit.den);
  long a = an - ad;
  QC c = unit.num.c[an] / unit.den.c[ad];
  if ((a - m) % 2 != 0) throw std::logic_error("twist_term: odd k1-power in twist");

  CycloScalar nu = shift ? *shift : CycloScalar(1);
  auto nu_pow = [&](long e) {
    CycloScalar r(1), b = e >= 0 ? nu : nu.inverse();
    for (long i = 0; i < std::abs(e); ++i) r = r * b;
    return r;
  };

  // Monomial part: s_m c^{-1} q^{-2ma + a - m} nu^{(a-m)/2} (k1 k2)^{a-m}.
  K2Rat F = lift_qc(s_m / c * q_pow(-2 * m * a + a - m) * QC(nu_pow((a - m) / 2)));
  K2Rat k12 = k1_var() * k2_var();
  for (long i = 0; i < std::abs(a - m); ++i)
    F = (a - m >= 0) ? F * k12 : F / k12;

  // Determinant part with x^2 = q^{4m-2} nu^{-1} (k1 k2)^{-2} after shifts.
  K2Rat x2inv = k12 * k12;  // we divide by x^2 factors via (k1 k2)^2
  for (long i = 1; i <= m; ++i) {
    K2Rat beta = lift_qc(q_pow(4 * m - 2 - 2 * (i - 1)) * QC(nu_pow(-1)));
    F = F * x2inv / (x2inv - beta);
  }

  t.F = F;
  return t;
}

// --- evaluation ---

namespace {

template <class PolyT, class EvalCoeff>
LSeries eval_poly_generic(const PolyT& p, const LSeries& arg, EvalCoeff evc) {
  LSeries r(arg.K);
  for (std::size_t i = p.c.size(); i-- > 0;) r = r * arg + evc(p.c[i]);
  return r;
}

}  // namespace

namespace {

// Evaluation strategy: intermediate coefficients such as 1/(q - q^{-1}) have
// negative hbar-adic valuation at q = e^hbar and cannot be represented as
// truncated series on their own. All nested denominators are therefore
// cleared globally so that only one valuation-shifted division happens, on a
// quantity known to be series-regular.

// Polynomial in q with cyclotomic coefficients, evaluated without division.
LSeries eval_qpoly(const Poly<CycloScalar>& p, const LSeries& q_series) {
  return eval_poly_generic(p, q_series, [&](const CycloScalar& s) {
    return LSeries(q_series.K, LambdaRat(s));
  });
}

// Clear q-denominators of a Poly<QC> in place; returns the product of the
// cleared denominators (a polynomial QC).
QC clear_q_denominators(Poly<QC>& p) {
  QC d(1);
  for (auto& co : p.c)
    if (!braidrep::is_zero(co) && !co.is_polynomial()) d = d * QC(co.den);
  if (!(d == QC(1)))
    for (auto& co : p.c) co = co * d;
  return d;
}

// Evaluate a Poly<QC> whose coefficients are polynomial in q.
LSeries eval_kpoly(const Poly<QC>& p, const LSeries& k_series, const LSeries& q_series) {
  return eval_poly_generic(p, k_series, [&](const QC& s) {
    if (!s.is_polynomial()) throw std::logic_error("eval_kpoly: uncleaned coefficient");
    return eval_qpoly(s.num, q_series);
  });
}

}  // namespace

namespace {

// Evaluates num/den at increasing truncation orders so that the quotient is
// fully determined through order K. f(Kb) must return the (num, den) series
// at order Kb.
template <class F>
LSeries regular_quotient(int K, F f) {
  auto nd = f(K);
  int vd = nd.second.valuation();
  if (vd > K) throw std::domain_error("evaluation: denominator vanishes to all orders");
  if (vd == 0) return LSeries::divide_shifted(nd.first, nd.second);
  auto nd2 = f(K + vd);
  return LSeries::divide_shifted(nd2.first, nd2.second).truncated(K);
}

}  // namespace

LSeries exp_h(const LambdaRat& w, int K) {
  LSeries s(K);
  if (K >= 1) s.c[1] = w;
  return s.exp();
}

LSeries eval_qc(const QC& v, const LambdaRat& q_exp, int K) {
  return regular_quotient(K, [&](int Kb) {
    LSeries qs = exp_h(q_exp, Kb);
    return std::make_pair(eval_qpoly(v.num, qs), eval_qpoly(v.den, qs));
  });
}

LSeries eval_krat(const KRat& v, const LambdaRat& k_exp, const LambdaRat& q_exp, int K) {
  Poly<QC> num = v.num, den = v.den;
  QC dn = clear_q_denominators(num);
  QC dd = clear_q_denominators(den);
  // Balance the two sides: num/dn vs den/dd means value = (num * dd)/(den * dn).
  num = num.scaled(dd);
  den = den.scaled(dn);
  clear_q_denominators(num);
  clear_q_denominators(den);  // dd, dn are polynomial, so these are no-ops
  return regular_quotient(K, [&](int Kb) {
    LSeries qs = exp_h(q_exp, Kb);
    LSeries ks = exp_h(k_exp, Kb);
    return std::make_pair(eval_kpoly(num, ks, qs), eval_kpoly(den, ks, qs));
  });
}

LSeries eval_k2rat(const K2Rat& v, const LambdaRat& k1_exp, const LambdaRat& k2_exp,
                   const LambdaRat& q_exp, int K) {
  // Clear k1-denominators of all coefficients of both polys.
  Poly<KRat> num = v.num, den = v.den;
  KRat dk(1);
  for (auto* poly : {&num, &den})
    for (auto& co : poly->c)
      if (!braidrep::is_zero(co) && !co.is_polynomial())
        dk = dk * KRat(co.den);
  if (!(dk == KRat(1)))
    for (auto* poly : {&num, &den})
      for (auto& co : poly->c) co = co * dk;
  // Now every coefficient is polynomial in k1; clear q-denominators globally.
  QC dq(1);
  for (auto* poly : {&num, &den})
    for (auto& co : poly->c)
      for (auto& qco : co.num.c)
        if (!braidrep::is_zero(qco) && !qco.is_polynomial()) dq = dq * QC(qco.den);
  if (!(dq == QC(1)))
    for (auto* poly : {&num, &den})
      for (auto& co : poly->c) co = co * KRat(Poly<QC>(dq));

  return regular_quotient(K, [&](int Kb) {
    LSeries qs = exp_h(q_exp, Kb);
    LSeries k1 = exp_h(k1_exp, Kb);
    LSeries k2 = exp_h(k2_exp, Kb);
    auto evc = [&](const KRat& s) {
      if (!s.is_polynomial()) throw std::logic_error("eval_k2rat: uncleaned coefficient");
      Poly<QC> pk = s.num;
      QC rem = clear_q_denominators(pk);
      if (!(rem == QC(1))) throw std::logic_error("eval_k2rat: residual q denominator");
      return eval_kpoly(pk, k1, qs);
    };
    return std::make_pair(eval_poly_generic(num, k2, evc),
                          eval_poly_generic(den, k2, evc));
  });
}

// --- printing ---

namespace {

std::string cyclo_str(const CycloScalar& s) {
  if (s.is_rational()) return rational_str(s.coords[0]);
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t j = 0; j < s.coords.size(); ++j) {
    if (s.coords[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << rational_str(s.coords[j]);
    if (j > 0) os << "*z^" << j;
  }
  if (first) os << "0";
  os << ")";
  return os.str();
}

template <class F, class CoeffStr>
std::string poly_str(const Poly<F>& p, const std::string& var, CoeffStr cs) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (is_zero(p.c[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << cs(p.c[i]);
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace

std::string to_string(const QC& v) {
  std::string n = poly_str(v.num, "q", cyclo_str);
  if (v.is_polynomial()) return n;
  return "(" + n + ")/(" + poly_str(v.den, "q", cyclo_str) + ")";
}

std::string to_string(const KRat& v) {
  auto cs = [](const QC& c) { return "(" + to_string(c) + ")"; };
  std::string n = poly_str(v.num, "k", cs);
  if (v.is_polynomial()) return n;
  return "(" + n + ")/(" + poly_str(v.den, "k", cs) + ")";
}

std::string to_string(const PBWElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [key, co] : x.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(co) << ")";
    auto [a, b, c] = key;
    if (a) os << "*f^" << a;
    if (b) os << "*k^" << b;
    if (c) os << "*e^" << c;
  }
  return os.str();
}

}  // namespace braidrep::uqsl2
