#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "braidrep/rational.hpp"

namespace braidrep {

// Dense univariate polynomial over a field F. Coefficient 0 is the constant
// term; trailing zero coefficients are never stored. The zero polynomial has
// an empty coefficient vector.
//
// F must provide +, -, *, /, unary -, equality, default construction (zero),
// and a free function is_zero(const F&).

template <class F>
struct Poly {
  std::vector<F> c;

  Poly() = default;
  explicit Poly(F v) {
    if (!is_zero(v)) c.push_back(std::move(v));
  }
  explicit Poly(std::vector<F> coeffs) : c(std::move(coeffs)) { trim(); }

  static Poly x() {
    Poly p;
    p.c.resize(2);
    p.c[1] = p.c[1] + unit_probe();
    return p;
  }

  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }

  bool zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  const F& lead() const { return c.back(); }

  F coeff(std::size_t i) const { return i < c.size() ? c[i] : F(); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
      if (i < a.c.size() && i < b.c.size())
        r.c[i] = a.c[i] + b.c[i];
      else if (i < a.c.size())
        r.c[i] = a.c[i];
      else
        r.c[i] = b.c[i];
    }
    r.trim();
    return r;
  }

  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& v : r.c) v = -v;
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.zero() || b.zero()) return r;
    r.c.resize(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (is_zero(a.c[i])) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j)
        r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }

  Poly scaled(const F& s) const {
    Poly r;
    if (is_zero(s)) return r;
    r.c.reserve(c.size());
    for (auto& v : c) r.c.push_back(v * s);
    r.trim();
    return r;
  }

  // Euclidean division; requires b nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.zero()) throw std::domain_error("Poly: division by zero");
    Poly q, r = a;
    if (r.deg() >= b.deg()) q.c.resize(r.deg() - b.deg() + 1);
    while (!r.zero() && r.deg() >= b.deg()) {
      F f = r.lead() / b.lead();
      int sh = r.deg() - b.deg();
      q.c[sh] = q.c[sh] + f;
      for (std::size_t i = 0; i < b.c.size(); ++i)
        r.c[i + sh] = r.c[i + sh] - f * b.c[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }

  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly monic() const {
    if (zero()) return *this;
    F inv_lead = lead();
    Poly r;
    r.c.reserve(c.size());
    for (auto& v : c) r.c.push_back(v / inv_lead);
    return r;
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // Horner evaluation at an argument of any ring T admitting T*T, T+F scalar
  // absorption via explicit lifting: lift(F) -> T must be supplied.
  template <class T, class Lift>
  T eval(const T& arg, Lift lift) const {
    T r{};
    for (std::size_t i = c.size(); i-- > 0;) r = r * arg + lift(c[i]);
    return r;
  }

 private:
  // A multiplicative unit obtained without knowing ring parameters: relies on
  // F supporting construction from int. Specializations that cannot do this
  // (parametrized rings) should build x() by hand instead.
  static F unit_probe() { return F(1); }
};

template <class F>
bool is_zero(const Poly<F>& p) {
  return p.zero();
}

// Rational function in lowest terms with monic denominator.
template <class F>
struct RatFunc {
  Poly<F> num, den;

  RatFunc() : den(make_one()) {}
  RatFunc(int v) : num(F(v)), den(make_one()) {}
  explicit RatFunc(F v) : num(std::move(v)), den(make_one()) {}
  explicit RatFunc(Poly<F> n) : num(std::move(n)), den(make_one()) {}
  RatFunc(Poly<F> n, Poly<F> d) : num(std::move(n)), den(std::move(d)) { reduce(); }

  static Poly<F> make_one() {
    Poly<F> p;
    p.c.push_back(F(1));
    return p;
  }

  static RatFunc x() { return RatFunc(Poly<F>::x()); }

  void reduce() {
    if (den.zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num.zero()) {
      den = make_one();
      return;
    }
    if (den.deg() == 0) {
      if (!is_zero(den.c[0] - F(1))) {
        num = num.scaled(F(1) / den.c[0]);
        den = make_one();
      }
      return;
    }
    Poly<F> g = Poly<F>::gcd(num, den);
    if (g.deg() > 0) {
      num = num / g;
      den = den / g;
    }
    F lead = den.lead();
    if (!is_zero(lead - F(1))) {
      num = num.scaled(F(1) / lead);
      den = den.scaled(F(1) / lead);
    }
  }

  bool zero() const { return num.zero(); }
  bool is_polynomial() const { return den.deg() == 0; }
  bool is_constant() const { return is_polynomial() && num.deg() <= 0; }
  F constant_value() const { return num.coeff(0); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    if (a.is_polynomial() && b.is_polynomial()) {
      RatFunc r;
      r.num = a.num + b.num;
      return r;
    }
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
  }

  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num = -r.num;
    return r;
  }

  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.zero() || b.zero()) return RatFunc();
    if (a.is_polynomial() && b.is_polynomial()) {
      RatFunc r;
      r.num = a.num * b.num;
      return r;
    }
    return RatFunc(a.num * b.num, a.den * b.den);
  }

  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num * b.den, a.den * b.num);
  }

  RatFunc inv() const {
    if (zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den, num);
  }

  template <class T, class Lift>
  T eval(const T& arg, Lift lift) const {
    return num.eval(arg, lift) / den.eval(arg, lift);
  }
};

template <class F>
bool is_zero(const RatFunc<F>& r) {
  return r.zero();
}

template <class F>
RatFunc<F> inv(const RatFunc<F>& r) {
  return r.inv();
}

}  // namespace braidrep
