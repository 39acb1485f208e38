#pragma once

#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidrep/poly.hpp"
#include "braidrep/rational.hpp"

namespace braidrep {

// The N-th cyclotomic polynomial, computed once by dividing x^N - 1 by the
// cyclotomic polynomials of the proper divisors of N.
inline const Poly<Rational>& cyclotomic_poly(int N) {
  static std::map<int, Poly<Rational>> cache;
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  if (N < 1) throw std::domain_error("cyclotomic_poly: N must be positive");

  std::vector<Rational> xn(N + 1);
  xn[0] = -1;
  xn[N] = 1;
  Poly<Rational> p{std::vector<Rational>(xn)};
  for (int d = 1; d < N; ++d)
    if (N % d == 0) p = p / cyclotomic_poly(d);
  return cache.emplace(N, std::move(p)).first->second;
}

inline int euler_phi(int N) { return cyclotomic_poly(N).deg(); }

// Element of Q(zeta_N), stored as coordinates in the power basis
// 1, zeta, ..., zeta^{phi(N)-1}, i.e. canonically reduced mod Phi_N.
// N = 1 is the plain rational field and acts as a universal scalar: it
// promotes silently to any N; two orders > 1 must match exactly.
struct CycloScalar {
  int N = 1;
  std::vector<Rational> coords;  // size phi(N)

  CycloScalar() : coords(1) {}
  CycloScalar(int v) : coords(1) { coords[0] = v; }
  CycloScalar(Rational v) : coords(1) { coords[0] = std::move(v); }
  CycloScalar(int order, std::vector<Rational> c) : N(order), coords(std::move(c)) {
    if (static_cast<int>(coords.size()) != euler_phi(N))
      throw std::domain_error("CycloScalar: wrong coordinate length");
  }

  // zeta_N^j, reduced.
  static CycloScalar zeta_pow(int N, long j) {
    j %= N;
    if (j < 0) j += N;
    std::vector<Rational> raw(static_cast<std::size_t>(j) + 1);
    raw.back() = 1;
    return reduce(N, raw);
  }
  static CycloScalar zeta(int N) { return zeta_pow(N, 1); }

  static CycloScalar reduce(int N, std::vector<Rational> raw) {
    Poly<Rational> p{std::move(raw)};
    p = p % cyclotomic_poly(N);
    CycloScalar r;
    r.N = N;
    r.coords.assign(static_cast<std::size_t>(euler_phi(N)), Rational(0));
    for (std::size_t i = 0; i < p.c.size(); ++i) r.coords[i] = p.c[i];
    return r;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coords.size(); ++i)
      if (!coords[i].is_zero()) return false;
    return true;
  }

  CycloScalar promoted(int order) const {
    if (N == order) return *this;
    if (N != 1) throw std::domain_error("CycloScalar: mismatched cyclotomic orders");
    CycloScalar r;
    r.N = order;
    r.coords.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
    r.coords[0] = coords[0];
    return r;
  }

  static int joint_order(const CycloScalar& a, const CycloScalar& b) {
    if (a.N == b.N) return a.N;
    if (a.N == 1) return b.N;
    if (b.N == 1) return a.N;
    throw std::domain_error("CycloScalar: mismatched cyclotomic orders");
  }

  friend bool operator==(const CycloScalar& a, const CycloScalar& b) {
    if (a.N == b.N) return a.coords == b.coords;
    int N = joint_order(a, b);
    return a.promoted(N).coords == b.promoted(N).coords;
  }
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

  friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
    int N = joint_order(a, b);
    CycloScalar x = a.promoted(N), y = b.promoted(N);
    for (std::size_t i = 0; i < x.coords.size(); ++i) x.coords[i] += y.coords[i];
    return x;
  }

  friend CycloScalar operator-(const CycloScalar& a) {
    CycloScalar r = a;
    for (auto& v : r.coords) v = -v;
    return r;
  }

  friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) { return a + (-b); }

  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
    int N = joint_order(a, b);
    if (N == 1) {
      CycloScalar r;
      r.coords[0] = a.coords[0] * b.coords[0];
      return r;
    }
    CycloScalar x = a.promoted(N), y = b.promoted(N);
    std::vector<Rational> raw(x.coords.size() + y.coords.size() - 1);
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
      if (x.coords[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.coords.size(); ++j)
        raw[i + j] += x.coords[i] * y.coords[j];
    }
    return reduce(N, std::move(raw));
  }

  CycloScalar inverse() const;

  friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) {
    return a * b.inverse();
  }

  std::complex<double> to_complex() const {
    std::complex<double> z = 0, zeta = std::polar(1.0, 2.0 * std::numbers::pi / N);
    for (std::size_t i = coords.size(); i-- > 0;)
      z = z * zeta + std::complex<double>(to_double(coords[i]));
    return z;
  }
};

inline bool is_zero(const CycloScalar& a) {
  for (auto& v : a.coords)
    if (!v.is_zero()) return false;
  return true;
}

// Inverse by the extended Euclidean algorithm in Q[x] mod Phi_N.
inline CycloScalar CycloScalar::inverse() const {
  if (is_zero(*this)) throw std::domain_error("CycloScalar: inverse of zero");
  if (N == 1 || is_rational()) {
    CycloScalar r = *this;
    for (auto& v : r.coords) v = 0;
    r.coords[0] = Rational(1) / coords[0];
    return r;
  }
  Poly<Rational> a{std::vector<Rational>(coords)};
  Poly<Rational> b = cyclotomic_poly(N);
  Poly<Rational> s0{Rational(1)}, s1;
  Poly<Rational> r0 = a, r1 = b;
  while (!r1.zero()) {
    auto [q, r] = Poly<Rational>::divmod(r0, r1);
    Poly<Rational> s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd = const (Phi_N irreducible), and s0 * a == r0 mod Phi_N.
  Poly<Rational> invp = s0.scaled(Rational(1) / r0.coeff(0));
  std::vector<Rational> raw(invp.c.begin(), invp.c.end());
  return reduce(N, std::move(raw));
}

inline CycloScalar inv(const CycloScalar& a) { return a.inverse(); }

}  // namespace braidrep
