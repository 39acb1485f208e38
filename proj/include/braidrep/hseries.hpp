#pragma once

#include <stdexcept>
#include <vector>

#include "braidrep/rational.hpp"

namespace braidrep {

// Truncated power series in hbar over a coefficient ring R, exact modulo
// hbar^{K+1}. All binary operations require equal truncation orders.
template <class R>
struct HSeries {
  int K = 0;
  std::vector<R> c;  // size K+1

  HSeries() : c(1) {}
  explicit HSeries(int order) : K(order), c(static_cast<std::size_t>(order) + 1) {}
  HSeries(int order, R constant) : HSeries(order) { c[0] = std::move(constant); }

  static HSeries hbar(int order) {
    HSeries s(order);
    if (order >= 1) s.c[1] = R(1);
    return s;
  }

  static HSeries one(int order) { return HSeries(order, R(1)); }

  static void check(const HSeries& a, const HSeries& b) {
    if (a.K != b.K) throw std::domain_error("HSeries: truncation order mismatch");
  }

  bool zero() const {
    for (auto& v : c)
      if (!is_zero(v)) return false;
    return true;
  }

  // Smallest k with c[k] != 0, or K+1 for the zero series.
  int valuation() const {
    for (int k = 0; k <= K; ++k)
      if (!is_zero(c[k])) return k;
    return K + 1;
  }

  HSeries truncated(int order) const {
    HSeries r(order);
    for (int k = 0; k <= std::min(order, K); ++k) r.c[k] = c[k];
    return r;
  }

  friend bool operator==(const HSeries& a, const HSeries& b) {
    check(a, b);
    for (int k = 0; k <= a.K; ++k)
      if (!is_zero(a.c[k] - b.c[k])) return false;
    return true;
  }
  friend bool operator!=(const HSeries& a, const HSeries& b) { return !(a == b); }

  friend HSeries operator+(const HSeries& a, const HSeries& b) {
    check(a, b);
    HSeries r(a.K);
    for (int k = 0; k <= a.K; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
  }

  friend HSeries operator-(const HSeries& a) {
    HSeries r = a;
    for (auto& v : r.c) v = -v;
    return r;
  }

  friend HSeries operator-(const HSeries& a, const HSeries& b) { return a + (-b); }

  friend HSeries operator*(const HSeries& a, const HSeries& b) {
    check(a, b);
    HSeries r(a.K);
    for (int i = 0; i <= a.K; ++i) {
      if (is_zero(a.c[i])) continue;
      for (int j = 0; i + j <= a.K; ++j) {
        if (is_zero(b.c[j])) continue;
        r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
      }
    }
    return r;
  }

  HSeries scaled(const R& s) const {
    HSeries r(K);
    if (is_zero(s)) return r;
    for (int k = 0; k <= K; ++k) r.c[k] = c[k] * s;
    return r;
  }

  // Multiplicative inverse; needs an invertible constant term.
  HSeries inverse() const {
    if (is_zero(c[0])) throw std::domain_error("HSeries: constant term not invertible");
    HSeries r(K);
    R u = R(1) / c[0];
    r.c[0] = u;
    for (int k = 1; k <= K; ++k) {
      R acc{};
      for (int j = 1; j <= k; ++j) acc = acc + c[j] * r.c[k - j];
      r.c[k] = -(acc * u);
    }
    return r;
  }

  friend HSeries operator/(const HSeries& a, const HSeries& b) { return a * b.inverse(); }

  // Division by a series of hbar-valuation v >= 0 with invertible leading
  // coefficient; requires valuation(a) >= v. The top v coefficients of the
  // quotient are not determined by data below hbar^{K+1} and are returned as
  // whatever the shifted division yields; callers tracking exact orders must
  // discount them (see the ABRR solver's internal truncation bump).
  static HSeries divide_shifted(const HSeries& a, const HSeries& b) {
    check(a, b);
    int v = b.valuation();
    if (v > b.K) throw std::domain_error("HSeries: division by zero series");
    if (v == 0) return a / b;
    if (a.valuation() < v)
      throw std::domain_error("HSeries: dividend valuation too small");
    HSeries as(a.K), bs(a.K);
    for (int k = 0; k + v <= a.K; ++k) {
      as.c[k] = a.c[k + v];
      bs.c[k] = b.c[k + v];
    }
    return as / bs;
  }

  // exp of a series with zero constant term.
  HSeries exp() const {
    if (!is_zero(c[0])) throw std::domain_error("HSeries: exp needs zero constant term");
    HSeries r = one(K), term = one(K);
    for (int j = 1; j <= K; ++j) {
      term = term * *this;
      term = term.scaled(R(1) / R(j));
      r = r + term;
    }
    return r;
  }
};

template <class R>
bool is_zero(const HSeries<R>& s) {
  return s.zero();
}

}  // namespace braidrep
