#pragma once

#include <algorithm>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "braidrep/abrr.hpp"
#include "braidrep/modrep.hpp"

namespace braidrep::braid {

using braidrep::modrep::ModuleData;
using braidrep::modrep::SeriesMatrix;
using braidrep::modrep::SeriesMatrixL;

// One Artin letter: gen 0 is tau, gen i >= 1 is sigma_i; exp is +1 or -1.
struct BraidLetter {
  int gen = 0;
  int exp = 1;
};

struct BraidWord {
  int n = 2;  // strand count; generators are tau, sigma_1..sigma_{n-1}
  std::vector<BraidLetter> letters;
};

// Word syntax: whitespace-separated letters "t", "s1", optionally with
// "^-1" / "^1" suffixes, e.g. "t s1 s2^-1 t^-1".
BraidWord parse_word(const std::string& text, int n);
std::string word_to_string(const BraidWord& w);
BraidWord inverse_word(const BraidWord& w);
BraidWord concat_words(const BraidWord& a, const BraidWord& b);

// Representation data on W (x) V^{(x) n}; leg 0 is W. The two-leg blocks are
// given on V (x) V (R, K) and W (x) V (E); the qra variant carries the fully
// placed Psi^{0,1,2..n} and, for n >= 3, Phi on V^{(x) 3}.
template <class R>
struct RepData {
  bool qra = false;
  int n = 2;
  std::vector<int> dims;  // {dim W, dim V, ..., dim V}
  int K = 0;
  SeriesMatrix<R> Rvv, Kvv, Ewv;
  SeriesMatrix<R> psi_full;  // qra: Psi^{0,1,2..n} on all legs
  SeriesMatrix<R> phi;       // qra, n >= 3: on V (x) V (x) V
  bool has_phi = false;
  // Canary switch: evaluate the tau-products in descending leg order. The
  // type-B relation then fails, which pins the ascending convention.
  bool tau_descending = false;
};
using RepDataL = RepData<LambdaRat>;
using RepDataC = RepData<std::complex<double>>;

// tau = prod_{i=2}^n (R^{1,i})^{-1} prod_{i=2}^n K^{1,i} E^{0,1}, products
// ascending left-to-right (X_2 X_3 ... X_n).
template <class R>
SeriesMatrix<R> tau_image_algebraic(const RepData<R>& d) {
  using modrep::place_legs;
  SeriesMatrix<R> m = SeriesMatrix<R>::identity(d.dims, d.K);
  const SeriesMatrix<R> rinv = d.Rvv.inverse();
  std::vector<int> legs;
  for (int i = 2; i <= d.n; ++i) legs.push_back(i);
  if (d.tau_descending) std::reverse(legs.begin(), legs.end());
  for (int i : legs) m = m * place_legs(rinv, {1, i}, d.dims);
  for (int i : legs) m = m * place_legs(d.Kvv, {1, i}, d.dims);
  return m * place_legs(d.Ewv, {0, 1}, d.dims);
}

template <class R>
SeriesMatrix<R> generator_image(const RepData<R>& d, int gen) {
  using modrep::place_legs;
  using modrep::swap_legs;
  if (gen == 0) {
    if (!d.qra) return tau_image_algebraic(d);
    SeriesMatrix<R> e01 = place_legs(d.Ewv, {0, 1}, d.dims);
    return d.psi_full * e01 * d.psi_full.inverse();
  }
  if (gen < 1 || gen >= d.n) throw std::out_of_range("generator_image: bad sigma index");
  SeriesMatrix<R> img = swap_legs<R>(gen, gen + 1, d.dims, d.K) *
                        place_legs(d.Rvv, {gen, gen + 1}, d.dims);
  if (d.qra && d.has_phi && gen >= 2) {
    if (gen > 2)
      throw std::invalid_argument("generator_image: Phi insertion implemented for n <= 3");
    SeriesMatrix<R> c = place_legs(d.phi, {gen - 1, gen, gen + 1}, d.dims);
    img = c.inverse() * img * c;
  }
  return img;
}

// Words are evaluated left-to-right: the first letter is the leftmost factor,
// so rho(w1 w2) = rho(w1) rho(w2).
template <class R>
SeriesMatrix<R> rho(const RepData<R>& d, const BraidWord& w) {
  if (w.n != d.n) throw std::invalid_argument("rho: strand count mismatch");
  SeriesMatrix<R> m = SeriesMatrix<R>::identity(d.dims, d.K);
  for (const BraidLetter& l : w.letters) {
    SeriesMatrix<R> g = generator_image(d, l.gen);
    m = m * (l.exp == 1 ? g : g.inverse());
  }
  return m;
}

template <class R>
SeriesMatrix<R> rho_algebraic(const RepData<R>& d, const BraidWord& w) {
  if (d.qra) throw std::invalid_argument("rho_algebraic: qra data");
  return rho(d, w);
}

template <class R>
SeriesMatrix<R> rho_qra(const RepData<R>& d, const BraidWord& w) {
  if (!d.qra) throw std::invalid_argument("rho_qra: algebraic data");
  return rho(d, w);
}

template <class R>
HSeries<R> character(const RepData<R>& d, const BraidWord& w) {
  SeriesMatrix<R> m = rho(d, w);
  HSeries<R> tr(d.K);
  for (int k = 0; k <= d.K; ++k)
    for (int i = 0; i < m.size(); ++i) tr.c[k] = tr.c[k] + m.at(k, i, i);
  return tr;
}

// Residuals of the defining type-B relations under the representation:
// tau s1 tau s1 = s1 tau s1 tau, braid relations, distant commutations, and
// tau s_i = s_i tau for i > 1.
template <class R>
std::vector<std::pair<std::string, SeriesMatrix<R>>> check_presentation(
    const RepData<R>& d) {
  std::vector<std::pair<std::string, SeriesMatrix<R>>> out;
  auto residual = [&](const std::string& name, const std::string& lhs,
                      const std::string& rhs) {
    out.emplace_back(name, rho(d, parse_word(lhs, d.n)) - rho(d, parse_word(rhs, d.n)));
  };
  residual("t s1 t s1 = s1 t s1 t", "t s1 t s1", "s1 t s1 t");
  for (int i = 1; i + 1 < d.n; ++i) {
    std::string a = "s" + std::to_string(i), b = "s" + std::to_string(i + 1);
    residual(a + " " + b + " " + a + " = " + b + " " + a + " " + b,
             a + " " + b + " " + a, b + " " + a + " " + b);
  }
  for (int i = 1; i < d.n; ++i)
    for (int j = i + 2; j < d.n; ++j) {
      std::string a = "s" + std::to_string(i), b = "s" + std::to_string(j);
      residual(a + " " + b + " = " + b + " " + a, a + " " + b, b + " " + a);
    }
  for (int i = 2; i < d.n; ++i) {
    std::string s = "s" + std::to_string(i);
    residual("t " + s + " = " + s + " t", "t " + s, s + " t");
  }
  return out;
}

// Residuals of the section 1.1 axioms on V^{(x)3} and W (x) V (x) V:
// (a) QYBE, (b) E^{1,2}E^{1,3}(K^{2,3})^2 commutes with (2,3)R^{2,3},
// (c) K^{1,2}K^{1,3} commutes with R^{2,3}, (d) K is symmetric.
template <class R>
std::vector<std::pair<std::string, SeriesMatrix<R>>> axioms_check(
    const SeriesMatrix<R>& Rvv, const SeriesMatrix<R>& Kvv, const SeriesMatrix<R>& Ewv) {
  using modrep::place_legs;
  using modrep::swap_legs;
  const int w = Ewv.dims[0], v = Ewv.dims[1], K = Rvv.K;
  const std::vector<int> d3 = {v, v, v}, dwv = {w, v, v};
  std::vector<std::pair<std::string, SeriesMatrix<R>>> out;
  SeriesMatrix<R> r12 = place_legs(Rvv, {0, 1}, d3);
  SeriesMatrix<R> r13 = place_legs(Rvv, {0, 2}, d3);
  SeriesMatrix<R> r23 = place_legs(Rvv, {1, 2}, d3);
  out.emplace_back("qybe", r12 * r13 * r23 - r23 * r13 * r12);
  SeriesMatrix<R> a = place_legs(Ewv, {0, 1}, dwv) * place_legs(Ewv, {0, 2}, dwv) *
                      place_legs(Kvv * Kvv, {1, 2}, dwv);
  SeriesMatrix<R> b = swap_legs<R>(1, 2, dwv, K) * place_legs(Rvv, {1, 2}, dwv);
  out.emplace_back("octagon-b commutation", a * b - b * a);
  SeriesMatrix<R> kk = place_legs(Kvv, {0, 1}, d3) * place_legs(Kvv, {0, 2}, d3);
  out.emplace_back("K commutation", kk * r23 - r23 * kk);
  SeriesMatrix<R> p = swap_legs<R>(0, 1, {v, v}, K);
  out.emplace_back("K symmetry", Kvv - p * Kvv * p);
  return out;
}

// All freely reduced words of length 1..max_len over tau, sigma_1..sigma_{n-1}
// and their inverses; with positive_start, only words whose first letter has
// exponent +1 (the canonical comparison suite: 80 words for n=2, max_len=4).
std::vector<BraidWord> enumerate_reduced_words(int n, int max_len, bool positive_start);

// Exact-side builders. Modules must carry order >= K (plus ABRR headroom for
// the qra variant, which re-solves Psi on W (x) V (x) V^{(x) n-1}).
RepDataL make_algebraic_rep(const ModuleData& W, const ModuleData& V, int n, int K);
RepDataL make_algebraic_qra_rep(const ModuleData& W, const ModuleData& V, int n, int K);

}  // namespace braidrep::braid
