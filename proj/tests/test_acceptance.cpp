#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "braidrep/abrr.hpp"
#include "braidrep/braid.hpp"
#include "braidrep/kz.hpp"
#include "braidrep/uqsl2.hpp"

using namespace braidrep;
using namespace braidrep::modrep;

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point t0 = Clock::now();
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }
};

void verdict(int criterion, bool pass, const char* what, double secs) {
  std::printf("ACCEPTANCE %d: %s - %s (%.1f s)\n", criterion,
              pass ? "PASS" : "FAIL", what, secs);
  std::fflush(stdout);
}

braid::RepDataL exact_rep(int n, int d, int N, bool qra, int K) {
  int Km = K + (n - 1) * d + 1;
  ModuleData W = h_module(lambda_symbol(), Km);
  ModuleData V = simple_module(d, N, Km);
  return qra ? braid::make_algebraic_qra_rep(W, V, n, K)
             : braid::make_algebraic_rep(W, V, n, K);
}

// Walks all freely reduced positive-start words up to max_len, extending the
// running products one letter at a time so each node costs one matrix
// multiplication per representation.
bool words_agree(const braid::RepDataL& qra, const braid::RepDataL& alg,
                 int max_len, long& count) {
  const int n = qra.n, K = qra.K;
  std::vector<SeriesMatrixL> gq, ga;
  for (int g = 0; g < n; ++g) {
    braid::BraidWord w;
    w.n = n;
    w.letters.push_back({g, 1});
    gq.push_back(braid::rho_qra(qra, w));
    ga.push_back(braid::rho_algebraic(alg, w));
  }
  std::vector<SeriesMatrixL> gqi, gai;
  for (int g = 0; g < n; ++g) {
    gqi.push_back(gq[static_cast<std::size_t>(g)].inverse());
    gai.push_back(ga[static_cast<std::size_t>(g)].inverse());
  }
  struct Frame {
    SeriesMatrixL pq, pa;
    int len, last_gen, last_exp;
  };
  std::vector<Frame> stack;
  for (int g = 0; g < n; ++g)
    stack.push_back({gq[static_cast<std::size_t>(g)], ga[static_cast<std::size_t>(g)],
                     1, g, 1});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    ++count;
    if (!(f.pq == f.pa)) return false;
    if (f.len == max_len) continue;
    for (int g = 0; g < n; ++g)
      for (int e : {1, -1}) {
        if (g == f.last_gen && e == -f.last_exp) continue;
        const SeriesMatrixL& q = e == 1 ? gq[static_cast<std::size_t>(g)]
                                        : gqi[static_cast<std::size_t>(g)];
        const SeriesMatrixL& a = e == 1 ? ga[static_cast<std::size_t>(g)]
                                        : gai[static_cast<std::size_t>(g)];
        stack.push_back({f.pq * q, f.pa * a, f.len + 1, g, e});
      }
  }
  (void)K;
  return true;
}

}  // namespace

TEST_CASE("criterion 1: QYBE exact through hbar^6 on V(1) and V(2) cubes") {
  Timer t;
  const int K = 6;
  bool pass = true;
  for (int d : {1, 2}) {
    ModuleData V = simple_module(d, 2, K);
    std::vector<int> dims = {V.dim, V.dim, V.dim};
    SeriesMatrixL R = rmatrix(V, V, K);
    SeriesMatrixL r12 = place_legs(R, {0, 1}, dims);
    SeriesMatrixL r13 = place_legs(R, {0, 2}, dims);
    SeriesMatrixL r23 = place_legs(R, {1, 2}, dims);
    pass = pass && (r12 * r13 * r23 - r23 * r13 * r12).zero();
  }
  double secs = t.seconds();
  pass = pass && secs < 10.0;
  verdict(1, pass, "QYBE residual exactly 0 through hbar^6, runtime < 10 s", secs);
  CHECK(pass);
}

TEST_CASE("criterion 2: section 1.1 axioms and coproduct identities") {
  Timer t;
  const int K = 6, Km = K + 2;
  ModuleData W = h_module(lambda_symbol(), Km);
  ModuleData V = simple_module(1, 2, Km);
  bool pass = true;
  for (const auto& [name, res] :
       braid::axioms_check(rmatrix(V, V, K), kmatrix(V, V, K), ematrix(W, V, K)))
    pass = pass && res.zero();
  // (id (x) Delta)(R) = R^{1,3} R^{1,2} and (Delta (x) id)(R) = R^{1,3} R^{2,3}
  ModuleData T = tensor_module(V, V);
  std::vector<int> d3 = {2, 2, 2};
  SeriesMatrixL lhs = rmatrix(V, T, K);
  lhs.dims = d3;
  pass = pass && (lhs - place_legs(rmatrix(V, V, K), {0, 2}, d3) *
                            place_legs(rmatrix(V, V, K), {0, 1}, d3))
                     .zero();
  SeriesMatrixL lhs2 = rmatrix(T, V, K);
  lhs2.dims = d3;
  pass = pass && (lhs2 - place_legs(rmatrix(V, V, K), {0, 2}, d3) *
                             place_legs(rmatrix(V, V, K), {1, 2}, d3))
                     .zero();
  // (1 (x) Delta)(E) = E^{1,2} E^{1,3} (K^{2,3})^2
  std::vector<int> dwv = {1, 2, 2};
  SeriesMatrixL lhsE = ematrix(W, T, K);
  lhsE.dims = dwv;
  SeriesMatrixL K23 = place_legs(kmatrix(V, V, K), {1, 2}, dwv);
  pass = pass && (lhsE - place_legs(ematrix(W, V, K), {0, 1}, dwv) *
                             place_legs(ematrix(W, V, K), {0, 2}, dwv) * K23 * K23)
                     .zero();
  verdict(2, pass, "axioms (a)-(d) and coproduct identities exact through hbar^6",
          t.seconds());
  CHECK(pass);
}

TEST_CASE("criterion 3: type-B presentation exact; descending canary fails") {
  Timer t;
  const int K = 6;
  bool pass = true;
  for (int N : {2, 3})
    for (int n : {2, 3}) {
      braid::RepDataL d = exact_rep(n, 1, N, false, K);
      for (const auto& [name, res] : braid::check_presentation(d))
        pass = pass && res.zero();
    }
  // canary: the descending tau-product breaks the four-term relation at hbar^2
  braid::RepDataL bad = exact_rep(3, 1, 2, false, K);
  bad.tau_descending = true;
  SeriesMatrixL res = braid::rho(bad, braid::parse_word("t s1 t s1", 3)) -
                      braid::rho(bad, braid::parse_word("s1 t s1 t", 3));
  bool canary = false;
  for (const auto& v : res.c[2])
    if (!is_zero(v)) canary = true;
  pass = pass && canary;
  verdict(3, pass,
          "presentation exact through hbar^6 (n=2,3; N=2,3); descending canary "
          "nonzero at hbar^2",
          t.seconds());
  CHECK(pass);
}

TEST_CASE("criterion 4: ABRR, mixed pentagon (Phi=1), octagon; valuation") {
  Timer t;
  const int K = 5;
  bool pass = true;
  for (int legs : {2, 3}) {
    int Km = K + (legs - 1) + 1;
    ModuleData W = h_module(lambda_symbol(), Km);
    ModuleData V = simple_module(1, 2, Km);
    ModuleData V3 = legs == 2 ? V : tensor_module(V, V);
    abrr::PsiSolution sol = abrr::solve_psi(W, V, V3, K);
    std::vector<int> dims = {1, V.dim, V3.dim};
    SeriesMatrixL E12 = place_legs(ematrix(W, V, K), {0, 1}, dims);
    SeriesMatrixL Rb23 = place_legs(abrr::rbar(V, V3, K), {1, 2}, dims);
    pass = pass && abrr::check_abrr(sol.psi, E12, Rb23).zero();
    // lambda-coefficients are denominator-free
    for (int k = 0; k <= K; ++k)
      for (const auto& v : sol.psi.c[static_cast<std::size_t>(k)])
        pass = pass && v.is_polynomial();
    // valuation lemma: block m vanishes below hbar^m
    for (std::size_t m = 0; m < sol.blocks.size(); ++m)
      for (int k = 0; k < static_cast<int>(m) && k <= K; ++k)
        for (const auto& v : sol.blocks[m].c[static_cast<std::size_t>(k)])
          pass = pass && is_zero(v);
  }
  {
    int Km = K + 2;
    ModuleData W = h_module(lambda_symbol(), Km);
    ModuleData V = simple_module(1, 2, Km);
    pass = pass && abrr::mixed_pentagon_residual(W, V, K).zero();
    pass = pass && abrr::octagon_residual(W, V, K).zero();
  }
  verdict(4, pass,
          "ABRR + mixed pentagon (Phi=1) + octagon exact through hbar^5; "
          "denominator-free; valuation >= m",
          t.seconds());
  CHECK(pass);
}

TEST_CASE("criterion 5: rho_qra equals rho_algebraic word-by-word") {
  Timer t;
  const int K = 5;
  bool pass = true;
  long count = 0;
  for (int n : {2, 3}) {
    braid::RepDataL qra = exact_rep(n, 1, 2, true, K);
    braid::RepDataL alg = exact_rep(n, 1, 2, false, K);
    pass = pass && words_agree(qra, alg, 4, count);
  }
  char what[128];
  std::snprintf(what, sizeof(what),
                "rho_qra = rho_algebraic exact through hbar^5 on %ld words "
                "(length <= 4, n = 2,3)",
                count);
  verdict(5, pass, what, t.seconds());
  CHECK(pass);
}

TEST_CASE("criterion 6: Shapovalov oracle") {
  Timer t;
  const int K = 5;
  bool pass = true;
  for (const auto& r : uqsl2::verify_k_recursion(3)) pass = pass && r.zero();
  for (long m = 1; m <= 4; ++m) {
    uqsl2::KRat ratio = uqsl2::gram(m) / uqsl2::dck_determinant(m);
    int nterms = 0, dterms = 0;
    for (const auto& c : ratio.num.c)
      if (!is_zero(c)) ++nterms;
    for (const auto& c : ratio.den.c)
      if (!is_zero(c)) ++dterms;
    pass = pass && nterms == 1 && dterms == 1;
  }
  for (int d : {1, 2, 3}) {
    int N = d == 2 ? 3 : 2;  // exercise both cyclotomic orders
    int Km = K + d;
    ModuleData W = h_module(lambda_symbol(), Km);
    ModuleData V = simple_module(d, N, Km);
    pass = pass && abrr::oracle_compare_shapovalov(W, V, N, K, std::min(d, 3)).zero();
  }
  verdict(6, pass,
          "K-recursion (m<=3), Gram = DCK up to unit (m<=4), Psi_{q,m} = ABRR "
          "blocks through hbar^5",
          t.seconds());
  CHECK(pass);
}

TEST_CASE("criterion 7: KZ numerics") {
  Timer t;
  const int K = 3, Km = K + 3;
  kz::Complex lambda(2.0);
  bool pass = true;
  // full loop around an isolated pole equals exp(hbar M) per order
  {
    ModuleData V = simple_module(1, 2, Km);
    kz::ConnectionSpec h = kz::h_system({lambda}, V, V, 2, lambda);
    kz::ConnectionSpec single;
    single.dim = h.dim;
    single.poles = {kz::Complex(0)};
    single.residues = {h.residues[0]};
    double r = 0.5;
    kz::Complex I(0, 1);
    std::vector<kz::Complex> loop = {r, r * I, -r, -r * I, kz::Complex(r)};
    kz::HolonomyResult hol = kz::holonomy_series(single, loop, 4);
    kz::CMatrix pw(static_cast<std::size_t>(h.dim) * h.dim, kz::Complex(0));
    for (int i = 0; i < h.dim; ++i) pw[static_cast<std::size_t>(i) * h.dim + i] = 1;
    double fact = 1;
    for (int k = 0; k <= 4; ++k) {
      if (k > 0) {
        kz::CMatrix nw(pw.size(), kz::Complex(0));
        for (int i = 0; i < h.dim; ++i)
          for (int l = 0; l < h.dim; ++l)
            for (int j = 0; j < h.dim; ++j)
              nw[static_cast<std::size_t>(i) * h.dim + j] +=
                  pw[static_cast<std::size_t>(i) * h.dim + l] *
                  h.residues[0][static_cast<std::size_t>(l) * h.dim + j];
        pw = nw;
        fact *= k;
      }
      for (std::size_t i = 0; i < pw.size(); ++i)
        pass = pass && std::abs(hol.matrix.c[static_cast<std::size_t>(k)][i] -
                                pw[i] / fact) < 1e-8;
    }
  }
  // Phi_KZ hbar^2 coefficient = [t12, t23]/24
  {
    ModuleData V = simple_module(1, 2, 2);
    SeriesMatrixC phi = kz::phi_kz(V, lambda, 2);
    std::vector<int> d3 = {2, 2, 2};
    SeriesMatrixC t12 =
        place_legs(to_numeric(casimir_t(V, V, 0), lambda), {0, 1}, d3);
    SeriesMatrixC t23 =
        place_legs(to_numeric(casimir_t(V, V, 0), lambda), {1, 2}, d3);
    SeriesMatrixC comm = t12 * t23 - t23 * t12;
    for (std::size_t i = 0; i < phi.c[2].size(); ++i)
      pass = pass && std::abs(phi.c[2][i] - comm.c[0][i] / 24.0) < 1e-6;
  }
  // Psi_KZ pentagon and octagon within 1e-6 per order <= 3
  for (int N : {2, 3}) {
    ModuleData W = h_module(lambda_symbol(), Km);
    ModuleData V = simple_module(1, N, Km);
    for (double v : kz::residual_profile(kz::kz_octagon_residual(W, V, N, lambda, K)))
      pass = pass && v < 1e-6;
  }
  {
    ModuleData W = h_module(lambda_symbol(), Km);
    ModuleData V = simple_module(1, 2, Km);
    for (double v : kz::residual_profile(kz::kz_pentagon_residual(W, V, 2, lambda, K)))
      pass = pass && v < 1e-6;
  }
  double secs = t.seconds();
  pass = pass && secs < 120.0;
  verdict(7, pass,
          "loop holonomy = exp(hbar M) (1e-8); Phi hbar^2 = [t12,t23]/24 (1e-6); "
          "pentagon+octagon (1e-6); < 2 min",
          secs);
  CHECK(pass);
}

TEST_CASE("criterion 8: headline character comparison") {
  Timer t;
  const int K = 3;
  bool pass = true;
  // all 80 positive-start reduced words of length <= 4 in B_2^1
  {
    const int Km = K + 2;
    kz::Complex lambda(2.0);
    ModuleData W = h_module(lambda_symbol(), Km);
    ModuleData V = simple_module(1, 2, Km);
    kz::RepDataC kzrep = kz::build_kz_qra(W, V, 2, 2, lambda, K);
    kz::RepDataC alg = kz::cast_rep(braid::make_algebraic_rep(W, V, 2, K), lambda);
    std::vector<braid::BraidWord> words = braid::enumerate_reduced_words(2, 4, true);
    pass = pass && words.size() == 80;
    for (const kz::WordDelta& wd : kz::compare_representations(kzrep, alg, words))
      for (double v : wd.delta_per_order) pass = pass && v < 1e-5;
  }
  // 20-word random sample at N=3, V(2), lambda=1
  {
    const int Km = K + 3;
    kz::Complex lambda(1.0);
    ModuleData W = h_module(lambda_symbol(), Km);
    ModuleData V = simple_module(2, 3, Km);
    kz::RepDataC kzrep = kz::build_kz_qra(W, V, 2, 3, lambda, K);
    kz::RepDataC alg = kz::cast_rep(braid::make_algebraic_rep(W, V, 2, K), lambda);
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> gen(0, 1), sgn(0, 1), len(1, 4);
    std::vector<braid::BraidWord> words;
    for (int i = 0; i < 20; ++i) {
      braid::BraidWord w;
      w.n = 2;
      int l = len(rng);
      for (int j = 0; j < l; ++j) w.letters.push_back({gen(rng), sgn(rng) ? 1 : -1});
      words.push_back(std::move(w));
    }
    for (const kz::WordDelta& wd : kz::compare_representations(kzrep, alg, words))
      for (double v : wd.delta_per_order) pass = pass && v < 1e-5;
  }
  double secs = t.seconds();
  pass = pass && secs < 300.0;
  verdict(8, pass,
          "char deltas < 1e-5 per order <= 3: 80 words (N=2, V(1), lambda=2) and "
          "20 random words (N=3, V(2), lambda=1); < 5 min",
          secs);
  CHECK(pass);
}
