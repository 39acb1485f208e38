#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidrep/kz.hpp"

using namespace braidrep;
using namespace braidrep::modrep;
using namespace braidrep::kz;

namespace {

const Complex I(0.0, 1.0);
const double PI = 3.14159265358979323846;

ConnectionSpec single_pole(const CMatrix& M) {
  ConnectionSpec s;
  s.dim = 2;
  s.poles = {Complex(0)};
  s.residues = {M};
  return s;
}

double max_abs(const std::vector<Complex>& v) {
  double m = 0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

TEST_CASE("holonomy basics") {
  CMatrix M = {Complex(0.3), Complex(1.1), Complex(-0.4), Complex(0.2)};
  ConnectionSpec s = single_pole(M);
  // K=0: identity
  HolonomyResult h0 = holonomy_series(s, {Complex(0.5), Complex(2.0)}, 0);
  CHECK(max_abs((h0.matrix - SeriesMatrixC::identity({2}, 0)).c[0]) < 1e-12);
  // order 1 from a to b: M log(b/a)/(2 pi i)
  Complex a(0.5), b(2.0);
  HolonomyResult h1 = holonomy_series(s, {a, b}, 1);
  Complex factor = std::log(b / a) / (2.0 * PI * I);
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(h1.matrix.c[1][static_cast<std::size_t>(i)] - factor * M[static_cast<std::size_t>(i)]) < 1e-10);
}

TEST_CASE("full loop equals exp(hbar M)") {
  CMatrix M = {Complex(0.3), Complex(1.1), Complex(-0.4), Complex(0.2)};
  ConnectionSpec s = single_pole(M);
  const int K = 4;
  double r = 0.8;
  std::vector<Complex> loop = {r, r * I, -r, -r * I, Complex(r)};
  HolonomyResult h = holonomy_series(s, loop, K);
  // exp(hbar M): c[k] = M^k/k!
  CMatrix pw = {1, 0, 0, 1};
  double fact = 1;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) {
      CMatrix nw(4, Complex(0));
      for (int i = 0; i < 2; ++i)
        for (int l = 0; l < 2; ++l)
          for (int j = 0; j < 2; ++j)
            nw[static_cast<std::size_t>(i) * 2 + j] +=
                pw[static_cast<std::size_t>(i) * 2 + l] * M[static_cast<std::size_t>(l) * 2 + j];
      pw = nw;
      fact *= k;
    }
    for (int i = 0; i < 4; ++i)
      CHECK(std::abs(h.matrix.c[k][static_cast<std::size_t>(i)] - pw[static_cast<std::size_t>(i)] / fact) < 1e-8);
  }
}

TEST_CASE("path composition, reversal, homotopy invariance") {
  CMatrix M = {Complex(0.3), Complex(1.1), Complex(-0.4), Complex(0.2)};
  ConnectionSpec s = single_pole(M);
  const int K = 3;
  Complex a(0.4), mid(1.0, 0.5), b(1.6);
  SeriesMatrixC full = holonomy_series(s, {a, mid, b}, K).matrix;
  SeriesMatrixC p1 = holonomy_series(s, {a, mid}, K).matrix;
  SeriesMatrixC p2 = holonomy_series(s, {mid, b}, K).matrix;
  for (double v : residual_profile(full - p2 * p1)) CHECK(v < 1e-8);
  SeriesMatrixC rev = holonomy_series(s, {b, mid, a}, K).matrix;
  for (double v : residual_profile(rev * full - SeriesMatrixC::identity({2}, K)))
    CHECK(v < 1e-8);
  SeriesMatrixC other = holonomy_series(s, {a, Complex(1.0, -0.7), b}, K).matrix;
  for (double v : residual_profile(other - full)) CHECK(v < 1e-7);
}

TEST_CASE("phi_kz hbar^2 coefficient is [t12,t23]/24") {
  ModuleData V = simple_module(1, 2, 2);
  SeriesMatrixC phi = phi_kz(V, Complex(0), 2);
  // hbar^0 identity, hbar^1 zero
  CHECK(max_abs((phi - SeriesMatrixC::identity({2, 2, 2}, 2)).c[0]) < 1e-9);
  CHECK(max_abs(phi.c[1]) < 1e-7);
  const std::vector<int> dims = {2, 2, 2};
  SeriesMatrixC t12 = place_legs(
      to_numeric(casimir_t(V, V, 0), Complex(0)), {0, 1}, dims);
  SeriesMatrixC t23 = place_legs(
      to_numeric(casimir_t(V, V, 0), Complex(0)), {1, 2}, dims);
  SeriesMatrixC comm = t12 * t23 - t23 * t12;
  for (std::size_t i = 0; i < phi.c[2].size(); ++i)
    CHECK(std::abs(phi.c[2][i] - comm.c[0][i] / 24.0) < 1e-6);
}

TEST_CASE("kz pentagon and octagon") {
  const int K = 3, Km = K + 3;
  Complex lambda(2.0);
  for (int N : {2, 3}) {
    ModuleData W = h_module(lambda_symbol(), Km);
    ModuleData V = simple_module(1, N, Km);
    SeriesMatrixC oct = kz_octagon_residual(W, V, N, lambda, K);
    for (double v : residual_profile(oct)) CHECK(v < 1e-6);
  }
  ModuleData W = h_module(lambda_symbol(), Km);
  ModuleData V = simple_module(1, 2, Km);
  SeriesMatrixC pen = kz_pentagon_residual(W, V, 2, lambda, K);
  for (double v : residual_profile(pen)) CHECK(v < 1e-6);
}

TEST_CASE("kz presentation and headline character comparison") {
  const int K = 3, Km = K + 3;
  Complex lambda(2.0);
  ModuleData W = h_module(lambda_symbol(), Km);
  ModuleData V = simple_module(1, 2, Km);
  RepDataC kzrep = build_kz_qra(W, V, 2, 2, lambda, K);
  for (const auto& [name, res] : braid::check_presentation(kzrep)) {
    INFO("relation: " << name);
    for (double v : residual_profile(res)) CHECK(v < 1e-6);
  }
  RepDataC alg = cast_rep(braid::make_algebraic_rep(W, V, 2, K), lambda);
  std::vector<braid::BraidWord> words;
  words.push_back(braid::parse_word("", 2));
  words.push_back(braid::parse_word("s1", 2));
  words.push_back(braid::parse_word("s1 s1", 2));
  words.push_back(braid::parse_word("t", 2));
  words.push_back(braid::parse_word("t t", 2));
  words.push_back(braid::parse_word("t s1", 2));
  words.push_back(braid::parse_word("t s1^-1 t s1", 2));
  for (const WordDelta& wd : compare_representations(kzrep, alg, words)) {
    INFO("word: " << wd.word);
    for (double v : wd.delta_per_order) CHECK(v < 1e-5);
  }
}
