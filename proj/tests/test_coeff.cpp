#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "braidrep/cyclo.hpp"
#include "braidrep/hseries.hpp"
#include "braidrep/scalars.hpp"

using namespace braidrep;

namespace {

CycloScalar random_cyclo(int N, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(N)));
  for (auto& v : c) v = Rational(num(rng), den(rng));
  return CycloScalar(N, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1).c == std::vector<Rational>{-1, 1});
  CHECK(cyclotomic_poly(2).c == std::vector<Rational>{1, 1});
  CHECK(cyclotomic_poly(3).c == std::vector<Rational>{1, 1, 1});
  CHECK(cyclotomic_poly(4).c == std::vector<Rational>{1, 0, 1});
  CHECK(cyclotomic_poly(6).c == std::vector<Rational>{1, -1, 1});
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("cyclo_mul examples") {
  // N=2: zeta * zeta = 1.
  auto z2 = CycloScalar::zeta(2);
  CHECK(z2 * z2 == CycloScalar(1));
  // N=4: zeta * zeta = -1.
  auto z4 = CycloScalar::zeta(4);
  CHECK(z4 * z4 == CycloScalar(-1));
  // N=3: (1 + zeta) * zeta = zeta + zeta^2 = -1, reducing by Phi_3 by hand.
  auto z3 = CycloScalar::zeta(3);
  CHECK((CycloScalar(1) + z3) * z3 == CycloScalar(-1));
}

TEST_CASE("cyclo order mismatch is an error") {
  auto a = CycloScalar::zeta(3);
  auto b = CycloScalar::zeta(4);
  CHECK_THROWS_AS(a * b, std::domain_error);
  CHECK_THROWS_AS(a + b, std::domain_error);
  // N=1 rationals promote silently.
  CHECK(a * CycloScalar(2) == a + a);
}

TEST_CASE("cyclo ring axioms on random inputs") {
  std::mt19937 rng(7);
  for (int N : {2, 3, 4, 5, 6}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_cyclo(N, rng), b = random_cyclo(N, rng), c = random_cyclo(N, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!is_zero(a)) CHECK(a * a.inverse() == CycloScalar(1));
    }
  }
}

TEST_CASE("cyclo embedding into C is a ring morphism") {
  std::mt19937 rng(11);
  for (int N : {2, 3, 5, 8}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto a = random_cyclo(N, rng), b = random_cyclo(N, rng);
      auto lhs = (a * b).to_complex();
      auto rhs = a.to_complex() * b.to_complex();
      CHECK(std::abs(lhs - rhs) < 1e-12);
      CHECK(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-12);
    }
  }
  CHECK(std::abs(CycloScalar::zeta(2).to_complex() - std::complex<double>(-1.0)) < 1e-15);
}

TEST_CASE("series_mul examples") {
  using S = HSeries<Rational>;
  S one = S::one(2), h = S::hbar(2);
  CHECK((one + h) * (one - h) == one - h * h);

  // identity
  S x(2);
  x.c = {Rational(3), Rational(-1, 2), Rational(7)};
  CHECK(S::one(2) * x == x);

  // geometric series identity at K=5
  S geo(5);
  for (auto& v : geo.c) v = 1;
  CHECK(geo * (S::one(5) - S::hbar(5)) == S::one(5));
}

TEST_CASE("series_inv examples") {
  using S = HSeries<Rational>;
  S a = S::one(3) + S::hbar(3);
  S expect(3);
  expect.c = {1, -1, 1, -1};
  CHECK(a.inverse() == expect);
  CHECK(S(3, Rational(2)).inverse() == S(3, Rational(1, 2)));

  // inv(1 + hbar*lambda) over LambdaRat, verified by multiplication.
  using SL = HSeries<LambdaRat>;
  SL b = SL::one(4);
  b.c[1] = lambda_symbol();
  CHECK(b * b.inverse() == SL::one(4));
  CHECK(b.inverse().c[2] == lambda_symbol() * lambda_symbol());

  CHECK_THROWS_AS(S::hbar(3).inverse(), std::domain_error);
}

TEST_CASE("series exp") {
  using S = HSeries<Rational>;
  S e = S::hbar(2).exp();
  CHECK(e.c[0] == 1);
  CHECK(e.c[1] == 1);
  CHECK(e.c[2] == Rational(1, 2));
  CHECK(S(3).exp() == S::one(3));

  using SL = HSeries<LambdaRat>;
  SL a(3);
  a.c[1] = lambda_symbol();
  SL ea = a.exp();
  auto lam = lambda_symbol();
  CHECK(ea.c[3] == lam * lam * lam / LambdaRat(6));
  CHECK(ea * (-a).exp() == SL::one(3));

  CHECK_THROWS_AS(S::one(2).exp(), std::domain_error);
}

TEST_CASE("series properties") {
  using S = HSeries<Rational>;
  S a = S::one(4) + S::hbar(4) + S::hbar(4) * S::hbar(4).scaled(Rational(1, 3));
  CHECK(a.inverse().inverse() == a);
  CHECK_THROWS_AS(S::one(3) + S::one(4), std::domain_error);
  CHECK(S::divide_shifted(S::hbar(4) * a, S::hbar(4)) == a);
}

TEST_CASE("lambda shift and numeric evaluation") {
  auto lam = lambda_symbol();
  auto f = lam * lam + LambdaRat(1);
  auto g = lambda_shift(f, Rational(2));  // (lambda+2)^2 + 1
  CHECK(g == lam * lam + lam * LambdaRat(4) + LambdaRat(5));
  CHECK(std::abs(evaluate(g, std::complex<double>(1.0)) - 10.0) < 1e-14);

  // rational function evaluation
  auto r = LambdaRat(1) / (lam + LambdaRat(1));
  CHECK(!r.is_polynomial());
  CHECK(std::abs(evaluate(r, std::complex<double>(3.0)) - 0.25) < 1e-14);
}
