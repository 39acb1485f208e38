#include "braidrep/abrr.hpp"

#include "braidrep/uqsl2.hpp"

namespace braidrep::abrr {

using braidrep::modrep::ematrix;
using braidrep::modrep::grouped_psi_leg;
using braidrep::modrep::kmatrix;
using braidrep::modrep::place_legs;
using braidrep::modrep::q_int_series;
using braidrep::modrep::rmatrix;
using braidrep::modrep::swap_legs;
using braidrep::modrep::tensor_module;
using braidrep::uqsl2::exp_h;

namespace {

LambdaRat lr(long v) { return lambdarat_from(Rational(v)); }

LSeries entry(const SeriesMatrixL& M, int i, int j) {
  LSeries s(M.K);
  for (int k = 0; k <= M.K; ++k) s.c[k] = M.at(k, i, j);
  return s;
}

void set_entry(SeriesMatrixL& M, int i, int j, const LSeries& s) {
  for (int k = 0; k <= M.K; ++k) M.at(k, i, j) = s.c[k];
}

// Coefficients cbar_n of Rbar^{-1} = sum_n cbar_n E^n (x) F^n, from inverting
// the series sum_n c_n G^n in the nilpotent G = E (x) F.
std::vector<LSeries> rbar_inverse_coeffs(int nmax, int K) {
  LSeries q = exp_h(lr(1), K);
  LSeries qm = q - q.inverse();
  std::vector<LSeries> c(nmax + 1, LSeries::one(K)), cbar(nmax + 1, LSeries(K));
  LSeries pw = LSeries::one(K), fact = LSeries::one(K);
  for (int n = 1; n <= nmax; ++n) {
    pw = pw * qm;
    fact = fact * q_int_series(n, K);
    c[n] = exp_h(lr(static_cast<long>(n) * (n - 1) / 2), K) * pw * fact.inverse();
  }
  cbar[0] = LSeries::one(K);
  for (int n = 1; n <= nmax; ++n) {
    LSeries s(K);
    for (int j = 1; j <= n; ++j) s = s + c[j] * cbar[n - j];
    cbar[n] = LSeries(K) - s;
  }
  return cbar;
}

SeriesMatrixL matrix_pow(const SeriesMatrixL& M, int n) {
  SeriesMatrixL r = SeriesMatrixL::identity(M.dims, M.K);
  for (int i = 0; i < n; ++i) r = r * M;
  return r;
}

}  // namespace

SeriesMatrixL rbar(const ModuleData& A, const ModuleData& B, int K) {
  return kmatrix(A, B, K).inverse() * rmatrix(A, B, K);
}

PsiSolution solve_psi(const ModuleData& W, const ModuleData& V2, const ModuleData& V3,
                      int K) {
  if (W.K != V2.K || W.K != V3.K)
    throw std::invalid_argument("solve_psi: module order mismatch");
  const int Km = W.K;
  if (Km < K) throw std::invalid_argument("solve_psi: modules need order >= K");
  const std::vector<int> dims = {W.dim, V2.dim, V3.dim};
  const int n2 = V2.dim, n3 = V3.dim;
  int n = W.dim * n2 * n3;
  long M3 = 0;
  for (long f : V3.fdeg) M3 = std::max(M3, f);

  // Diagonal E^{1,2} entries and inverses for the entrywise conjugation.
  SeriesMatrixL E12 = place_legs(ematrix(W, V2, Km), {0, 1}, dims);
  std::vector<LSeries> Ed(n, LSeries(Km)), Edinv(n, LSeries(Km));
  for (int i = 0; i < n; ++i) {
    Ed[i] = entry(E12, i, i);
    Edinv[i] = Ed[i].inverse();
  }

  std::vector<LSeries> cbar = rbar_inverse_coeffs(static_cast<int>(M3), Km);
  std::vector<SeriesMatrixL> P;  // P[m'] = cbar_{m'} (E^{m'})^2 (F^{m'})^3
  for (long mp = 0; mp <= M3; ++mp) {
    SeriesMatrixL Pn = place_legs(matrix_pow(V2.E, static_cast<int>(mp)), {1}, dims) *
                       place_legs(matrix_pow(V3.F, static_cast<int>(mp)), {2}, dims);
    P.push_back(Pn.scaled_series(cbar[static_cast<std::size_t>(mp)]));
  }

  auto fdeg3_of = [&](int idx) { return V3.fdeg[static_cast<std::size_t>(idx % n3)]; };

  PsiSolution sol;
  sol.K = K;
  sol.blocks.assign(static_cast<std::size_t>(M3) + 1, SeriesMatrixL(dims, Km));
  sol.blocks[0] = SeriesMatrixL::identity(dims, Km);

  int garbled = 0;  // orders lost to valuation-shifted divisions so far
  for (long m = 1; m <= M3; ++m) {
    SeriesMatrixL S(dims, Km);
    for (long mp = 1; mp <= m; ++mp) {
      const SeriesMatrixL& lower = sol.blocks[static_cast<std::size_t>(m - mp)];
      // A(X) = E^{1,2} X (E^{1,2})^{-1}, entrywise diagonal scaling.
      SeriesMatrixL AX(dims, Km);
      for (int r = 0; r < n; ++r)
        for (int c0 = 0; c0 < n; ++c0) {
          LSeries e = entry(lower, r, c0);
          if (e.truncated(Km) == LSeries(Km)) continue;
          set_entry(AX, r, c0, Ed[r] * e * Edinv[c0]);
        }
      S = S + P[static_cast<std::size_t>(mp)] * AX;
    }
    bool saw_shift = false;
    SeriesMatrixL& blk = sol.blocks[static_cast<std::size_t>(m)];
    for (int r = 0; r < n; ++r)
      for (int c0 = 0; c0 < n; ++c0) {
        if (fdeg3_of(r) - fdeg3_of(c0) != m) continue;
        LSeries rhs = entry(S, r, c0);
        if (rhs == LSeries(Km)) continue;
        LSeries den = LSeries::one(Km) - Ed[r] * Edinv[c0];
        if (den == LSeries(Km))
          throw std::domain_error("solve_psi: zero denominator with nonzero source");
        if (!is_zero(den.c[0])) {
          set_entry(blk, r, c0, rhs * den.inverse());
        } else {
          saw_shift = true;
          set_entry(blk, r, c0, LSeries::divide_shifted(rhs, den));
        }
      }
    if (saw_shift) ++garbled;
  }

  if (Km - garbled < K)
    throw std::invalid_argument("solve_psi: not enough module order headroom");

  SeriesMatrixL psi(dims, Km);
  for (auto& b : sol.blocks) psi = psi + b;
  sol.psi = psi.truncated(K);
  for (auto& b : sol.blocks) b = b.truncated(K);

  // Valuation lemma, strengthened per block, and denominator-freeness.
  for (long m = 0; m <= M3; ++m) {
    const SeriesMatrixL& b = sol.blocks[static_cast<std::size_t>(m)];
    for (int k = 0; k <= K; ++k)
      for (const auto& v : b.c[static_cast<std::size_t>(k)]) {
        if (k < m && !is_zero(v))
          throw std::domain_error("solve_psi: block valuation violated");
        if (!v.is_polynomial())
          throw std::domain_error("solve_psi: valuation lemma violated");
      }
  }
  return sol;
}

SeriesMatrixL coproduct_e_lhs(const ModuleData& W, const ModuleData& V, int K) {
  return grouped_psi_leg(ematrix(W, V, K), V);
}

SeriesMatrixL mixed_pentagon_residual(const ModuleData& W, const ModuleData& V, int K) {
  const int v = V.dim;
  const std::vector<int> dims = {W.dim, v, v, v};
  ModuleData T = tensor_module(V, V);

  SeriesMatrixL psi_wvv = solve_psi(W, V, V, K).psi;

  SeriesMatrixL a = solve_psi(W, V, T, K).psi;  // Psi^{1,2,34}
  a.dims = dims;
  SeriesMatrixL b = grouped_psi_leg(psi_wvv, V);  // Psi^{12,3,4}
  SeriesMatrixL c = solve_psi(W, T, V, K).psi;    // Psi^{1,23,4}
  c.dims = dims;
  SeriesMatrixL d = place_legs(psi_wvv, {0, 1, 2}, dims);  // Psi^{1,2,3}
  SeriesMatrixL phi = SeriesMatrixL::identity(dims, K);
  return check_mixed_pentagon(a, b, phi, c, d);
}

SeriesMatrixL octagon_residual(const ModuleData& W, const ModuleData& V, int K) {
  const std::vector<int> dims = {W.dim, V.dim, V.dim};
  SeriesMatrixL psi = solve_psi(W, V, V, K).psi;
  SeriesMatrixL P23 = swap_legs<LambdaRat>(1, 2, dims, K);
  SeriesMatrixL psi132 = P23 * psi * P23;
  SeriesMatrixL R23 = place_legs(rmatrix(V, V, K), {1, 2}, dims);
  SeriesMatrixL R32 = P23 * R23 * P23;
  SeriesMatrixL E13 = place_legs(ematrix(W, V, K), {0, 2}, dims);
  SeriesMatrixL lhs = coproduct_e_lhs(W, V, K);
  return check_octagon(lhs, psi, psi132, R32, E13, R23);
}

SeriesMatrixL oracle_compare_shapovalov(const ModuleData& W, const ModuleData& V, int N,
                                        int K, int m_max) {
  const std::vector<int> dims = {W.dim, V.dim, V.dim};
  PsiSolution sol = solve_psi(W, V, V, K);
  CycloScalar zeta = CycloScalar::zeta(N);
  SeriesMatrixL residual(dims, K);
  const int n3 = V.dim;
  for (int m = 0; m <= m_max; ++m) {
    auto t = braidrep::uqsl2::twist_term(m, zeta);
    SeriesMatrixL Em = matrix_pow(V.E, m).truncated(K);
    SeriesMatrixL Fm = matrix_pow(V.F, m).truncated(K);
    SeriesMatrixL blk(dims, K);
    for (int r2 = 0; r2 < V.dim; ++r2) {
      // k2 acts left of e^m: its exponent is the weight of the row vector.
      LSeries scal = braidrep::uqsl2::eval_k2rat(t.F, lambda_symbol(), V.weights[r2],
                                                 lr(1), K);
      for (int c2 = 0; c2 < V.dim; ++c2) {
        LSeries ee = entry(Em, r2, c2);
        if (ee == LSeries(K)) continue;
        LSeries pre = scal * ee;
        for (int r3 = 0; r3 < V.dim; ++r3)
          for (int c3 = 0; c3 < V.dim; ++c3) {
            LSeries ff = entry(Fm, r3, c3);
            if (ff == LSeries(K)) continue;
            set_entry(blk, r2 * n3 + r3, c2 * n3 + c3, pre * ff);
          }
      }
    }
    residual = residual + (blk - sol.blocks[static_cast<std::size_t>(m)]);
  }
  return residual;
}

}  // namespace braidrep::abrr
