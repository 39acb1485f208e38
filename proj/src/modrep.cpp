#include "braidrep/modrep.hpp"

namespace braidrep::modrep {

namespace {

LambdaRat lr(long v) { return lambdarat_from(Rational(v)); }
LambdaRat lr(const Rational& v) { return lambdarat_from(v); }

SeriesMatrixL kron(const SeriesMatrixL& X, const SeriesMatrixL& Y) {
  std::vector<int> dims = X.dims;
  dims.insert(dims.end(), Y.dims.begin(), Y.dims.end());
  if (X.K != Y.K) throw std::invalid_argument("kron: order mismatch");
  SeriesMatrixL r(dims, X.K);
  const int nx = X.size(), ny = Y.size();
  for (int k = 0; k <= X.K; ++k)
    for (int a = 0; a <= k; ++a)
      for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nx; ++j) {
          const LambdaRat& x = X.at(a, i, j);
          if (is_zero(x)) continue;
          for (int p = 0; p < ny; ++p)
            for (int q = 0; q < ny; ++q) {
              const LambdaRat& y = Y.at(k - a, p, q);
              if (is_zero(y)) continue;
              r.at(k, i * ny + p, j * ny + q) =
                  r.at(k, i * ny + p, j * ny + q) + x * y;
            }
        }
  return r;
}

SeriesMatrixL diag_series(std::vector<int> dims, const std::vector<LSeries>& d) {
  SeriesMatrixL r(std::move(dims), d.empty() ? 0 : d[0].K);
  for (int i = 0; i < r.size(); ++i)
    for (int k = 0; k <= r.K; ++k) r.at(k, i, i) = d[static_cast<std::size_t>(i)].c[k];
  return r;
}

SeriesMatrixL diag_exp_h(std::vector<int> dims, const std::vector<LambdaRat>& w, int K) {
  std::vector<LSeries> d;
  d.reserve(w.size());
  for (const auto& wi : w) d.push_back(exp_h(wi, K));
  return diag_series(std::move(dims), d);
}

// hbar^0 block as a constant series matrix.
SeriesMatrixL classical_part(const SeriesMatrixL& m) {
  SeriesMatrixL r(m.dims, m.K);
  r.c[0] = m.c[0];
  return r;
}

}  // namespace

LSeries q_int_series(long n, int K) {
  if (n == 0) return LSeries(K);
  if (n < 0) return LSeries(K) - q_int_series(-n, K);
  LSeries q = exp_h(lr(1), K + 1);
  LSeries num = exp_h(lr(n), K + 1) - exp_h(lr(-n), K + 1);
  return LSeries::divide_shifted(num, q - q.inverse()).truncated(K);
}

ModuleData simple_module(int d, int N, int K) {
  ModuleData m;
  m.dim = d + 1;
  m.K = K;
  CycloScalar zeta = N == 1 ? CycloScalar(1) : CycloScalar::zeta(N);
  CycloScalar zinv = zeta.inverse();
  m.E = SeriesMatrixL({d + 1}, K);
  m.F = SeriesMatrixL({d + 1}, K);
  CycloScalar zp(1);
  for (int k = 0; k <= d; ++k) {
    m.weights.push_back(lr(d - 2 * k));
    m.fdeg.push_back(k);
    m.sigma.push_back(zp);
    zp = zp * zinv;
    if (k >= 1) {
      LSeries ek = q_int_series(d - k + 1, K);  // E v_k = [d-k+1]_q v_{k-1}
      for (int o = 0; o <= K; ++o) m.E.at(o, k - 1, k) = ek.c[o];
    }
    if (k < d) {
      LSeries fk = q_int_series(k + 1, K);  // F v_k = [k+1]_q v_{k+1}
      for (int o = 0; o <= K; ++o) m.F.at(o, k + 1, k) = fk.c[o];
    }
  }
  return m;
}

ModuleData h_module(const LambdaRat& lambda, int K) {
  ModuleData m;
  m.dim = 1;
  m.K = K;
  m.weights = {lambda};
  m.E = SeriesMatrixL({1}, K);
  m.F = SeriesMatrixL({1}, K);
  m.sigma = {CycloScalar(1)};
  m.fdeg = {0};
  return m;
}

ModuleData tensor_module(const ModuleData& A, const ModuleData& B) {
  if (A.K != B.K) throw std::invalid_argument("tensor_module: order mismatch");
  const int K = A.K;
  ModuleData m;
  m.dim = A.dim * B.dim;
  m.K = K;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < B.dim; ++j) {
      m.weights.push_back(A.weights[i] + B.weights[j]);
      m.fdeg.push_back(A.fdeg[i] + B.fdeg[j]);
      m.sigma.push_back(A.sigma[i] * B.sigma[j]);
    }
  SeriesMatrixL idA = SeriesMatrixL::identity({A.dim}, K);
  SeriesMatrixL idB = SeriesMatrixL::identity({B.dim}, K);
  SeriesMatrixL expHB = diag_exp_h({B.dim}, B.weights, K);
  std::vector<LambdaRat> negWA;
  for (const auto& w : A.weights) negWA.push_back(lr(0) - w);
  SeriesMatrixL expmHA = diag_exp_h({A.dim}, negWA, K);
  // Delta_hbar(e) = e (x) e^{hbar h} + 1 (x) e; Delta_hbar(f) = f (x) 1 + e^{-hbar h} (x) f.
  m.E = kron(A.E, expHB) + kron(idA, B.E);
  m.F = kron(A.F, idB) + kron(expmHA, B.F);
  m.E.dims = {m.dim};
  m.F.dims = {m.dim};
  return m;
}

SeriesMatrixL sigma_action(const ModuleData& V, int K) {
  SeriesMatrixL r({V.dim}, K);
  for (int i = 0; i < V.dim; ++i) r.at(0, i, i) = LambdaRat(V.sigma[i]);
  return r;
}

SeriesMatrixL casimir_th(const ModuleData& A, const ModuleData& B, int K) {
  SeriesMatrixL r({A.dim, B.dim}, K);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < B.dim; ++j)
      r.at(0, i * B.dim + j, i * B.dim + j) = A.weights[i] * B.weights[j];
  return r;
}

SeriesMatrixL casimir_t(const ModuleData& A, const ModuleData& B, int K) {
  if (A.K < 0 || B.K < 0) throw std::invalid_argument("casimir_t: bad module order");
  SeriesMatrixL eA = classical_part(A.E).truncated(K), fA = classical_part(A.F).truncated(K);
  SeriesMatrixL eB = classical_part(B.E).truncated(K), fB = classical_part(B.F).truncated(K);
  SeriesMatrixL two = SeriesMatrixL::identity({A.dim}, K).scaled(lr(2));
  SeriesMatrixL r = casimir_th(A, B, K) + kron(two * eA, fB) + kron(two * fA, eB);
  r.dims = {A.dim, B.dim};
  return r;
}

SeriesMatrixL kmatrix(const ModuleData& A, const ModuleData& B, int K) {
  std::vector<LambdaRat> half;
  const LambdaRat h = lr(Rational(1) / 2);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < B.dim; ++j) half.push_back(A.weights[i] * B.weights[j] * h);
  return diag_exp_h({A.dim, B.dim}, half, K);
}

SeriesMatrixL rmatrix(const ModuleData& A, const ModuleData& B, int K) {
  if (A.K < K || B.K < K) throw std::invalid_argument("rmatrix: module order too small");
  const SeriesMatrixL Ea = A.E.truncated(K), Fb = B.F.truncated(K);
  SeriesMatrixL sum = SeriesMatrixL::identity({A.dim, B.dim}, K);
  LSeries q = exp_h(lr(1), K);
  LSeries qm = q - q.inverse();  // valuation 1: powers >= K+1 vanish
  SeriesMatrixL En = Ea, Fn = Fb;
  LSeries coeff = LSeries::one(K);
  LSeries fact = LSeries::one(K);
  for (int n = 1;; ++n) {
    if (n > 1) {
      En = En * Ea;
      Fn = Fn * Fb;
    }
    if (En.zero() || Fn.zero() || n > K) break;
    coeff = coeff * qm;
    fact = fact * q_int_series(n, K);
    // q^{n(n-1)/2} (q - q^{-1})^n / [n]_q!
    LSeries cn = exp_h(lr(static_cast<long>(n) * (n - 1) / 2), K) * coeff *
                 fact.inverse();
    SeriesMatrixL term = kron(En, Fn);
    term.dims = {A.dim, B.dim};
    sum = sum + term.scaled_series(cn);
  }
  return kmatrix(A, B, K) * sum;
}

SeriesMatrixL ematrix(const ModuleData& W, const ModuleData& V, int K) {
  std::vector<LambdaRat> ex;
  const LambdaRat h = lr(Rational(1) / 2);
  for (int i = 0; i < W.dim; ++i)
    for (int j = 0; j < V.dim; ++j)
      ex.push_back(W.weights[i] * V.weights[j] + V.weights[j] * V.weights[j] * h);
  SeriesMatrixL r = diag_exp_h({W.dim, V.dim}, ex, K);
  for (int i = 0; i < W.dim; ++i)
    for (int j = 0; j < V.dim; ++j)
      for (int k = 0; k <= K; ++k)
        r.at(k, i * V.dim + j, i * V.dim + j) =
            r.at(k, i * V.dim + j, i * V.dim + j) * LambdaRat(V.sigma[j]);
  return r;
}

SeriesMatrixL delta_action(char gen, const ModuleData& A, const ModuleData& B, int K) {
  ModuleData T = tensor_module(A, B);
  if (T.K < K) throw std::invalid_argument("delta_action: module order too small");
  switch (gen) {
    case 'e': {
      SeriesMatrixL r = T.E.truncated(K);
      r.dims = {A.dim, B.dim};
      return r;
    }
    case 'f': {
      SeriesMatrixL r = T.F.truncated(K);
      r.dims = {A.dim, B.dim};
      return r;
    }
    case 'h': {
      SeriesMatrixL r({A.dim, B.dim}, K);
      for (int i = 0; i < T.dim; ++i) r.at(0, i, i) = T.weights[i];
      return r;
    }
    default:
      throw std::invalid_argument("delta_action: unknown generator");
  }
}

SeriesMatrixL grouped_psi_leg(const SeriesMatrixL& psi, const ModuleData& Vg) {
  if (psi.dims.empty() || psi.dims[0] != 1)
    throw std::invalid_argument("grouped_psi_leg: leg 0 must be the 1-dim h-module");
  const int np = psi.size(), g = Vg.dim;
  std::vector<int> dims = {1, g};
  dims.insert(dims.end(), psi.dims.begin() + 1, psi.dims.end());
  SeriesMatrixL r(dims, psi.K);
  for (int b = 0; b < g; ++b) {
    const LambdaRat& w = Vg.weights[b];
    for (int k = 0; k <= psi.K; ++k)
      for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) {
          const LambdaRat& v = psi.at(k, i, j);
          if (is_zero(v)) continue;
          LambdaRat sv = lambda_shift(v, w);
          if (!sv.is_polynomial() && v.is_polynomial())
            throw std::domain_error("grouped_psi_leg: pole under substitution");
          r.at(k, b * np + i, b * np + j) = sv;
        }
  }
  return r;
}

SeriesMatrixC to_numeric(const SeriesMatrixL& m, const std::complex<double>& lambda) {
  SeriesMatrixC r(m.dims, m.K);
  for (int k = 0; k <= m.K; ++k)
    for (std::size_t i = 0; i < m.c[k].size(); ++i)
      r.c[k][i] = evaluate(m.c[k][i], lambda);
  return r;
}

}  // namespace braidrep::modrep
