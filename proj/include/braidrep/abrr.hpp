#pragma once

#include "braidrep/modrep.hpp"

namespace braidrep::abrr {

using braidrep::modrep::ModuleData;
using braidrep::modrep::SeriesMatrix;
using braidrep::modrep::SeriesMatrixL;
using braidrep::uqsl2::LSeries;

// Solution of the modified ABRR equation on W (x) V2 (x) V3, graded by the
// n^- degree of leg 3 (row fdeg minus column fdeg).
struct PsiSolution {
  SeriesMatrixL psi;
  std::vector<SeriesMatrixL> blocks;  // blocks[m]; psi = sum_m blocks[m]
  int K = 0;
};

// Unipotent part of the R-matrix: sum_n c_n E^n (x) F^n (no Cartan factor).
SeriesMatrixL rbar(const ModuleData& A, const ModuleData& B, int K);

// Solves Psi = (Rbar^{-1})^{2,3} E^{1,2} Psi (E^{1,2})^{-1} with Psi_0 = 1,
// blockwise in the leg-3 grading. Degenerate blocks (sigma-ratio 1) are
// divided as valuation-shifted series over the lambda-rational field; the
// result must clear denominators or a domain_error("valuation lemma
// violated") is thrown.
PsiSolution solve_psi(const ModuleData& W, const ModuleData& V2, const ModuleData& V3,
                      int K);

// Residual of Psi E^{1,2} = (Rbar^{2,3})^{-1} E^{1,2} Psi. Inputs are already
// placed on the full space W (x) V2 (x) V3.
template <class R>
SeriesMatrix<R> check_abrr(const SeriesMatrix<R>& psi, const SeriesMatrix<R>& E12,
                           const SeriesMatrix<R>& Rbar23) {
  return psi * E12 - Rbar23.inverse() * E12 * psi;
}

// Residual of Psi^{1,2,34} Psi^{12,3,4} = Phi^{2,3,4} Psi^{1,23,4} Psi^{1,2,3}
// from prepared full-space matrices.
template <class R>
SeriesMatrix<R> check_mixed_pentagon(const SeriesMatrix<R>& psi_1_2_34,
                                     const SeriesMatrix<R>& psi_12_3_4,
                                     const SeriesMatrix<R>& phi_234,
                                     const SeriesMatrix<R>& psi_1_23_4,
                                     const SeriesMatrix<R>& psi_1_2_3) {
  return psi_1_2_34 * psi_12_3_4 - phi_234 * psi_1_23_4 * psi_1_2_3;
}

// Residual of (Delta_B (x) id)(E) =
//   Psi^{-1} R^{3,2} Psi^{1,3,2} E^{1,3} (Psi^{1,3,2})^{-1} R^{2,3} Psi.
template <class R>
SeriesMatrix<R> check_octagon(const SeriesMatrix<R>& lhs, const SeriesMatrix<R>& psi,
                              const SeriesMatrix<R>& psi132, const SeriesMatrix<R>& R32,
                              const SeriesMatrix<R>& E13, const SeriesMatrix<R>& R23) {
  return lhs - psi.inverse() * R32 * psi132 * E13 * psi132.inverse() * R23 * psi;
}

// Exact-side conveniences: build every insertion from (W, V, K) and return
// the residual. Phi = 1 on the algebraic side.
SeriesMatrixL mixed_pentagon_residual(const ModuleData& W, const ModuleData& V, int K);
SeriesMatrixL octagon_residual(const ModuleData& W, const ModuleData& V, int K);

// (Delta_B (x) id)(E_B) on W (x) V (x) V: the blockwise lambda -> lambda + w
// image of ematrix(W, V).
SeriesMatrixL coproduct_e_lhs(const ModuleData& W, const ModuleData& V, int K);

// Evaluates the symbolic twist blocks Psi_{q,m} (uqsl2::twist_term with
// shift nu = zeta_N) on W_lambda (x) V (x) V and returns the residual against
// the solve_psi blocks, for all m <= m_max.
SeriesMatrixL oracle_compare_shapovalov(const ModuleData& W, const ModuleData& V, int N,
                                        int K, int m_max);

}  // namespace braidrep::abrr
