#pragma once

#include <complex>
#include <string>
#include <vector>

#include "braidrep/braid.hpp"
#include "braidrep/modrep.hpp"

namespace braidrep::kz {

using Complex = std::complex<double>;
using braidrep::braid::BraidWord;
using braidrep::braid::RepDataC;
using braidrep::braid::RepDataL;
using braidrep::modrep::ModuleData;
using braidrep::modrep::SeriesMatrixC;

// Dense complex n x n matrix, row-major.
using CMatrix = std::vector<Complex>;

// Fuchsian connection d/dz G = hbar A(z) G with
// A(z) = (1/2 pi i) sum_p residues[p] / (z - poles[p]).
// Residues are the coefficients of 1/(z - p); systems stated with a
// 1/(p - z) factor enter with the sign folded in.
struct ConnectionSpec {
  int dim = 0;
  std::vector<Complex> poles;
  std::vector<CMatrix> residues;
};

struct HolonomyResult {
  SeriesMatrixC matrix;
  std::string path;
  std::vector<double> error_estimate;  // per hbar-order
  std::vector<double> eps_schedule;    // regularization schedule, empty if none
};

// Holonomy along the polygonal path through the given waypoints, order by
// hbar-order (Picard tower integrated as one ODE system), adaptive RK45.
HolonomyResult holonomy_series(const ConnectionSpec& spec,
                               const std::vector<Complex>& path, int K,
                               double tol = 1e-12);

// Regularized holonomy between two poles p0 -> p1 of the spec along the
// straight segment: lim_{eps -> 0} exp(-log(eps) B1) Hol(p1-eps <- p0+eps)
// exp(log(eps) B0) with B_j = hbar residue_j/(2 pi i). The limit of the
// eps-schedule's finest value is returned; error estimates come from the
// schedule differences.
HolonomyResult regularized_holonomy(const ConnectionSpec& spec, std::size_t from_pole,
                                    std::size_t to_pole, int K);

// The associator system dG = hbar/(2 pi i) (t12/z + t23/(1-z)) G on
// V1 (x) V2 (x) V3 (classical casimir actions).
ConnectionSpec g_system(const ModuleData& V1, const ModuleData& V2,
                        const ModuleData& V3, Complex lambda);

// The cyclotomic system dH = hbar/(2 pi i) (N(th^{0,1} + th^{1,1}/2)/z
// + sum_a (sigma^a (x) id) t^{1,2}/(z - zeta_N^a)) H on the B-leg (weights bw,
// e.g. {lambda} for W or {lambda + w_i} for a grouped leg) (x) V2 (x) V3.
ConnectionSpec h_system(const std::vector<Complex>& bw, const ModuleData& V2,
                        const ModuleData& V3, int N, Complex lambda);

// Phi_KZ = G_0^{-1} G_1 on V^{(x)3} and Psi_KZ = H_1^{-1} H_0 on W (x) V2 (x) V3.
SeriesMatrixC phi_kz(const ModuleData& V, Complex lambda, int K);
SeriesMatrixC psi_kz(const std::vector<Complex>& bw, const ModuleData& V2,
                     const ModuleData& V3, int N, Complex lambda, int K);

// e^{hbar t/2} and e^{hbar t_h/2} on V (x) V, numerically at lambda.
SeriesMatrixC r_kz(const ModuleData& V, Complex lambda, int K);
SeriesMatrixC k_kz(const ModuleData& V, Complex lambda, int K);

// Assembles the analytic representation data: R = e^{hbar t/2}, E = E_KZ,
// Psi = Psi_KZ (n = 2) or Psi^{0,1,23} (n = 3, with Phi = Phi_KZ).
// W must carry the formal lambda (specialized numerically here).
RepDataC build_kz_qra(const ModuleData& W, const ModuleData& V, int n, int N,
                      Complex lambda, int K);

// Exact representation data cast to the numeric ring at lambda.
RepDataC cast_rep(const RepDataL& d, Complex lambda);

// Residuals of the mixed pentagon (with Phi_KZ) and the octagon (with
// E_KZ, e^{hbar t/2}) for Psi_KZ; max |entry| per order must be < tol.
SeriesMatrixC kz_pentagon_residual(const ModuleData& W, const ModuleData& V, int N,
                                   Complex lambda, int K);
SeriesMatrixC kz_octagon_residual(const ModuleData& W, const ModuleData& V, int N,
                                  Complex lambda, int K);

struct WordDelta {
  std::string word;
  std::vector<double> delta_per_order;
};

// Per-word, per-order |tr rho_A(w) - tr rho_B(w)|.
std::vector<WordDelta> compare_representations(const RepDataC& a, const RepDataC& b,
                                               const std::vector<BraidWord>& words);

// Max |entry| of each hbar-order coefficient.
std::vector<double> residual_profile(const SeriesMatrixC& m);

}  // namespace braidrep::kz
