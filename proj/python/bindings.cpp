#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidrep/abrr.hpp"
#include "braidrep/braid.hpp"
#include "braidrep/kz.hpp"

namespace py = pybind11;

using namespace braidrep;
using namespace braidrep::modrep;

namespace {

braid::RepDataL exact_rep(int n, int d, int N, bool qra, int order) {
  int km = order + (n - 1) * d + 1;
  ModuleData W = h_module(lambda_symbol(), km);
  ModuleData V = simple_module(d, N, km);
  return qra ? braid::make_algebraic_qra_rep(W, V, n, order)
             : braid::make_algebraic_rep(W, V, n, order);
}

bool qybe_exact(int d, int N, int order) {
  ModuleData V = simple_module(d, N, order);
  std::vector<int> dims = {V.dim, V.dim, V.dim};
  SeriesMatrixL R = rmatrix(V, V, order);
  SeriesMatrixL r12 = place_legs(R, {0, 1}, dims);
  SeriesMatrixL r13 = place_legs(R, {0, 2}, dims);
  SeriesMatrixL r23 = place_legs(R, {1, 2}, dims);
  return (r12 * r13 * r23 - r23 * r13 * r12).zero();
}

std::vector<std::pair<std::string, bool>> axioms(int d, int N, int order) {
  int km = order + d + 1;
  ModuleData W = h_module(lambda_symbol(), km);
  ModuleData V = simple_module(d, N, km);
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& [name, res] : braid::axioms_check(
           rmatrix(V, V, order), kmatrix(V, V, order), ematrix(W, V, order)))
    out.emplace_back(name, res.zero());
  return out;
}

std::vector<std::pair<std::string, bool>> presentation(int n, int d, int N,
                                                       int order) {
  braid::RepDataL rep = exact_rep(n, d, N, false, order);
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& [name, res] : braid::check_presentation(rep))
    out.emplace_back(name, res.zero());
  return out;
}

bool abrr_exact(int d, int N, int order) {
  int km = order + d;
  ModuleData W = h_module(lambda_symbol(), km);
  ModuleData V = simple_module(d, N, km);
  abrr::PsiSolution sol = abrr::solve_psi(W, V, V, order);
  std::vector<int> dims = {1, V.dim, V.dim};
  SeriesMatrixL E12 = place_legs(ematrix(W, V, order), {0, 1}, dims);
  SeriesMatrixL Rb23 = place_legs(abrr::rbar(V, V, order), {1, 2}, dims);
  return abrr::check_abrr(sol.psi, E12, Rb23).zero();
}

bool pentagon_exact(int d, int N, int order) {
  int km = order + d + 1;
  ModuleData W = h_module(lambda_symbol(), km);
  ModuleData V = simple_module(d, N, km);
  return abrr::mixed_pentagon_residual(W, V, order).zero();
}

bool octagon_exact(int d, int N, int order) {
  int km = order + d + 1;
  ModuleData W = h_module(lambda_symbol(), km);
  ModuleData V = simple_module(d, N, km);
  return abrr::octagon_residual(W, V, order).zero();
}

std::vector<double> kz_pentagon_profile(int N, std::complex<double> lam, int order) {
  int km = order + 3;
  ModuleData W = h_module(lambda_symbol(), km);
  ModuleData V = simple_module(1, N, km);
  return kz::residual_profile(kz::kz_pentagon_residual(W, V, N, lam, order));
}

std::vector<double> kz_octagon_profile(int N, std::complex<double> lam, int order) {
  int km = order + 3;
  ModuleData W = h_module(lambda_symbol(), km);
  ModuleData V = simple_module(1, N, km);
  return kz::residual_profile(kz::kz_octagon_residual(W, V, N, lam, order));
}

std::vector<std::pair<std::string, std::vector<double>>> compare_characters(
    const std::vector<std::string>& words, int n, int d, int N,
    std::complex<double> lam, int order) {
  int km = order + (n - 1) * d + 1;
  ModuleData W = h_module(lambda_symbol(), km);
  ModuleData V = simple_module(d, N, km);
  kz::RepDataC kzrep = kz::build_kz_qra(W, V, n, N, lam, order);
  kz::RepDataC alg = kz::cast_rep(braid::make_algebraic_rep(W, V, n, order), lam);
  std::vector<braid::BraidWord> parsed;
  for (const std::string& w : words) parsed.push_back(braid::parse_word(w, n));
  std::vector<std::pair<std::string, std::vector<double>>> out;
  for (const kz::WordDelta& wd : kz::compare_representations(kzrep, alg, parsed))
    out.emplace_back(wd.word, wd.delta_per_order);
  return out;
}

std::vector<std::string> enumerate_words(int n, int max_len, bool positive_start) {
  std::vector<std::string> out;
  for (const braid::BraidWord& w :
       braid::enumerate_reduced_words(n, max_len, positive_start))
    out.push_back(braid::word_to_string(w));
  return out;
}

}  // namespace

PYBIND11_MODULE(_braidrep, m) {
  m.doc() = "Type-B braid group representations: exact quantum-group side and "
            "numeric cyclotomic-KZ side";

  m.def("qybe_exact", &qybe_exact, py::arg("d"), py::arg("N"), py::arg("order"),
        "True iff the quantum Yang-Baxter residual on V(d)^3 vanishes exactly "
        "through the given hbar order.");
  m.def("axioms", &axioms, py::arg("d"), py::arg("N"), py::arg("order"),
        "Per-axiom exact pass/fail for (R, K, E) on V(d), cyclotomic order N.");
  m.def("presentation", &presentation, py::arg("n"), py::arg("d"), py::arg("N"),
        py::arg("order"),
        "Per-relation exact pass/fail of the type-B presentation under rho.");
  m.def("abrr_exact", &abrr_exact, py::arg("d"), py::arg("N"), py::arg("order"),
        "True iff the solved Psi satisfies the modified ABRR equation exactly.");
  m.def("pentagon_exact", &pentagon_exact, py::arg("d"), py::arg("N"),
        py::arg("order"),
        "True iff the mixed pentagon (Phi = 1) holds exactly for the solved Psi.");
  m.def("octagon_exact", &octagon_exact, py::arg("d"), py::arg("N"), py::arg("order"),
        "True iff the octagon holds exactly for (E, sigma, R) and the solved Psi.");
  m.def("kz_pentagon_profile", &kz_pentagon_profile, py::arg("N"), py::arg("lam"),
        py::arg("order"),
        "Max |entry| per hbar order of the KZ mixed-pentagon residual.");
  m.def("kz_octagon_profile", &kz_octagon_profile, py::arg("N"), py::arg("lam"),
        py::arg("order"),
        "Max |entry| per hbar order of the KZ octagon residual.");
  m.def("compare_characters", &compare_characters, py::arg("words"), py::arg("n"),
        py::arg("d"), py::arg("N"), py::arg("lam"), py::arg("order"),
        "Per-word, per-order |tr rho_KZ(w) - tr rho_alg(w)| for words like "
        "'t s1^-1'.");
  m.def("enumerate_words", &enumerate_words, py::arg("n"), py::arg("max_len"),
        py::arg("positive_start") = true,
        "Freely reduced words over tau and the braid generators.");
}
