#include "braidrep/braid.hpp"

#include <sstream>

namespace braidrep::braid {

using braidrep::abrr::solve_psi;
using braidrep::modrep::ematrix;
using braidrep::modrep::kmatrix;
using braidrep::modrep::rmatrix;
using braidrep::modrep::tensor_module;

BraidWord parse_word(const std::string& text, int n) {
  BraidWord w;
  w.n = n;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    BraidLetter l;
    std::string base = tok;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      if (e == "1")
        l.exp = 1;
      else if (e == "-1")
        l.exp = -1;
      else
        throw std::invalid_argument("parse_word: exponent must be 1 or -1: " + tok);
    }
    if (base == "t") {
      l.gen = 0;
    } else if (base.size() >= 2 && base[0] == 's') {
      l.gen = std::stoi(base.substr(1));
      if (l.gen < 1 || l.gen >= n)
        throw std::out_of_range("parse_word: sigma index out of range: " + tok);
    } else {
      throw std::invalid_argument("parse_word: bad letter: " + tok);
    }
    w.letters.push_back(l);
  }
  return w;
}

std::string word_to_string(const BraidWord& w) {
  std::string out;
  for (const BraidLetter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += l.gen == 0 ? "t" : "s" + std::to_string(l.gen);
    if (l.exp == -1) out += "^-1";
  }
  return out;
}

BraidWord inverse_word(const BraidWord& w) {
  BraidWord r;
  r.n = w.n;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->gen, -it->exp});
  return r;
}

BraidWord concat_words(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw std::invalid_argument("concat_words: strand count mismatch");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

std::vector<BraidWord> enumerate_reduced_words(int n, int max_len, bool positive_start) {
  std::vector<BraidLetter> alphabet;
  for (int g = 0; g < n; ++g)
    for (int e : {1, -1}) alphabet.push_back({g, e});
  std::vector<BraidWord> out;
  std::vector<BraidLetter> cur;
  auto rec = [&](auto&& self, int len) -> void {
    if (len == 0) return;
    for (const BraidLetter& l : alphabet) {
      if (!cur.empty() && cur.back().gen == l.gen && cur.back().exp == -l.exp) continue;
      if (cur.empty() && positive_start && l.exp != 1) continue;
      cur.push_back(l);
      out.push_back({n, cur});
      self(self, len - 1);
      cur.pop_back();
    }
  };
  rec(rec, max_len);
  return out;
}

RepDataL make_algebraic_rep(const ModuleData& W, const ModuleData& V, int n, int K) {
  if (n < 1) throw std::invalid_argument("make_algebraic_rep: n must be >= 1");
  RepDataL d;
  d.qra = false;
  d.n = n;
  d.K = K;
  d.dims.assign(1, W.dim);
  for (int i = 0; i < n; ++i) d.dims.push_back(V.dim);
  d.Rvv = rmatrix(V, V, K);
  d.Kvv = kmatrix(V, V, K);
  d.Ewv = ematrix(W, V, K);
  return d;
}

RepDataL make_algebraic_qra_rep(const ModuleData& W, const ModuleData& V, int n, int K) {
  if (n < 2 || n > 3)
    throw std::invalid_argument("make_algebraic_qra_rep: n must be 2 or 3");
  RepDataL d = make_algebraic_rep(W, V, n, K);
  d.qra = true;
  d.has_phi = false;  // Phi = 1 on the algebraic side
  if (n == 2) {
    d.psi_full = solve_psi(W, V, V, K).psi;
  } else {
    // Psi^{0,1,23}: (id (x) id (x) Delta)(Psi) computed by re-solving on the
    // tensor module, then re-splitting the grouped leg.
    ModuleData T = tensor_module(V, V);
    d.psi_full = solve_psi(W, V, T, K).psi;
    d.psi_full.dims = d.dims;
  }
  return d;
}

}  // namespace braidrep::braid
