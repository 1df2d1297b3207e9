#include "walign/schubert.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "walign/wa.hpp"

namespace walign {

namespace {

std::shared_mutex schub_mutex;
std::map<Permutation, IntPolynomial> schub_memo;

}  // namespace

IntPolynomial schubert_poly(const Permutation& u) {
  {
    std::shared_lock lock(schub_mutex);
    auto it = schub_memo.find(u);
    if (it != schub_memo.end()) return it->second;
  }
  const int n = std::max(u.window(), 1);
  Monomial stair;
  for (int e = n - 1; e >= 1; --e) stair.push_back(e);
  IntPolynomial f = IntPolynomial::monomial(std::move(stair));
  f = partial_w(compose(inverse(u), Permutation::longest(n)), f);
  {
    std::unique_lock lock(schub_mutex);
    schub_memo.emplace(u, f);
  }
  return f;
}

SchubertExpansion expand_schubert(const IntPolynomial& f) {
  auto deg = homogeneous_degree(f);
  if (!deg) throw DomainError("expand_schubert: polynomial is not homogeneous");
  SchubertExpansion out;
  IntPolynomial rem = f;
  // The map's lexicographic monomial order (x1 exponent first, smaller
  // first) makes x^{code(w)} the leading monomial of S_w, with unit
  // coefficient, so greedy subtraction terminates.
  int guard = 0;
  while (!rem.is_zero()) {
    internal_check(++guard < 2000000, "expand_schubert failed to terminate");
    const auto& [mono, c] = *rem.terms().begin();
    Permutation w = Permutation::from_lehmer(mono);
    internal_check(length(w) == *deg, "expand_schubert: leading code has wrong length");
    out.coefficients[w] += c;
    rem = sub(rem, scale(schubert_poly(w), c));
  }
  for (auto it = out.coefficients.begin(); it != out.coefficients.end();)
    it = it->second == 0 ? out.coefficients.erase(it) : std::next(it);
  // reconstruction check
  IntPolynomial back;
  for (const auto& [w, c] : out.coefficients) back = add(back, scale(schubert_poly(w), c));
  internal_check(back == f, "expand_schubert: reconstruction mismatch");
  return out;
}

Int lr_coeff(const Permutation& u, const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(u, w) || !bruhat_leq(v, w)) return 0;
  return ev0(partial_w(w, mul(schubert_poly(u), schubert_poly(v))));
}

Int phi_functional(const Permutation& v, const Permutation& w, const IntPolynomial& f) {
  return ev0(partial_w(w, mul(f, schubert_poly(v))));
}

Int apply_word(const OperatorWord& word, const IntPolynomial& f) {
  IntPolynomial cur = f;
  for (size_t t = 0; t < word.atoms.size(); ++t) {
    const OperatorAtom& a = word.atoms[t];
    switch (a.kind) {
      case OperatorAtom::DD:
        cur = divided_difference(a.index, cur);
        break;
      case OperatorAtom::BS:
        cur = bs_operator(a.index, cur);
        break;
      case OperatorAtom::EV0:
        internal_check(t + 1 == word.atoms.size(), "EV0 atom not terminal");
        return ev0(cur);
    }
  }
  throw InternalError("operator word has no terminal EV0");
}

OperatorWord phi_word_general(const Permutation& v, const Permutation& w) {
  if (!is_well_aligned(v, w))
    throw DomainError("phi_word_general: pair is not well-aligned");
  OperatorWord word;
  Permutation cv = v, cw = w;
  int n = std::max({cv.window(), cw.window(), 1});
  while (n >= 1) {
    int i = inverse(cv)(1), j = inverse(cw)(1);
    for (int t = j - 1; t >= i; --t) word.atoms.push_back({OperatorAtom::DD, t});
    word.atoms.push_back({OperatorAtom::BS, i});
    cv = delta_remove(cv);
    cw = delta_remove(cw);
    --n;
  }
  word.atoms.push_back({OperatorAtom::EV0, 0});
  return word;
}

OperatorWord phi_word_dominant(const Permutation& v, const Permutation& w) {
  if (!is_dominant(v)) throw DomainError("phi_word_dominant: bottom is not dominant");
  if (!is_well_aligned(v, w))
    throw DomainError("phi_word_dominant: pair is not well-aligned");
  const int n = std::max({v.window(), w.window(), 1});
  BoxSet dv = rothe_diagram(v), dw = rothe_diagram(w);
  std::vector<int> r(n, 0);
  for (const auto& [row, col] : dw)
    if (!dv.count({row, col})) ++r[row - 1];
  std::vector<int> c = lehmer_code(inverse(v));
  c.resize(n, 0);
  OperatorWord word;
  for (int i = 0; i < n; ++i) {
    for (int t = r[i]; t >= 1; --t) word.atoms.push_back({OperatorAtom::DD, c[i] + t});
    word.atoms.push_back({OperatorAtom::BS, c[i] + 1});
  }
  word.atoms.push_back({OperatorAtom::EV0, 0});
  return word;
}

std::string to_string(const OperatorWord& word) {
  std::string out;
  for (const auto& a : word.atoms) {
    if (!out.empty()) out += ' ';
    switch (a.kind) {
      case OperatorAtom::DD: out += "d" + std::to_string(a.index); break;
      case OperatorAtom::BS: out += "pi" + std::to_string(a.index); break;
      case OperatorAtom::EV0: out += "ev0"; break;
    }
  }
  return out;
}

std::string to_string(const SchubertExpansion& e, int window) {
  std::vector<std::pair<Permutation, Int>> items(e.coefficients.begin(), e.coefficients.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int la = length(a.first), lb = length(b.first);
    if (la != lb) return la < lb;
    return a.first < b.first;
  });
  std::ostringstream out;
  for (const auto& [p, c] : items)
    out << c << "  " << to_string(p, window) << "\n";
  return out.str();
}

}  // namespace walign
