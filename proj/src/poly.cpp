#include "walign/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "walign/testhooks.hpp"

namespace walign {

Monomial trim_monomial(Monomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

int max_variables() {
  static const int cap = [] {
    if (const char* s = std::getenv("WALIGN_MAX_VARS")) {
      int v = std::atoi(s);
      if (v > 0) return v;
    }
    return 16;
  }();
  return cap;
}

IntPolynomial IntPolynomial::constant(Int c) {
  IntPolynomial f;
  f.add_term({}, std::move(c));
  return f;
}

IntPolynomial IntPolynomial::monomial(Monomial m, Int c) {
  IntPolynomial f;
  f.add_term(std::move(m), std::move(c));
  return f;
}

int IntPolynomial::num_variables() const {
  int n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, static_cast<int>(m.size()));
  return n;
}

void IntPolynomial::add_term(Monomial m, Int c) {
  if (c == 0) return;
  m = trim_monomial(std::move(m));
  if (static_cast<int>(m.size()) > max_variables())
    throw DomainError("polynomial exceeds the variable cap (" +
                      std::to_string(max_variables()) + "); raise WALIGN_MAX_VARS");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial add(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial h = f;
  for (const auto& [m, c] : g.terms()) h.add_term(m, c);
  return h;
}

IntPolynomial sub(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial h = f;
  for (const auto& [m, c] : g.terms()) h.add_term(m, -c);
  return h;
}

IntPolynomial mul(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial h;
  for (const auto& [m1, c1] : f.terms()) {
    for (const auto& [m2, c2] : g.terms()) {
      Monomial m(std::max(m1.size(), m2.size()), 0);
      for (size_t i = 0; i < m1.size(); ++i) m[i] += m1[i];
      for (size_t i = 0; i < m2.size(); ++i) m[i] += m2[i];
      h.add_term(std::move(m), c1 * c2);
    }
  }
  return h;
}

IntPolynomial scale(const IntPolynomial& f, const Int& c) {
  IntPolynomial h;
  for (const auto& [m, k] : f.terms()) h.add_term(m, k * c);
  return h;
}

IntPolynomial s_action(int i, const IntPolynomial& f) {
  if (i < 1) throw DomainError("s_action index must be >= 1");
  IntPolynomial h;
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    if (static_cast<int>(mm.size()) < i + 1) mm.resize(i + 1, 0);
    std::swap(mm[i - 1], mm[i]);
    h.add_term(std::move(mm), c);
  }
  return h;
}

IntPolynomial divided_difference(int i, const IntPolynomial& f) {
  if (i < 1) throw DomainError("divided_difference index must be >= 1");
  const bool mut = testhooks::mutated(testhooks::Mutation::DividedDifference);
  IntPolynomial h;
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    if (static_cast<int>(mm.size()) < i + 1) mm.resize(i + 1, 0);
    const int a = mm[i - 1], b = mm[i];
    if (a == b) continue;  // antisymmetrization kills the pair
    const int sgn = (a > b || mut) ? 1 : -1;
    const int lo = std::min(a, b), hi = std::max(a, b);
    for (int t = lo; t < hi; ++t) {
      Monomial m2 = mm;
      m2[i - 1] = t;
      m2[i] = a + b - 1 - t;
      h.add_term(std::move(m2), sgn * c);
    }
  }
  return h;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation cur = w;
  while (cur.window() > 0) {
    int i = *descents(cur).begin();
    cur = compose(cur, Permutation::simple(i));
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

IntPolynomial partial_w(const Permutation& w, const IntPolynomial& f) {
  std::vector<int> word = reduced_word(w);
  IntPolynomial h = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) h = divided_difference(*it, h);
  return h;
}

IntPolynomial bs_operator(int i, const IntPolynomial& f) {
  if (i < 1) throw DomainError("bs_operator index must be >= 1");
  IntPolynomial h;
  for (const auto& [m, c] : f.terms()) {
    if (static_cast<int>(m.size()) >= i && m[i - 1] != 0) continue;
    Monomial m2(m.begin(), m.begin() + std::min<size_t>(i - 1, m.size()));
    for (size_t j = i; j < m.size(); ++j) m2.push_back(m[j]);
    h.add_term(std::move(m2), c);
  }
  return h;
}

Int ev0(const IntPolynomial& f) {
  auto it = f.terms().find(Monomial{});
  return it == f.terms().end() ? Int(0) : it->second;
}

std::optional<int> homogeneous_degree(const IntPolynomial& f) {
  if (f.is_zero()) return 0;
  int d = degree(f.terms().begin()->first);
  for (const auto& [m, c] : f.terms())
    if (degree(m) != d) return std::nullopt;
  return d;
}

namespace {

// true when a precedes b in descending grevlex: higher degree first, ties
// broken so that the last differing exponent is larger in b.
bool grevlex_before(const Monomial& a, const Monomial& b) {
  int da = degree(a), db = degree(b);
  if (da != db) return da > db;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = n; i-- > 0;) {
    int ea = i < a.size() ? a[i] : 0, eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, Int>*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [](auto* a, auto* b) { return grevlex_before(a->first, b->first); });
  std::ostringstream out;
  bool first = true;
  for (auto* t : terms) {
    const Int& c = t->second;
    std::string mono = render_monomial(t->first);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int ac = abs(c);
    if (ac != 1 || mono.empty()) {
      out << ac;
      if (!mono.empty()) out << ' ';
    }
    out << mono;
    first = false;
  }
  return out.str();
}

}  // namespace walign
