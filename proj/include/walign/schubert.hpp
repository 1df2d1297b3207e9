#ifndef WALIGN_SCHUBERT_HPP
#define WALIGN_SCHUBERT_HPP

#include <map>
#include <string>
#include <vector>

#include "walign/poly.hpp"

namespace walign {

// Finite map permutation -> nonzero coefficient.
struct SchubertExpansion {
  std::map<Permutation, Int> coefficients;

  bool operator==(const SchubertExpansion&) const = default;
};

// S_u = partial_{u^{-1} w_o} (x1^{n-1} ... x_{n-1}); memoized, thread-safe.
IntPolynomial schubert_poly(const Permutation& u);

// Inverts the basis by greedy leading-monomial subtraction: the leading
// monomial of S_w under "lexicographically smallest exponent vector first"
// is x^{code(w)} with coefficient 1. The result is re-verified by
// reconstruction before returning.
SchubertExpansion expand_schubert(const IntPolynomial& f);

// c^w_{u,v} = ev0(partial_w(S_u * S_v)) -- the brute-force oracle.
Int lr_coeff(const Permutation& u, const Permutation& v, const Permutation& w);

// Phi^w_v(f) = ev0(partial_w(f * S_v)).
Int phi_functional(const Permutation& v, const Permutation& w, const IntPolynomial& f);

struct OperatorAtom {
  enum Kind { BS, DD, EV0 } kind;
  int index;  // unused for EV0

  bool operator==(const OperatorAtom&) const = default;
};

// Atoms stored in application order (first atom is applied first);
// the last atom is always EV0.
struct OperatorWord {
  std::vector<OperatorAtom> atoms;

  bool operator==(const OperatorWord&) const = default;
};

// Applies the word to f; the terminal EV0 yields the value.
Int apply_word(const OperatorWord& word, const IntPolynomial& f);

// Unrolls Phi^w_v = Phi^{delta(w)}_{delta(v)} pi_i d_i ... d_{j-1}
// with i = v^{-1}(1), j = w^{-1}(1); requires (v, w) well-aligned.
OperatorWord phi_word_general(const Permutation& v, const Permutation& w);

// Reads the word off the skew Rothe diagram D(w) \ D(v) and code(v^{-1});
// requires (v, w) well-aligned with v dominant.
OperatorWord phi_word_dominant(const Permutation& v, const Permutation& w);

std::string to_string(const OperatorWord& word);

// Lines "coefficient  permutation", sorted by length then lexicographically.
std::string to_string(const SchubertExpansion& e, int window = 0);

}  // namespace walign

#endif
