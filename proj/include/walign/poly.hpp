#ifndef WALIGN_POLY_HPP
#define WALIGN_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "walign/perm.hpp"

namespace walign {

using Int = boost::multiprecision::cpp_int;

// Exponent vector (x1, x2, ...), trailing zeros trimmed.
using Monomial = std::vector<int>;

Monomial trim_monomial(Monomial m);
int degree(const Monomial& m);

// Sparse exact-integer polynomial in countably many variables.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  static IntPolynomial constant(Int c);
  static IntPolynomial monomial(Monomial m, Int c = 1);

  const std::map<Monomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_variables() const;

  void add_term(Monomial m, Int c);  // canonicalizes, drops zeros

  bool operator==(const IntPolynomial& o) const { return terms_ == o.terms_; }

 private:
  std::map<Monomial, Int> terms_;
};

IntPolynomial add(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial sub(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial mul(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial scale(const IntPolynomial& f, const Int& c);

IntPolynomial s_action(int i, const IntPolynomial& f);

// (f - s_i f)/(x_i - x_{i+1}), computed termwise via the exact
// geometric-sum expansion of (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a)/(x_i - x_{i+1}).
IntPolynomial divided_difference(int i, const IntPolynomial& f);

// Applies one reduced word of w (leftmost-descent greedy).
IntPolynomial partial_w(const Permutation& w, const IntPolynomial& f);

// pi_i: substitute 0 for x_i and shift later variables down one slot.
IntPolynomial bs_operator(int i, const IntPolynomial& f);

Int ev0(const IntPolynomial& f);

// Degree if homogeneous (0 for the zero polynomial), absent otherwise.
std::optional<int> homogeneous_degree(const IntPolynomial& f);

// w = s_{word[0]} ... s_{word.back()}, reduced, chosen by leftmost descent.
std::vector<int> reduced_word(const Permutation& w);

// Canonical rendering: terms in descending graded-reverse-lexicographic
// order, "x1^3 x2^3", unit coefficients elided, "0" for the zero polynomial.
std::string to_string(const IntPolynomial& f);

// Cap on the number of variables a polynomial may touch; configurable via
// the WALIGN_MAX_VARS environment variable (default 16). Exceeding it
// raises DomainError so census runs fail fast instead of thrashing.
int max_variables();

}  // namespace walign

#endif
