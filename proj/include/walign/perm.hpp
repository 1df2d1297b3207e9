#ifndef WALIGN_PERM_HPP
#define WALIGN_PERM_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "walign/errors.hpp"

namespace walign {

// A permutation of {1..n} in one-line notation, viewed inside S_infinity:
// trailing fixed points are trimmed, so 1432 and 14325 are the same object.
// Positions and values are 1-indexed; p(i) = i beyond the stored window.
class Permutation {
 public:
  Permutation() = default;  // identity
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity() { return Permutation(); }
  static Permutation simple(int i);               // s_i
  static Permutation transposition(int a, int b); // t_{ab}, a != b
  static Permutation longest(int n);              // w_o = n (n-1) ... 1
  static Permutation coxeter(int n);              // s_{n-1} ... s_2 s_1
  static Permutation from_lehmer(const std::vector<int>& code);

  int window() const { return static_cast<int>(vals_.size()); }
  int operator()(int i) const {
    return (i >= 1 && i <= window()) ? vals_[i - 1] : i;
  }
  const std::vector<int>& values() const { return vals_; }
  std::vector<int> one_line(int n) const;  // padded to window n

  // Position of value v, i.e. p^{-1}(v).
  int position_of(int v) const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> vals_;
};

Permutation compose(const Permutation& p, const Permutation& q);  // (p.q)(i)=p(q(i))
Permutation inverse(const Permutation& p);
int length(const Permutation& p);
std::set<int> descents(const Permutation& p);
bool bruhat_leq(const Permutation& u, const Permutation& v);

// Smallest descent of u certifying u <=_B v fails; absent when u <=_B v.
std::optional<int> witness(const Permutation& u, const Permutation& v);

// {u : v <=_B u <=_B w}; rejects v !<=_B w.
std::set<Permutation> interval(const Permutation& v, const Permutation& w);

// Bruhat covers u -| u t_{ab} inside window n, with the transposition used.
std::vector<std::pair<Permutation, std::pair<int, int>>> bruhat_covers_up(
    const Permutation& u, int n);

// Bruhat covers u t_{ab} |- u inside window n (length drops by one).
std::vector<std::pair<Permutation, std::pair<int, int>>> bruhat_covers_down(
    const Permutation& u, int n);

std::vector<int> lehmer_code(const Permutation& p);

// Boxes (value row, position column), 1-indexed.
using BoxSet = std::set<std::pair<int, int>>;
BoxSet rothe_diagram(const Permutation& p);

bool is_dominant(const Permutation& p);
bool dominant_bruhat_leq(const Permutation& v, const Permutation& w);

Permutation eps_insert(const Permutation& w, int j);  // insert 1 at position j
Permutation delta_remove(const Permutation& w);       // delete the 1

std::set<int> critical_set(const Permutation& w);

struct DominantLift {
  Permutation lifted;       // v^ (dominant)
  std::vector<int> swaps;   // critical indices applied, in order
};
// Left-multiplies by s_i for critical i (always the smallest) until dominant.
DominantLift dominant_lift(const Permutation& v);

struct BruhatInterval {
  Permutation bottom, top;
  BruhatInterval(Permutation v, Permutation w);
  auto operator<=>(const BruhatInterval&) const = default;
};

Permutation parse_permutation(const std::string& text);
std::string to_string(const Permutation& p, int window = 0);

}  // namespace walign

#endif
