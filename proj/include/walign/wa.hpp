#ifndef WALIGN_WA_HPP
#define WALIGN_WA_HPP

#include <utility>
#include <vector>

#include "walign/schubert.hpp"

namespace walign {

// v^{-1}(1) <= w^{-1}(1), and v ascends on [v^{-1}(1), w^{-1}(1)-1].
bool is_aligned(const Permutation& v, const Permutation& w);

// Aligned, recursively after deleting 1 from both.
bool is_well_aligned(const Permutation& v, const Permutation& w);

// Well-aligned, and additionally w descends on [v^{-1}(1), w^{-1}(1)-1]
// at every recursion level. Equivalent (tested) to
// is_well_aligned(v, w) && is_well_aligned(w w_o, v w_o).
bool is_very_well_aligned(const Permutation& v, const Permutation& w);

// (s_i v, s_i w) for critical i; asserts the exchanged pair is still
// well-aligned, both lengths grew by 1, and s_i v is not below w.
std::pair<Permutation, Permutation> swap_lift(const Permutation& v, const Permutation& w,
                                              int i);

// (v^, v^ v^{-1} w): the translation-equivalent pair with dominant bottom.
std::pair<Permutation, Permutation> dominant_form(const Permutation& v,
                                                  const Permutation& w);

// Set equality of {bottom^{-1} u : u in interval}; brute force.
bool translation_equivalent(const BruhatInterval& a, const BruhatInterval& b);

struct PieriChain {
  Permutation start;
  int k = 0;
  std::vector<std::pair<int, int>> covers;  // transpositions (a_t, b_t)
};

// All saturated k-Bruhat chains of length k from u: each step a Bruhat
// cover by t_{ab} with a <= k < b, left indices pairwise distinct and right
// indices weakly increasing along the chain. Endpoints are pairwise
// distinct (asserted), matching the multiplicity-one Pieri expansion.
std::vector<std::pair<Permutation, PieriChain>> pieri_step(const Permutation& u, int k);

// Chain counts after multiplying by x1..x_{k} for each k in ks (weakly
// decreasing); equals the expansion of S_v S_u for the dominant v with
// code(v^{-1}) = ks.
SchubertExpansion iterated_pieri(const Permutation& u, const std::vector<int>& ks);

// c^w_{u,v} for well-aligned (v, w) via the dominant reduction + Pieri.
Int wa_coeff(const Permutation& u, const Permutation& v, const Permutation& w);

// The full map {u -> c^w_{u,v}} for well-aligned (v, w), computed by
// enumerating the Pieri chains downward from the dominant-form top.
SchubertExpansion interval_coefficients(const Permutation& v, const Permutation& w);

}  // namespace walign

#endif
