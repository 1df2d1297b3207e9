#ifndef WALIGN_ENUMCOUNT_HPP
#define WALIGN_ENUMCOUNT_HPP

#include <cstdint>
#include <vector>

#include "walign/perm.hpp"

namespace walign {

struct CensusResult {
  int n = 0;
  std::int64_t wa_count = 0;
  std::int64_t wa132_count = 0;
  std::int64_t very_wa_count = 0;
  std::int64_t equivalence_class_count = 0;  // WA^132 intervals up to translation
};

// Exhaustive scan of S_n x S_n, sharded over `jobs` worker threads.
// Deterministic: the result does not depend on the thread count.
CensusResult census(int n, int jobs = 1, int max_n = 8);

// Verifies 2 W' - W W' = W^2 coefficientwise for the EGF with
// counts[k] = |WA_k| (counts[0] must be 1), through order counts.size()-2.
bool check_functional_equation(const std::vector<std::int64_t>& counts);

std::vector<Permutation> all_permutations(int n);

}  // namespace walign

#endif
