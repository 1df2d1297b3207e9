#ifndef WALIGN_GEOM_HPP
#define WALIGN_GEOM_HPP

#include "walign/perm.hpp"

namespace walign {

struct SmoothnessReport {
  BruhatInterval interval;
  Permutation fixed_point;
  int deodhar_count = 0;
  int codim_bound = 0;  // l(w) - l(v)
  bool smooth_at_point = false;
};

// Counts transpositions t_{ab} (all of them, not only covers) with
// u t_{ab} in [v, w]; equality with l(w) - l(v) certifies smoothness at u.
SmoothnessReport deodhar_count(const Permutation& u, const Permutation& v,
                               const Permutation& w);

enum class SmoothnessMode { two_point, all_points };

// two_point checks the Deodhar equality at v and w only; all_points checks
// every member of the interval.
bool is_smooth_richardson(const Permutation& v, const Permutation& w, SmoothnessMode mode);

std::string to_string(const SmoothnessReport& r);

}  // namespace walign

#endif
