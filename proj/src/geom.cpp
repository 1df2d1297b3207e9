#include "walign/geom.hpp"

#include <sstream>

namespace walign {

SmoothnessReport deodhar_count(const Permutation& u, const Permutation& v,
                               const Permutation& w) {
  if (!bruhat_leq(v, u) || !bruhat_leq(u, w))
    throw DomainError("deodhar_count: fixed point is outside the interval");
  const int n = std::max({u.window(), v.window(), w.window()});
  int count = 0;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      Permutation x = compose(u, Permutation::transposition(a, b));
      if (bruhat_leq(v, x) && bruhat_leq(x, w)) ++count;
    }
  }
  SmoothnessReport r{BruhatInterval(v, w), u, count, length(w) - length(v), false};
  internal_check(r.deodhar_count >= r.codim_bound,
                 "Deodhar count fell below the codimension bound");
  r.smooth_at_point = r.deodhar_count == r.codim_bound;
  return r;
}

bool is_smooth_richardson(const Permutation& v, const Permutation& w, SmoothnessMode mode) {
  if (!bruhat_leq(v, w)) throw DomainError("is_smooth_richardson: v not below w");
  if (mode == SmoothnessMode::two_point)
    return deodhar_count(v, v, w).smooth_at_point && deodhar_count(w, v, w).smooth_at_point;
  for (const Permutation& u : interval(v, w))
    if (!deodhar_count(u, v, w).smooth_at_point) return false;
  return true;
}

std::string to_string(const SmoothnessReport& r) {
  std::ostringstream out;
  out << "u=" << to_string(r.fixed_point) << " count=" << r.deodhar_count
      << " bound=" << r.codim_bound << " smooth=" << (r.smooth_at_point ? "true" : "false");
  return out.str();
}

}  // namespace walign
