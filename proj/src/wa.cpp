#include "walign/wa.hpp"

#include <algorithm>

namespace walign {

bool is_aligned(const Permutation& v, const Permutation& w) {
  const int i = inverse(v)(1), j = inverse(w)(1);
  if (i > j) return false;
  for (int t = i; t < j; ++t)
    if (v(t) > v(t + 1)) return false;
  return true;
}

bool is_well_aligned(const Permutation& v, const Permutation& w) {
  Permutation cv = v, cw = w;
  while (std::max(cv.window(), cw.window()) > 1) {
    if (!is_aligned(cv, cw)) return false;
    cv = delta_remove(cv);
    cw = delta_remove(cw);
  }
  return true;
}

bool is_very_well_aligned(const Permutation& v, const Permutation& w) {
  Permutation cv = v, cw = w;
  while (std::max(cv.window(), cw.window()) > 1) {
    const int i = inverse(cv)(1), j = inverse(cw)(1);
    if (i > j) return false;
    for (int t = i; t < j; ++t) {
      if (cv(t) > cv(t + 1)) return false;  // must ascend in v
      if (cw(t) < cw(t + 1)) return false;  // must descend in w
    }
    cv = delta_remove(cv);
    cw = delta_remove(cw);
  }
  return true;
}

std::pair<Permutation, Permutation> swap_lift(const Permutation& v, const Permutation& w,
                                              int i) {
  if (!is_well_aligned(v, w)) throw DomainError("swap_lift: pair is not well-aligned");
  if (!critical_set(v).count(i))
    throw DomainError("swap_lift: index " + std::to_string(i) + " is not critical");
  internal_check(inverse(w)(i) < inverse(w)(i + 1),
                 "swap_lift: top fails the critical-position condition");
  Permutation si = Permutation::simple(i);
  Permutation v2 = compose(si, v), w2 = compose(si, w);
  internal_check(is_well_aligned(v2, w2), "swap_lift: exchanged pair lost well-alignment");
  internal_check(length(v2) == length(v) + 1 && length(w2) == length(w) + 1,
                 "swap_lift: lengths did not both rise by 1");
  internal_check(!bruhat_leq(v2, w), "swap_lift: s_i v unexpectedly below w");
  return {std::move(v2), std::move(w2)};
}

std::pair<Permutation, Permutation> dominant_form(const Permutation& v,
                                                  const Permutation& w) {
  if (!is_well_aligned(v, w)) throw DomainError("dominant_form: pair is not well-aligned");
  DominantLift lift = dominant_lift(v);
  Permutation w2 = compose(lift.lifted, compose(inverse(v), w));
  internal_check(is_dominant(lift.lifted), "dominant_form: lift is not dominant");
  internal_check(is_well_aligned(lift.lifted, w2),
                 "dominant_form: image pair is not well-aligned");
  return {std::move(lift.lifted), std::move(w2)};
}

bool translation_equivalent(const BruhatInterval& a, const BruhatInterval& b) {
  auto normalize = [](const BruhatInterval& iv) {
    std::set<Permutation> out;
    Permutation binv = inverse(iv.bottom);
    for (const Permutation& u : interval(iv.bottom, iv.top)) out.insert(compose(binv, u));
    return out;
  };
  return normalize(a) == normalize(b);
}

std::vector<std::pair<Permutation, PieriChain>> pieri_step(const Permutation& u, int k) {
  if (k < 0) throw DomainError("pieri_step: k must be nonnegative");
  const int amb = std::max(u.window(), k) + k;
  std::vector<std::pair<Permutation, PieriChain>> out;
  PieriChain chain{u, k, {}};
  std::vector<bool> used_a(k + 1, false);
  auto rec = [&](auto&& self, const Permutation& cur, int steps, int last_b) -> void {
    if (steps == k) {
      out.emplace_back(cur, chain);
      return;
    }
    for (auto& [next, ab] : bruhat_covers_up(cur, amb)) {
      auto [a, b] = ab;
      if (a > k || b <= k || used_a[a] || b < last_b) continue;
      used_a[a] = true;
      chain.covers.push_back(ab);
      self(self, next, steps + 1, b);
      chain.covers.pop_back();
      used_a[a] = false;
    }
  };
  rec(rec, u, 0, 0);
  std::set<Permutation> seen;
  for (const auto& [end, c] : out)
    internal_check(seen.insert(end).second, "pieri_step: repeated chain endpoint");
  return out;
}

SchubertExpansion iterated_pieri(const Permutation& u, const std::vector<int>& ks) {
  for (size_t t = 0; t < ks.size(); ++t) {
    if (ks[t] < 1) throw DomainError("iterated_pieri: entries must be >= 1");
    if (t > 0 && ks[t] > ks[t - 1])
      throw DomainError("iterated_pieri: ks must be weakly decreasing");
  }
  std::map<Permutation, Int> cur{{u, 1}};
  for (int k : ks) {
    std::map<Permutation, Int> next;
    for (const auto& [p, c] : cur)
      for (const auto& [end, chain] : pieri_step(p, k)) next[end] += c;
    cur = std::move(next);
  }
  SchubertExpansion out;
  out.coefficients = std::move(cur);
  return out;
}

namespace {

// Bottoms of all downward k-chains from x whose upward reading satisfies
// the Pieri conditions (distinct left indices, weakly increasing right
// indices), with chain counts.
std::map<Permutation, Int> reverse_pieri_step(const Permutation& x, int k) {
  const int amb = std::max(x.window(), k + 1);
  std::map<Permutation, Int> out;
  std::vector<bool> used_a(k + 1, false);
  auto rec = [&](auto&& self, const Permutation& cur, int steps, int prev_b) -> void {
    if (steps == k) {
      out[cur] += 1;
      return;
    }
    for (auto& [down, ab] : bruhat_covers_down(cur, amb)) {
      auto [a, b] = ab;
      if (a > k || b <= k || used_a[a] || b > prev_b) continue;
      used_a[a] = true;
      self(self, down, steps + 1, b);
      used_a[a] = false;
    }
  };
  rec(rec, x, 0, amb + 1);
  return out;
}

}  // namespace

SchubertExpansion interval_coefficients(const Permutation& v, const Permutation& w) {
  auto [vup, wup] = dominant_form(v, w);
  std::vector<int> ks = lehmer_code(inverse(vup));
  while (!ks.empty() && ks.back() == 0) ks.pop_back();
  std::map<Permutation, Int> cur{{wup, 1}};
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    std::map<Permutation, Int> next;
    for (const auto& [p, c] : cur)
      for (const auto& [bottom, cnt] : reverse_pieri_step(p, *it)) next[bottom] += c * cnt;
    cur = std::move(next);
  }
  SchubertExpansion out;
  out.coefficients = std::move(cur);
  return out;
}

Int wa_coeff(const Permutation& u, const Permutation& v, const Permutation& w) {
  auto [vup, wup] = dominant_form(v, w);
  std::vector<int> ks = lehmer_code(inverse(vup));
  while (!ks.empty() && ks.back() == 0) ks.pop_back();
  SchubertExpansion exp = iterated_pieri(u, ks);
  auto it = exp.coefficients.find(wup);
  return it == exp.coefficients.end() ? Int(0) : it->second;
}

}  // namespace walign
