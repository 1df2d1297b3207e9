#include "walign/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "walign/testhooks.hpp"

namespace walign {

namespace {

void trim_trailing_fixed(std::vector<int>& v) {
  while (!v.empty() && v.back() == static_cast<int>(v.size())) v.pop_back();
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : vals_(std::move(one_line)) {
  const int n = static_cast<int>(vals_.size());
  std::vector<int> seen(n + 1, 0);
  for (int x : vals_) {
    if (x < 1 || x > n)
      throw ParseError("value " + std::to_string(x) + " outside 1.." + std::to_string(n));
    if (++seen[x] > 1)
      throw ParseError("not a permutation: value " + std::to_string(x) + " is duplicated");
  }
  for (int x = 1; x <= n; ++x)
    if (!seen[x])
      throw ParseError("not a permutation: value " + std::to_string(x) + " is missing");
  trim_trailing_fixed(vals_);
}

Permutation Permutation::simple(int i) {
  if (i < 1) throw DomainError("simple transposition index must be >= 1");
  std::vector<int> v(i + 1);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int a, int b) {
  if (a == b || a < 1 || b < 1) throw DomainError("bad transposition");
  if (a > b) std::swap(a, b);
  std::vector<int> v(b);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[a - 1], v[b - 1]);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::coxeter(int n) {
  Permutation c;
  for (int i = n - 1; i >= 1; --i) c = compose(c, Permutation::simple(i));
  return c;
}

Permutation Permutation::from_lehmer(const std::vector<int>& code) {
  int n = static_cast<int>(code.size());
  int mx = 0;
  for (int c : code) {
    if (c < 0) throw DomainError("Lehmer code entries must be nonnegative");
    mx = std::max(mx, c);
  }
  n += mx + 1;
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (int c : code) {
    out.push_back(avail[c]);
    avail.erase(avail.begin() + c);
  }
  out.insert(out.end(), avail.begin(), avail.end());
  return Permutation(std::move(out));
}

std::vector<int> Permutation::one_line(int n) const {
  std::vector<int> out(std::max(n, window()));
  for (int i = 1; i <= static_cast<int>(out.size()); ++i) out[i - 1] = (*this)(i);
  return out;
}

int Permutation::position_of(int v) const {
  for (int i = 1; i <= window(); ++i)
    if (vals_[i - 1] == v) return i;
  return v;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  const int n = std::max(p.window(), q.window());
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = p(q(i));
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p) {
  const int n = p.window();
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[p(i) - 1] = i;
  return Permutation(std::move(out));
}

int length(const Permutation& p) {
  const int n = p.window();
  int inv = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) ++inv;
  return inv;
}

std::set<int> descents(const Permutation& p) {
  std::set<int> d;
  for (int i = 1; i < p.window(); ++i)
    if (p(i) > p(i + 1)) d.insert(i);
  return d;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.window(), v.window());
  // improved tableau criterion: sorted-prefix comparison only at descents of u
  std::vector<int> up = u.one_line(n), vp = v.one_line(n);
  for (int k : descents(u)) {
    std::vector<int> us(up.begin(), up.begin() + k), vs(vp.begin(), vp.begin() + k);
    std::sort(us.begin(), us.end());
    std::sort(vs.begin(), vs.end());
    for (int t = 0; t < k; ++t) {
      bool bad = testhooks::mutated(testhooks::Mutation::BruhatLeq) ? us[t] > vs[t] + 1
                                                                    : us[t] > vs[t];
      if (bad) return false;
    }
  }
  return true;
}

std::optional<int> witness(const Permutation& u, const Permutation& v) {
  const int n = std::max(u.window(), v.window());
  std::vector<int> up = u.one_line(n), vp = v.one_line(n);
  for (int k : descents(u)) {
    std::vector<int> us(up.begin(), up.begin() + k), vs(vp.begin(), vp.begin() + k);
    std::sort(us.begin(), us.end());
    std::sort(vs.begin(), vs.end());
    for (int t = 0; t < k; ++t)
      if (us[t] > vs[t]) return k;
  }
  return std::nullopt;
}

std::vector<std::pair<Permutation, std::pair<int, int>>> bruhat_covers_up(
    const Permutation& u, int n) {
  n = std::max(n, u.window());
  std::vector<int> up = u.one_line(n);
  std::vector<std::pair<Permutation, std::pair<int, int>>> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (up[a - 1] >= up[b - 1]) continue;
      bool blocked = false;
      for (int c = a + 1; c < b && !blocked; ++c)
        if (up[a - 1] < up[c - 1] && up[c - 1] < up[b - 1]) blocked = true;
      if (blocked) continue;
      std::vector<int> x = up;
      std::swap(x[a - 1], x[b - 1]);
      out.emplace_back(Permutation(std::move(x)), std::make_pair(a, b));
    }
  }
  return out;
}

std::vector<std::pair<Permutation, std::pair<int, int>>> bruhat_covers_down(
    const Permutation& u, int n) {
  n = std::max(n, u.window());
  std::vector<int> up = u.one_line(n);
  std::vector<std::pair<Permutation, std::pair<int, int>>> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (up[a - 1] <= up[b - 1]) continue;
      bool blocked = false;
      for (int c = a + 1; c < b && !blocked; ++c)
        if (up[b - 1] < up[c - 1] && up[c - 1] < up[a - 1]) blocked = true;
      if (blocked) continue;
      std::vector<int> x = up;
      std::swap(x[a - 1], x[b - 1]);
      out.emplace_back(Permutation(std::move(x)), std::make_pair(a, b));
    }
  }
  return out;
}

std::set<Permutation> interval(const Permutation& v, const Permutation& w) {
  if (!bruhat_leq(v, w)) throw DomainError("interval: bottom not <=_B top");
  const int n = std::max(v.window(), w.window());
  std::set<Permutation> seen{v};
  std::deque<Permutation> frontier{v};
  while (!frontier.empty()) {
    Permutation u = frontier.front();
    frontier.pop_front();
    for (auto& [x, t] : bruhat_covers_up(u, n)) {
      (void)t;
      if (!seen.count(x) && bruhat_leq(x, w)) {
        seen.insert(x);
        frontier.push_back(x);
      }
    }
  }
  return seen;
}

std::vector<int> lehmer_code(const Permutation& p) {
  const int n = p.window();
  std::vector<int> code(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(j) < p(i)) ++code[i - 1];
  if (testhooks::mutated(testhooks::Mutation::LehmerCode))
    for (int i = 0; i < n; ++i)
      if (code[i]) --code[i];
  return code;
}

BoxSet rothe_diagram(const Permutation& p) {
  const int n = p.window();
  BoxSet boxes;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) boxes.insert({p(j), i});
  return boxes;
}

bool is_dominant(const Permutation& p) {
  const int n = p.window();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (p(i) < p(k) && p(k) < p(j)) return false;
  return true;
}

bool dominant_bruhat_leq(const Permutation& v, const Permutation& w) {
  if (!is_dominant(v)) throw DomainError("dominant_bruhat_leq: bottom is not dominant");
  BoxSet dv = rothe_diagram(v), dw = rothe_diagram(w);
  return std::includes(dw.begin(), dw.end(), dv.begin(), dv.end());
}

Permutation eps_insert(const Permutation& w, int j) {
  if (j < 1) throw DomainError("eps_insert: position out of range");
  // w(t) = t beyond the stored window, so any insertion point is valid.
  const int n = std::max(w.window(), j - 1);
  std::vector<int> out;
  out.reserve(n + 1);
  for (int t = 1; t < j; ++t) out.push_back(w(t) + 1);
  out.push_back(1);
  for (int t = j; t <= n; ++t) out.push_back(w(t) + 1);
  return Permutation(std::move(out));
}

Permutation delta_remove(const Permutation& w) {
  const int n = w.window();
  if (n == 0) return Permutation();
  std::vector<int> out;
  out.reserve(n - 1);
  for (int t = 1; t <= n; ++t)
    if (w(t) != 1) out.push_back(w(t) - 1);
  return Permutation(std::move(out));
}

std::set<int> critical_set(const Permutation& w) {
  const int n = w.window();
  std::set<int> out;
  for (int i = 1; i < n; ++i) {
    int pi = w.position_of(i), pi1 = w.position_of(i + 1);
    if (pi >= pi1) continue;
    for (int c = pi + 1; c < pi1; ++c)
      if (w(c) > i + 1) {
        out.insert(i);
        break;
      }
  }
  return out;
}

DominantLift dominant_lift(const Permutation& v) {
  DominantLift out{v, {}};
  for (;;) {
    std::set<int> crit = critical_set(out.lifted);
    if (crit.empty()) return out;
    int i = *crit.begin();
    out.swaps.push_back(i);
    out.lifted = compose(Permutation::simple(i), out.lifted);
  }
}

BruhatInterval::BruhatInterval(Permutation v, Permutation w)
    : bottom(std::move(v)), top(std::move(w)) {
  if (!bruhat_leq(bottom, top)) throw DomainError("BruhatInterval: bottom not <=_B top");
}

Permutation parse_permutation(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<int> vals;
  std::string tok;
  while (in >> tok) {
    try {
      size_t pos = 0;
      int x = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      vals.push_back(x);
    } catch (const std::exception&) {
      throw ParseError("bad permutation token '" + tok + "'");
    }
  }
  if (vals.empty()) throw ParseError("empty permutation");
  return Permutation(std::move(vals));
}

std::string to_string(const Permutation& p, int window) {
  const int n = std::max({window, p.window(), 1});
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p(i));
  }
  return out;
}

}  // namespace walign
