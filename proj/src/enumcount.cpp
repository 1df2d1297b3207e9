#include "walign/enumcount.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "walign/wa.hpp"

namespace walign {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> vals(n);
  std::iota(vals.begin(), vals.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(vals);
  } while (std::next_permutation(vals.begin(), vals.end()));
  return out;
}

namespace {

struct Shard {
  std::int64_t wa = 0, wa132 = 0, vwa = 0;
  std::vector<std::pair<Permutation, Permutation>> wa132_pairs;
};

// Canonical key of the translation class: the sorted set {v^{-1} u}.
std::set<Permutation> class_key(const Permutation& v, const Permutation& w) {
  std::set<Permutation> key;
  Permutation vinv = inverse(v);
  for (const Permutation& u : interval(v, w)) key.insert(compose(vinv, u));
  return key;
}

}  // namespace

CensusResult census(int n, int jobs, int max_n) {
  if (n < 1 || n > max_n)
    throw DomainError("census: n must be between 1 and " + std::to_string(max_n));
  if (jobs < 1) jobs = 1;
  const std::vector<Permutation> perms = all_permutations(n);
  std::vector<Shard> shards(jobs);

  auto scan = [&](int shard_id) {
    Shard& s = shards[shard_id];
    for (size_t iv = shard_id; iv < perms.size(); iv += jobs) {
      const Permutation& v = perms[iv];
      const bool dom = is_dominant(v);
      for (const Permutation& w : perms) {
        if (!is_well_aligned(v, w)) continue;
        ++s.wa;
        if (dom) {
          ++s.wa132;
          s.wa132_pairs.emplace_back(v, w);
        }
        if (is_very_well_aligned(v, w)) ++s.vwa;
      }
    }
  };
  {
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(scan, t);
    scan(0);
    for (auto& th : pool) th.join();
  }

  CensusResult r;
  r.n = n;
  std::vector<std::pair<Permutation, Permutation>> pairs;
  for (const Shard& s : shards) {
    r.wa_count += s.wa;
    r.wa132_count += s.wa132;
    r.very_wa_count += s.vwa;
    pairs.insert(pairs.end(), s.wa132_pairs.begin(), s.wa132_pairs.end());
  }

  std::vector<std::set<Permutation>> keys(pairs.size());
  auto keyscan = [&](int shard_id) {
    for (size_t t = shard_id; t < pairs.size(); t += jobs)
      keys[t] = class_key(pairs[t].first, pairs[t].second);
  };
  {
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(keyscan, t);
    keyscan(0);
    for (auto& th : pool) th.join();
  }
  std::set<std::set<Permutation>> classes(keys.begin(), keys.end());
  r.equivalence_class_count = static_cast<std::int64_t>(classes.size());
  return r;
}

bool check_functional_equation(const std::vector<std::int64_t>& counts) {
  if (counts.empty()) throw DomainError("check_functional_equation: empty input");
  if (counts[0] != 1) return false;
  using Rat = boost::rational<boost::multiprecision::cpp_int>;
  const int m = static_cast<int>(counts.size()) - 1;
  // w_k = counts[k] / k!
  std::vector<Rat> w(m + 1);
  boost::multiprecision::cpp_int fact = 1;
  for (int k = 0; k <= m; ++k) {
    if (k > 0) fact *= k;
    w[k] = Rat(counts[k], fact);
  }
  // W'(x): coefficient of x^k is (k+1) w_{k+1}, known through order m-1
  std::vector<Rat> wp(m);
  for (int k = 0; k < m; ++k) wp[k] = Rat(k + 1, 1) * w[k + 1];
  auto conv = [](const std::vector<Rat>& a, const std::vector<Rat>& b, int k) {
    Rat s(0);
    for (int i = 0; i <= k; ++i)
      if (i < static_cast<int>(a.size()) && k - i < static_cast<int>(b.size()))
        s += a[i] * b[k - i];
    return s;
  };
  // 2 W' - W W' = W^2, coefficientwise through order m-1
  for (int k = 0; k < m; ++k) {
    Rat lhs = Rat(2, 1) * wp[k] - conv(w, wp, k);
    Rat rhs = conv(w, w, k);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace walign
