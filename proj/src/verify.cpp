#include "walign/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "walign/enumcount.hpp"
#include "walign/geom.hpp"
#include "walign/tableau.hpp"
#include "walign/wa.hpp"

namespace walign::verify {

namespace {

using Check = std::function<std::string()>;  // empty string = pass

IntPolynomial random_poly(std::mt19937& rng, int vars, int maxdeg, int terms) {
  std::uniform_int_distribution<int> exp(0, maxdeg), coeff(-4, 4);
  IntPolynomial f;
  for (int t = 0; t < terms; ++t) {
    Monomial m(vars);
    for (int i = 0; i < vars; ++i) m[i] = exp(rng);
    f.add_term(std::move(m), coeff(rng));
  }
  return f;
}

std::string perm_pair(const Permutation& a, const Permutation& b) {
  return "(" + to_string(a) + ", " + to_string(b) + ")";
}

// Transitive closure of Bruhat covers, the order oracle.
std::set<std::pair<Permutation, Permutation>> cover_closure(int n) {
  std::set<std::pair<Permutation, Permutation>> leq;
  auto perms = all_permutations(n);
  for (const auto& p : perms) leq.insert({p, p});
  bool changed = true;
  std::map<Permutation, std::vector<Permutation>> ups;
  for (const auto& p : perms) {
    for (auto& [q, t] : bruhat_covers_up(p, n))
      if (length(q) == length(p) + 1) ups[p].push_back(q);
  }
  while (changed) {
    changed = false;
    for (const auto& [a, b] : std::set<std::pair<Permutation, Permutation>>(leq)) {
      for (const auto& c : ups[b])
        if (leq.insert({a, c}).second) changed = true;
    }
  }
  return leq;
}

}  // namespace

std::vector<PropertyResult> run_suites(int n) {
  if (n < 1 || n > 5) throw DomainError("verify: window must be between 1 and 5");
  std::vector<std::pair<std::string, Check>> checks;
  const auto perms = all_permutations(n);
  const int oracle_n = std::min(n, 4);  // closure oracle gets expensive fast
  const auto small = all_permutations(oracle_n);

  checks.emplace_back("bruhat_leq matches cover-closure oracle", [&] {
    auto leq = cover_closure(oracle_n);
    for (const auto& u : small)
      for (const auto& v : small)
        if (bruhat_leq(u, v) != (leq.count({u, v}) > 0))
          return "u,v = " + perm_pair(u, v);
    return std::string();
  });

  checks.emplace_back("lehmer_code roundtrip and length sum", [&] {
    for (const auto& p : perms) {
      auto code = lehmer_code(p);
      int s = 0;
      for (int c : code) s += c;
      if (s != length(p)) return to_string(p) + " code sum " + std::to_string(s);
      if (Permutation::from_lehmer(code) != p) return to_string(p) + " roundtrip";
    }
    return std::string();
  });

  checks.emplace_back("rothe diagram size equals length", [&] {
    for (const auto& p : perms)
      if (static_cast<int>(rothe_diagram(p).size()) != length(p)) return to_string(p);
    return std::string();
  });

  checks.emplace_back("witness absent iff bruhat_leq", [&] {
    for (const auto& u : perms)
      for (const auto& v : perms)
        if (witness(u, v).has_value() == bruhat_leq(u, v)) return perm_pair(u, v);
    return std::string();
  });

  checks.emplace_back("eps/delta adjunction", [&] {
    for (const auto& w : perms) {
      for (int j = 1; j <= n + 1; ++j)
        if (delta_remove(eps_insert(w, j)) != w)
          return to_string(w) + " j=" + std::to_string(j);
      if (eps_insert(delta_remove(w), inverse(w)(1)) != w) return to_string(w);
    }
    return std::string();
  });

  checks.emplace_back("dominant_bruhat_leq agrees with bruhat_leq", [&] {
    for (const auto& v : perms) {
      if (!is_dominant(v)) continue;
      for (const auto& w : perms)
        if (dominant_bruhat_leq(v, w) != bruhat_leq(v, w)) return perm_pair(v, w);
    }
    return std::string();
  });

  checks.emplace_back("dominant_lift lands on a dominant permutation via critical swaps", [&] {
    for (const auto& v : perms) {
      auto lift = dominant_lift(v);
      if (!is_dominant(lift.lifted)) return to_string(v);
      Permutation cur = v;
      for (int i : lift.swaps) {
        if (!critical_set(cur).count(i)) return to_string(v) + " bad swap";
        Permutation next = compose(Permutation::simple(i), cur);
        if (length(next) != length(cur) + 1) return to_string(v) + " length";
        cur = next;
      }
      if (cur != lift.lifted) return to_string(v) + " replay";
    }
    return std::string();
  });

  checks.emplace_back("dominant_lift confluence under exhaustive branching", [&] {
    for (const auto& v : perms) {
      Permutation target = dominant_lift(v).lifted;
      std::set<Permutation> frontier{v};
      while (true) {
        std::set<Permutation> next;
        bool any = false;
        for (const auto& p : frontier) {
          auto crit = critical_set(p);
          if (crit.empty()) {
            if (p != target) return to_string(v) + " reaches " + to_string(p);
            continue;
          }
          any = true;
          for (int i : crit) next.insert(compose(Permutation::simple(i), p));
        }
        if (!any) break;
        for (const auto& p : frontier)
          if (critical_set(p).empty()) next.insert(p);
        frontier = std::move(next);
      }
    }
    return std::string();
  });

  checks.emplace_back("divided difference nil-Coxeter and Leibniz relations", [&] {
    std::mt19937 rng(20260824);
    for (int trial = 0; trial < 20; ++trial) {
      IntPolynomial f = random_poly(rng, 4, 5, 6), g = random_poly(rng, 4, 3, 4);
      for (int i = 1; i <= 3; ++i) {
        if (!divided_difference(i, divided_difference(i, f)).is_zero())
          return "d" + std::to_string(i) + "^2 != 0, trial " + std::to_string(trial);
        IntPolynomial leib =
            add(mul(divided_difference(i, f), g),
                mul(s_action(i, f), divided_difference(i, g)));
        if (!(divided_difference(i, mul(f, g)) == leib))
          return "Leibniz at i=" + std::to_string(i) + ", trial " + std::to_string(trial);
      }
      if (!(divided_difference(1, divided_difference(3, f)) ==
            divided_difference(3, divided_difference(1, f))))
        return "far commutation, trial " + std::to_string(trial);
      auto braid1 = divided_difference(1, divided_difference(2, divided_difference(1, f)));
      auto braid2 = divided_difference(2, divided_difference(1, divided_difference(2, f)));
      if (!(braid1 == braid2)) return "braid relation, trial " + std::to_string(trial);
      if (!divided_difference(1, add(f, s_action(1, f))).is_zero())
        return "symmetric input not annihilated, trial " + std::to_string(trial);
    }
    return std::string();
  });

  checks.emplace_back("Bergeron-Sottile operator identities", [&] {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      IntPolynomial f = random_poly(rng, 4, 4, 5);
      for (int i = 1; i <= 3; ++i)
        if (!(divided_difference(i, bs_operator(1, f)) ==
              bs_operator(1, divided_difference(i + 1, f))))
          return "d_i pi_1 = pi_1 d_{i+1} at i=" + std::to_string(i);
      for (int i = 2; i <= 4; ++i) {
        IntPolynomial lhs = bs_operator(i, f);
        Monomial pre;
        for (int t = 0; t < i - 1; ++t) pre.push_back(1);
        IntPolynomial rhs = mul(IntPolynomial::monomial(pre), f);
        for (int t = i - 1; t >= 1; --t) rhs = divided_difference(t, rhs);
        rhs = bs_operator(1, rhs);
        if (!(lhs == rhs)) return "pi_i factorization at i=" + std::to_string(i);
      }
    }
    return std::string();
  });

  checks.emplace_back("pi_1 maps S_w to S_{delta(w)} or kills it", [&] {
    for (const auto& w : perms) {
      IntPolynomial got = bs_operator(1, schubert_poly(w));
      IntPolynomial want =
          w(1) == 1 ? schubert_poly(delta_remove(w)) : IntPolynomial();
      if (!(got == want)) return to_string(w);
    }
    return std::string();
  });

  checks.emplace_back("Schubert duality ev0(d_w S_u) = [w = u]", [&] {
    for (const auto& u : small)
      for (const auto& w : small) {
        Int got = ev0(partial_w(w, schubert_poly(u)));
        if (got != (u == w ? 1 : 0)) return perm_pair(u, w);
      }
    return std::string();
  });

  checks.emplace_back("descent recursion d_i S_u", [&] {
    for (const auto& u : perms) {
      for (int i = 1; i < n; ++i) {
        IntPolynomial got = divided_difference(i, schubert_poly(u));
        IntPolynomial want = descents(u).count(i)
                                 ? schubert_poly(compose(u, Permutation::simple(i)))
                                 : IntPolynomial();
        if (!(got == want)) return to_string(u) + " i=" + std::to_string(i);
      }
    }
    return std::string();
  });

  checks.emplace_back("expand_schubert inverts the basis", [&] {
    for (const auto& u : perms) {
      SchubertExpansion e = expand_schubert(schubert_poly(u));
      SchubertExpansion want;
      if (length(u) >= 0) want.coefficients[u] = 1;
      if (!(e == want)) return to_string(u);
    }
    return std::string();
  });

  checks.emplace_back("well-aligned implies Bruhat comparable; converse for dominant", [&] {
    for (const auto& v : perms)
      for (const auto& w : perms) {
        if (is_well_aligned(v, w) && !bruhat_leq(v, w)) return perm_pair(v, w);
        if (is_dominant(v) && bruhat_leq(v, w) != is_well_aligned(v, w))
          return perm_pair(v, w);
      }
    return std::string();
  });

  checks.emplace_back("very-well-aligned equals the w_o characterization", [&] {
    Permutation wo = Permutation::longest(n);
    for (const auto& v : perms)
      for (const auto& w : perms) {
        bool unfolded = is_very_well_aligned(v, w);
        bool via_wo = is_well_aligned(v, w) &&
                      is_well_aligned(compose(w, wo), compose(v, wo));
        if (unfolded != via_wo) return perm_pair(v, w);
      }
    return std::string();
  });

  checks.emplace_back("WA^132 count is (2n-1)!!", [&] {
    std::int64_t want = 1;
    for (int k = 3; k <= 2 * n - 1; k += 2) want *= k;
    std::int64_t got = 0;
    for (const auto& v : perms) {
      if (!is_dominant(v)) continue;
      for (const auto& w : perms)
        if (is_well_aligned(v, w)) ++got;
    }
    if (got != want)
      return "got " + std::to_string(got) + " want " + std::to_string(want);
    return std::string();
  });

  checks.emplace_back("critical positions sit left in the top of a WA pair", [&] {
    for (const auto& v : perms)
      for (const auto& w : perms) {
        if (!is_well_aligned(v, w)) continue;
        for (int i : critical_set(v))
          if (inverse(w)(i) >= inverse(w)(i + 1))
            return perm_pair(v, w) + " i=" + std::to_string(i);
      }
    return std::string();
  });

  checks.emplace_back("dominant_form preserves the translation class", [&] {
    for (const auto& v : perms)
      for (const auto& w : perms) {
        if (!is_well_aligned(v, w)) continue;
        auto [v2, w2] = dominant_form(v, w);
        if (!translation_equivalent(BruhatInterval(v, w), BruhatInterval(v2, w2)))
          return perm_pair(v, w);
      }
    return std::string();
  });

  checks.emplace_back("Pieri chains match the oracle expansion", [&] {
    for (const auto& u : small) {
      for (int k = 1; k < oracle_n; ++k) {
        Monomial m;
        for (int t = 0; t < k; ++t) m.push_back(1);
        SchubertExpansion want =
            expand_schubert(mul(IntPolynomial::monomial(m), schubert_poly(u)));
        SchubertExpansion got;
        for (auto& [end, chain] : pieri_step(u, k)) got.coefficients[end] += 1;
        if (!(got == want)) return to_string(u) + " k=" + std::to_string(k);
      }
    }
    return std::string();
  });

  checks.emplace_back("oracle, Pieri, and operator-word coefficients agree", [&] {
    for (const auto& v : small)
      for (const auto& w : small) {
        if (!is_well_aligned(v, w)) continue;
        OperatorWord word = phi_word_general(v, w);
        for (const auto& u : small) {
          Int a = lr_coeff(u, v, w);
          Int b = wa_coeff(u, v, w);
          Int c = apply_word(word, schubert_poly(u));
          if (a != b || a != c)
            return perm_pair(v, w) + " u=" + to_string(u) + " oracle=" + a.str() +
                   " pieri=" + b.str() + " phi=" + c.str();
          if (a < 0) return "negative coefficient at " + perm_pair(v, w);
        }
      }
    return std::string();
  });

  checks.emplace_back("dominant operator word agrees with the general one", [&] {
    for (const auto& v : small) {
      if (!is_dominant(v)) continue;
      for (const auto& w : small) {
        if (!is_well_aligned(v, w)) continue;
        OperatorWord a = phi_word_general(v, w), b = phi_word_dominant(v, w);
        for (const auto& u : small)
          if (apply_word(a, schubert_poly(u)) != apply_word(b, schubert_poly(u)))
            return perm_pair(v, w) + " u=" + to_string(u);
      }
    }
    return std::string();
  });

  checks.emplace_back("evacuation is an involution", [&] {
    for (int sz = 1; sz <= std::min(n + 2, 6); ++sz)
      for (const auto& shape : partitions_of(sz))
        for (const auto& t : generate_syt(shape))
          if (evacuate(evacuate(t)) != t) return to_string(t);
    return std::string();
  });

  checks.emplace_back("Richardson definition matches the L-slide characterization", [&] {
    for (int sz = 1; sz <= std::min(n + 2, 6); ++sz)
      for (const auto& shape : partitions_of(sz))
        for (const auto& t : generate_syt(shape)) {
          bool via_def = is_richardson(t);
          bool via_slides = true;
          for (const auto& p : evacuation_paths(t))
            if (!is_L_slide(p)) via_slides = false;
          if (via_def != via_slides) return to_string(t);
        }
    return std::string();
  });

  checks.emplace_back("Richardson pairs are very well-aligned", [&] {
    for (int sz = 1; sz <= std::min(n + 2, 6); ++sz)
      for (const auto& shape : partitions_of(sz))
        for (const auto& t : generate_richardson(shape)) {
          auto [vt, wt] = richardson_pair(t);
          if (!is_very_well_aligned(vt, wt)) return to_string(t);
        }
    return std::string();
  });

  checks.emplace_back("Deodhar bound holds and both smoothness modes agree", [&] {
    for (const auto& v : small)
      for (const auto& w : small) {
        if (!bruhat_leq(v, w)) continue;
        bool two = is_smooth_richardson(v, w, SmoothnessMode::two_point);
        bool all = is_smooth_richardson(v, w, SmoothnessMode::all_points);
        if (two != all) return perm_pair(v, w);
      }
    return std::string();
  });

  checks.emplace_back("dominant-bottom intervals are Deodhar-smooth at the top", [&] {
    for (const auto& v : perms) {
      if (!is_dominant(v)) continue;
      for (const auto& w : perms) {
        if (!bruhat_leq(v, w)) continue;
        if (!deodhar_count(w, v, w).smooth_at_point) return perm_pair(v, w);
      }
    }
    return std::string();
  });

  checks.emplace_back("very-well-aligned pairs give smooth intervals", [&] {
    for (const auto& v : perms)
      for (const auto& w : perms) {
        if (!is_very_well_aligned(v, w)) continue;
        if (!is_smooth_richardson(v, w, SmoothnessMode::all_points))
          return perm_pair(v, w);
      }
    return std::string();
  });

  std::vector<PropertyResult> results;
  for (auto& [name, check] : checks) {
    PropertyResult r;
    r.name = name;
    try {
      r.counterexample = check();
      r.passed = r.counterexample.empty();
    } catch (const std::exception& e) {
      r.passed = false;
      r.counterexample = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace walign::verify
