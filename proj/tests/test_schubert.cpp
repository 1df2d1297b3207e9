#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "walign/enumcount.hpp"
#include "walign/schubert.hpp"

using namespace walign;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

}  // namespace

TEST_CASE("Schubert polynomials of distinguished permutations") {
  CHECK(schubert_poly(Permutation::identity()) == IntPolynomial::constant(1));
  CHECK(schubert_poly(P({2, 1})) == IntPolynomial::monomial({1}));
  CHECK(schubert_poly(P({4, 5, 1, 2, 3, 6, 7})) == IntPolynomial::monomial({3, 3}));
  // Grassmannian with descent 2 and code (0,3): the Schur polynomial
  // s_(3)(x1,x2) = x1^3 + x1^2 x2 + x1 x2^2 + x2^3
  IntPolynomial h3;
  for (int a = 0; a <= 3; ++a) h3.add_term({a, 3 - a}, 1);
  CHECK(schubert_poly(P({1, 5, 2, 3, 4, 6, 7})) == h3);
  // dominant permutations give the single monomial of their code
  CHECK(schubert_poly(P({4, 3, 1, 2, 5})) == IntPolynomial::monomial({3, 2}));
  // longest element gives the staircase
  CHECK(schubert_poly(Permutation::longest(4)) == IntPolynomial::monomial({3, 2, 1}));
}

TEST_CASE("window stability") {
  for (const auto& u : all_permutations(4)) {
    IntPolynomial direct = schubert_poly(u);
    // recompute in a larger ambient window by hand
    const int n = 6;
    Monomial stair;
    for (int e = n - 1; e >= 1; --e) stair.push_back(e);
    IntPolynomial big =
        partial_w(compose(inverse(u), Permutation::longest(n)),
                  IntPolynomial::monomial(stair));
    CHECK(direct == big);
  }
}

TEST_CASE("duality against the basis") {
  for (const auto& u : all_permutations(4))
    for (const auto& w : all_permutations(4))
      CHECK(ev0(partial_w(w, schubert_poly(u))) == (u == w ? 1 : 0));
}

TEST_CASE("expansion in the Schubert basis") {
  for (const auto& u : all_permutations(4)) {
    SchubertExpansion e = expand_schubert(schubert_poly(u));
    REQUIRE(e.coefficients.size() == 1);
    CHECK(e.coefficients.at(u) == 1);
  }
  CHECK_THROWS_AS(
      expand_schubert(add(IntPolynomial::monomial({1}), IntPolynomial::constant(1))),
      DomainError);

  // the worked product expansion, restricted to window 7
  IntPolynomial prod =
      mul(IntPolynomial::monomial({3, 3}), schubert_poly(P({1, 4, 7, 6, 2, 3, 5})));
  SchubertExpansion e = expand_schubert(prod);
  std::map<Permutation, Int> in7;
  for (const auto& [w, c] : e.coefficients)
    if (w.window() <= 7) in7[w] = c;
  std::map<Permutation, Int> want{{P({4, 7, 6, 5, 1, 2, 3}), 1},
                                  {P({5, 7, 6, 3, 1, 2, 4}), 1},
                                  {P({6, 7, 3, 5, 1, 2, 4}), 1},
                                  {P({6, 7, 5, 2, 1, 3, 4}), 1}};
  CHECK(in7 == want);
}

TEST_CASE("structure coefficients via the oracle") {
  Permutation v = P({2, 4, 1, 3});
  CHECK(lr_coeff(Permutation::identity(), v, v) == 1);
  CHECK(lr_coeff(P({4, 1, 2, 3, 7, 6, 5}), P({1, 5, 2, 3, 4, 6, 7}),
                 P({7, 1, 2, 3, 6, 5, 4})) == 1);
  CHECK(lr_coeff(P({2, 1, 3, 6, 7, 5, 4}), P({1, 5, 2, 3, 4, 6, 7}),
                 P({7, 1, 2, 3, 6, 5, 4})) == 1);
  // vanishing outside the interval
  CHECK(lr_coeff(P({4, 3, 2, 1}), v, v) == 0);
  // symmetry in u and v over S3
  for (const auto& a : all_permutations(3))
    for (const auto& b : all_permutations(3))
      for (const auto& w : all_permutations(3)) CHECK(lr_coeff(a, b, w) == lr_coeff(b, a, w));
}

TEST_CASE("reindexing by the longest element") {
  Permutation wo = Permutation::longest(4);
  for (const auto& u : all_permutations(4))
    for (const auto& v : all_permutations(4))
      for (const auto& w : all_permutations(4)) {
        // c^w_{u,v} = c^{w_o u}_{v, w_o w}
        CHECK(lr_coeff(u, v, w) == lr_coeff(v, compose(wo, w), compose(wo, u)));
      }
}

TEST_CASE("the linear functional") {
  Permutation u = P({3, 1, 4, 2});
  CHECK(phi_functional(Permutation::identity(), u, schubert_poly(u)) == 1);
  CHECK(phi_functional(P({1, 5, 2, 3, 4, 6, 7}), P({7, 1, 2, 3, 6, 5, 4}),
                       schubert_poly(P({2, 1, 5, 3, 7, 6, 4}))) == 1);
  for (const auto& a : all_permutations(3))
    for (const auto& b : all_permutations(3))
      for (const auto& w : all_permutations(3))
        CHECK(phi_functional(b, w, schubert_poly(a)) == lr_coeff(a, b, w));
}

TEST_CASE("operator words") {
  using A = OperatorAtom;
  OperatorWord base = phi_word_general(Permutation::identity(), Permutation::identity());
  CHECK(base.atoms == std::vector<A>{{A::BS, 1}, {A::EV0, 0}});

  Permutation v = P({4, 5, 2, 1, 3, 6, 7}), w = P({5, 7, 2, 4, 3, 1, 6});
  std::vector<A> displayed{{A::DD, 5}, {A::DD, 4}, {A::BS, 4}, {A::BS, 3}, {A::DD, 3},
                           {A::BS, 3}, {A::DD, 2}, {A::DD, 1}, {A::BS, 1}, {A::BS, 1},
                           {A::DD, 1}, {A::BS, 1}, {A::BS, 1}, {A::EV0, 0}};
  CHECK(phi_word_general(v, w).atoms == displayed);
  CHECK(phi_word_dominant(v, w).atoms == displayed);
  CHECK(to_string(phi_word_dominant(v, w)) ==
        "d5 d4 pi4 pi3 d3 pi3 d2 d1 pi1 pi1 d1 pi1 pi1 ev0");

  // the word computes the same functional
  for (const auto& u : all_permutations(4)) {
    OperatorWord word = phi_word_general(v, w);
    CHECK(apply_word(word, schubert_poly(u)) == phi_functional(v, w, schubert_poly(u)));
  }
  CHECK_THROWS_AS(phi_word_general(P({2, 1}), Permutation::identity()), DomainError);
  CHECK_THROWS_AS(phi_word_dominant(P({1, 3, 2}), P({1, 3, 2})), DomainError);
}

TEST_CASE("expansion rendering") {
  SchubertExpansion e;
  e.coefficients[P({1, 3, 2})] = 2;
  e.coefficients[P({2, 1})] = 1;
  e.coefficients[P({3, 1, 2})] = 1;
  CHECK(to_string(e) == "2  1 3 2\n1  2 1\n1  3 1 2\n");
  CHECK(to_string(e, 3) == "2  1 3 2\n1  2 1 3\n1  3 1 2\n");
}
