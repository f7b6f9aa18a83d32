#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace culab;
using namespace culab::testing;

namespace {

bool oracle_o5_to_o8(const S_t& S) {
  return oracle_o5(S) && oracle_o6(S) && oracle_o7(S) && oracle_o8(S);
}

}  // namespace

// Main theorem decided entirely by oracles, on models beyond the corpus.
TEST_CASE("div(2) iff wdiv(2), IF and (V) under O5 to O8, random models") {
  std::mt19937 rng(71);
  std::size_t checked = 0;
  for (int i = 0; i < 150; ++i) {
    auto S = random_model(rng);
    if (S.size() > 10) continue;
    INFO(S.name());
    if (!oracle_o5_to_o8(S)) continue;
    ++checked;
    const bool lhs = oracle_div_model(S, 2);
    const bool rhs = oracle_wdiv_model(S, 2) && oracle_ideal_filtered(S) && oracle_V(S);
    REQUIRE(lhs == rhs);
    REQUIRE(is_divisible(S, 2).holds == lhs);
  }
  CHECK(checked > 20);
}

TEST_CASE("library verdicts are invariant under relabelling") {
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    auto S = random_model(rng);
    if (S.size() > 10) continue;
    std::vector<Element> perm(S.size());
    std::iota(perm.begin(), perm.end(), Element{0});
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    auto T = relabel(S, perm);
    INFO(S.name());
    REQUIRE(canonical_hash(S) == canonical_hash(T));
    for (Axiom a : {Axiom::O5, Axiom::O6, Axiom::O7, Axiom::O8, Axiom::Riesz})
      REQUIRE(check_axiom(S, a).holds == check_axiom(T, a).holds);
    REQUIRE(is_divisible(S, 2).holds == is_divisible(T, 2).holds);
    REQUIRE(is_weakly_divisible(S, 2).holds == is_weakly_divisible(T, 2).holds);
    REQUIRE(is_ideal_filtered(S).holds == is_ideal_filtered(T).holds);
    REQUIRE(has_property_V(S).holds == has_property_V(T).holds);
    REQUIRE(enumerate_ideals(S).size() == enumerate_ideals(T).size());
    REQUIRE(is_isomorphic(latf(S).model, latf(T).model));
  }
}

TEST_CASE("products preserve the monoid laws and divisibility") {
  const auto suite = builtin_suite();
  for (const auto& A : suite)
    for (const auto& B : suite) {
      if (A.size() * B.size() > 40) continue;
      INFO(A.name() << " x " << B.name());
      auto P = product(A, B);
      REQUIRE_NOTHROW(validate(to_document(P)));
      REQUIRE(P.size() == A.size() * B.size());
      REQUIRE(is_divisible(P, 2).holds == (is_divisible(A, 2).holds && is_divisible(B, 2).holds));
      REQUIRE(enumerate_ideals(P).size() == enumerate_ideals(A).size() * enumerate_ideals(B).size());
    }
}

TEST_CASE("divisibility implies weak divisibility element-wise") {
  std::mt19937 rng(13);
  for (int i = 0; i < 80; ++i) {
    auto S = random_model(rng);
    if (S.size() > 12) continue;
    INFO(S.name());
    for (Element x : all(S))
      for (std::size_t k = 1; k <= 3; ++k) {
        if (oracle_div(S, x, k)) REQUIRE(oracle_wdiv(S, x, k));
        REQUIRE(is_divisible(S, x, k).holds == oracle_div(S, x, k));
        REQUIRE(is_weakly_divisible(S, x, k).holds == oracle_wdiv(S, x, k));
      }
  }
}

TEST_CASE("quotients of quotients") {
  std::mt19937 rng(17);
  for (int i = 0; i < 40; ++i) {
    auto S = random_model(rng);
    if (S.size() > 10) continue;
    const auto ideals = enumerate_ideals(S);
    for (const auto& I : ideals)
      for (const auto& J : ideals) {
        if (!I.mask().is_subset_of(J.mask())) continue;
        INFO(S.name() << " " << ideal_label(I) << " " << ideal_label(J));
        // J/I is an ideal of S/I and (S/I)/(J/I) is S/J.
        auto q = quotient(S, I);
        std::vector<Element> image;
        for (Element x : J.members()) image.push_back(q.projection[x]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        auto JI = make_ideal(q.model, image);
        REQUIRE(is_isomorphic(quotient(q.model, JI).model, quotient(S, J).model));
      }
  }
}
