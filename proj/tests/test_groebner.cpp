#include <doctest.h>

#include <algorithm>
#include <array>

#include "frobcount/errors.hpp"
#include "frobcount/groebner.hpp"
#include "support.hpp"

using namespace frobcount;
using namespace frobcount::testing;

namespace {

// Every S-polynomial reduces to zero and the basis is reduced and monic.
void check_reduced_groebner(const GroebnerBasis& gb) {
  const auto& els = gb.elements;
  for (std::size_t i = 0; i < els.size(); ++i) {
    CHECK(els[i].leading_coef() == 1);
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : els[j].terms()) CHECK_FALSE(els[i].leading_monomial().divides(t.monomial));
    }
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      auto l = els[i].leading_monomial().lcm(els[j].leading_monomial());
      auto s = els[i].times_term(els[i].leading_monomial().quotient_of(l), 1) -
               els[j].times_term(els[j].leading_monomial().quotient_of(l), 1);
      CHECK(normal_form(s, gb).is_zero());
    }
  }
}

}  // namespace

TEST_CASE("buchberger examples") {
  Ring r = make_ring(2, {"x", "y"}, MonomialOrder::lex());
  std::vector<Polynomial> xy{P(r, "x"), P(r, "y")};
  auto gb = buchberger(xy, r);
  REQUIRE(gb.elements.size() == 2);
  CHECK(gb.elements[0] == P(r, "y"));
  CHECK(gb.elements[1] == P(r, "x"));

  Ring r5 = make_ring(5, {"x", "y", "z"}, MonomialOrder::lex());
  std::vector<Polynomial> twisted{P(r5, "x^2 - y"), P(r5, "x^3 - z")};
  auto tb = buchberger(twisted, r5);
  Polynomial target = P(r5, "y^3 - z^2");
  // y^3 - z^2 = -(x^2 - y)(x^4 + x^2*y + y^2) + (x^3 - z)(x^3 + z)
  CHECK(P(r5, "-(x^2 - y)*(x^4 + x^2*y + y^2) + (x^3 - z)*(x^3 + z)") == target);
  CHECK(std::find(tb.elements.begin(), tb.elements.end(), target) != tb.elements.end());
  check_reduced_groebner(tb);

  Ring r2 = make_ring(2, {"x", "y"});
  std::vector<Polynomial> same{P(r2, "x + y"), P(r2, "x - y")};
  auto sb = buchberger(same, r2);
  REQUIRE(sb.elements.size() == 1);
  CHECK(sb.elements[0] == P(r2, "x + y"));

  auto zero = buchberger(std::vector<Polynomial>{}, r2);
  CHECK(zero.is_zero_ideal());
  std::vector<Polynomial> unit{P(r2, "x"), P(r2, "x + 1")};
  CHECK(buchberger(unit, r2).is_unit_ideal());
}

TEST_CASE("normal_form examples") {
  Ring r = make_ring(2, {"x", "y"});
  std::vector<Polynomial> gx{P(r, "x")};
  auto gb = buchberger(gx, r);
  CHECK(normal_form(P(r, "x*y"), gb).is_zero());
  CHECK(normal_form(P(r, "y^2"), gb) == P(r, "y^2"));
  std::vector<Polynomial> gs{P(r, "x + y")};
  CHECK(normal_form(P(r, "x^2 + y^2"), buchberger(gs, r)).is_zero());
  Ring other = r.with_order(MonomialOrder::lex());
  CHECK_THROWS_AS(normal_form(P(other, "x"), gb), RingMismatch);
}

TEST_CASE("ideal_member and ideal_equal examples") {
  Ring r2 = make_ring(2, {"x", "y"});
  CHECK(ideal_member(P(r2, "x*y"), I(r2, {"x"})));
  CHECK_FALSE(ideal_member(P(r2, "x + y"), I(r2, {"x*y"})));
  CHECK_FALSE(ideal_member(P(r2, "x^2*y + x*y^2"), I(r2, {"x^2 + y^2"})));
  CHECK_FALSE(ideal_member(P(r2, "y^2*(x+y)"), I(r2, {"(x+y)^2"})));
  CHECK(ideal_equal(I(r2, {"x", "y"}), I(r2, {"y", "x"})));
  CHECK(ideal_equal(I(r2, {"x^2 + y^2"}), I(r2, {"(x+y)^2"})));
  CHECK_FALSE(ideal_equal(I(r2, {"x"}), I(r2, {"x^2"})));
}

TEST_CASE("canonicity under permuted and rescaled generators") {
  std::mt19937 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t p = std::array<std::uint64_t, 3>{2, 3, 5}[trial % 3];
    std::size_t n = 1 + trial % 3;
    Ring r = make_ring(p, default_vars(n));
    std::vector<Polynomial> gens;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) gens.push_back(random_poly(rng, r, 3, 3));
    auto base = buchberger(gens, r);
    check_reduced_groebner(base);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& g : shuffled) g = g.scaled(1 + static_cast<std::uint32_t>(rng() % (p - 1)));
    // Redundant combination.
    if (shuffled.size() >= 2) shuffled.push_back(shuffled[0] * shuffled[1] + shuffled[0]);
    CHECK(buchberger(shuffled, r) == base);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("membership soundness and division reconstruction") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t p = std::array<std::uint64_t, 3>{2, 3, 5}[trial % 3];
    Ring r = make_ring(p, default_vars(1 + trial % 3));
    std::vector<Polynomial> gens{random_poly(rng, r, 3, 3), random_poly(rng, r, 3, 3)};
    Ideal ideal(r, gens);
    Polynomial combo(r);
    for (const auto& g : gens) combo = combo + random_poly(rng, r, 2, 3) * g;
    CHECK(ideal_member(combo, ideal));

    Polynomial f = random_poly(rng, r, 4, 4);
    auto div = divide(f, ideal.basis().elements);
    Polynomial rebuilt = div.remainder;
    for (std::size_t i = 0; i < div.quotients.size(); ++i)
      rebuilt = rebuilt + div.quotients[i] * ideal.basis().elements[i];
    CHECK(rebuilt == f);
    CHECK(div.remainder == normal_form(f, ideal.basis()));
    CHECK(ideal_member(f, ideal) == div.remainder.is_zero());
  }
}

TEST_CASE("eliminate examples") {
  Ring r = make_ring(3, {"x", "y"});
  Ideal e1 = eliminate(I(r, {"x - y"}), 1);
  CHECK(e1.is_zero());
  CHECK(e1.ring().var_names() == std::vector<std::string>{"y"});
  Ideal e2 = eliminate(I(r, {"x", "y"}), 1);
  CHECK(ideal_equal(e2, I(e2.ring(), {"y"})));
}

TEST_CASE("elimination keeps only members of the ideal without eliminated variables") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::uint64_t p = trial % 2 ? 2 : 3;
    Ring r = make_ring(p, {"x", "y", "z"});
    Ideal ideal(r, {random_poly(rng, r, 3, 3), random_poly(rng, r, 3, 3)});
    std::size_t k = 1 + trial % 2;
    Ideal elim = eliminate(ideal, k);
    std::vector<std::size_t> back;
    for (std::size_t i = k; i < 3; ++i) back.push_back(i);
    for (const auto& g : elim.generators()) {
      Polynomial lifted = g.mapped(r, back);
      for (const auto& t : lifted.terms())
        for (std::size_t i = 0; i < k; ++i) CHECK(t.monomial[i] == 0);
      CHECK(ideal_member(lifted, ideal));
    }
  }
}
