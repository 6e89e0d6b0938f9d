#include <doctest.h>

#include <functional>
#include <optional>

#include "frobcount/errors.hpp"
#include "linear_oracle.hpp"
#include "support.hpp"

using namespace frobcount;
using namespace frobcount::testing;

namespace {

std::vector<Monomial> monomials_up_to(std::size_t n, int max_deg) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      out.emplace_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, max_deg);
  return out;
}

Ideal coordinate(const Ring& r, const VariableSet& vars) {
  return MonomialIdeal::coordinate_prime(r.nvars(), vars).to_ideal(r);
}

}  // namespace

TEST_CASE("ideal_sum and ideal_product examples") {
  Ring r = make_ring(3, {"x", "y"});
  CHECK(ideal_equal(ideal_sum(I(r, {"x"}), I(r, {"y"})), I(r, {"x", "y"})));
  CHECK(ideal_equal(ideal_product(I(r, {"x"}), I(r, {"y"})), I(r, {"x*y"})));
  for (std::uint64_t p : {2, 3, 5, 7}) {
    Ring rp = make_ring(p, {"x", "y"});
    CHECK(ideal_equal(ideal_sum(I(rp, {"x*y"}), I(rp, {"x+y"})), I(rp, {"x^2", "x+y"})));
  }
  CHECK_THROWS_AS(ideal_sum(I(r, {"x"}), I(make_ring(3, {"x", "z"}), {"x"})), RingMismatch);
}

TEST_CASE("ideal_intersect examples") {
  Ring r = make_ring(5, {"x", "y"});
  CHECK(ideal_equal(ideal_intersect(I(r, {"x"}), I(r, {"y"})), I(r, {"x*y"})));
  CHECK(ideal_equal(ideal_intersect(I(r, {"x"}), I(r, {"x"})), I(r, {"x"})));

  Ring r3 = make_ring(2, {"x", "y", "z"});
  Ideal a = I(r3, {"x", "y"}), b = I(r3, {"z"});
  Ideal meet = ideal_intersect(a, b);
  CHECK(ideal_equal(meet, I(r3, {"x*z", "y*z"})));
  // Monomials of degree <= 3: in the intersection iff in both.
  MonomialIdeal ma = MonomialIdeal::coordinate_prime(3, {0, 1});
  MonomialIdeal mb = MonomialIdeal::coordinate_prime(3, {2});
  for (const auto& m : monomials_up_to(3, 3)) {
    bool expected = ma.contains(m) && mb.contains(m);
    CHECK(ideal_member(Polynomial::term(r3, m), meet) == expected);
  }
}

TEST_CASE("ideal_intersect is membership-equivalent on general ideals") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    Ring r = make_ring(trial % 2 ? 3 : 2, {"x", "y"});
    Ideal a(r, {random_poly(rng, r, 2, 3)});
    Ideal b(r, {random_poly(rng, r, 2, 3), random_poly(rng, r, 2, 2)});
    Ideal meet = ideal_intersect(a, b);
    for (const auto& g : meet.generators()) {
      CHECK(ideal_member(g, a));
      CHECK(ideal_member(g, b));
    }
    // Products land in the intersection.
    for (const auto& f : a.generators())
      for (const auto& g : b.generators()) CHECK(ideal_member(f * g, meet));
  }
}

TEST_CASE("ideal_colon examples") {
  Ring r = make_ring(3, {"x", "y"});
  CHECK(ideal_equal(ideal_colon(I(r, {"x^2"}), I(r, {"x"})), I(r, {"x"})));
  CHECK(ideal_equal(ideal_colon(I(r, {"x*y"}), I(r, {"y"})), I(r, {"x"})));
  for (std::uint64_t p : {2, 3}) {
    Ring rp = make_ring(p, {"x", "y"});
    std::string pp = std::to_string(p), pm = std::to_string(p - 1);
    CHECK(ideal_equal(ideal_colon(I(rp, {"x^" + pp + "*y^" + pp}), I(rp, {"x*y"})),
                      I(rp, {"x^" + pm + "*y^" + pm})));
  }
  CHECK(ideal_colon(I(r, {"x"}), Ideal::zero(r)).is_unit());
  CHECK(ideal_colon(I(r, {"x"}), I(r, {"x"})).is_unit());
}

TEST_CASE("dimension examples") {
  Ring r = make_ring(7, {"x", "y"});
  CHECK(dimension(I(r, {"x", "y"})) == 0);
  CHECK(dimension(I(r, {"x*y"})) == 1);
  CHECK(dimension(Ideal::zero(r)) == 2);
  CHECK_THROWS_AS(dimension(Ideal::unit(r)), DomainError);
  Ring r4 = make_ring(2, default_vars(4));
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    VariableSet vars;
    for (std::size_t i = 0; i < 4; ++i)
      if (mask >> i & 1) vars.push_back(i);
    CHECK(dimension(coordinate(r4, vars)) == 4 - vars.size());
  }
}

TEST_CASE("dimension does not depend on the monomial order") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    Ring r = make_ring(trial % 2 ? 2 : 3, default_vars(1 + trial % 3));
    Ideal ideal(r, {random_poly(rng, r, 3, 3), random_poly(rng, r, 2, 3)});
    if (ideal.is_unit()) continue;
    CHECK(dimension(ideal, MonomialOrder::lex()) == dimension(ideal, MonomialOrder::grevlex()));
    CHECK(dimension(ideal) == dimension(ideal, MonomialOrder::lex()));
  }
}

TEST_CASE("embedding_dimension examples") {
  Ring r2 = make_ring(5, {"x", "y"});
  Ring r3 = make_ring(5, {"x", "y", "z"});
  CHECK(embedding_dimension(Ideal::zero(r3)) == 3);
  CHECK(embedding_dimension(I(r2, {"x - y^2"})) == 1);
  CHECK(embedding_dimension(I(r3, {"x", "y"})) == 1);
  CHECK_THROWS_AS(embedding_dimension(I(r2, {"x + 1"})), DomainError);
}

TEST_CASE("embedding_dimension agrees with the rank of linear parts") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    Ring r = make_ring(trial % 2 ? 2 : 3, default_vars(1 + trial % 4));
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2; ++i) {
      auto g = random_poly(rng, r, 2, 4);
      gens.push_back(g - Polynomial::constant(r, g.constant_term()));
    }
    Ideal ideal(r, gens);
    CHECK(embedding_dimension(ideal) == embedding_dimension_by_rank(ideal));
  }
}

TEST_CASE("monomial_radical examples") {
  MonomialIdeal a(2, {Monomial({2, 1})});
  CHECK(monomial_radical(a) == MonomialIdeal(2, {Monomial({1, 1})}));
  MonomialIdeal b(2, {Monomial({1, 1})});
  CHECK(monomial_radical(b) == b);
  MonomialIdeal c(2, {Monomial({2, 0}), Monomial({1, 3})});
  CHECK(monomial_radical(c) == MonomialIdeal(2, {Monomial({1, 0})}));
}

TEST_CASE("squarefree iff radical") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto m = random_monomial_ideal(rng, 3, 2, 3);
    CHECK(m.is_squarefree() == (monomial_radical(m) == m));
  }
}

TEST_CASE("monomial_minimal_primes examples") {
  CHECK(monomial_minimal_primes(MonomialIdeal(2, {Monomial({1, 1})})) ==
        std::vector<VariableSet>{{0}, {1}});
  CHECK(monomial_minimal_primes(MonomialIdeal(3, {Monomial({1, 1, 0}), Monomial({1, 0, 1})})) ==
        std::vector<VariableSet>{{0}, {1, 2}});
  CHECK(monomial_minimal_primes(MonomialIdeal::coordinate_prime(2, {0, 1})) ==
        std::vector<VariableSet>{{0, 1}});
  CHECK(monomial_minimal_primes(MonomialIdeal(3)) == std::vector<VariableSet>{{}});
  CHECK_THROWS_AS(monomial_minimal_primes(MonomialIdeal(2, {Monomial(2)})), DomainError);
}

TEST_CASE("monomial_is_equidimensional examples") {
  CHECK(monomial_is_equidimensional(MonomialIdeal(2, {Monomial({1, 1})})));
  CHECK_FALSE(monomial_is_equidimensional(
      MonomialIdeal(3, {Monomial({1, 1, 0}), Monomial({1, 0, 1})})));
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    VariableSet vars;
    for (std::size_t i = 0; i < 3; ++i)
      if (mask >> i & 1) vars.push_back(i);
    CHECK(monomial_is_equidimensional(MonomialIdeal::coordinate_prime(3, vars)));
  }
}

TEST_CASE("minimal primes intersect to the radical") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 3;
    Ring r = make_ring(2, default_vars(n));
    auto m = random_monomial_ideal(rng, n, 3, 3);
    std::optional<Ideal> meet;
    for (const auto& vars : monomial_minimal_primes(m)) {
      Ideal prime = coordinate(r, vars);
      meet = meet ? ideal_intersect(*meet, prime) : prime;
    }
    REQUIRE(meet.has_value());
    CHECK(ideal_equal(*meet, monomial_radical(m).to_ideal(r)));
  }
}

TEST_CASE("ideal_intersect agrees with lcm intersection of monomial ideals") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 4;
    Ring r = make_ring(trial % 2 ? 2 : 3, default_vars(n));
    auto a = random_monomial_ideal(rng, n, 3, 3);
    auto b = random_monomial_ideal(rng, n, 3, 3);
    Ideal meet = ideal_intersect(a.to_ideal(r), b.to_ideal(r));
    CHECK(ideal_equal(meet, a.intersect(b).to_ideal(r)));
    auto back = MonomialIdeal::from_ideal(meet);
    REQUIRE(back.has_value());
    CHECK(*back == a.intersect(b));
  }
}

TEST_CASE("modularity probe on monomial triples") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 2;
    Ring r = make_ring(2, default_vars(n));
    Ideal a = random_monomial_ideal(rng, n, 2, 2).to_ideal(r);
    Ideal b = random_monomial_ideal(rng, n, 2, 2).to_ideal(r);
    Ideal c = random_monomial_ideal(rng, n, 2, 2).to_ideal(r);
    Ideal lhs = ideal_intersect(a, ideal_sum(b, c));
    Ideal rhs = ideal_sum(ideal_intersect(a, b), ideal_intersect(a, c));
    CHECK(ideal_contains(lhs, rhs));
    // Equality holds by construction when b ⊆ a.
    Ideal b_in_a = ideal_product(a, b);
    CHECK(ideal_equal(ideal_intersect(a, ideal_sum(b_in_a, c)),
                      ideal_sum(ideal_intersect(a, b_in_a), ideal_intersect(a, c))));
  }
}

TEST_CASE("embedding dimension is subadditive for pairs summing to the maximal ideal") {
  std::mt19937 rng(55);
  int qualifying = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 2 + trial % 3;
    Ring r = make_ring(trial % 2 ? 2 : 3, default_vars(n));
    std::vector<Polynomial> g1, g2;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial xi = Polynomial::variable(r, i);
      auto side = rng() % 3;
      if (side != 1) g1.push_back(xi);
      if (side != 0) g2.push_back(xi + Polynomial::term(r, random_monomial(rng, n, 1)).component(2));
    }
    g1.push_back(Polynomial::term(r, random_monomial(rng, n, 2)).component(2));
    Ideal a(r, g1), b(r, g2);
    if (!a.in_maximal() || !b.in_maximal()) continue;
    if (!ideal_equal(ideal_sum(a, b), Ideal::maximal(r))) continue;
    ++qualifying;
    CHECK(embedding_dimension(a) + embedding_dimension(b) <= n);
  }
  CHECK(qualifying > 50);
}
