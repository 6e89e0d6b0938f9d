#pragma once

#include <random>
#include <string>
#include <vector>

#include "frobcount/ideal.hpp"
#include "frobcount/monomial_ideal.hpp"
#include "frobcount/parse.hpp"

namespace frobcount::testing {

inline Ring make_ring(std::uint64_t p, std::vector<std::string> vars,
                      MonomialOrder order = MonomialOrder::grevlex()) {
  return Ring(PrimeField(p), std::move(vars), std::move(order));
}

inline Polynomial P(const Ring& ring, const std::string& src) { return poly_parse(src, ring); }

inline Ideal I(const Ring& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(poly_parse(g, ring));
  return Ideal(ring, std::move(polys));
}

inline std::vector<std::string> default_vars(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w", "v", "u"};
  return {names, names + n};
}

inline Polynomial random_poly(std::mt19937& rng, const Ring& ring, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<std::uint32_t> coef(0, ring.characteristic() - 1);
  std::vector<Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<Monomial::Exponent> e(ring.nvars());
    int budget = max_deg;
    for (auto& x : e) {
      x = std::uniform_int_distribution<int>(0, budget)(rng);
      budget -= x;
    }
    std::shuffle(e.begin(), e.end(), rng);
    terms.push_back(Term{Monomial(std::move(e)), coef(rng)});
  }
  return Polynomial(ring, std::move(terms));
}

inline Monomial random_monomial(std::mt19937& rng, std::size_t n, int max_exp) {
  std::vector<Monomial::Exponent> e(n);
  for (auto& x : e) x = std::uniform_int_distribution<int>(0, max_exp)(rng);
  return Monomial(std::move(e));
}

// Random proper monomial ideal with 1..max_gens generators of positive degree.
inline MonomialIdeal random_monomial_ideal(std::mt19937& rng, std::size_t n, int max_exp,
                                           int max_gens) {
  std::vector<Monomial> gens;
  int k = std::uniform_int_distribution<int>(1, max_gens)(rng);
  while (static_cast<int>(gens.size()) < k) {
    auto m = random_monomial(rng, n, max_exp);
    if (!m.is_one()) gens.push_back(std::move(m));
  }
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace frobcount::testing
