#pragma once

#include <span>
#include <vector>

#include "frobcount/polynomial.hpp"

namespace frobcount {

// Reduced Groebner basis with respect to the order of `ring`. Elements are
// monic and sorted by increasing leading monomial, so two bases of the same
// ideal compare equal. The zero ideal has no elements; the unit ideal is {1}.
struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial> elements;

  bool is_zero_ideal() const { return elements.empty(); }
  bool is_unit_ideal() const { return elements.size() == 1 && elements[0].is_unit(); }

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

// Plain Buchberger with the normal selection strategy and both of
// Buchberger's criteria. Every generator must belong to `ring`.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const Ring& ring);
// Recomputes the generators in the ring with the given order first.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order);

// Remainder of f modulo the basis; zero iff f is in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division: f = sum(quotients[i] * divisors[i]) + remainder,
// with no remainder term divisible by a leading monomial of the divisors.
Division divide(const Polynomial& f, std::span<const Polynomial> divisors);

}  // namespace frobcount
