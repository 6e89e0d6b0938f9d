#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "frobcount/groebner.hpp"
#include "frobcount/polynomial.hpp"

namespace frobcount {

// Properties a user may assert about an ideal when they cannot be decided
// (primality and friends are only decided for monomial ideals).
struct DeclaredFlags {
  bool prime = false;
  bool radical = false;
  bool equidimensional = false;

  friend bool operator==(const DeclaredFlags&, const DeclaredFlags&) = default;
};

// Finitely generated ideal. Copies share one lazily computed reduced
// Groebner basis (for the ring's order); the basis is computed at most once
// even under concurrent access.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators, DeclaredFlags flags = {});

  static Ideal zero(const Ring& ring);
  static Ideal unit(const Ring& ring);
  // The ideal of all variables.
  static Ideal maximal(const Ring& ring);

  const Ring& ring() const { return state_->ring; }
  const std::vector<Polynomial>& generators() const { return state_->generators; }
  const DeclaredFlags& flags() const { return state_->flags; }
  Ideal with_flags(DeclaredFlags flags) const;

  const GroebnerBasis& basis() const;

  bool is_zero() const { return basis().is_zero_ideal(); }
  bool is_unit() const { return basis().is_unit_ideal(); }
  // Generated by monomials (decided on the reduced basis).
  bool is_monomial() const;
  bool is_homogeneous() const;
  // Contained in the ideal of all variables.
  bool in_maximal() const;

  // Reduced basis, largest leading monomial first, rendered as "<g1, g2, ...>".
  std::string to_string() const;
  std::vector<std::string> canonical_generators() const;

 private:
  struct State {
    State(Ring r, std::vector<Polynomial> g, DeclaredFlags f)
        : ring(std::move(r)), generators(std::move(g)), flags(f) {}

    Ring ring;
    std::vector<Polynomial> generators;
    DeclaredFlags flags;
    mutable std::once_flag once;
    mutable std::optional<GroebnerBasis> basis;
  };
  std::shared_ptr<const State> state_;
};

bool ideal_member(const Polynomial& f, const Ideal& ideal);
// inner ⊆ outer.
bool ideal_contains(const Ideal& outer, const Ideal& inner);
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
// Via (t*a + (1-t)*b) ∩ R, eliminating an auxiliary variable t.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
// (a : b) = { f : f*b ⊆ a }.
Ideal ideal_colon(const Ideal& a, const Ideal& b);

// I ∩ F_p[x_{k+1}..x_n], as an ideal of the ring on the remaining variables.
Ideal eliminate(const Ideal& ideal, std::size_t k);

// Krull dimension of R/I via the initial ideal for `order` (the ring order
// by default). Throws DomainError for the unit ideal.
std::size_t dimension(const Ideal& ideal);
std::size_t dimension(const Ideal& ideal, const MonomialOrder& order);

// dim_k m/(I + m^2). Throws DomainError when I is not inside m.
std::size_t embedding_dimension(const Ideal& ideal);

}  // namespace frobcount
