#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frobcount/ideal.hpp"
#include "frobcount/monomial.hpp"

namespace frobcount {

// A set of variable indices, kept sorted.
using VariableSet = std::vector<std::size_t>;

// Monomial ideal stored by its unique minimal generating set. The zero ideal
// has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  // Minimalizes the given generators.
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  static MonomialIdeal coordinate_prime(std::size_t nvars, const VariableSet& vars);
  // nullopt when the ideal is not monomial.
  static std::optional<MonomialIdeal> from_ideal(const Ideal& ideal);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_squarefree() const;
  // Generated by a (possibly empty) set of variables.
  bool is_coordinate_prime() const;
  // Variables of a coordinate prime; requires is_coordinate_prime().
  VariableSet prime_variables() const;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  MonomialIdeal sum(const MonomialIdeal& other) const;
  // Generated by pairwise lcms.
  MonomialIdeal intersect(const MonomialIdeal& other) const;

  Ideal to_ideal(const Ring& ring) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

// Replaces positive exponents by 1 and re-minimalizes.
MonomialIdeal monomial_radical(const MonomialIdeal& ideal);

// Minimal vertex covers of the hypergraph of generator supports, i.e. the
// variable sets of the minimal primes. Sorted by (size, lexicographic).
// Requires a proper ideal.
std::vector<VariableSet> monomial_minimal_primes(const MonomialIdeal& ideal);

bool monomial_is_equidimensional(const MonomialIdeal& ideal);

// n - (smallest minimal prime size). Throws DomainError for the unit ideal.
std::size_t monomial_dimension(const MonomialIdeal& ideal);

}  // namespace frobcount
