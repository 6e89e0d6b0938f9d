#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "frobcount/ideal.hpp"
#include "frobcount/monomial_ideal.hpp"

namespace frobcount {

// Guards the q^n blow-up of Frobenius expansions.
struct FrobeniusLimits {
  std::uint64_t max_residue_classes = 1'000'000;
};

// f = sum over residues a in [0,q)^n of h_a^q * x^a.
struct FrobeniusExpansion {
  std::int64_t q = 1;
  std::map<Monomial, Polynomial> parts;  // keyed by residue exponent a
};

FrobeniusExpansion frobenius_expand(const Polynomial& f, unsigned e,
                                    const FrobeniusLimits& limits = {});

// I^[q]: generated by q-th powers of the generators.
Ideal bracket_power(const Ideal& ideal, unsigned e);

// I^[1/q]: the smallest J with I ⊆ J^[q].
Ideal frobenius_root(const Ideal& ideal, unsigned e, const FrobeniusLimits& limits = {});

// The map f -> Phi^e(u * f), where Phi^e is the F_p-linear projection that
// sends x^a to x^((a - (q-1))/q) when every a_i ≡ q-1 (mod q) and to 0
// otherwise.
class SplittingMap {
 public:
  // Throws DomainError when e == 0.
  SplittingMap(unsigned e, Polynomial u);

  unsigned e() const { return e_; }
  std::int64_t q() const { return q_; }
  const Polynomial& premultiplier() const { return u_; }
  const Ring& ring() const { return u_.ring(); }

 private:
  unsigned e_;
  std::int64_t q_;
  Polynomial u_;
};

// The standard splitting (x_1 ... x_n)^(p^e - 1).
SplittingMap standard_splitting(const Ring& ring, unsigned e = 1);

Polynomial trace_apply(const SplittingMap& theta, const Polynomial& f);

// theta(1) == 1.
bool is_splitting(const SplittingMap& theta);

// u*g ∈ J^[q] for every generator g of J.
bool is_compatible_by_bracket(const SplittingMap& theta, const Ideal& ideal);
// (u*J)^[1/q] ⊆ J.
bool is_compatible_by_root(const SplittingMap& theta, const Ideal& ideal,
                           const FrobeniusLimits& limits = {});
// theta(J) ⊆ J. Evaluates both routes and throws std::logic_error if they
// disagree.
bool is_compatible(const SplittingMap& theta, const Ideal& ideal,
                   const FrobeniusLimits& limits = {});

// J^[1/q] ⊆ J, i.e. J is compatible with every u.
bool is_uniformly_compatible(const Ideal& ideal, unsigned e,
                             const FrobeniusLimits& limits = {});

// Fedder's criterion at the origin with e = 1: (I^[p] : I) ⊄ m^[p].
// Throws DomainError when I is not inside the maximal ideal.
bool fedder_is_f_pure(const Ideal& ideal);

struct EnumerationOptions {
  bool include_zero_ideal = true;
  std::size_t max_variables = 5;
  FrobeniusLimits limits;
};

// Every proper squarefree monomial ideal compatible with theta, sorted.
// Throws DomainError unless theta is a splitting.
std::vector<MonomialIdeal> enumerate_compatible_squarefree(const SplittingMap& theta,
                                                           const EnumerationOptions& options = {});

// All proper squarefree monomial ideals on n variables (antichains of
// nonempty variable subsets), the zero ideal first.
std::vector<MonomialIdeal> all_proper_squarefree_ideals(std::size_t nvars);

}  // namespace frobcount
