#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frobcount/monomial.hpp"
#include "frobcount/ring.hpp"

namespace frobcount {

struct Term {
  Monomial monomial;
  PrimeField::Element coef;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial over a Ring. Terms are stored with nonzero coefficients,
// sorted from largest to smallest in the ring's term order.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  // Normalizes: merges equal monomials, drops zeros, sorts.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(const Ring& ring, std::int64_t c);
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial term(const Ring& ring, Monomial m, PrimeField::Element c = 1);

  const Ring& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Preconditions: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  PrimeField::Element leading_coef() const { return terms_.front().coef; }

  PrimeField::Element constant_term() const;
  std::int64_t total_degree() const;  // -1 for zero
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_homogeneous() const;
  bool is_unit() const { return terms_.size() == 1 && terms_[0].monomial.is_one(); }
  // Homogeneous component of the given degree.
  Polynomial component(std::int64_t degree) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(PrimeField::Element c) const;
  Polynomial times_term(const Monomial& m, PrimeField::Element c) const;
  // this + c * m * other, in one merge pass.
  Polynomial add_scaled(const Polynomial& other, const Monomial& m,
                        PrimeField::Element c) const;
  Polynomial pow(std::uint64_t k) const;
  Polynomial monic() const;
  // Drops the leading term.
  Polynomial tail() const;

  // Re-expresses the polynomial in `target`. `var_map[i]` is the index in the
  // target of source variable i; the target must have the same field.
  Polynomial mapped(const Ring& target, const std::vector<std::size_t>& var_map) const;
  Polynomial in_ring(const Ring& target) const;  // same variables, new order

  // Canonical text: terms in the ring order, coefficients in [0, p).
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void require_same_ring(const Polynomial& other) const;

  Ring ring_;
  std::vector<Term> terms_;
};

// f^(p^e): every exponent vector multiplied by p^e, coefficients unchanged.
Polynomial frobenius_power_poly(const Polynomial& f, unsigned e);

// p^e with overflow check.
std::int64_t frobenius_q(std::uint32_t p, unsigned e);

}  // namespace frobcount
