#pragma once

#include <cstdint>

namespace frobcount {

// The prime field F_p with 2 <= p <= 2^31 - 1. Elements are plain integers
// kept in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  // Throws DomainError unless p is a prime in range.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t characteristic() const { return p_; }

  Element reduce(std::int64_t v) const;
  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const {
    return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(std::uint64_t{a} * b % p_);
  }
  Element pow(Element a, std::uint64_t k) const;
  // Throws DomainError on zero.
  Element inv(Element a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace frobcount
