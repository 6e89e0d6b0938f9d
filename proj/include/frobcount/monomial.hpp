#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace frobcount {

// Exponent vector x^a. Exponents are 32-bit and every producing operation
// checks for overflow.
class Monomial {
 public:
  using Exponent = std::int32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::int64_t degree() const;
  bool is_one() const;
  // Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial scaled(std::int64_t factor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Plain lexicographic comparison of the exponent vectors, for containers
  // only. Term orders go through MonomialOrder.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

Monomial::Exponent checked_exponent(std::int64_t v);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class Ordering { Less, Equal, Greater };

// A term order: lexicographic, graded reverse lexicographic, or a block order
// that eliminates the first `block` variables (grevlex inside each block).
// `permutation` lists variable indices from most to least significant; empty
// means the declaration order.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, BlockElimination };

  MonomialOrder() = default;
  static MonomialOrder lex(std::vector<std::size_t> permutation = {});
  static MonomialOrder grevlex(std::vector<std::size_t> permutation = {});
  static MonomialOrder elimination(std::size_t block,
                                   std::vector<std::size_t> permutation = {});

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }

  // Throws DomainError on length mismatch.
  Ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Ordering::Less;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::size_t var(std::size_t pos) const {
    return perm_.empty() ? pos : perm_[pos];
  }
  Ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                         std::size_t hi) const;

  Kind kind_ = Kind::GrevLex;
  std::size_t block_ = 0;
  std::vector<std::size_t> perm_;
};

}  // namespace frobcount
