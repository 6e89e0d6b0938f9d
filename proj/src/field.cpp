#include "frobcount/field.hpp"

#include <string>

#include "frobcount/errors.hpp"

namespace frobcount {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p > 2147483647ULL || !is_prime(p))
    throw DomainError("p must be prime (got " + std::to_string(p) + ")");
  p_ = static_cast<std::uint32_t>(p);
}

PrimeField::Element PrimeField::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t k) const {
  Element result = 1 % p_;
  while (k > 0) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a % p_ == 0) throw DomainError("division by zero in F_p");
  return pow(a, p_ - 2);
}

}  // namespace frobcount
