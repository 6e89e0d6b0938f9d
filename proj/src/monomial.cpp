#include "frobcount/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "frobcount/errors.hpp"

namespace frobcount {

Monomial::Exponent checked_exponent(std::int64_t v) {
  if (v < 0 || v > std::numeric_limits<Monomial::Exponent>::max())
    throw DomainError("exponent out of range: " + std::to_string(v));
  return static_cast<Monomial::Exponent>(v);
}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_)
    if (e < 0) throw DomainError("negative exponent");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exps_.at(index) = 1;
  return m;
}

std::int64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s.push_back(i);
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(size());
  for (std::size_t i = 0; i < size(); ++i)
    r.exps_[i] = checked_exponent(std::int64_t{exps_[i]} + other.exps_[i]);
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r(size());
  for (std::size_t i = 0; i < size(); ++i) r.exps_[i] = other.exps_[i] - exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(size());
  for (std::size_t i = 0; i < size(); ++i)
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(size());
  for (std::size_t i = 0; i < size(); ++i)
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial Monomial::scaled(std::int64_t factor) const {
  Monomial r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (factor != 0 && exps_[i] > std::numeric_limits<Exponent>::max() / factor)
      throw DomainError("exponent overflow");
    r.exps_[i] = checked_exponent(exps_[i] * factor);
  }
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> permutation) {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  o.perm_ = std::move(permutation);
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::vector<std::size_t> permutation) {
  MonomialOrder o;
  o.kind_ = Kind::GrevLex;
  o.perm_ = std::move(permutation);
  return o;
}

MonomialOrder MonomialOrder::elimination(std::size_t block,
                                         std::vector<std::size_t> permutation) {
  MonomialOrder o;
  o.kind_ = Kind::BlockElimination;
  o.block_ = block;
  o.perm_ = std::move(permutation);
  return o;
}

Ordering MonomialOrder::grevlex_range(const Monomial& a, const Monomial& b,
                                      std::size_t lo, std::size_t hi) const {
  std::int64_t da = 0, db = 0;
  for (std::size_t pos = lo; pos < hi; ++pos) {
    da += a[var(pos)];
    db += b[var(pos)];
  }
  if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
  for (std::size_t pos = hi; pos-- > lo;) {
    auto ea = a[var(pos)], eb = b[var(pos)];
    if (ea != eb) return ea > eb ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw DomainError("monomial length mismatch");
  if (!perm_.empty() && perm_.size() != a.size())
    throw DomainError("order permutation does not match variable count");
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t pos = 0; pos < n; ++pos) {
        auto ea = a[var(pos)], eb = b[var(pos)];
        if (ea != eb) return ea < eb ? Ordering::Less : Ordering::Greater;
      }
      return Ordering::Equal;
    case Kind::GrevLex:
      return grevlex_range(a, b, 0, n);
    case Kind::BlockElimination: {
      std::size_t k = std::min(block_, n);
      Ordering first = grevlex_range(a, b, 0, k);
      if (first != Ordering::Equal) return first;
      return grevlex_range(a, b, k, n);
    }
  }
  return Ordering::Equal;
}

}  // namespace frobcount
