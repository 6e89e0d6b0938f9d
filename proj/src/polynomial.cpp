#include "frobcount/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "frobcount/errors.hpp"

namespace frobcount {

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& order = ring_.order();
  const auto& field = ring_.field();
  for (auto& t : terms) {
    if (t.monomial.size() != ring_.nvars()) throw DomainError("monomial length mismatch");
    t.coef %= field.characteristic();
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.less(b.monomial, a.monomial);
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coef = field.add(terms_.back().coef, t.coef);
      if (terms_.back().coef == 0) terms_.pop_back();
    } else if (t.coef != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(const Ring& ring, std::int64_t c) {
  return Polynomial(ring, {Term{Monomial(ring.nvars()), ring.field().reduce(c)}});
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  return Polynomial(ring, {Term{Monomial::variable(ring.nvars(), index), 1}});
}

Polynomial Polynomial::term(const Ring& ring, Monomial m, PrimeField::Element c) {
  return Polynomial(ring, {Term{std::move(m), c}});
}

PrimeField::Element Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coef;
  return 0;
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

Polynomial Polynomial::component(std::int64_t degree) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.monomial.degree() == degree) r.terms_.push_back(t);
  return r;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) throw RingMismatch();
}

Polynomial Polynomial::add_scaled(const Polynomial& other, const Monomial& m,
                                  PrimeField::Element c) const {
  require_same_ring(other);
  const auto& field = ring_.field();
  const auto& order = ring_.order();
  Polynomial r(ring_);
  c %= field.characteristic();
  if (c == 0) {
    r.terms_ = terms_;
    return r;
  }
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    Term rhs{other.terms_[j].monomial * m, field.mul(other.terms_[j].coef, c)};
    if (i == terms_.size()) {
      r.terms_.push_back(std::move(rhs));
      ++j;
      continue;
    }
    switch (order.compare(terms_[i].monomial, rhs.monomial)) {
      case Ordering::Greater:
        r.terms_.push_back(terms_[i++]);
        break;
      case Ordering::Less:
        r.terms_.push_back(std::move(rhs));
        ++j;
        break;
      case Ordering::Equal: {
        auto s = field.add(terms_[i].coef, rhs.coef);
        if (s != 0) r.terms_.push_back(Term{terms_[i].monomial, s});
        ++i;
        ++j;
        break;
      }
    }
  }
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  return add_scaled(other, Monomial(ring_.nvars()), 1);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return add_scaled(other, Monomial(ring_.nvars()), ring_.field().neg(1));
}

Polynomial Polynomial::operator-() const { return scaled(ring_.field().neg(1)); }

Polynomial Polynomial::scaled(PrimeField::Element c) const {
  return times_term(Monomial(ring_.nvars()), c);
}

Polynomial Polynomial::times_term(const Monomial& m, PrimeField::Element c) const {
  Polynomial r(ring_);
  c %= ring_.field().characteristic();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back(Term{t.monomial * m, ring_.field().mul(t.coef, c)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(other);
  std::vector<Term> out;
  out.reserve(terms_.size() * other.terms_.size());
  const auto& field = ring_.field();
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      out.push_back(Term{a.monomial * b.monomial, field.mul(a.coef, b.coef)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_.field().inv(leading_coef()));
}

Polynomial Polynomial::tail() const {
  Polynomial r(ring_);
  if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

Polynomial Polynomial::mapped(const Ring& target,
                              const std::vector<std::size_t>& var_map) const {
  if (!(target.field() == ring_.field())) throw RingMismatch();
  if (var_map.size() != ring_.nvars()) throw DomainError("variable map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Monomial::Exponent> e(target.nvars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      e.at(var_map[i]) = checked_exponent(std::int64_t{e[var_map[i]]} + t.monomial[i]);
    }
    out.push_back(Term{Monomial(std::move(e)), t.coef});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::in_ring(const Ring& target) const {
  if (target.var_names() != ring_.var_names()) throw RingMismatch();
  std::vector<std::size_t> identity(ring_.nvars());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  return mapped(target, identity);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool wrote = false;
    if (t.coef != 1 || t.monomial.is_one()) {
      os << t.coef;
      wrote = true;
    }
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (wrote) os << '*';
      os << ring_.var_name(i);
      if (t.monomial[i] > 1) os << '^' << t.monomial[i];
      wrote = true;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

std::int64_t frobenius_q(std::uint32_t p, unsigned e) {
  std::int64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > std::numeric_limits<Monomial::Exponent>::max() / static_cast<std::int64_t>(p))
      throw DomainError("p^e exceeds the exponent range");
    q *= p;
  }
  return q;
}

Polynomial frobenius_power_poly(const Polynomial& f, unsigned e) {
  auto q = frobenius_q(f.ring().characteristic(), e);
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back(Term{t.monomial.scaled(q), t.coef});
  return Polynomial(f.ring(), std::move(out));
}

}  // namespace frobcount
