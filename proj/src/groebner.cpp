#include "frobcount/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "frobcount/errors.hpp"

namespace frobcount {
namespace {

// Full reduction of f against `basis`, skipping the element at `skip`.
Polynomial reduce(Polynomial f, const std::vector<Polynomial>& basis,
                  std::size_t skip = static_cast<std::size_t>(-1)) {
  const Ring& ring = f.ring();
  const auto& field = ring.field();
  std::vector<Term> rest;
  while (!f.is_zero()) {
    const Term& lt = f.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i == skip) continue;
      const Polynomial& g = basis[i];
      if (!g.leading_monomial().divides(lt.monomial)) continue;
      auto c = field.neg(field.mul(lt.coef, field.inv(g.leading_coef())));
      f = f.add_scaled(g, g.leading_monomial().quotient_of(lt.monomial), c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rest.push_back(lt);
      f = f.tail();
    }
  }
  return Polynomial(ring, std::move(rest));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(const Ring& ring) : ring_(ring) {}

  void add(Polynomial g) {
    g = reduce(std::move(g), basis_);
    if (g.is_zero()) return;
    g = g.monic();
    std::size_t k = basis_.size();
    basis_.push_back(std::move(g));
    if (basis_.back().is_unit()) unit_ = true;
    for (std::size_t i = 0; i < k; ++i) {
      pending_.push_back(
          Pair{i, k, basis_[i].leading_monomial().lcm(basis_[k].leading_monomial())});
      pending_set_.insert({i, k});
    }
  }

  GroebnerBasis run() {
    while (!unit_ && !pending_.empty()) {
      auto it = select();
      Pair pair = *it;
      pending_.erase(it);
      pending_set_.erase({pair.i, pair.j});
      if (criteria_apply(pair)) continue;
      add(s_polynomial(pair));
    }
    return finish();
  }

 private:
  std::vector<Pair>::iterator select() {
    const auto& order = ring_.order();
    return std::min_element(pending_.begin(), pending_.end(), [&](const Pair& a, const Pair& b) {
      auto c = order.compare(a.lcm, b.lcm);
      if (c != Ordering::Equal) return c == Ordering::Less;
      return std::pair(a.j, a.i) < std::pair(b.j, b.i);
    });
  }

  bool criteria_apply(const Pair& pair) const {
    const auto& li = basis_[pair.i].leading_monomial();
    const auto& lj = basis_[pair.j].leading_monomial();
    if (li.coprime(lj)) return true;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis_[k].leading_monomial().divides(pair.lcm)) continue;
      if (pending_set_.count(std::minmax(pair.i, k)) == 0 &&
          pending_set_.count(std::minmax(pair.j, k)) == 0)
        return true;
    }
    return false;
  }

  Polynomial s_polynomial(const Pair& pair) const {
    const auto& f = basis_[pair.i];
    const auto& g = basis_[pair.j];
    // Both monic.
    auto mf = f.leading_monomial().quotient_of(pair.lcm);
    auto mg = g.leading_monomial().quotient_of(pair.lcm);
    return f.times_term(mf, 1).add_scaled(g, mg, ring_.field().neg(1));
  }

  GroebnerBasis finish() const {
    GroebnerBasis out{ring_, {}};
    if (unit_) {
      out.elements.push_back(Polynomial::constant(ring_, 1));
      return out;
    }
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const auto& li = basis_[i].leading_monomial();
        const auto& lj = basis_[j].leading_monomial();
        if (lj.divides(li) && (lj != li || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      const auto& g = minimal[i];
      Polynomial tail = reduce(g.tail(), minimal, i);
      out.elements.push_back(Polynomial::term(ring_, g.leading_monomial(), 1) + tail);
    }
    const auto& order = ring_.order();
    std::sort(out.elements.begin(), out.elements.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                return order.less(a.leading_monomial(), b.leading_monomial());
              });
    return out;
  }

  Ring ring_;
  std::vector<Polynomial> basis_;
  std::vector<Pair> pending_;
  std::set<std::pair<std::size_t, std::size_t>> pending_set_;
  bool unit_ = false;
};

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const Ring& ring) {
  Buchberger engine(ring);
  for (const auto& g : gens) {
    if (!(g.ring() == ring)) throw RingMismatch();
    engine.add(g);
  }
  return engine.run();
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order) {
  if (gens.empty()) throw DomainError("cannot infer the ring of an empty generator list");
  Ring ring = gens.front().ring().with_order(order);
  std::vector<Polynomial> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) moved.push_back(g.in_ring(ring));
  return buchberger(moved, ring);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!(f.ring() == basis.ring)) throw RingMismatch();
  return reduce(f, basis.elements);
}

Division divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  const Ring& ring = f.ring();
  const auto& field = ring.field();
  Division out{{}, Polynomial(ring)};
  for (const auto& d : divisors) {
    if (!(d.ring() == ring)) throw RingMismatch();
    out.quotients.emplace_back(ring);
  }
  std::vector<Term> rest;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& g = divisors[i];
      if (g.is_zero() || !g.leading_monomial().divides(lt.monomial)) continue;
      auto c = field.mul(lt.coef, field.inv(g.leading_coef()));
      auto m = g.leading_monomial().quotient_of(lt.monomial);
      p = p.add_scaled(g, m, field.neg(c));
      out.quotients[i] = out.quotients[i] + Polynomial::term(ring, m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      rest.push_back(lt);
      p = p.tail();
    }
  }
  out.remainder = Polynomial(ring, std::move(rest));
  return out;
}

}  // namespace frobcount
