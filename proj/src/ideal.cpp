#include "frobcount/ideal.hpp"

#include <algorithm>

#include "frobcount/errors.hpp"
#include "frobcount/monomial_ideal.hpp"

namespace frobcount {
namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch();
}

std::string fresh_variable(const Ring& ring, const std::string& stem) {
  if (!ring.index_of(stem)) return stem;
  for (int i = 0;; ++i) {
    std::string name = stem + std::to_string(i);
    if (!ring.index_of(name)) return name;
  }
}

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators, DeclaredFlags flags) {
  for (const auto& g : generators)
    if (!(g.ring() == ring)) throw RingMismatch();
  state_ = std::make_shared<const State>(std::move(ring), std::move(generators), flags);
}

Ideal Ideal::zero(const Ring& ring) { return Ideal(ring, {}); }

Ideal Ideal::unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::maximal(const Ring& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring.nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal Ideal::with_flags(DeclaredFlags flags) const {
  Ideal copy(ring(), generators(), flags);
  return copy;
}

const GroebnerBasis& Ideal::basis() const {
  std::call_once(state_->once, [this] {
    state_->basis = buchberger(state_->generators, state_->ring);
  });
  return *state_->basis;
}

bool Ideal::is_monomial() const {
  const auto& els = basis().elements;
  return std::all_of(els.begin(), els.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

bool Ideal::is_homogeneous() const {
  const auto& els = basis().elements;
  return std::all_of(els.begin(), els.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool Ideal::in_maximal() const {
  return std::all_of(generators().begin(), generators().end(),
                     [](const Polynomial& g) { return g.constant_term() == 0; });
}

std::vector<std::string> Ideal::canonical_generators() const {
  std::vector<std::string> out;
  const auto& els = basis().elements;
  for (auto it = els.rbegin(); it != els.rend(); ++it) out.push_back(it->to_string());
  return out;
}

std::string Ideal::to_string() const {
  std::string s = "<";
  auto gens = canonical_generators();
  if (gens.empty()) gens.push_back("0");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i];
  }
  return s + ">";
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) {
  if (!(f.ring() == ideal.ring())) throw RingMismatch();
  return normal_form(f, ideal.basis()).is_zero();
}

bool ideal_contains(const Ideal& outer, const Ideal& inner) {
  require_same_ring(outer, inner);
  const auto& gens = inner.generators();
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Polynomial& g) { return ideal_member(g, outer); });
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return a.basis().elements == b.basis().elements;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& ideal, std::size_t k) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.nvars();
  if (k > n) throw DomainError("cannot eliminate more variables than the ring has");
  Ring elim = ring.with_order(MonomialOrder::elimination(k));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(elim));
  GroebnerBasis gb = buchberger(gens, elim);

  std::vector<std::size_t> keep;
  for (std::size_t i = k; i < n; ++i) keep.push_back(i);
  Ring target = ring.restricted_to(keep);
  std::vector<std::size_t> var_map(n, 0);
  for (std::size_t i = k; i < n; ++i) var_map[i] = i - k;

  std::vector<Polynomial> out;
  for (const auto& g : gb.elements) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t i = 0; i < k; ++i)
        if (t.monomial[i] != 0) return false;
      return true;
    });
    if (free) out.push_back(g.mapped(target, var_map));
  }
  return Ideal(target, std::move(out));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const Ring& ring = a.ring();
  const std::size_t n = ring.nvars();
  if (a.generators().empty() || b.generators().empty()) return Ideal::zero(ring);

  std::vector<std::string> names{fresh_variable(ring, "t")};
  names.insert(names.end(), ring.var_names().begin(), ring.var_names().end());
  Ring big(ring.field(), names, MonomialOrder::elimination(1));
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;

  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.mapped(big, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.mapped(big, shift));
  Ideal lifted = eliminate(Ideal(big, std::move(gens)), 1);

  std::vector<Polynomial> back;
  for (const auto& g : lifted.generators()) back.push_back(g.in_ring(ring));
  return Ideal(ring, std::move(back));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const Ring& ring = a.ring();
  std::optional<Ideal> result;
  for (const auto& g : b.generators()) {
    if (g.is_zero()) continue;
    Ideal meet = ideal_intersect(a, Ideal(ring, {g}));
    std::vector<Polynomial> quotients;
    for (const auto& h : meet.basis().elements) {
      auto div = divide(h, std::span<const Polynomial>(&g, 1));
      if (!div.remainder.is_zero()) throw std::logic_error("inexact division in colon ideal");
      quotients.push_back(div.quotients[0]);
    }
    Ideal part(ring, std::move(quotients));
    result = result ? ideal_intersect(*result, part) : part;
  }
  return result ? *result : Ideal::unit(ring);
}

std::size_t dimension(const Ideal& ideal, const MonomialOrder& order) {
  Ring ring = ideal.ring().with_order(order);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(ring));
  GroebnerBasis gb = buchberger(gens, ring);
  if (gb.is_unit_ideal()) throw DomainError("dimension of the unit ideal is undefined");
  std::vector<Monomial> leading;
  for (const auto& g : gb.elements) leading.push_back(g.leading_monomial());
  return monomial_dimension(MonomialIdeal(ring.nvars(), std::move(leading)));
}

std::size_t dimension(const Ideal& ideal) {
  const auto& gb = ideal.basis();
  if (gb.is_unit_ideal()) throw DomainError("dimension of the unit ideal is undefined");
  std::vector<Monomial> leading;
  for (const auto& g : gb.elements) leading.push_back(g.leading_monomial());
  return monomial_dimension(MonomialIdeal(ideal.ring().nvars(), std::move(leading)));
}

std::size_t embedding_dimension(const Ideal& ideal) {
  if (!ideal.in_maximal())
    throw DomainError("embedding dimension needs an ideal inside the maximal ideal");
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.nvars();
  auto gens = ideal.generators();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      gens.push_back(Polynomial::variable(ring, i) * Polynomial::variable(ring, j));
  Ideal padded(ring, std::move(gens));
  std::size_t linear = 0;
  for (const auto& g : padded.basis().elements)
    if (g.leading_monomial().degree() == 1) ++linear;
  return n - linear;
}

}  // namespace frobcount
