#include "frobcount/monomial_ideal.hpp"

#include <algorithm>

#include "frobcount/errors.hpp"

namespace frobcount {
namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(),
                                 [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

void collect_covers(const std::vector<VariableSet>& edges, VariableSet& chosen,
                    std::vector<VariableSet>& out) {
  auto hit = [&](const VariableSet& e) {
    return std::any_of(e.begin(), e.end(), [&](std::size_t v) {
      return std::find(chosen.begin(), chosen.end(), v) != chosen.end();
    });
  };
  auto open = std::find_if(edges.begin(), edges.end(),
                           [&](const VariableSet& e) { return !hit(e); });
  if (open == edges.end()) {
    VariableSet c = chosen;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return;
  }
  for (std::size_t v : *open) {
    chosen.push_back(v);
    collect_covers(edges, chosen, out);
    chosen.pop_back();
  }
}

bool is_subset(const VariableSet& a, const VariableSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators)
    : nvars_(nvars) {
  for (const auto& g : generators)
    if (g.size() != nvars) throw DomainError("monomial length mismatch");
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::coordinate_prime(std::size_t nvars, const VariableSet& vars) {
  std::vector<Monomial> gens;
  for (auto v : vars) gens.push_back(Monomial::variable(nvars, v));
  return MonomialIdeal(nvars, std::move(gens));
}

std::optional<MonomialIdeal> MonomialIdeal::from_ideal(const Ideal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.basis().elements) {
    if (!g.is_monomial()) return std::nullopt;
    gens.push_back(g.leading_monomial());
  }
  return MonomialIdeal(ideal.ring().nvars(), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) {
    for (auto e : m.exponents())
      if (e > 1) return false;
    return true;
  });
}

bool MonomialIdeal::is_coordinate_prime() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& m) { return m.degree() == 1; });
}

VariableSet MonomialIdeal::prime_variables() const {
  if (!is_coordinate_prime()) throw DomainError("not a coordinate prime");
  VariableSet vars;
  for (const auto& g : gens_) vars.push_back(g.support().front());
  std::sort(vars.begin(), vars.end());
  return vars;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& other) const {
  auto gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  std::vector<Monomial> gens;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) gens.push_back(a.lcm(b));
  return MonomialIdeal(nvars_, std::move(gens));
}

Ideal MonomialIdeal::to_ideal(const Ring& ring) const {
  if (ring.nvars() != nvars_) throw RingMismatch();
  std::vector<Polynomial> gens;
  for (const auto& g : gens_) gens.push_back(Polynomial::term(ring, g, 1));
  return Ideal(ring, std::move(gens));
}

MonomialIdeal monomial_radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Monomial::Exponent> e(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) e[i] = g[i] > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

std::vector<VariableSet> monomial_minimal_primes(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw DomainError("the unit ideal has no minimal primes");
  std::vector<VariableSet> edges;
  const auto radical = monomial_radical(ideal);
  for (const auto& g : radical.generators()) edges.push_back(g.support());
  std::sort(edges.begin(), edges.end(),
            [](const VariableSet& a, const VariableSet& b) { return a.size() < b.size(); });
  std::vector<VariableSet> covers;
  VariableSet chosen;
  collect_covers(edges, chosen, covers);
  std::sort(covers.begin(), covers.end(), [](const VariableSet& a, const VariableSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  std::vector<VariableSet> minimal;
  for (auto& c : covers) {
    bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const VariableSet& m) { return is_subset(m, c); });
    if (!dominated) minimal.push_back(std::move(c));
  }
  return minimal;
}

bool monomial_is_equidimensional(const MonomialIdeal& ideal) {
  auto primes = monomial_minimal_primes(ideal);
  return std::all_of(primes.begin(), primes.end(),
                     [&](const VariableSet& p) { return p.size() == primes.front().size(); });
}

std::size_t monomial_dimension(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw DomainError("dimension of the unit ideal is undefined");
  auto primes = monomial_minimal_primes(ideal);
  return ideal.nvars() - primes.front().size();
}

}  // namespace frobcount
