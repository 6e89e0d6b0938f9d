#include "frobcount/frobenius.hpp"

#include <algorithm>
#include <stdexcept>

#include "frobcount/errors.hpp"

namespace frobcount {
namespace {

void check_blowup(std::int64_t q, std::size_t nvars, const FrobeniusLimits& limits) {
  std::uint64_t classes = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (classes > limits.max_residue_classes / static_cast<std::uint64_t>(q))
      throw CapExceeded("q^n exceeds the configured limit of " +
                        std::to_string(limits.max_residue_classes) + " residue classes");
    classes *= static_cast<std::uint64_t>(q);
  }
}

void antichains(std::size_t nvars, std::uint64_t next, std::vector<std::uint64_t>& chosen,
                std::vector<MonomialIdeal>& out) {
  const std::uint64_t full = std::uint64_t{1} << nvars;
  if (next == full) {
    std::vector<Monomial> gens;
    for (auto mask : chosen) {
      std::vector<Monomial::Exponent> e(nvars, 0);
      for (std::size_t i = 0; i < nvars; ++i) e[i] = (mask >> i) & 1;
      gens.emplace_back(std::move(e));
    }
    out.emplace_back(nvars, std::move(gens));
    return;
  }
  antichains(nvars, next + 1, chosen, out);
  bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](std::uint64_t c) {
    return (c & next) == c || (c & next) == next;
  });
  if (!comparable) {
    chosen.push_back(next);
    antichains(nvars, next + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

FrobeniusExpansion frobenius_expand(const Polynomial& f, unsigned e,
                                    const FrobeniusLimits& limits) {
  const Ring& ring = f.ring();
  FrobeniusExpansion out;
  out.q = frobenius_q(ring.characteristic(), e);
  check_blowup(out.q, ring.nvars(), limits);
  std::map<Monomial, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) {
    std::vector<Monomial::Exponent> residue(ring.nvars()), base(ring.nvars());
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      residue[i] = static_cast<Monomial::Exponent>(t.monomial[i] % out.q);
      base[i] = static_cast<Monomial::Exponent>(t.monomial[i] / out.q);
    }
    buckets[Monomial(std::move(residue))].push_back(Term{Monomial(std::move(base)), t.coef});
  }
  for (auto& [residue, terms] : buckets)
    out.parts.emplace(residue, Polynomial(ring, std::move(terms)));
  return out;
}

Ideal bracket_power(const Ideal& ideal, unsigned e) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(frobenius_power_poly(g, e));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal frobenius_root(const Ideal& ideal, unsigned e, const FrobeniusLimits& limits) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    if (g.is_zero()) continue;
    for (auto& [residue, part] : frobenius_expand(g, e, limits).parts) gens.push_back(part);
  }
  return Ideal(ideal.ring(), std::move(gens));
}

SplittingMap::SplittingMap(unsigned e, Polynomial u)
    : e_(e), q_(0), u_(std::move(u)) {
  if (e == 0) throw DomainError("a splitting map needs a positive Frobenius iterate");
  q_ = frobenius_q(u_.ring().characteristic(), e);
}

SplittingMap standard_splitting(const Ring& ring, unsigned e) {
  auto q = frobenius_q(ring.characteristic(), e);
  std::vector<Monomial::Exponent> exps(ring.nvars(), static_cast<Monomial::Exponent>(q - 1));
  return SplittingMap(e, Polynomial::term(ring, Monomial(std::move(exps)), 1));
}

Polynomial trace_apply(const SplittingMap& theta, const Polynomial& f) {
  if (!(f.ring() == theta.ring())) throw RingMismatch();
  const auto q = theta.q();
  const Ring& ring = f.ring();
  std::vector<Term> out;
  const Polynomial product = theta.premultiplier() * f;
  for (const auto& t : product.terms()) {
    bool survives = true;
    std::vector<Monomial::Exponent> e(ring.nvars());
    for (std::size_t i = 0; i < ring.nvars() && survives; ++i) {
      if (t.monomial[i] % q != q - 1) survives = false;
      else e[i] = static_cast<Monomial::Exponent>((t.monomial[i] - (q - 1)) / q);
    }
    if (survives) out.push_back(Term{Monomial(std::move(e)), t.coef});
  }
  return Polynomial(ring, std::move(out));
}

bool is_splitting(const SplittingMap& theta) {
  return trace_apply(theta, Polynomial::constant(theta.ring(), 1)) ==
         Polynomial::constant(theta.ring(), 1);
}

bool is_compatible_by_bracket(const SplittingMap& theta, const Ideal& ideal) {
  if (!(ideal.ring() == theta.ring())) throw RingMismatch();
  Ideal power = bracket_power(ideal, theta.e());
  const auto& gens = ideal.generators();
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) {
    return ideal_member(theta.premultiplier() * g, power);
  });
}

bool is_compatible_by_root(const SplittingMap& theta, const Ideal& ideal,
                           const FrobeniusLimits& limits) {
  if (!(ideal.ring() == theta.ring())) throw RingMismatch();
  Ideal scaled = ideal_product(Ideal(ideal.ring(), {theta.premultiplier()}), ideal);
  return ideal_contains(ideal, frobenius_root(scaled, theta.e(), limits));
}

bool is_compatible(const SplittingMap& theta, const Ideal& ideal,
                   const FrobeniusLimits& limits) {
  bool by_bracket = is_compatible_by_bracket(theta, ideal);
  bool by_root = is_compatible_by_root(theta, ideal, limits);
  if (by_bracket != by_root)
    throw std::logic_error("compatibility routes disagree on " + ideal.to_string());
  return by_bracket;
}

bool is_uniformly_compatible(const Ideal& ideal, unsigned e, const FrobeniusLimits& limits) {
  return ideal_contains(ideal, frobenius_root(ideal, e, limits));
}

bool fedder_is_f_pure(const Ideal& ideal) {
  if (!ideal.in_maximal())
    throw DomainError("Fedder's criterion needs an ideal inside the maximal ideal");
  Ideal colon = ideal_colon(bracket_power(ideal, 1), ideal);
  Ideal maximal_power = bracket_power(Ideal::maximal(ideal.ring()), 1);
  return !ideal_contains(maximal_power, colon);
}

std::vector<MonomialIdeal> all_proper_squarefree_ideals(std::size_t nvars) {
  if (nvars > 6) throw CapExceeded("squarefree enumeration is limited to 6 variables");
  std::vector<MonomialIdeal> out;
  std::vector<std::uint64_t> chosen;
  antichains(nvars, 1, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MonomialIdeal> enumerate_compatible_squarefree(const SplittingMap& theta,
                                                           const EnumerationOptions& options) {
  if (!is_splitting(theta)) throw DomainError("the map is not a Frobenius splitting");
  const Ring& ring = theta.ring();
  if (ring.nvars() > options.max_variables)
    throw CapExceeded("squarefree enumeration is limited to " +
                      std::to_string(options.max_variables) + " variables");
  std::vector<MonomialIdeal> out;
  for (auto& candidate : all_proper_squarefree_ideals(ring.nvars())) {
    if (candidate.is_zero() && !options.include_zero_ideal) continue;
    if (is_compatible(theta, candidate.to_ideal(ring), options.limits))
      out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace frobcount
