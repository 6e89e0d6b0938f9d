#include "frobcount/systems.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "frobcount/errors.hpp"

namespace frobcount {
namespace {

bool is_subset(const VariableSet& a, const VariableSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Minimal primes of a member: coordinate primes for monomial members, the
// member itself when it is declared prime.
struct PrimeView {
  std::optional<std::vector<VariableSet>> coordinate;
  std::optional<std::vector<Ideal>> general;
};

// Intersection and sum in whichever representation the whole system allows.
class LatticeAlgebra {
 public:
  explicit LatticeAlgebra(const IdealSystem& system) : ring_(system.ring()) {
    const auto& forms = system.monomial_forms();
    monomial_ = std::all_of(forms.begin(), forms.end(),
                            [](const auto& m) { return m.has_value(); });
  }

  struct Value {
    std::optional<MonomialIdeal> mono;
    std::optional<Ideal> ideal;
  };

  Value atom(const IdealSystem& system, std::size_t i) const {
    if (monomial_) return {system.monomial_forms()[i], std::nullopt};
    return {std::nullopt, system.members()[i]};
  }

  Value intersect(const Value& a, const Value& b) const {
    if (monomial_) return {a.mono->intersect(*b.mono), std::nullopt};
    return {std::nullopt, ideal_intersect(*a.ideal, *b.ideal)};
  }

  Value sum(const Value& a, const Value& b) const {
    if (monomial_) return {a.mono->sum(*b.mono), std::nullopt};
    return {std::nullopt, ideal_sum(*a.ideal, *b.ideal)};
  }

  std::string key(const Value& v) const {
    if (!monomial_) return v.ideal->to_string();
    std::string k;
    for (const auto& g : v.mono->generators()) {
      for (auto e : g.exponents()) k += std::to_string(e) + ',';
      k += ';';
    }
    return k;
  }

  Ideal to_ideal(const Value& v) const { return monomial_ ? v.mono->to_ideal(ring_) : *v.ideal; }

 private:
  Ring ring_;
  bool monomial_ = true;
};

std::string describe_set(const Ring& ring, const VariableSet& vars) {
  std::string s = "<";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? ", " : "") + ring.var_name(vars[i]);
  return vars.empty() ? "<0>" : s + ">";
}

}  // namespace

std::string to_string(SystemMode mode) {
  switch (mode) {
    case SystemMode::Monomial: return "monomial";
    case SystemMode::DeclaredPrime: return "declared-prime";
    case SystemMode::Mixed: return "mixed";
  }
  return "?";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Undecidable: return "undecidable";
  }
  return "?";
}

std::string to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::Below: return "below";
    case BoundStatus::Equal: return "equal";
    case BoundStatus::Exceeds: return "exceeds";
  }
  return "?";
}

IdealSystem::IdealSystem(Ring ring, std::vector<Ideal> members,
                         std::optional<std::size_t> ambient_embdim)
    : ring_(std::move(ring)) {
  for (auto& m : members) {
    if (!(m.ring() == ring_)) throw RingMismatch();
    if (!m.in_maximal() || m.is_unit())
      throw DomainError("system member " + m.to_string() + " is not inside the maximal ideal");
    bool duplicate = std::any_of(members_.begin(), members_.end(),
                                 [&](const Ideal& seen) { return ideal_equal(seen, m); });
    if (duplicate) continue;
    members_.push_back(std::move(m));
  }
  bool all_monomial = true, all_prime = true;
  for (const auto& m : members_) {
    dims_.push_back(dimension(m));
    mono_.push_back(MonomialIdeal::from_ideal(m));
    all_monomial = all_monomial && mono_.back().has_value();
    all_prime = all_prime && m.flags().prime;
  }
  mode_ = all_monomial ? SystemMode::Monomial
                       : (all_prime ? SystemMode::DeclaredPrime : SystemMode::Mixed);
  ambient_embdim_ = ambient_embdim.value_or(ring_.nvars());
}

bool IdealSystem::all_homogeneous() const {
  return std::all_of(members_.begin(), members_.end(),
                     [](const Ideal& m) { return m.is_homogeneous(); });
}

std::vector<std::size_t> IdealSystem::canonical_order() const {
  std::vector<std::size_t> idx(members_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::string> names;
  for (const auto& m : members_) names.push_back(m.to_string());
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (dims_[a] != dims_[b]) return dims_[a] > dims_[b];
    return names[a] < names[b];
  });
  return idx;
}

PseudoPrimeResult is_pseudo_prime_system(const IdealSystem& system) {
  PseudoPrimeResult out;
  const Ring& ring = system.ring();
  const auto& members = system.members();
  const auto& forms = system.monomial_forms();
  std::vector<PrimeView> views(members.size());
  std::vector<std::size_t> undecided;

  // Condition (1): proper, radical, equidimensional.
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (forms[i]) {
      const auto& m = *forms[i];
      std::string problem;
      if (!(monomial_radical(m) == m)) problem = "is not radical";
      else if (!monomial_is_equidimensional(m)) problem = "is not equidimensional";
      if (!problem.empty()) {
        out.verdict = Verdict::False;
        out.condition = "proper-radical-equidimensional";
        out.detail = "member " + members[i].to_string() + " " + problem;
        out.witnesses = {members[i]};
        return out;
      }
      views[i].coordinate = monomial_minimal_primes(m);
      if (members[i].flags().prime && !m.is_coordinate_prime())
        out.notes.push_back("member " + members[i].to_string() +
                            " is declared prime but is not; its monomial structure was used");
    } else if (members[i].flags().prime) {
      views[i].general = std::vector<Ideal>{members[i]};
      out.notes.push_back("member " + members[i].to_string() +
                          " is taken to be prime as declared (any set of prime ideals is a "
                          "pseudo-prime system)");
    } else {
      undecided.push_back(i);
    }
  }

  auto primes_of = [&](std::size_t i) {
    std::vector<Ideal> ps;
    if (views[i].general) return *views[i].general;
    for (const auto& vars : *views[i].coordinate)
      ps.push_back(MonomialIdeal::coordinate_prime(ring.nvars(), vars).to_ideal(ring));
    return ps;
  };

  // Condition (2) over every ordered pair of decided members.
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!views[i].coordinate && !views[i].general) continue;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j || (!views[j].coordinate && !views[j].general)) continue;
      if (views[i].coordinate && views[j].coordinate) {
        if (forms[j]->contains(*forms[i])) continue;
        for (const auto& p1 : *views[i].coordinate)
          for (const auto& p2 : *views[j].coordinate)
            if (is_subset(p1, p2)) {
              out.verdict = Verdict::False;
              out.condition = "minimal-prime-containment";
              out.detail = "minimal prime " + describe_set(ring, p1) + " of " +
                           members[i].to_string() + " lies in minimal prime " +
                           describe_set(ring, p2) + " of " + members[j].to_string() +
                           ", but " + members[i].to_string() + " is not contained in " +
                           members[j].to_string();
              out.witnesses = {
                  members[i], members[j],
                  MonomialIdeal::coordinate_prime(ring.nvars(), p1).to_ideal(ring),
                  MonomialIdeal::coordinate_prime(ring.nvars(), p2).to_ideal(ring)};
              return out;
            }
        continue;
      }
      if (ideal_contains(members[j], members[i])) continue;
      auto ps1 = primes_of(i), ps2 = primes_of(j);
      for (const auto& p1 : ps1)
        for (const auto& p2 : ps2)
          if (ideal_contains(p2, p1)) {
            out.verdict = Verdict::False;
            out.condition = "minimal-prime-containment";
            out.detail = "minimal prime " + p1.to_string() + " of " + members[i].to_string() +
                         " lies in minimal prime " + p2.to_string() + " of " +
                         members[j].to_string() + ", but " + members[i].to_string() +
                         " is not contained in " + members[j].to_string();
            out.witnesses = {members[i], members[j], p1, p2};
            return out;
          }
    }
  }

  if (!undecided.empty()) {
    out.verdict = Verdict::Undecidable;
    out.condition = "undecidable";
    out.detail = "non-monomial members without a prime declaration:";
    for (auto i : undecided) {
      out.detail += " " + members[i].to_string();
      out.witnesses.push_back(members[i]);
    }
  }
  return out;
}

std::vector<const SumEntry*> ClosureLattice::violations() const {
  std::vector<const SumEntry*> out;
  for (const auto& e : sum_table)
    if (!e.element) out.push_back(&e);
  return out;
}

ClosureLattice build_closure_lattice(const IdealSystem& system, const ClosureOptions& options) {
  const std::size_t m = system.size();
  if (m > options.max_members || m > 63)
    throw CapExceeded("closure checking is limited to " + std::to_string(options.max_members) +
                      " members (system has " + std::to_string(m) + ")");
  LatticeAlgebra algebra(system);
  std::vector<LatticeAlgebra::Value> values;
  std::unordered_map<std::string, std::size_t> index;
  ClosureLattice lattice;

  for (std::size_t i = 0; i < m; ++i) {
    values.push_back(algebra.atom(system, i));
    index.emplace(algebra.key(values.back()), i);
    lattice.elements.push_back({system.members()[i], std::uint64_t{1} << i});
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    for (std::size_t a = 0; a < m; ++a) {
      const auto bit = std::uint64_t{1} << a;
      if (lattice.elements[k].witness & bit) continue;
      auto meet = algebra.intersect(values[k], values[a]);
      auto key = algebra.key(meet);
      if (index.count(key)) continue;
      index.emplace(std::move(key), values.size());
      lattice.elements.push_back({algebra.to_ideal(meet), lattice.elements[k].witness | bit});
      values.push_back(std::move(meet));
    }
  }

  for (std::size_t j = 1; j < values.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto s = algebra.sum(values[i], values[j]);
      auto it = index.find(algebra.key(s));
      SumEntry entry{i, j, std::nullopt, std::nullopt};
      if (it != index.end()) entry.element = it->second;
      else entry.sum = algebra.to_ideal(s);
      lattice.sum_table.push_back(std::move(entry));
    }
  }
  return lattice;
}

CompatibilityResult is_intersection_compatible(const IdealSystem& system,
                                               const ClosureOptions& options) {
  auto lattice = build_closure_lattice(system, options);
  CompatibilityResult out;
  out.lattice_size = lattice.elements.size();
  std::vector<std::string> seen;
  for (const auto* v : lattice.violations()) {
    if (out.compatible) {
      out.compatible = false;
      out.left = lattice.elements[v->left];
      out.right = lattice.elements[v->right];
      out.sum = v->sum;
    }
    ++out.violation_count;
    auto key = v->sum->to_string();
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      out.all_violating_sums.push_back(*v->sum);
    }
  }
  return out;
}

std::vector<std::size_t> count_by_dimension(const IdealSystem& system) {
  std::vector<std::size_t> counts(system.ring().nvars() + 1, 0);
  for (auto d : system.dimensions()) ++counts.at(d);
  return counts;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BoundStatus compare_bound(std::uint64_t value, std::uint64_t bound) {
  if (value < bound) return BoundStatus::Below;
  return value == bound ? BoundStatus::Equal : BoundStatus::Exceeds;
}

bool BoundReport::holds() const {
  auto ok = [](const BoundRow& r) { return r.status != BoundStatus::Exceeds; };
  if (!std::all_of(per_dimension.begin(), per_dimension.end(), ok)) return false;
  if (total_status == BoundStatus::Exceeds) return false;
  return !cone || std::all_of(cone->begin(), cone->end(), ok);
}

BoundReport bounds_from_counts(const std::vector<std::size_t>& counts, std::size_t embdim,
                               bool cone) {
  BoundReport out;
  out.embdim = embdim;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    auto bound = binomial(embdim, d);
    out.per_dimension.push_back({d, counts[d], bound, compare_bound(counts[d], bound)});
    out.total += counts[d];
  }
  out.total_bound = embdim >= 64 ? UINT64_MAX : std::uint64_t{1} << embdim;
  out.total_status = compare_bound(out.total, out.total_bound);
  if (cone) {
    std::vector<BoundRow> rows;
    for (std::size_t d = 0; d + 1 < counts.size(); ++d) {
      auto bound = binomial(embdim, d + 1);
      rows.push_back({d, counts[d + 1], bound, compare_bound(counts[d + 1], bound)});
    }
    out.cone = std::move(rows);
  }
  return out;
}

BoundReport check_bounds(const IdealSystem& system) {
  return bounds_from_counts(count_by_dimension(system), system.ambient_embdim(),
                            system.all_homogeneous());
}

TransformResult localize_monomial_system(const IdealSystem& system, const Ideal& prime) {
  if (system.mode() != SystemMode::Monomial)
    throw DomainError("localization is only supported for monomial systems");
  if (!(prime.ring() == system.ring())) throw RingMismatch();
  auto p = MonomialIdeal::from_ideal(prime);
  if (!p || !p->is_coordinate_prime())
    throw DomainError(prime.to_string() + " is not a coordinate prime");
  const auto keep = p->prime_variables();
  const std::size_t n = system.ring().nvars();
  Ring local_ring = system.ring().restricted_to(keep);

  std::vector<std::size_t> sources;
  std::vector<Ideal> images;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& q = *system.monomial_forms()[i];
    if (!p->contains(q)) continue;
    std::vector<Monomial> gens;
    for (const auto& g : q.generators()) {
      std::vector<Monomial::Exponent> e;
      for (auto v : keep) e.push_back(g[v]);
      gens.emplace_back(std::move(e));
    }
    sources.push_back(i);
    images.push_back(MonomialIdeal(keep.size(), std::move(gens)).to_ideal(local_ring));
  }
  TransformResult out{IdealSystem(local_ring, images, keep.size()), {}, n - keep.size()};
  for (std::size_t k = 0; k < sources.size(); ++k) {
    const auto& members = out.system.members();
    for (std::size_t j = 0; j < members.size(); ++j)
      if (ideal_equal(members[j], images[k])) {
        out.bijection.emplace_back(sources[k], j);
        break;
      }
  }
  return out;
}

TransformResult quotient_system(const IdealSystem& system, const Ideal& ideal) {
  if (!(ideal.ring() == system.ring())) throw RingMismatch();
  if (!ideal.in_maximal())
    throw DomainError("quotient needs an ideal inside the maximal ideal");
  std::vector<std::size_t> sources;
  std::vector<Ideal> kept;
  for (std::size_t i = 0; i < system.size(); ++i)
    if (ideal_contains(system.members()[i], ideal)) {
      sources.push_back(i);
      kept.push_back(system.members()[i]);
    }
  TransformResult out{IdealSystem(system.ring(), kept, embedding_dimension(ideal)), {}, 0};
  for (std::size_t k = 0; k < sources.size(); ++k) out.bijection.emplace_back(sources[k], k);
  return out;
}

TransformCheck preserve_compat_under_transform(const IdealSystem& source,
                                               const TransformResult& result,
                                               const ClosureOptions& options) {
  TransformCheck out;
  auto note = [&](const std::string& s) {
    if (out.counterexample.empty()) out.counterexample = s;
  };
  auto pp = is_pseudo_prime_system(result.system);
  if (pp.verdict != Verdict::True) {
    out.pseudo_prime_preserved = false;
    note("pseudo-prime check on the image: " + pp.detail);
  }
  auto compat = is_intersection_compatible(result.system, options);
  if (!compat.compatible) {
    out.compatibility_preserved = false;
    note("image is not intersection compatible: " + compat.sum->to_string());
  }
  std::vector<bool> hit(result.system.size(), false);
  for (auto [src, img] : result.bijection) {
    if (hit.at(img)) {
      out.bijection_ok = false;
      note("two members map to " + result.system.members()[img].to_string());
    }
    hit[img] = true;
    const auto ds = source.dimensions().at(src), di = result.system.dimensions()[img];
    if (ds < result.dimension_shift || di != ds - result.dimension_shift) {
      out.dimensions_ok = false;
      note("dimension of " + source.members()[src].to_string() + " is " + std::to_string(ds) +
           " but its image has dimension " + std::to_string(di));
    }
  }
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
    out.bijection_ok = false;
    note("image member without a source");
  }
  return out;
}

IdealSystem SplittingSystem::compatible_system() const {
  std::vector<Ideal> members;
  for (const auto& m : compatible) members.push_back(m.to_ideal(primes.ring()));
  return IdealSystem(primes.ring(), std::move(members));
}

SplittingSystem system_from_splitting(const SplittingMap& theta, const EnumerationOptions& options) {
  auto compatible = enumerate_compatible_squarefree(theta, options);
  std::vector<Ideal> primes;
  for (const auto& m : compatible)
    if (m.is_coordinate_prime())
      primes.push_back(m.to_ideal(theta.ring()).with_flags({true, true, true}));
  return SplittingSystem{IdealSystem(theta.ring(), std::move(primes)), std::move(compatible)};
}

SystemReport analyze_system(const IdealSystem& system, const ClosureOptions& options) {
  SystemReport out;
  out.pseudo_prime = is_pseudo_prime_system(system);
  out.compatibility = is_intersection_compatible(system, options);
  out.counts = count_by_dimension(system);
  out.bounds = check_bounds(system);
  if (system.empty())
    out.warnings.push_back("empty system: compatibility holds vacuously");
  for (std::size_t i = 0; i < system.size(); ++i)
    if (!system.monomial_forms()[i] && !system.members()[i].is_homogeneous())
      out.warnings.push_back("member " + system.members()[i].to_string() +
                             " is not homogeneous; it is handled in the polynomial ring, "
                             "which can differ from the local ring at the origin");
  if (out.pseudo_prime.verdict != Verdict::True)
    out.warnings.push_back(
        "the dimension bounds are only guaranteed for pseudo-prime systems that are "
        "intersection compatible");
  return out;
}

}  // namespace frobcount
