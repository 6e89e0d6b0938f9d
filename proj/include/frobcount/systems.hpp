#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobcount/frobenius.hpp"
#include "frobcount/ideal.hpp"
#include "frobcount/monomial_ideal.hpp"

namespace frobcount {

enum class SystemMode { Monomial, DeclaredPrime, Mixed };
std::string to_string(SystemMode mode);

enum class Verdict { True, False, Undecidable };
std::string to_string(Verdict verdict);

// A finite set of proper ideals inside the maximal ideal of the origin.
// Members keep their input order; equal ideals are merged (first one wins).
class IdealSystem {
 public:
  // ambient_embdim defaults to the number of variables.
  IdealSystem(Ring ring, std::vector<Ideal> members,
              std::optional<std::size_t> ambient_embdim = std::nullopt);

  const Ring& ring() const { return ring_; }
  const std::vector<Ideal>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  SystemMode mode() const { return mode_; }
  std::size_t ambient_embdim() const { return ambient_embdim_; }

  // dim R/Q for each member.
  const std::vector<std::size_t>& dimensions() const { return dims_; }
  // Monomial form of each member, when it has one.
  const std::vector<std::optional<MonomialIdeal>>& monomial_forms() const { return mono_; }
  bool all_homogeneous() const;

  // Member indices sorted by (dimension descending, canonical generators).
  std::vector<std::size_t> canonical_order() const;

 private:
  Ring ring_;
  std::vector<Ideal> members_;
  std::vector<std::size_t> dims_;
  std::vector<std::optional<MonomialIdeal>> mono_;
  SystemMode mode_ = SystemMode::Monomial;
  std::size_t ambient_embdim_ = 0;
};

struct PseudoPrimeResult {
  Verdict verdict = Verdict::True;
  // "", "proper-radical-equidimensional", "minimal-prime-containment" or
  // "undecidable".
  std::string condition;
  std::string detail;
  // For a containment failure: Q1, Q2, P1, P2 (P1 ⊆ P2 but Q1 ⊄ Q2).
  std::vector<Ideal> witnesses;
  std::vector<std::string> notes;
};

PseudoPrimeResult is_pseudo_prime_system(const IdealSystem& system);

struct ClosureOptions {
  std::size_t max_members = 12;
};

struct LatticeElement {
  Ideal ideal;
  std::uint64_t witness;  // bit i set when member i takes part in the intersection
};

struct SumEntry {
  std::size_t left;
  std::size_t right;
  std::optional<std::size_t> element;  // set when the sum is in the lattice
  std::optional<Ideal> sum;            // the offending sum otherwise
};

// All distinct intersections of nonempty member subsets, with every pairwise
// sum matched against them.
struct ClosureLattice {
  std::vector<LatticeElement> elements;  // the members come first
  std::vector<SumEntry> sum_table;

  std::vector<const SumEntry*> violations() const;
};

// Throws CapExceeded when the system has more than options.max_members members.
ClosureLattice build_closure_lattice(const IdealSystem& system, const ClosureOptions& options = {});

struct CompatibilityResult {
  bool compatible = true;
  // First violation in lattice order.
  std::optional<LatticeElement> left;
  std::optional<LatticeElement> right;
  std::optional<Ideal> sum;
  std::size_t lattice_size = 0;
  std::size_t violation_count = 0;
  std::vector<Ideal> all_violating_sums;
};

CompatibilityResult is_intersection_compatible(const IdealSystem& system,
                                               const ClosureOptions& options = {});

// e(d) for d = 0..nvars.
std::vector<std::size_t> count_by_dimension(const IdealSystem& system);

std::uint64_t binomial(std::size_t n, std::size_t k);

enum class BoundStatus { Below, Equal, Exceeds };
std::string to_string(BoundStatus status);
BoundStatus compare_bound(std::uint64_t value, std::uint64_t bound);

struct BoundRow {
  std::size_t d;
  std::size_t count;
  std::uint64_t bound;
  BoundStatus status;
};

struct BoundReport {
  std::size_t embdim = 0;
  std::vector<BoundRow> per_dimension;  // e(d) vs C(embdim, d)
  std::size_t total = 0;
  std::uint64_t total_bound = 0;  // 2^embdim
  BoundStatus total_status = BoundStatus::Below;
  // Projective form for cones: d-dimensional subschemes of Proj are the
  // (d+1)-dimensional members, compared with C(embdim, d+1).
  std::optional<std::vector<BoundRow>> cone;

  bool holds() const;
};

BoundReport check_bounds(const IdealSystem& system);
// Recomputes the verdicts from counts alone.
BoundReport bounds_from_counts(const std::vector<std::size_t>& counts, std::size_t embdim,
                               bool cone);

struct TransformResult {
  IdealSystem system;
  // (source member index, image member index).
  std::vector<std::pair<std::size_t, std::size_t>> bijection;
  // dim(image) = dim(source) - dimension_shift for every pair.
  std::size_t dimension_shift = 0;
};

// Localization at the coordinate prime P: keeps the members inside P and
// deletes the variables outside P (they become units). Throws DomainError
// unless the system is monomial and P is a coordinate prime.
TransformResult localize_monomial_system(const IdealSystem& system, const Ideal& prime);

// Members containing I, with ambient_embdim = embedding_dimension(I). Throws
// DomainError when I is not inside the maximal ideal.
TransformResult quotient_system(const IdealSystem& system, const Ideal& ideal);

struct TransformCheck {
  bool pseudo_prime_preserved = true;
  bool compatibility_preserved = true;
  bool bijection_ok = true;
  bool dimensions_ok = true;
  std::string counterexample;

  bool holds() const {
    return pseudo_prime_preserved && compatibility_preserved && bijection_ok && dimensions_ok;
  }
};

// Re-runs the pseudo-prime and compatibility checks on the transformed
// system and verifies the bijection and its dimension bookkeeping.
TransformCheck preserve_compat_under_transform(const IdealSystem& source,
                                               const TransformResult& result,
                                               const ClosureOptions& options = {});

struct SplittingSystem {
  IdealSystem primes;                          // compatible coordinate primes
  std::vector<MonomialIdeal> compatible;       // every compatible squarefree ideal
  IdealSystem compatible_system() const;
};

// Throws DomainError unless theta is a splitting.
SplittingSystem system_from_splitting(const SplittingMap& theta,
                                      const EnumerationOptions& options = {});

struct SystemReport {
  PseudoPrimeResult pseudo_prime;
  CompatibilityResult compatibility;
  std::vector<std::size_t> counts;
  BoundReport bounds;
  std::vector<std::string> warnings;
};

// Runs every check. Throws CapExceeded like build_closure_lattice.
SystemReport analyze_system(const IdealSystem& system, const ClosureOptions& options = {});

}  // namespace frobcount
