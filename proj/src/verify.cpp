#include "frobcount/verify.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <thread>

#include "frobcount/errors.hpp"
#include "frobcount/systems.hpp"

namespace frobcount {
namespace {

// A squarefree monomial ideal in n <= 4 variables is determined by the
// squarefree monomials it contains: bit m is set when the monomial with
// support m lies in the ideal. Intersection is AND and sum is OR.
using Shadow = std::uint32_t;

Shadow prime_shadow(std::size_t n, std::uint32_t vars) {
  Shadow s = 0;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (m & vars) s |= Shadow{1} << m;
  return s;
}

class ClosureScratch {
 public:
  explicit ClosureScratch(std::size_t n) : seen_((std::size_t{1} << (1u << n)) / 64 + 1) {}

  // Fills elements() with the intersection closure of the atoms and reports
  // whether it is closed under sums.
  bool compatible(const std::vector<Shadow>& atoms) {
    for (auto e : elements_) clear(e);
    elements_.clear();
    for (auto a : atoms) add(a);
    for (std::size_t k = 0; k < elements_.size(); ++k)
      for (auto a : atoms) add(elements_[k] & a);
    for (std::size_t j = 1; j < elements_.size(); ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (!has(elements_[i] | elements_[j])) return false;
    return true;
  }

  bool has(Shadow s) const { return (seen_[s / 64] >> (s % 64)) & 1; }

 private:
  void add(Shadow s) {
    if (has(s)) return;
    seen_[s / 64] |= std::uint64_t{1} << (s % 64);
    elements_.push_back(s);
  }
  void clear(Shadow s) { seen_[s / 64] &= ~(std::uint64_t{1} << (s % 64)); }

  std::vector<std::uint64_t> seen_;
  std::vector<Shadow> elements_;
};

struct Tally {
  std::uint64_t subsets = 0, compatible = 0, bound_violations = 0, total_violations = 0;
  std::vector<std::size_t> max_e;
  std::size_t max_total = 0;
  std::uint64_t at_max_total = 0;
  bool max_total_nonfull = false;
  std::uint64_t equality = 0;
  bool equality_nonfull = false;
  std::uint64_t probes = 0, probe_failures = 0;

  void merge(const Tally& o) {
    subsets += o.subsets;
    compatible += o.compatible;
    bound_violations += o.bound_violations;
    total_violations += o.total_violations;
    for (std::size_t d = 0; d < max_e.size(); ++d) max_e[d] = std::max(max_e[d], o.max_e[d]);
    if (o.max_total > max_total) {
      max_total = o.max_total;
      at_max_total = o.at_max_total;
      max_total_nonfull = o.max_total_nonfull;
    } else if (o.max_total == max_total) {
      at_max_total += o.at_max_total;
      max_total_nonfull = max_total_nonfull || o.max_total_nonfull;
    }
    equality += o.equality;
    equality_nonfull = equality_nonfull || o.equality_nonfull;
    probes += o.probes;
    probe_failures += o.probe_failures;
  }
};

}  // namespace

bool VerifyReport::sharp() const {
  if (max_e.size() != binomials.size()) return false;
  for (std::size_t d = 0; d < max_e.size(); ++d)
    if (max_e[d] != binomials[d]) return false;
  return true;
}

bool VerifyReport::passes() const {
  return sharp() && bound_violations == 0 && total_violations == 0 &&
         max_total == (std::size_t{1} << n) && max_total_only_full && equality_subsets == 1 &&
         equality_only_full && maximality_failures == 0 && cross_check_mismatches == 0;
}

bool coordinate_subset_compatible(std::size_t n, std::uint64_t subset) {
  if (n < 1 || n > 4) throw DomainError("n must be between 1 and 4");
  std::vector<Shadow> atoms;
  for (std::uint32_t t = 0; t < (1u << n); ++t)
    if ((subset >> t) & 1) atoms.push_back(prime_shadow(n, t));
  ClosureScratch scratch(n);
  return scratch.compatible(atoms);
}

bool coordinate_subset_compatible_generic(std::size_t n, std::uint64_t p, std::uint64_t subset) {
  static const char* names[] = {"x1", "x2", "x3", "x4", "x5", "x6"};
  if (n < 1 || n > 6) throw DomainError("n must be between 1 and 6");
  Ring ring(PrimeField(p), std::vector<std::string>(names, names + n));
  std::vector<Ideal> members;
  for (std::uint32_t t = 0; t < (1u << n); ++t) {
    if (!((subset >> t) & 1)) continue;
    VariableSet vars;
    for (std::size_t i = 0; i < n; ++i)
      if ((t >> i) & 1) vars.push_back(i);
    members.push_back(MonomialIdeal::coordinate_prime(n, vars).to_ideal(ring));
  }
  IdealSystem system(ring, std::move(members));
  return is_intersection_compatible(system, {64}).compatible;
}

VerifyReport verify_main_theorem(std::size_t n, std::uint64_t p, const VerifyOptions& options) {
  if (n < 1 || n > 4) throw DomainError("verify-bound needs 1 <= n <= 4 (got " + std::to_string(n) + ")");
  PrimeField field(p);
  const auto start = std::chrono::steady_clock::now();
  const std::uint32_t nprimes = 1u << n;
  const std::uint64_t nsubsets = std::uint64_t{1} << nprimes;
  const std::uint64_t full = nsubsets - 1;
  const std::uint32_t maximal = nprimes - 1;

  std::vector<Shadow> shadows(nprimes);
  for (std::uint32_t t = 0; t < nprimes; ++t) shadows[t] = prime_shadow(n, t);
  std::vector<std::uint64_t> binom(n + 1);
  for (std::size_t d = 0; d <= n; ++d) binom[d] = binomial(n, d);

  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, 64));
  std::atomic<std::uint64_t> next{0};
  constexpr std::uint64_t chunk = 256;
  std::vector<Tally> tallies(workers);

  auto work = [&](Tally& tally) {
    tally.max_e.assign(n + 1, 0);
    ClosureScratch scratch(n);
    std::vector<Shadow> atoms;
    for (;;) {
      const std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= nsubsets) break;
      const std::uint64_t end = std::min(nsubsets, begin + chunk);
      for (std::uint64_t s = begin; s < end; ++s) {
        ++tally.subsets;
        atoms.clear();
        std::vector<std::size_t> e(n + 1, 0);
        for (std::uint32_t t = 0; t < nprimes; ++t)
          if ((s >> t) & 1) {
            atoms.push_back(shadows[t]);
            ++e[n - static_cast<std::size_t>(std::popcount(t))];
          }
        if (!scratch.compatible(atoms)) continue;
        ++tally.compatible;
        bool exceeds = false, equal = true;
        for (std::size_t d = 0; d <= n; ++d) {
          tally.max_e[d] = std::max(tally.max_e[d], e[d]);
          exceeds = exceeds || e[d] > binom[d];
          equal = equal && e[d] == binom[d];
        }
        tally.bound_violations += exceeds;
        if (equal) {
          ++tally.equality;
          tally.equality_nonfull = tally.equality_nonfull || s != full;
        }
        const std::size_t total = atoms.size();
        if (total > nprimes) ++tally.total_violations;
        if (total > tally.max_total) {
          tally.max_total = total;
          tally.at_max_total = 0;
          tally.max_total_nonfull = false;
        }
        if (total == tally.max_total) {
          ++tally.at_max_total;
          tally.max_total_nonfull = tally.max_total_nonfull || s != full;
        }
        // The sum of all members must itself be a lattice element.
        if (((s >> maximal) & 1) && total >= 2) {
          ++tally.probes;
          Shadow all = 0;
          for (auto a : atoms) all |= a;
          tally.probe_failures += !scratch.has(all);
        }
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, std::ref(tallies[w]));
  work(tallies[0]);
  for (auto& t : pool) t.join();
  Tally total = tallies[0];
  for (unsigned w = 1; w < workers; ++w) total.merge(tallies[w]);

  VerifyReport out;
  out.n = n;
  out.p = field.characteristic();
  out.subsets = total.subsets;
  out.compatible_subsets = total.compatible;
  out.max_e = total.max_e;
  out.binomials = binom;
  out.bound_violations = total.bound_violations;
  out.max_total = total.max_total;
  out.subsets_at_max_total = total.at_max_total;
  out.total_violations = total.total_violations;
  out.max_total_only_full = total.max_total == nprimes && total.at_max_total == 1 &&
                            !total.max_total_nonfull;
  out.equality_subsets = total.equality;
  out.equality_only_full = total.equality == 1 && !total.equality_nonfull;
  out.maximality_probes = total.probes;
  out.maximality_failures = total.probe_failures;

  if (n <= options.cross_check_max_n) {
    for (std::uint64_t s = 0; s < nsubsets; ++s) {
      ++out.cross_checked;
      if (coordinate_subset_compatible(n, s) != coordinate_subset_compatible_generic(n, p, s))
        ++out.cross_check_mismatches;
    }
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace frobcount
