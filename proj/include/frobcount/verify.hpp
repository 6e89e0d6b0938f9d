#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace frobcount {

struct VerifyOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  // Re-check every subset through the Groebner-based closure checker when
  // n is at most this value.
  std::size_t cross_check_max_n = 2;
};

struct VerifyReport {
  std::size_t n = 0;
  std::uint64_t p = 0;
  std::string label = "verification over coordinate arrangements";
  std::uint64_t subsets = 0;
  std::uint64_t compatible_subsets = 0;
  std::vector<std::size_t> max_e;         // per d, over compatible subsets
  std::vector<std::uint64_t> binomials;   // C(n, d)
  std::uint64_t bound_violations = 0;     // compatible subsets with e(d) > C(n,d) for some d
  std::size_t max_total = 0;
  std::uint64_t subsets_at_max_total = 0;
  std::uint64_t total_violations = 0;     // total > 2^n
  bool max_total_only_full = false;       // 2^n reached by the full arrangement alone
  std::uint64_t equality_subsets = 0;     // e(d) = C(n,d) for every d
  bool equality_only_full = false;
  std::uint64_t maximality_probes = 0;
  std::uint64_t maximality_failures = 0;
  std::uint64_t cross_checked = 0;
  std::uint64_t cross_check_mismatches = 0;
  double seconds = 0;

  bool sharp() const;  // max_e == binomials
  bool passes() const;
};

// Exhaustive check of e(d) <= C(n,d) and its sharpness over every subset of
// the 2^n coordinate primes of F_p[x_1..x_n]. Throws DomainError unless
// 1 <= n <= 4 and p is prime.
VerifyReport verify_main_theorem(std::size_t n, std::uint64_t p, const VerifyOptions& options = {});

// Closure check of one subset of coordinate primes, in the combinatorial
// model. Bit T of `subset` selects the prime generated by the variables in
// the bitmask T.
bool coordinate_subset_compatible(std::size_t n, std::uint64_t subset);

// The same check through IdealSystem and is_intersection_compatible.
bool coordinate_subset_compatible_generic(std::size_t n, std::uint64_t p, std::uint64_t subset);

}  // namespace frobcount
