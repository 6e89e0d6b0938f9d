#include "frobcount/cli/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "frobcount/errors.hpp"
#include "frobcount/systems.hpp"
#include "frobcount/verify.hpp"

namespace frobcount::cli {
namespace {

using json = nlohmann::json;

json rows_json(const std::vector<BoundRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"d", r.d}, {"count", r.count}, {"bound", r.bound}, {"status", to_string(r.status)}});
  return out;
}

json bounds_json(const BoundReport& b) {
  json out = {{"embdim", b.embdim},
              {"per_dimension", rows_json(b.per_dimension)},
              {"total",
               {{"count", b.total}, {"bound", b.total_bound}, {"status", to_string(b.total_status)}}},
              {"verdict", b.holds() ? "hold" : "violated"}};
  if (b.cone) out["cone"] = rows_json(*b.cone);
  return out;
}

json counts_json(const std::vector<std::size_t>& counts) {
  json out = json::object();
  for (std::size_t d = 0; d < counts.size(); ++d) out[std::to_string(d)] = counts[d];
  return out;
}

const InputDocument& need_input(const std::optional<InputDocument>& doc, const std::string& command) {
  if (!doc) throw Error("command '" + command + "' needs --input");
  return *doc;
}

SplittingMap need_splitting(const InputDocument& doc, const std::string& command) {
  if (!doc.splitting_map()) throw Error("command '" + command + "' needs a [splitting] section");
  return *doc.splitting_map();
}

FrobeniusLimits limits_of(const InputDocument& doc) {
  FrobeniusLimits limits;
  if (doc.options().max_residue_classes) limits.max_residue_classes = *doc.options().max_residue_classes;
  return limits;
}

std::size_t member_cap(const InputDocument* doc, const CommandOptions& options) {
  if (options.max_members) return *options.max_members;
  if (doc && doc->options().max_members) return *doc->options().max_members;
  return ClosureOptions{}.max_members;
}

// The first element of root(J) that J misses, with the element of J whose
// image it is: h = theta(x^c * g) for a generator g.
struct Escape {
  Polynomial source;
  Polynomial image;
};

std::optional<Escape> find_escape(const Polynomial& u, const Ideal& ideal, unsigned e,
                                  const FrobeniusLimits& limits) {
  const Ring& ring = ideal.ring();
  for (const auto& g : ideal.generators()) {
    if (g.is_zero()) continue;
    auto expansion = frobenius_expand(u * g, e, limits);
    for (const auto& [residue, part] : expansion.parts) {
      if (ideal_member(part, ideal)) continue;
      std::vector<Monomial::Exponent> c(ring.nvars());
      for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<Monomial::Exponent>(expansion.q - 1 - residue[i]);
      return Escape{Polynomial::term(ring, Monomial(std::move(c)), 1) * g, part};
    }
  }
  return std::nullopt;
}

std::string names_of(std::uint64_t mask, const std::vector<std::string>& member_names) {
  std::string s;
  for (std::size_t i = 0; i < member_names.size(); ++i)
    if ((mask >> i) & 1) s += (s.empty() ? "" : " & ") + member_names[i];
  return s;
}

void check_system(const InputDocument& doc, const CommandOptions& options, ReportDocument& r) {
  IdealSystem system(doc.ring(), doc.ideals());
  // Name each member after the first document ideal equal to it.
  std::vector<std::string> names(system.size());
  const auto& entries = doc.ideal_entries();
  for (std::size_t k = 0; k < doc.ideals().size(); ++k) {
    for (std::size_t i = 0; i < system.size(); ++i) {
      if (!ideal_equal(system.members()[i], doc.ideals()[k])) continue;
      if (names[i].empty()) names[i] = entries[k].name;
      else r.warnings.push_back("ideal " + entries[k].name + " equals ideal " + names[i] + "; merged");
      break;
    }
  }
  auto report = analyze_system(system, {member_cap(&doc, options)});

  json members = json::array();
  for (auto i : system.canonical_order())
    members.push_back(names[i] + " = " + system.members()[i].to_string() + "  dim " +
                      std::to_string(system.dimensions()[i]));
  r.details["members"] = members;
  if (!report.pseudo_prime.notes.empty()) r.details["assumptions"] = report.pseudo_prime.notes;

  r.verdicts["mode"] = to_string(system.mode());
  r.verdicts["pseudo_prime"] = to_string(report.pseudo_prime.verdict);
  if (!report.pseudo_prime.condition.empty())
    r.verdicts["pseudo_prime_condition"] = report.pseudo_prime.condition;
  if (!report.pseudo_prime.detail.empty()) r.details["pseudo_prime_detail"] = report.pseudo_prime.detail;
  r.verdicts["intersection_compatible"] = report.compatibility.compatible;
  r.verdicts["lattice_size"] = report.compatibility.lattice_size;
  // The bounds are theorems about compatible pseudo-prime systems only.
  const bool applicable =
      report.pseudo_prime.verdict == Verdict::True && report.compatibility.compatible;
  if (report.bounds.holds()) r.verdicts["bounds"] = "hold";
  else r.verdicts["bounds"] = applicable ? "violated" : "exceeded (not applicable)";

  const auto& pw = report.pseudo_prime.witnesses;
  if (report.pseudo_prime.condition == "minimal-prime-containment") {
    const char* roles[] = {"pseudo_prime_Q1", "pseudo_prime_Q2", "pseudo_prime_P1", "pseudo_prime_P2"};
    for (std::size_t i = 0; i < pw.size(); ++i) r.add_witness(roles[i], pw[i]);
  } else {
    const std::string role = report.pseudo_prime.verdict == Verdict::Undecidable
                                 ? "undecidable_member"
                                 : "pseudo_prime_member";
    for (const auto& w : pw) r.add_witness(role, w);
  }
  const auto& c = report.compatibility;
  if (!c.compatible) {
    r.verdicts["violations"] = c.violation_count;
    r.add_witness("sum_left", c.left->ideal, {{"intersection_of", names_of(c.left->witness, names)}});
    r.add_witness("sum_right", c.right->ideal, {{"intersection_of", names_of(c.right->witness, names)}});
    r.add_witness("violating_sum", *c.sum);
    for (const auto& s : c.all_violating_sums)
      if (!ideal_equal(s, *c.sum)) r.add_witness("other_violating_sum", s);
  }
  r.counts = counts_json(report.counts);
  r.bounds = bounds_json(report.bounds);
  r.warnings.insert(r.warnings.end(), report.warnings.begin(), report.warnings.end());

  if (report.pseudo_prime.verdict == Verdict::False || !c.compatible ||
      (applicable && !report.bounds.holds()))
    r.outcome = Outcome::Violation;
  else if (report.pseudo_prime.verdict == Verdict::Undecidable) {
    r.outcome = Outcome::Error;
    r.error = "pseudo-prime status is undecidable: " + report.pseudo_prime.detail +
              " (declare them with flags = prime)";
  }
}

void check_splitting(const InputDocument& doc, const CommandOptions&, ReportDocument& r) {
  auto theta = need_splitting(doc, r.command);
  const bool ok = is_splitting(theta);
  r.verdicts["splitting"] = ok;
  r.details["theta(1)"] = trace_apply(theta, Polynomial::constant(doc.ring(), 1)).to_string();
  r.details["q"] = theta.q();
  if (!ok) r.outcome = Outcome::Violation;
}

void compatible(const InputDocument& doc, const CommandOptions&, ReportDocument& r) {
  auto theta = need_splitting(doc, r.command);
  if (!is_splitting(theta))
    r.warnings.push_back("the map is not a Frobenius splitting; compatibility is still tested");
  const auto limits = limits_of(doc);
  for (std::size_t k = 0; k < doc.ideals().size(); ++k) {
    const auto& name = doc.ideal_entries()[k].name;
    const auto& ideal = doc.ideals()[k];
    const bool ok = is_compatible(theta, ideal, limits);
    r.verdicts[name] = ok;
    if (ok) continue;
    r.outcome = Outcome::Violation;
    json extra = {{"name", name}};
    if (auto esc = find_escape(theta.premultiplier(), ideal, theta.e(), limits)) {
      extra["theta_of"] = esc->source.to_string();
      extra["image"] = esc->image.to_string();
    }
    r.add_witness("incompatible", ideal, extra);
  }
  if (doc.ideals().empty()) r.warnings.push_back("no ideals given");
}

void enumerate(const InputDocument& doc, const CommandOptions& options, ReportDocument& r) {
  auto theta = need_splitting(doc, r.command);
  if (!is_splitting(theta)) throw DomainError("the map is not a Frobenius splitting (theta(1) != 1)");
  EnumerationOptions eo;
  eo.include_zero_ideal = options.include_zero_ideal.value_or(
      doc.options().include_zero_ideal.value_or(true));
  eo.limits = limits_of(doc);
  auto split = system_from_splitting(theta, eo);

  auto full = split.compatible_system();
  json all = json::array(), primes = json::array();
  for (auto i : full.canonical_order())
    all.push_back(full.members()[i].to_string() + "  dim " + std::to_string(full.dimensions()[i]));
  for (auto i : split.primes.canonical_order())
    primes.push_back(split.primes.members()[i].to_string() + "  dim " +
                     std::to_string(split.primes.dimensions()[i]));
  r.details["compatible_ideals"] = all;
  r.details["compatible_primes"] = primes;
  r.details["include_zero_ideal"] = eo.include_zero_ideal;

  // Compatible ideals are closed under intersection, so the lattice never
  // leaves the enumerated set and the member cap can follow its size.
  const std::size_t cap = std::max(member_cap(&doc, options), split.compatible.size());
  const bool closed = is_intersection_compatible(full, {cap}).compatible;
  const bool primes_closed = is_intersection_compatible(split.primes, {cap}).compatible;
  const bool radical = std::all_of(split.compatible.begin(), split.compatible.end(),
                                   [](const MonomialIdeal& m) { return monomial_radical(m) == m; });
  auto pp = is_pseudo_prime_system(split.primes);
  auto bounds = check_bounds(split.primes);

  r.verdicts["compatible_ideals"] = split.compatible.size();
  r.verdicts["compatible_primes"] = split.primes.size();
  r.verdicts["compatible_set_intersection_compatible"] = closed;
  r.verdicts["primes_intersection_compatible"] = primes_closed;
  r.verdicts["primes_pseudo_prime"] = to_string(pp.verdict);
  r.verdicts["all_radical"] = radical;
  r.verdicts["bounds"] = bounds.holds() ? "hold" : "violated";
  r.counts = counts_json(count_by_dimension(split.primes));
  r.bounds = bounds_json(bounds);
  if (!closed || !primes_closed || !radical || pp.verdict != Verdict::True || !bounds.holds())
    r.outcome = Outcome::Violation;
}

void fedder(const InputDocument& doc, const CommandOptions&, ReportDocument& r) {
  for (std::size_t k = 0; k < doc.ideals().size(); ++k) {
    const auto& name = doc.ideal_entries()[k].name;
    const bool pure = fedder_is_f_pure(doc.ideals()[k]);
    r.verdicts[name] = pure ? "F-pure" : "not F-pure";
    if (!pure) {
      r.outcome = Outcome::Violation;
      r.add_witness("not_f_pure", doc.ideals()[k], {{"name", name}});
    }
  }
  r.details["criterion"] = "(I^[p] : I) not inside m^[p], e = 1";
  if (doc.ideals().empty()) r.warnings.push_back("no ideals given");
}

void uniform(const InputDocument& doc, const CommandOptions& options, ReportDocument& r) {
  unsigned e = options.e.value_or(doc.splitting() ? doc.splitting()->e : 1);
  if (e == 0) throw DomainError("e must be positive");
  r.details["e"] = e;
  const auto limits = limits_of(doc);
  const auto one = Polynomial::constant(doc.ring(), 1);
  for (std::size_t k = 0; k < doc.ideals().size(); ++k) {
    const auto& name = doc.ideal_entries()[k].name;
    const bool ok = is_uniformly_compatible(doc.ideals()[k], e, limits);
    r.verdicts[name] = ok;
    if (ok) continue;
    r.outcome = Outcome::Violation;
    json extra = {{"name", name}};
    if (auto esc = find_escape(one, doc.ideals()[k], e, limits)) extra["root_element"] = esc->image.to_string();
    r.add_witness("not_uniformly_compatible", doc.ideals()[k], extra);
  }
  if (doc.ideals().empty()) r.warnings.push_back("no ideals given");
}

void verify_bound(const std::optional<InputDocument>& doc, const CommandOptions& options,
                  ReportDocument& r) {
  if (!options.n) throw Error("verify-bound needs --n");
  const std::uint64_t p = options.p.value_or(doc ? doc->p() : 2);
  VerifyOptions vo;
  vo.threads = options.threads;
  auto v = verify_main_theorem(*options.n, p, vo);

  r.verdicts["label"] = v.label;
  r.verdicts["sharp"] = v.sharp();
  r.verdicts["bound_violations"] = v.bound_violations;
  r.verdicts["total_violations"] = v.total_violations;
  r.verdicts["max_total_only_full_arrangement"] = v.max_total_only_full;
  r.verdicts["equality_only_full_arrangement"] = v.equality_only_full;
  r.verdicts["maximality_probe_failures"] = v.maximality_failures;
  r.verdicts["cross_check_mismatches"] = v.cross_check_mismatches;

  std::vector<std::size_t> max_e = v.max_e;
  r.counts = counts_json(max_e);
  std::vector<BoundRow> rows;
  for (std::size_t d = 0; d < max_e.size(); ++d)
    rows.push_back({d, max_e[d], v.binomials[d], compare_bound(max_e[d], v.binomials[d])});
  r.bounds = {{"embdim", v.n},
              {"per_dimension", rows_json(rows)},
              {"total",
               {{"count", v.max_total},
                {"bound", std::uint64_t{1} << v.n},
                {"status", to_string(compare_bound(v.max_total, std::uint64_t{1} << v.n))}}},
              {"verdict", v.passes() ? "hold" : "violated"}};
  r.details["n"] = v.n;
  r.details["p"] = v.p;
  r.details["subsets"] = v.subsets;
  r.details["compatible_subsets"] = v.compatible_subsets;
  r.details["subsets_at_max_total"] = v.subsets_at_max_total;
  r.details["equality_subsets"] = v.equality_subsets;
  r.details["maximality_probes"] = v.maximality_probes;
  r.details["cross_checked_subsets"] = v.cross_checked;
  r.details["counts_meaning"] = "counts[d] is the largest e(d) over intersection compatible subsets";
  if (!v.passes()) r.outcome = Outcome::Violation;
}

json overrides_json(const CommandOptions& o) {
  json out = json::object();
  if (o.n) out["n"] = *o.n;
  if (o.p) out["p"] = *o.p;
  if (o.e) out["e"] = *o.e;
  if (o.max_members) out["max-members"] = *o.max_members;
  if (o.include_zero_ideal) out["include-zero-ideal"] = *o.include_zero_ideal;
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"check-system", "check-splitting", "compatible",
                                                 "enumerate",    "fedder",          "verify-bound",
                                                 "uniform"};
  return names;
}

ReportDocument input_error_report(const std::string& command, const std::string& message,
                                  const CommandOptions& options) {
  ReportDocument r;
  r.command = command;
  r.overrides = overrides_json(options);
  r.outcome = Outcome::Error;
  r.error = message;
  return r;
}

ReportDocument dispatch(const std::string& command, const std::optional<InputDocument>& doc,
                        const CommandOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ReportDocument r;
  r.command = command;
  r.input = doc ? doc->to_json() : json(nullptr);
  r.overrides = overrides_json(options);

  using Handler = std::function<void(const InputDocument&, const CommandOptions&, ReportDocument&)>;
  static const std::map<std::string, Handler> handlers = {
      {"check-system", check_system}, {"check-splitting", check_splitting},
      {"compatible", compatible},     {"enumerate", enumerate},
      {"fedder", fedder},             {"uniform", uniform}};
  try {
    if (command == "verify-bound") {
      verify_bound(doc, options, r);
    } else if (auto it = handlers.find(command); it != handlers.end()) {
      it->second(need_input(doc, command), options, r);
    } else {
      throw Error("unknown command '" + command + "'");
    }
  } catch (const std::exception& e) {
    r.outcome = Outcome::Error;
    r.error = e.what();
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace frobcount::cli
