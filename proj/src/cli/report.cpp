#include "frobcount/cli/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace frobcount::cli {

using json = nlohmann::json;

int exit_code(Outcome outcome) { return static_cast<int>(outcome); }

Outcome worst(Outcome a, Outcome b) { return exit_code(a) >= exit_code(b) ? a : b; }

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "pass";
    case Outcome::Violation: return "violation";
    case Outcome::Error: return "error";
  }
  return "?";
}

json ideal_json(const Ideal& ideal) { return ideal.canonical_generators(); }

void ReportDocument::add_witness(const std::string& role, const Ideal& ideal, json extra) {
  json w = {{"role", role}, {"ideal", ideal_json(ideal)}};
  if (extra.is_object())
    for (auto& [k, v] : extra.items()) w[k] = v;
  witnesses.push_back(std::move(w));
}

std::string ReportDocument::input_digest() const {
  const std::string canonical =
      json{{"command", command}, {"input", input}, {"overrides", overrides}}.dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string emit_json(const ReportDocument& r) {
  json out;
  out["command"] = r.command;
  out["input"] = r.input;
  out["input_digest"] = r.input_digest();
  out["overrides"] = r.overrides;
  out["outcome"] = to_string(r.outcome);
  out["exit_code"] = exit_code(r.outcome);
  out["verdicts"] = r.verdicts;
  out["counts"] = r.counts;
  out["bounds"] = r.bounds;
  out["witnesses"] = r.witnesses;
  out["details"] = r.details;
  out["warnings"] = r.warnings;
  out["error"] = r.error.empty() ? json(nullptr) : json(r.error);
  std::ostringstream t;
  t << std::fixed << std::setprecision(3) << r.wall_time;
  out["wall_time_seconds"] = t.str();
  return out.dump(2) + "\n";
}

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string ideal_text(const json& gens) {
  if (!gens.is_array() || gens.empty()) return "<0>";
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].get<std::string>();
  return s + ">";
}

void table(std::ostringstream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  for (const auto& row : rows) {
    std::string line = " ";
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += " " + row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size(), ' ');
    }
    out << line << "\n";
  }
}

void bound_rows(std::ostringstream& out, const json& rows, const std::string& count_head,
                const std::string& bound_head) {
  std::vector<std::vector<std::string>> t = {{"d", count_head, bound_head, "status"}};
  for (const auto& row : rows)
    t.push_back({scalar(row["d"]), scalar(row["count"]), scalar(row["bound"]), scalar(row["status"])});
  table(out, t);
}

}  // namespace

std::string emit_text(const ReportDocument& r) {
  std::ostringstream out;
  out << "frobcount " << r.command << "\n";
  out << "input digest: " << r.input_digest() << "\n";
  out << "outcome: " << to_string(r.outcome) << " (exit " << exit_code(r.outcome) << ")\n";
  if (!r.error.empty()) out << "error: " << r.error << "\n";

  if (!r.verdicts.empty()) {
    out << "\nverdicts\n";
    std::vector<std::vector<std::string>> t;
    for (const auto& [k, v] : r.verdicts.items()) t.push_back({k, scalar(v)});
    table(out, t);
  }
  if (r.bounds.contains("per_dimension")) {
    const std::string n = scalar(r.bounds["embdim"]);
    out << "\ncounts and bounds (embedding dimension " << n << ")\n";
    bound_rows(out, r.bounds["per_dimension"], "e(d)", "C(" + n + ",d)");
    const auto& total = r.bounds["total"];
    out << "  total " << scalar(total["count"]) << " of at most " << scalar(total["bound"]) << " ("
        << scalar(total["status"]) << ")\n";
    if (r.bounds.contains("cone")) {
      out << "\nprojective form (d-dimensional subschemes are members of dimension d+1)\n";
      bound_rows(out, r.bounds["cone"], "e(d+1)", "C(" + n + ",d+1)");
    }
  } else if (!r.counts.empty()) {
    out << "\ncounts\n";
    std::vector<std::vector<std::string>> t = {{"d", "e(d)"}};
    for (const auto& [k, v] : r.counts.items()) t.push_back({k, scalar(v)});
    table(out, t);
  }
  if (!r.witnesses.empty()) {
    out << "\nwitnesses\n";
    std::vector<std::vector<std::string>> t;
    for (const auto& w : r.witnesses) {
      std::string extra;
      for (const auto& [k, v] : w.items())
        if (k != "role" && k != "ideal") extra += "  " + k + "=" + scalar(v);
      t.push_back({scalar(w["role"]), ideal_text(w["ideal"]) + extra});
    }
    table(out, t);
  }
  if (!r.details.empty()) {
    out << "\ndetails\n";
    for (const auto& [k, v] : r.details.items()) {
      if (v.is_array()) {
        out << "  " << k << ":\n";
        for (const auto& item : v) out << "    " << scalar(item) << "\n";
      } else {
        out << "  " << k << ": " << scalar(v) << "\n";
      }
    }
  }
  if (!r.warnings.empty()) {
    out << "\nwarnings\n";
    for (const auto& w : r.warnings) out << "  - " << w << "\n";
  }
  out << "\nwall time: " << std::fixed << std::setprecision(3) << r.wall_time << " s\n";
  return out.str();
}

}  // namespace frobcount::cli
