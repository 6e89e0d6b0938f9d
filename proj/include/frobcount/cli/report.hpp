#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobcount/ideal.hpp"

namespace frobcount::cli {

// Process outcome, ordered by severity.
enum class Outcome { Pass = 0, Violation = 1, Error = 2 };

int exit_code(Outcome outcome);
Outcome worst(Outcome a, Outcome b);
std::string to_string(Outcome outcome);

struct ReportDocument {
  std::string command;
  nlohmann::json input;      // echo of the input document, or null
  nlohmann::json overrides;  // command-line settings that affect the result
  nlohmann::json verdicts = nlohmann::json::object();
  nlohmann::json counts = nlohmann::json::object();
  nlohmann::json bounds = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json details = nlohmann::json::object();
  std::vector<std::string> warnings;
  std::string error;  // set when outcome is Error
  Outcome outcome = Outcome::Pass;
  double wall_time = 0;

  void add_witness(const std::string& role, const Ideal& ideal, nlohmann::json extra = {});

  // FNV-1a (64 bit) over the canonical JSON of command, input and overrides.
  std::string input_digest() const;
};

// Both forms are deterministic; the wall time is the only varying field.
std::string emit_json(const ReportDocument& report);
std::string emit_text(const ReportDocument& report);

// Generator strings of an ideal in canonical form ("0" for the zero ideal
// is represented by an empty list).
nlohmann::json ideal_json(const Ideal& ideal);

}  // namespace frobcount::cli
