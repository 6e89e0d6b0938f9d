#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "frobcount/frobenius.hpp"
#include "frobcount/ideal.hpp"

namespace frobcount::cli {

struct IdealEntry {
  std::string name;
  std::vector<std::string> gens;  // as written
  DeclaredFlags flags;
};

struct SplittingEntry {
  unsigned e = 1;
  std::string u;
};

struct InputOptions {
  std::optional<std::size_t> max_members;
  std::optional<bool> include_zero_ideal;
  std::optional<std::uint64_t> max_residue_classes;
};

// A validated input document. Every polynomial has been parsed in the
// declared ring.
class InputDocument {
 public:
  InputDocument(std::uint64_t p, std::vector<std::string> vars, std::string order,
                std::optional<SplittingEntry> splitting, std::vector<IdealEntry> ideals,
                InputOptions options);

  std::uint64_t p() const { return ring_.characteristic(); }
  const Ring& ring() const { return ring_; }
  const std::string& order_name() const { return order_; }
  const std::optional<SplittingEntry>& splitting() const { return splitting_; }
  std::optional<SplittingMap> splitting_map() const { return theta_; }
  const std::vector<IdealEntry>& ideal_entries() const { return entries_; }
  // Parsed ideals, flags applied, in document order.
  const std::vector<Ideal>& ideals() const { return ideals_; }
  const InputOptions& options() const { return options_; }

  // The JSON form; parse_input_text accepts it back.
  nlohmann::json to_json() const;

 private:
  Ring ring_;
  std::string order_;
  std::optional<SplittingEntry> splitting_;
  std::optional<SplittingMap> theta_;
  std::vector<IdealEntry> entries_;
  std::vector<Ideal> ideals_;
  InputOptions options_;
};

// INI-like document, or JSON when the first non-blank character is '{'.
// Throws ParseError (with line and column) on malformed input and Error
// subclasses on semantic problems.
InputDocument parse_input_text(std::string_view text);
InputDocument parse_input_file(const std::string& path);

// Splits "a, (b, c), d" at top-level commas; offsets give each item's start.
std::vector<std::pair<std::string, std::size_t>> split_list(std::string_view text);

}  // namespace frobcount::cli
