#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobcount/cli/input.hpp"
#include "frobcount/cli/report.hpp"

namespace frobcount::cli {

// Command-line settings. Unset values fall back to the document's [options]
// and then to library defaults.
struct CommandOptions {
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> p;
  std::optional<unsigned> e;
  std::optional<std::size_t> max_members;
  std::optional<bool> include_zero_ideal;
  unsigned threads = 0;  // does not affect results, so it is not echoed
};

const std::vector<std::string>& command_names();

// Runs one command. Errors (bad input, caps, undecidable verdicts) are
// reported in the document with Outcome::Error rather than thrown.
ReportDocument dispatch(const std::string& command, const std::optional<InputDocument>& doc,
                        const CommandOptions& options = {});

// Report for input that could not be read or parsed.
ReportDocument input_error_report(const std::string& command, const std::string& message,
                                  const CommandOptions& options = {});

}  // namespace frobcount::cli
