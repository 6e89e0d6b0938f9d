#include "frobcount/cli/input.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "frobcount/errors.hpp"
#include "frobcount/parse.hpp"

namespace frobcount::cli {
namespace {

using json = nlohmann::json;

const std::set<std::string> kOptionKeys = {"max-members", "include-zero-ideal",
                                           "max-residue-classes"};

MonomialOrder order_from_name(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw DomainError("unknown monomial order '" + name + "' (expected grevlex or lex)");
}

DeclaredFlags flags_from_names(const std::vector<std::string>& names) {
  DeclaredFlags f;
  for (const auto& n : names) {
    if (n == "prime") f.prime = f.radical = f.equidimensional = true;
    else if (n == "radical") f.radical = true;
    else if (n == "equidimensional") f.equidimensional = true;
    else throw DomainError("unknown ideal flag '" + n + "' (expected prime, radical or equidimensional)");
  }
  return f;
}

std::vector<std::string> flag_names(const DeclaredFlags& f) {
  if (f.prime) return {"prime"};
  std::vector<std::string> out;
  if (f.radical) out.push_back("radical");
  if (f.equidimensional) out.push_back("equidimensional");
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
std::optional<T> parse_unsigned(const std::string& s) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::optional<bool> parse_bool(const std::string& s) {
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  return std::nullopt;
}

bool is_zero_literal(const std::string& g) { return trim(g) == "0"; }

// A value with the 1-based position where it starts.
struct Located {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct RawIdeal {
  Located header;
  std::string name;
  std::map<std::string, Located> keys;
};

[[noreturn]] void fail_at(const std::string& msg, const Located& at) {
  throw ParseError(msg, at.line, at.column);
}

InputDocument parse_ini(std::string_view text) {
  std::map<std::string, Located> ring, splitting, options;
  std::vector<RawIdeal> ideals;
  std::set<std::string> seen_sections;
  std::map<std::string, Located>* current = nullptr;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == ';') continue;
    const std::size_t col = first + 1;

    if (line[first] == '[') {
      auto close = line.find(']', first);
      if (close == std::string::npos) throw ParseError("missing ']' in section header", line_no, col);
      if (!trim(line.substr(close + 1)).empty())
        throw ParseError("unexpected text after section header", line_no, close + 2);
      std::string header = trim(line.substr(first + 1, close - first - 1));
      Located at{header, line_no, col};
      std::string kind = header.substr(0, header.find_first_of(" \t"));
      if (kind == "ideal") {
        std::string name = trim(header.substr(5));
        if (name.empty()) fail_at("ideal section needs a name", at);
        if (!is_valid_variable_name(name)) fail_at("invalid ideal name '" + name + "'", at);
        for (const auto& other : ideals)
          if (other.name == name) fail_at("duplicate ideal name '" + name + "'", at);
        ideals.push_back(RawIdeal{at, name, {}});
        current = &ideals.back().keys;
        continue;
      }
      if (kind != header || (kind != "ring" && kind != "splitting" && kind != "options"))
        fail_at("unknown section [" + header + "]", at);
      if (!seen_sections.insert(kind).second) fail_at("duplicate section [" + kind + "]", at);
      current = kind == "ring" ? &ring : kind == "splitting" ? &splitting : &options;
      continue;
    }

    auto eq = line.find('=', first);
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no, col);
    if (!current) throw ParseError("key outside of any section", line_no, col);
    std::string key = trim(line.substr(first, eq - first));
    if (key.empty()) throw ParseError("missing key before '='", line_no, col);
    auto vstart = line.find_first_not_of(" \t", eq + 1);
    Located value{trim(line.substr(eq + 1)), line_no,
                  vstart == std::string::npos ? line.size() + 1 : vstart + 1};
    if (current->count(key)) throw ParseError("duplicate key '" + key + "'", line_no, col);
    (*current)[key] = value;
  }

  auto check_keys = [](const std::map<std::string, Located>& section, const std::string& name,
                       const std::set<std::string>& allowed) {
    for (const auto& [k, v] : section)
      if (!allowed.count(k)) {
        Located key_at{k, v.line, 1};
        if (name == "options") fail_at("unknown option key '" + k + "'", key_at);
        fail_at("unknown key '" + k + "' in [" + name + "]", key_at);
      }
  };
  check_keys(ring, "ring", {"p", "vars", "order"});
  check_keys(splitting, "splitting", {"e", "u"});
  check_keys(options, "options", kOptionKeys);
  for (const auto& ideal : ideals) check_keys(ideal.keys, "ideal " + ideal.name, {"gens", "flags"});

  if (!seen_sections.count("ring")) throw ParseError("missing [ring] section", line_no + 1, 1);
  if (!ring.count("p")) throw ParseError("missing 'p' in [ring]", line_no + 1, 1);
  if (!ring.count("vars")) throw ParseError("missing 'vars' in [ring]", line_no + 1, 1);
  const auto& p_at = ring.at("p");
  auto p = parse_unsigned<std::uint64_t>(p_at.text);
  if (!p) fail_at("p must be a positive integer", p_at);
  if (!is_prime(*p) || *p > 2147483647ULL)
    fail_at("p must be prime (got " + p_at.text + ")", p_at);

  std::vector<std::string> vars;
  const auto& vars_at = ring.at("vars");
  for (auto& [name, offset] : split_list(vars_at.text)) {
    Located at{name, vars_at.line, vars_at.column + offset};
    if (!is_valid_variable_name(name)) fail_at("invalid variable name '" + name + "'", at);
    if (std::find(vars.begin(), vars.end(), name) != vars.end())
      fail_at("duplicate variable '" + name + "'", at);
    vars.push_back(name);
  }
  if (vars.empty()) fail_at("at least one variable is required", vars_at);
  std::string order = ring.count("order") ? ring.at("order").text : "grevlex";
  try {
    order_from_name(order);
  } catch (const DomainError& e) {
    fail_at(e.what(), ring.at("order"));
  }
  Ring r(PrimeField(*p), vars, order_from_name(order));

  auto parse_at = [&](const std::string& src, const Located& at, std::size_t offset) {
    try {
      return poly_parse(src, r);
    } catch (const ParseError& e) {
      throw ParseError(e.reason(), at.line, at.column + offset + e.column() - 1);
    }
  };

  std::optional<SplittingEntry> split;
  if (seen_sections.count("splitting")) {
    if (!splitting.count("u")) throw ParseError("missing 'u' in [splitting]", line_no + 1, 1);
    SplittingEntry s;
    if (splitting.count("e")) {
      auto e = parse_unsigned<unsigned>(splitting.at("e").text);
      if (!e || *e == 0) fail_at("e must be a positive integer", splitting.at("e"));
      s.e = *e;
    }
    s.u = splitting.at("u").text;
    parse_at(s.u, splitting.at("u"), 0);
    split = s;
  }

  std::vector<IdealEntry> entries;
  for (const auto& raw_ideal : ideals) {
    IdealEntry entry{raw_ideal.name, {}, {}};
    if (auto it = raw_ideal.keys.find("gens"); it != raw_ideal.keys.end()) {
      for (auto& [g, offset] : split_list(it->second.text)) {
        parse_at(g, it->second, offset);
        entry.gens.push_back(g);
      }
    } else {
      fail_at("missing 'gens' in [ideal " + raw_ideal.name + "]", raw_ideal.header);
    }
    if (auto it = raw_ideal.keys.find("flags"); it != raw_ideal.keys.end()) {
      std::vector<std::string> names;
      for (auto& [f, offset] : split_list(it->second.text)) names.push_back(f);
      try {
        entry.flags = flags_from_names(names);
      } catch (const DomainError& e) {
        fail_at(e.what(), it->second);
      }
    }
    entries.push_back(std::move(entry));
  }

  InputOptions opts;
  if (auto it = options.find("max-members"); it != options.end()) {
    auto v = parse_unsigned<std::size_t>(it->second.text);
    if (!v || *v == 0) fail_at("max-members must be a positive integer", it->second);
    opts.max_members = v;
  }
  if (auto it = options.find("include-zero-ideal"); it != options.end()) {
    auto v = parse_bool(it->second.text);
    if (!v) fail_at("include-zero-ideal must be true or false", it->second);
    opts.include_zero_ideal = v;
  }
  if (auto it = options.find("max-residue-classes"); it != options.end()) {
    auto v = parse_unsigned<std::uint64_t>(it->second.text);
    if (!v || *v == 0) fail_at("max-residue-classes must be a positive integer", it->second);
    opts.max_residue_classes = v;
  }
  return InputDocument(*p, std::move(vars), std::move(order), std::move(split), std::move(entries),
                       opts);
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

InputDocument parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_and_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError("invalid json: " + msg, line, col);
  }
  auto bad = [](const std::string& what) { throw ParseError("invalid json input: " + what, 1, 1); };
  if (!doc.is_object()) bad("the document must be an object");
  for (const auto& [k, v] : doc.items())
    if (k != "p" && k != "vars" && k != "order" && k != "splitting" && k != "ideals" && k != "options")
      bad("unknown key '" + k + "'");
  if (!doc.contains("p") || !doc["p"].is_number_unsigned()) bad("'p' must be a positive integer");
  const auto p = doc["p"].get<std::uint64_t>();
  if (!is_prime(p) || p > 2147483647ULL) bad("p must be prime (got " + std::to_string(p) + ")");
  if (!doc.contains("vars") || !doc["vars"].is_array()) bad("'vars' must be an array of names");
  std::vector<std::string> vars;
  for (const auto& v : doc["vars"]) {
    if (!v.is_string()) bad("'vars' must be an array of names");
    vars.push_back(v.get<std::string>());
  }
  std::string order = doc.value("order", std::string("grevlex"));

  std::optional<SplittingEntry> split;
  if (doc.contains("splitting") && !doc["splitting"].is_null()) {
    const auto& s = doc["splitting"];
    if (!s.is_object() || !s.contains("u") || !s["u"].is_string())
      bad("'splitting' needs a string 'u'");
    SplittingEntry entry;
    if (s.contains("e")) {
      if (!s["e"].is_number_unsigned() || s["e"].get<unsigned>() == 0)
        bad("splitting 'e' must be a positive integer");
      entry.e = s["e"].get<unsigned>();
    }
    entry.u = s["u"].get<std::string>();
    split = entry;
  }

  std::vector<IdealEntry> entries;
  if (doc.contains("ideals")) {
    if (!doc["ideals"].is_array()) bad("'ideals' must be an array");
    for (const auto& i : doc["ideals"]) {
      if (!i.is_object() || !i.contains("name") || !i["name"].is_string())
        bad("every ideal needs a string 'name'");
      IdealEntry entry{i["name"].get<std::string>(), {}, {}};
      if (!is_valid_variable_name(entry.name)) bad("invalid ideal name '" + entry.name + "'");
      for (const auto& other : entries)
        if (other.name == entry.name) bad("duplicate ideal name '" + entry.name + "'");
      if (!i.contains("gens") || !i["gens"].is_array()) bad("ideal '" + entry.name + "' needs 'gens'");
      for (const auto& g : i["gens"]) {
        if (!g.is_string()) bad("generators must be strings");
        entry.gens.push_back(g.get<std::string>());
      }
      std::vector<std::string> names;
      if (i.contains("flags"))
        for (const auto& f : i["flags"]) {
          if (!f.is_string()) bad("flags must be strings");
          names.push_back(f.get<std::string>());
        }
      entry.flags = flags_from_names(names);
      entries.push_back(std::move(entry));
    }
  }

  InputOptions opts;
  if (doc.contains("options")) {
    const auto& o = doc["options"];
    if (!o.is_object()) bad("'options' must be an object");
    for (const auto& [k, v] : o.items()) {
      if (!kOptionKeys.count(k)) bad("unknown option key '" + k + "'");
      if (k == "include-zero-ideal") {
        if (!v.is_boolean()) bad("include-zero-ideal must be a boolean");
        opts.include_zero_ideal = v.get<bool>();
      } else {
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) bad(k + " must be a positive integer");
        if (k == "max-members") opts.max_members = v.get<std::size_t>();
        else opts.max_residue_classes = v.get<std::uint64_t>();
      }
    }
  }
  return InputDocument(p, std::move(vars), std::move(order), std::move(split), std::move(entries),
                       opts);
}

}  // namespace

std::vector<std::pair<std::string, std::size_t>> split_list(std::string_view text) {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    auto b = piece.find_first_not_of(" \t\r");
    if (b != std::string_view::npos) out.emplace_back(trim(piece), start + b);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return out;
}

InputDocument::InputDocument(std::uint64_t p, std::vector<std::string> vars, std::string order,
                             std::optional<SplittingEntry> splitting,
                             std::vector<IdealEntry> ideals, InputOptions options)
    : ring_(PrimeField(p), std::move(vars), order_from_name(order)),
      order_(std::move(order)),
      splitting_(std::move(splitting)),
      entries_(std::move(ideals)),
      options_(options) {
  auto parse_named = [&](const std::string& src, const std::string& where) {
    try {
      return poly_parse(src, ring_);
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.reason(), 0, e.column());
    }
  };
  if (splitting_) {
    if (splitting_->e == 0) throw DomainError("splitting e must be positive");
    theta_ = SplittingMap(splitting_->e, parse_named(splitting_->u, "splitting u"));
  }
  std::set<std::string> names;
  for (const auto& entry : entries_) {
    if (!names.insert(entry.name).second)
      throw DomainError("duplicate ideal name '" + entry.name + "'");
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < entry.gens.size(); ++i) {
      if (is_zero_literal(entry.gens[i])) continue;
      gens.push_back(parse_named(entry.gens[i],
                                 "ideal " + entry.name + " generator " + std::to_string(i + 1)));
    }
    ideals_.emplace_back(ring_, std::move(gens), entry.flags);
  }
}

nlohmann::json InputDocument::to_json() const {
  json out;
  out["p"] = p();
  out["vars"] = ring_.var_names();
  out["order"] = order_;
  if (splitting_) out["splitting"] = {{"e", splitting_->e}, {"u", splitting_->u}};
  out["ideals"] = json::array();
  for (const auto& e : entries_)
    out["ideals"].push_back({{"name", e.name}, {"gens", e.gens}, {"flags", flag_names(e.flags)}});
  json opts = json::object();
  if (options_.max_members) opts["max-members"] = *options_.max_members;
  if (options_.include_zero_ideal) opts["include-zero-ideal"] = *options_.include_zero_ideal;
  if (options_.max_residue_classes) opts["max-residue-classes"] = *options_.max_residue_classes;
  out["options"] = opts;
  return out;
}

InputDocument parse_input_text(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_ini(text);
}

InputDocument parse_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str());
}

}  // namespace frobcount::cli
