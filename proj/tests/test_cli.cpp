#include <doctest.h>

#include <fstream>
#include <sstream>

#include "frobcount/cli/dispatch.hpp"
#include "frobcount/errors.hpp"
#include "support.hpp"

using namespace frobcount;
using namespace frobcount::cli;
using namespace frobcount::testing;
using nlohmann::json;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(FROBCOUNT_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ReportDocument run(const std::string& command, const std::string& text,
                   CommandOptions options = {}) {
  return dispatch(command, parse_input_text(text), options);
}

// Position of a ParseError raised while reading `text`.
std::pair<std::size_t, std::size_t> error_at(const std::string& text, std::string* reason = nullptr) {
  try {
    parse_input_text(text);
  } catch (const ParseError& e) {
    if (reason) *reason = e.reason();
    return {e.line(), e.column()};
  }
  FAIL("no ParseError for:\n" << text);
  return {0, 0};
}

std::string without_wall_time(std::string s) {
  auto pos = s.find("\"wall_time_seconds\"");
  if (pos != std::string::npos) s.erase(pos, s.find('\n', pos) - pos);
  pos = s.find("wall time:");
  if (pos != std::string::npos) s.erase(pos, s.find('\n', pos) - pos);
  return s;
}

Ideal witness_ideal(const Ring& ring, const json& w) {
  std::vector<Polynomial> gens;
  for (const auto& g : w.at("ideal")) gens.push_back(poly_parse(g.get<std::string>(), ring));
  return Ideal(ring, std::move(gens));
}

const json* find_witness(const ReportDocument& r, const std::string& role) {
  for (const auto& w : r.witnesses)
    if (w.at("role") == role) return &w;
  return nullptr;
}

}  // namespace

TEST_CASE("ini input parses ring, splitting, ideals and options") {
  auto doc = parse_input_text(R"(# comment
[ring]
p = 3
vars = x, y, z   # trailing comment
order = lex

[splitting]
e = 2
u = (x*y*z)^8

[ideal A]
gens = x, y^2 - z
flags = prime

[ideal Z]
gens = 0

[options]
max-members = 20
include-zero-ideal = false
)");
  CHECK(doc.p() == 3);
  CHECK(doc.ring().nvars() == 3);
  CHECK(doc.order_name() == "lex");
  REQUIRE(doc.splitting());
  CHECK(doc.splitting()->e == 2);
  REQUIRE(doc.ideal_entries().size() == 2);
  CHECK(doc.ideal_entries()[0].name == "A");
  CHECK(doc.ideal_entries()[0].flags.prime);
  CHECK(doc.ideal_entries()[0].flags.radical);
  CHECK(doc.ideals()[1].is_zero());
  CHECK(ideal_equal(doc.ideals()[0], I(doc.ring(), {"x", "y^2 - z"})));
  CHECK(doc.options().max_members == 20u);
  CHECK(doc.options().include_zero_ideal == false);
}

TEST_CASE("ini errors carry line and column") {
  std::string reason;
  auto at = error_at("[ring]\np = 4\nvars = x\n", &reason);
  CHECK(at.first == 2);
  CHECK(reason == "p must be prime (got 4)");

  at = error_at("[ring]\np = 2\nvars = x, y\n[ideal A]\ngens = x\n[ideal A]\ngens = y\n", &reason);
  CHECK(at.first == 6);
  CHECK(reason.find("duplicate") != std::string::npos);

  at = error_at("[ring]\np = 2\nvars = x\n[options]\nbogus = 1\n", &reason);
  CHECK(at.first == 5);
  CHECK(reason.find("unknown option key") != std::string::npos);

  // the column points into the offending generator
  at = error_at("[ring]\np = 2\nvars = x, y\n[ideal A]\ngens = x, y + *\n", &reason);
  CHECK(at.first == 5);
  CHECK(at.second > 10);

  at = error_at("[ring]\np = 2\nvars = x\n[wat]\n", &reason);
  CHECK(at.first == 4);
  at = error_at("[ring]\np = 2\nvars = x\n[ideal A]\ngens = q\n", &reason);
  CHECK(at.first == 5);
}

TEST_CASE("missing ring section is rejected") {
  CHECK_THROWS_AS(parse_input_text("[ideal A]\ngens = x\n"), Error);
}

TEST_CASE("json input and round trip") {
  auto doc = parse_input_text(read_data("splitting_xy.ini"));
  const std::string text = doc.to_json().dump();
  auto back = parse_input_text(text);
  CHECK(back.to_json() == doc.to_json());
  CHECK(back.p() == 2);
  REQUIRE(back.ideals().size() == doc.ideals().size());
  for (std::size_t i = 0; i < doc.ideals().size(); ++i)
    CHECK(back.ideals()[i].to_string() == doc.ideals()[i].to_string());

  std::string reason;
  auto at = error_at("{\n  \"ring\": {\"p\": 2,\n  }\n}", &reason);
  CHECK(at.first >= 2);
  CHECK_THROWS_AS(parse_input_text(R"({"ring": {"p": 6, "vars": ["x"]}})"), Error);
}

TEST_CASE("split_list respects parentheses") {
  auto items = split_list("a, (b, c), d");
  REQUIRE(items.size() == 3);
  CHECK(items[1].first == "(b, c)");
  CHECK(items[2].second == 11);
}

TEST_CASE("exit code mapping") {
  CHECK(exit_code(Outcome::Pass) == 0);
  CHECK(exit_code(Outcome::Violation) == 1);
  CHECK(exit_code(Outcome::Error) == 2);
  const Outcome all[] = {Outcome::Pass, Outcome::Violation, Outcome::Error};
  for (auto a : all)
    for (auto b : all) {
      CHECK(exit_code(worst(a, b)) == std::max(exit_code(a), exit_code(b)));
      CHECK(worst(a, b) == worst(b, a));
    }
}

TEST_CASE("check-system on the four lines") {
  for (const char* file : {"non_example_p2.ini", "non_example_p3.ini"}) {
    auto doc = parse_input_text(read_data(file));
    auto r = dispatch("check-system", doc);
    CHECK(exit_code(r.outcome) == 1);
    CHECK(r.verdicts["intersection_compatible"] == false);
    const json* w = find_witness(r, "violating_sum");
    REQUIRE(w);
    CHECK(ideal_equal(witness_ideal(doc.ring(), *w), I(doc.ring(), {"x^2", "x + y"})));
    // sum_left and sum_right add up to the witness
    const json* a = find_witness(r, "sum_left");
    const json* b = find_witness(r, "sum_right");
    REQUIRE(a);
    REQUIRE(b);
    CHECK(ideal_equal(ideal_sum(witness_ideal(doc.ring(), *a), witness_ideal(doc.ring(), *b)),
                      witness_ideal(doc.ring(), *w)));
    CHECK(r.verdicts["bounds"] != "violated");
  }
}

TEST_CASE("witness ideals survive the json report") {
  auto doc = parse_input_text(read_data("non_example_p3.ini"));
  auto r = dispatch("check-system", doc);
  auto parsed = json::parse(emit_json(r));
  REQUIRE(parsed["witnesses"].size() == r.witnesses.size());
  for (std::size_t i = 0; i < r.witnesses.size(); ++i)
    CHECK(ideal_equal(witness_ideal(doc.ring(), parsed["witnesses"][i]),
                      witness_ideal(doc.ring(), r.witnesses[i])));
  CHECK(parsed["exit_code"] == 1);
  CHECK(parsed["input_digest"] == r.input_digest());
}

TEST_CASE("check-system on the coordinate arrangement passes") {
  auto r = run("check-system", R"([ring]
p = 2
vars = x, y
[ideal M]
gens = x, y
[ideal X]
gens = x
[ideal Y]
gens = y
[ideal Z]
gens = 0
)");
  CHECK(exit_code(r.outcome) == 0);
  CHECK(r.verdicts["pseudo_prime"] == "true");
  CHECK(r.verdicts["intersection_compatible"] == true);
  CHECK(r.verdicts["bounds"] == "hold");
  CHECK(r.counts == json{{"0", 1}, {"1", 2}, {"2", 1}});
}

TEST_CASE("check-system on an empty system") {
  auto r = run("check-system", "[ring]\np = 5\nvars = x, y, z\n");
  CHECK(exit_code(r.outcome) == 0);
  CHECK(r.verdicts["intersection_compatible"] == true);
  for (const auto& [d, c] : r.counts.items()) CHECK(c == 0);
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("check-system with a non-radical member is a violation") {
  auto r = run("check-system", "[ring]\np = 2\nvars = x, y\n[ideal A]\ngens = x^2\n");
  CHECK(exit_code(r.outcome) == 1);
  CHECK(r.verdicts["pseudo_prime"] == "false");
}

TEST_CASE("check-system with an undeclared non-monomial member is undecidable") {
  auto r = run("check-system", "[ring]\np = 3\nvars = x, y\n[ideal C]\ngens = y^2 - x^3\n");
  CHECK(exit_code(r.outcome) == 2);
  CHECK_FALSE(r.error.empty());
  auto declared = run("check-system",
                      "[ring]\np = 3\nvars = x, y\n[ideal C]\ngens = y^2 - x^3\nflags = prime\n");
  CHECK(exit_code(declared.outcome) == 0);
}

TEST_CASE("check-system honours the member cap") {
  // the proper coordinate primes of k[x,y,z]; their lattice has more than 3 elements
  const std::string text = "[ring]\np = 2\nvars = x, y, z\n"
                           "[ideal A]\ngens = x\n[ideal B]\ngens = y\n[ideal C]\ngens = z\n"
                           "[ideal AB]\ngens = x, y\n[ideal AC]\ngens = x, z\n"
                           "[ideal BC]\ngens = y, z\n[ideal M]\ngens = x, y, z\n";
  CommandOptions tight;
  tight.max_members = 3;
  CHECK(exit_code(run("check-system", text, tight).outcome) == 2);
  CHECK(exit_code(run("check-system", text).outcome) == 0);
}

TEST_CASE("check-splitting and compatible") {
  const std::string text = read_data("splitting_xy.ini");
  CHECK(exit_code(run("check-splitting", text).outcome) == 0);
  auto bad = run("check-splitting", "[ring]\np = 2\nvars = x, y\n[splitting]\nu = x\n");
  CHECK(exit_code(bad.outcome) == 1);
  CHECK(bad.verdicts["splitting"] == false);

  auto r = run("compatible", text);
  CHECK(exit_code(r.outcome) == 1);
  CHECK(r.verdicts["X"] == true);
  CHECK(r.verdicts["XY"] == true);
  CHECK(r.verdicts["L"] == false);
  const json* w = find_witness(r, "incompatible");
  REQUIRE(w);
  // the image of an element of <x + y> that leaves the ideal
  auto doc = parse_input_text(text);
  auto image = poly_parse(w->at("image").get<std::string>(), doc.ring());
  CHECK_FALSE(ideal_member(image, I(doc.ring(), {"x + y"})));

  CHECK(exit_code(run("compatible", "[ring]\np = 2\nvars = x\n[ideal X]\ngens = x\n").outcome) == 2);
}

TEST_CASE("enumerate on xy") {
  auto r = run("enumerate", read_data("splitting_xy.ini"));
  CHECK(exit_code(r.outcome) == 0);
  CHECK(r.verdicts["compatible_primes"] == 4);
  CHECK(r.verdicts["compatible_ideals"] == 5);
  CHECK(r.verdicts["compatible_set_intersection_compatible"] == true);
  CHECK(r.verdicts["all_radical"] == true);
  CHECK(r.counts == json{{"0", 1}, {"1", 2}, {"2", 1}});
  CHECK(r.bounds.contains("cone"));

  auto no = run("enumerate", "[ring]\np = 2\nvars = x, y\n[splitting]\nu = x\n");
  CHECK(exit_code(no.outcome) == 2);
}

TEST_CASE("fedder and uniform") {
  auto r = run("fedder", read_data("fedder.ini"));
  CHECK(exit_code(r.outcome) == 1);
  CHECK(r.verdicts["node"] == "F-pure");
  CHECK(r.verdicts["cusp"] == "not F-pure");
  CHECK(r.verdicts["zero"] == "F-pure");

  auto u = run("uniform", "[ring]\np = 2\nvars = x, y\n[ideal Z]\ngens = 0\n[ideal X]\ngens = x\n");
  CHECK(exit_code(u.outcome) == 1);
  CHECK(u.verdicts["Z"] == true);
  CHECK(u.verdicts["X"] == false);
  REQUIRE(find_witness(u, "not_uniformly_compatible"));
}

TEST_CASE("verify-bound") {
  CommandOptions o;
  o.n = 3;
  auto r = dispatch("verify-bound", std::nullopt, o);
  CHECK(exit_code(r.outcome) == 0);
  CHECK(r.counts == json{{"0", 1}, {"1", 3}, {"2", 3}, {"3", 1}});
  CHECK(r.verdicts["sharp"] == true);

  CHECK(exit_code(dispatch("verify-bound", std::nullopt).outcome) == 2);
  o.n = 9;
  CHECK(exit_code(dispatch("verify-bound", std::nullopt, o).outcome) == 2);
  o.n = 2;
  o.p = 4;
  CHECK(exit_code(dispatch("verify-bound", std::nullopt, o).outcome) == 2);
}

TEST_CASE("unknown command and missing input") {
  CHECK(exit_code(dispatch("frobnicate", std::nullopt).outcome) == 2);
  CHECK(exit_code(dispatch("check-system", std::nullopt).outcome) == 2);
  auto e = input_error_report("check-system", "bad");
  CHECK(exit_code(e.outcome) == 2);
  CHECK(e.error == "bad");
}

TEST_CASE("reports are deterministic apart from wall time") {
  for (const char* cmd : {"check-system", "enumerate", "compatible"}) {
    const std::string file = std::string(cmd) == "check-system" ? "non_example_p2.ini" : "splitting_xy.ini";
    auto a = run(cmd, read_data(file));
    auto b = run(cmd, read_data(file));
    CHECK(without_wall_time(emit_json(a)) == without_wall_time(emit_json(b)));
    CHECK(without_wall_time(emit_text(a)) == without_wall_time(emit_text(b)));
  }
}

TEST_CASE("input digest tracks input and overrides") {
  const std::string text = read_data("non_example_p2.ini");
  auto a = run("check-system", text);
  CommandOptions o;
  o.max_members = 30;
  auto b = run("check-system", text, o);
  CHECK(a.input_digest() != b.input_digest());
  CHECK(a.input_digest() == run("check-system", text).input_digest());
  CHECK(a.input_digest().rfind("fnv1a64:", 0) == 0);
  // the json and ini spellings of one document digest alike
  auto doc = parse_input_text(text);
  auto c = run("check-system", doc.to_json().dump());
  CHECK(a.input_digest() == c.input_digest());
}
