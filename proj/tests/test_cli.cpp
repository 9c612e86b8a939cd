#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mkw/cli.hpp"
#include "mkw/commands.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "mkwcli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = mkw::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("algebra commands print canonical text") {
  auto r = run({"graft", "[a]", "[b]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[b[a]]\n");
  r = run({"gl-product", "[a]", "[b]"});
  CHECK(r.out == "[a][b] + [b[a]]\n");
  r = run({"pi", "[[]]"});
  CHECK(r.out == "0\n");
  r = run({"eval", "[a]**[b] - [a][b]"});
  CHECK(r.out == "[b[a]]\n");
  r = run({"reg-gl-product", "[o{1}]", "[o{1}]"});
  CHECK(r.out == "[o{2}]\n");
}

TEST_CASE("bad input exits with 2 and names the position") {
  auto r = run({"graft", "[a[b]", "[b]"});
  CHECK(r.code == 2);
  CHECK(r.err.find("parse error") != std::string::npos);
  CHECK(r.err.find("position") != std::string::npos);
  CHECK(run({"graft", "[a]"}).code == 2);
  CHECK(run({"graft", "[a]", "[b]", "--bogus", "1"}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"verify", "--suite", "no-such-suite"}).code == 2);
}

TEST_CASE("ranges above the degree cap exit with 3") {
  const auto r = run({"verify", "--suite", "hopf-axioms", "--max-degree", "99"});
  CHECK(r.code == 3);
  CHECK(r.err.find("degree cap") != std::string::npos);
}

TEST_CASE("verification report in text and JSON") {
  auto r = run({"verify", "--suite", "hopf-axioms", "--max-degree", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run({"--json", "verify", "--suite", "gl-duality", "--max-degree", "3"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("suite") == "gl-duality");
  REQUIRE(j.at("checks").is_array());
  REQUIRE_FALSE(j.at("checks").empty());
  for (const auto& c : j.at("checks")) {
    CHECK(c.at("name").is_string());
    CHECK(c.at("range").is_string());
    CHECK(c.at("status") == "pass");
  }
}

TEST_CASE("output is deterministic") {
  const auto a = run({"--json", "mkw-coproduct", "[a[b][c[d]]]"});
  const auto b = run({"--json", "mkw-coproduct", "[a[b][c[d]]]"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("fixture replay from the command line") {
  CHECK(run({"verify", "--suite", "paper-examples"}).code == 0);
  const std::string path = "mkw_cli_test_fixture.txt";
  {
    std::ofstream f(path);
    f << "good: graft [a] [b] => [b[a]]\n";
    f << "wrong value: graft [a] [b] => [a[b]]\n";
    f << "this line has no arrow\n";
  }
  const auto r = run({"--fixtures", path, "verify", "--suite", "paper-examples"});
  std::remove(path.c_str());
  CHECK(r.code == 1);
  CHECK(r.out.find("wrong value") != std::string::npos);
  CHECK(r.out.find("malformed fixture") != std::string::npos);
}

TEST_CASE("fixture lines") {
  const auto c = mkw::parse_fixture_line("label here: reg-gl-product [o{1,0}] [o{0,1}] --dimension 2 => [o{1,1}]");
  CHECK(c.label == "label here");
  CHECK(c.command == "reg-gl-product");
  CHECK(c.args.size() == 2);
  CHECK(c.options.at("dimension") == "2");
  CHECK(c.expected == "[o{1,1}]");
  CHECK(mkw::replay(c, 7).matched);
  CHECK(mkw::split_words("a \"b c\" d").size() == 3);
}
