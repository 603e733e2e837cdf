#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bicumulant");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = bicumulant::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
  auto end = text.find_last_not_of('\n');
  auto start = text.rfind('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("enumerate counts") {
  CHECK(last_line(run({"enumerate", "forests", "--shape", "2,1"}).out) == "count: 8");
  CHECK(last_line(run({"enumerate", "forests", "--shape", "2,1", "--filter", "mixing"}).out) == "count: 6");
  CHECK(last_line(run({"enumerate", "forests", "--shape", "2,1", "--filter", "strongly-mixing"}).out) ==
        "count: 5");
  CHECK(last_line(run({"enumerate", "trees", "--shape", "2,2"}).out) == "count: 26");
  CHECK(last_line(run({"enumerate", "partitions", "--shape", "2,2"}).out) == "count: 15");
  CHECK(last_line(run({"enumerate", "colourings", "--shape", "2,1", "--filter", "weakly-mixing"}).out) ==
        "count: 6");
  CHECK(last_line(run({"enumerate", "sequences", "--shape", "1,1"}).out) == "count: 3");
}

TEST_CASE("text and json agree") {
  for (const char* kind : {"partitions", "forests", "trees", "colourings", "sequences"}) {
    Run text = run({"enumerate", kind, "--shape", "2,1"});
    Run json = run({"enumerate", kind, "--shape", "2,1", "--format", "json"});
    REQUIRE(json.code == 0);
    auto doc = nlohmann::json::parse(json.out);
    CHECK(last_line(text.out) == "count: " + std::to_string(doc["count"].get<int>()));
    CHECK(doc["items"].size() == doc["count"].get<std::size_t>());
  }
  auto forests = nlohmann::json::parse(run({"enumerate", "forests", "--shape", "2,1", "--format", "json"}).out);
  int bare = 0, infinite = 0;
  for (const auto& item : forests["items"]) {
    bare += item["w"] == 0;
    infinite += item["w"].is_null();
  }
  CHECK(bare == 1);
  CHECK(infinite == 2);
}

TEST_CASE("expand") {
  CHECK(run({"expand", "--shape", "1"}).out == "a1_1\n");
  Run analogue = run({"expand", "--shape", "1,1", "--law", "ls-analogue"});
  CHECK(analogue.out == "-(* a1_1 a2_1) + (. a1_1 a2_1)\n");
  Run latex = run({"expand", "--shape", "2,1", "--law", "main", "--format", "latex"});
  CHECK(latex.code == 0);
  std::size_t kappas = 0, pos = 0;
  while ((pos = latex.out.find("\\kappa", pos)) != std::string::npos) ++kappas, ++pos;
  CHECK(kappas == 7);  // one per internal vertex of the five non-bare forests
  CHECK(latex.out.find("a_{1}^{1} \\ast a_{2}^{1} \\ast a_{1}^{2}") != std::string::npos);
  auto doc = nlohmann::json::parse(run({"expand", "--shape", "2,1", "--format", "json"}).out);
  CHECK(doc["forests"].size() == 6);
  CHECK(doc["terms"].size() == 1);
  CHECK(run({"expand", "--shape", "2,1", "--law", "halving"}).code == 2);
}

TEST_CASE("verify exit codes") {
  Run sweep = run({"verify", "--law", "main", "--max-size", "5"});
  CHECK(sweep.code == 0);
  CHECK(nlohmann::json::parse(sweep.out).size() == 31);
  CHECK(run({"verify", "--law", "path-fg", "--arity", "3", "--max-coord", "4"}).code == 0);
  CHECK(run({"verify", "--law", "seq-bijection", "--max-size", "4"}).code == 0);
  Run both = run({"verify", "--law", "ls-classical", "--shape", "2,2", "--format", "text"});
  CHECK(both.code == 0);
  CHECK(both.out == "ls-classical-star 2,2 equal lhs_terms=2 rhs_terms=2\n"
                    "ls-classical-dot 2,2 equal lhs_terms=2 rhs_terms=2\n");
  CHECK(run({"verify", "--law", "main", "--shape", "4,4"}).code == 3);
  CHECK(run({"verify", "--law", "main", "--max-size", "8"}).code == 3);
  CHECK(run({"verify", "--law", "halving", "--shape", "4,4", "--unsafe-cap"}).code == 0);
}

TEST_CASE("model exit codes") {
  Run ok = run({"model", "--law", "main", "--shape", "2,2", "--seed", "42"});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)[0]["trials"] == 20);
  CHECK(run({"model", "--law", "ls-analogue", "--shape", "2,1", "--seed", "7"}).code == 0);
  Run bad = run({"model", "--law", "ls-analogue", "--shape", "2,1", "--seed", "7", "--corrupt-sign"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("a1_1 = ") != std::string::npos);
  CHECK(nlohmann::json::parse(bad.out)[0].contains("assignment"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"enumerate", "forests"}).code == 2);
  CHECK(run({"enumerate", "shrubs", "--shape", "2"}).code == 2);
  CHECK(run({"enumerate", "forests", "--shape", "2,x"}).code == 2);
  CHECK(run({"enumerate", "forests", "--shape", "2", "--filter", "weakly-mixing"}).code == 2);
  CHECK(run({"enumerate", "forests", "--shape", "2", "--format", "yaml"}).code == 2);
  CHECK(run({"enumerate", "forests", "--shape", "2", "--colour"}).code == 2);
  CHECK(run({"verify", "--law", "nope", "--shape", "2"}).code == 2);
  CHECK(run({"verify", "--law", "main", "--shape", "2", "--max-size", "3"}).code == 2);
  CHECK(run({"verify", "--law", "path-fg", "--arity", "0"}).code == 2);
  CHECK(run({"model", "--law", "seq-bijection", "--shape", "2"}).code == 2);
  Run err = run({"verify", "--law", "nope", "--shape", "2"});
  CHECK(err.out.empty());
  CHECK(err.err.find("unknown law") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (std::vector<std::string> args : {std::vector<std::string>{"enumerate", "colourings", "--shape", "2,2", "--format", "json"},
                                        {"expand", "--shape", "2,2", "--format", "latex"},
                                        {"verify", "--law", "dual", "--max-size", "4", "--no-timing"},
                                        {"model", "--law", "ls-classical", "--shape", "2,1", "--seed", "9", "--no-timing"}}) {
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
