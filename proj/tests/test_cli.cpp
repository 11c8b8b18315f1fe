#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = anick::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ANICK_DATA_DIR) + "/" + name; }

nlohmann::json js(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("cli gb") {
  auto r = run({"gb", "--format", "json", data("comm1.alg")});
  REQUIRE(r.code == 0);
  auto j = js(r);
  std::set<std::string> b(j["basis"].begin(), j["basis"].end());
  CHECK(b == std::set<std::string>{"x1^2 + x2^2", "x1*x2^2 - x2^3", "x2^4"});
  CHECK(j["complete_to_degree"].is_null());

  r = run({"gb", "--max-degree", "8", "--format", "json", data("x2xy.alg")});
  REQUIRE(r.code == 0);
  j = js(r);
  CHECK(j["complete_to_degree"] == 8);
  std::set<std::string> nb(j["basis"].begin(), j["basis"].end());
  CHECK(nb.size() == 7);
  CHECK(nb.count("x^2 - x*y"));
  CHECK(nb.count("x*y^6*x - x*y^7"));

  r = run({"gb", "--bn", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(js(r)["basis"].size() == 10);
}

TEST_CASE("cli nf") {
  auto r = run({"nf", "--format", "json", data("comm1.alg"), "x1^3 + x2^3"});
  REQUIRE(r.code == 0);
  // x1^3 + x2^3 is one of the generators
  CHECK(js(r)["normal_form"] == "0");
  CHECK(js(r)["member"] == true);

  // reduction modulo x1^2 + x2^2 alone leaves x2^3 - x1*x2^2
  r = run({"nf", "--format", "json", "-", "x1^3 + x2^3"},
          "kind commutative; generators x1 x2; order deglex x1 > x2; relations x1^2 + x2^2;");
  REQUIRE(r.code == 0);
  CHECK(js(r)["normal_form"] == "-x1*x2^2 + x2^3");
  CHECK(js(r)["member"] == false);

  r = run({"nf", data("x2xy.alg"), "x*y^3*x - x*y^4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("member: yes") != std::string::npos);

  r = run({"nf", "--max-degree", "8", data("x2xy.alg"), "x*y^6*x"});
  CHECK(r.code == 0);
  r = run({"nf", "--max-degree", "8", data("x2xy.alg"), "x*y^7*x"});
  CHECK(r.code == 3);
  CHECK(r.err.find("--max-degree 8") != std::string::npos);

  r = run({"nf", data("x2xy.alg"), "x*q"});
  CHECK(r.code == 2);
}

TEST_CASE("cli errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"gb"}).code == 2);
  CHECK(run({"gb", data("missing.alg")}).code == 2);
  CHECK(run({"gb", "--max-degree", "0", data("x2xy.alg")}).code == 2);
  CHECK(run({"gb", "--format", "xml", data("x2xy.alg")}).code == 2);
  auto r = run({"gb", "-"}, "generators x y;\nrelations x*y +;\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"chains", data("comm1.alg")}).code == 2);
  CHECK(run({"anick", "-"}, "generators x; relations x^2 - x;").code == 2);
}

TEST_CASE("cli chains, hilbert, anick, tor") {
  auto r = run({"chains", "--bn", "1", "--max-level", "5", "--max-degree", "16", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = js(r);
  std::vector<int> counts;
  for (const auto& lv : j["levels"])
    if (lv["level"] >= 1) counts.push_back(lv["count"]);
  CHECK(counts == std::vector<int>{6, 5, 6, 5, 6});

  r = run({"hilbert", data("x2y2.alg"), "--max-degree", "8", "--format", "json"});
  REQUIRE(r.code == 0);
  j = js(r);
  CHECK(j["normal_words"] == nlohmann::json({1, 2, 3, 4, 5, 6, 7, 8, 9}));
  CHECK(j["chains"] == j["normal_words"]);
  CHECK(j["agree"] == true);
  CHECK(j["candidate_closed_form"] == "1 / (1 - 2*t + t^2)");

  r = run({"hilbert", data("comm1.alg"), "--max-degree", "6", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(js(r)["normal_words"] == nlohmann::json({1, 2, 2, 1, 0, 0, 0}));
  CHECK(js(r)["agree"].is_null());

  r = run({"anick", data("x2xy.alg"), "--max-level", "3", "--max-degree", "8", "--format", "json"});
  REQUIRE(r.code == 0);
  j = js(r);
  CHECK(j["verification"]["dd_zero"] == true);
  CHECK(j["verification"]["exact"] == true);
  CHECK(j["verification"]["kernel_failures"] == 0);
  CHECK_FALSE(j["matrices"].empty());

  r = run({"tor", "--bn", "2", "--max-level", "3", "--max-degree", "12", "--format", "json"});
  REQUIRE(r.code == 0);
  j = js(r);
  CHECK(j["minimal"] == false);
  CHECK(j["witness"]["level"] == 3);

  r = run({"tor", "--bn", "1", "--max-level", "5", "--max-degree", "16", "--format", "json"});
  REQUIRE(r.code == 0);
  j = js(r);
  CHECK(j["minimal"] == true);
  std::vector<int> tor;
  for (const auto& t : j["totals"])
    if (t["level"] >= 1) tor.push_back(t["dim"]);
  CHECK(tor == std::vector<int>{6, 5, 6, 5, 6});
}

TEST_CASE("cli output is deterministic") {
  std::vector<std::vector<std::string>> cmds{
      {"gb", data("x2xy.alg")},
      {"chains", "--bn", "2", "--max-level", "4", "--max-degree", "10"},
      {"hilbert", data("xzx.alg")},
      {"anick", data("x2xy.alg"), "--max-level", "3", "--max-degree", "8"},
      {"tor", "--bn", "2", "--max-level", "3", "--max-degree", "10"},
  };
  for (auto c : cmds) {
    c.insert(c.end(), {"--format", "json"});
    auto one = c, four = c;
    one.insert(one.end(), {"--threads", "1"});
    four.insert(four.end(), {"--threads", "4"});
    auto a = run(one), b = run(one), d = run(four);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == d.out);
  }
}
