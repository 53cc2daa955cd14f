/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "generators.hpp"

#include "lfd/errors.hpp"
#include "lfd/parser.hpp"
#include "lfd/session.hpp"

#include <doctest.h>

using namespace lfd;
using namespace lfd::testing;
using nlohmann::json;

namespace {

json cusp_config()
{
  return json{{"vars", {"x", "y"}}, {"f", "x^3 - y^2"}, {"weights", {"1/3", "1/2"}},
              {"k", {1}}, {"samples", 5}};
}

// Every string in the report that looks like p/q parses back to itself.
void check_rationals(const nlohmann::ordered_json& v, std::size_t& count)
{
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const auto slash = s.find('/');
    if (slash != std::string::npos && s.find_first_not_of("-0123456789/") == std::string::npos) {
      CHECK(to_pq(parse_rational(s)) == s);
      ++count;
    }
  } else if (v.is_structured()) {
    for (const auto& x : v)
      check_rationals(x, count);
  }
}

} // namespace

TEST_SUITE("session") {

TEST_CASE("config parsing")
{
  const SessionConfig c = config_from_json(cusp_config());
  CHECK(c.vars == std::vector<std::string>{"x", "y"});
  CHECK(c.f == parse_polynomial("x^3 - y^2", c.vars));
  CHECK(c.weights == std::vector<Rational>{q(1, 3), q(1, 2)});
  CHECK(c.k == std::vector<unsigned>{1});
  CHECK(c.degree_bound == 8);
  CHECK(c.seed == 1);
  CHECK(c.format == OutputFormat::Text);
  CHECK(config_from_json(json(config_to_json(c))).f == c.f);

  json bad = cusp_config();
  bad["weights"] = {"1/3"};
  CHECK_THROWS_AS(config_from_json(bad), DimensionMismatch);
  bad = cusp_config();
  bad["f"] = "x^3 - w";
  CHECK_THROWS_AS(config_from_json(bad), ParseError);
  bad = cusp_config();
  bad["colour"] = "blue";
  CHECK_THROWS_AS(config_from_json(bad), InvalidArgument);
  bad = cusp_config();
  bad["k"] = {-1};
  CHECK_THROWS_AS(config_from_json(bad), InvalidArgument);
  bad = cusp_config();
  bad["vars"] = {"x", "x"};
  CHECK_THROWS_AS(config_from_json(bad), InvalidArgument);
  bad = cusp_config();
  bad.erase("f");
  CHECK_THROWS_AS(config_from_json(bad), InvalidArgument);
}

TEST_CASE("all on the cusp succeeds")
{
  const Report r = run("all", cusp_config());
  CHECK(r.exit_status == 0);
  CHECK(r.data["status"] == "ok");
  const auto& st = r.data["stages"];
  for (const char* name : {"wqh", "derivations", "basis", "inequalities", "spencer", "verify",
                           "ext_witness", "annihilator"}) {
    CAPTURE(name);
    REQUIRE(st.contains(name));
    CHECK(st[name]["status"] == "ok");
  }
  CHECK(st["basis"]["deltas"][0]["field"] == "2*y*Dx + 3*x^2*Dy");
  CHECK(st["basis"]["deltas"][0]["nu"] == "1/6");
  CHECK(st["inequalities"]["entries"][1]["value"] == "5/6");
}

TEST_CASE("annihilator table")
{
  json c = cusp_config();
  c["k"] = {2};
  const Report r = run("annihilator", c);
  CHECK(r.exit_status == 0);
  const auto& table = r.data["stages"]["annihilator"]["annihilators"][0]["table"];
  REQUIRE(table.size() == 2);
  CHECK(table[0]["generator"] == "chi+2");
  CHECK(table[0]["annihilates"] == true);
  CHECK(table[1]["generator"] == "delta_2");
  CHECK(table[1]["annihilates"] == true);
}

TEST_CASE("exit statuses")
{
  json c = cusp_config();
  c["weights"] = {"1", "1"};
  Report r = run("wqh", c);
  CHECK(r.exit_status == 1);
  CHECK(r.data["stages"]["wqh"]["status"] == "inconsistent");
  CHECK(r.data["stages"]["wqh"].contains("diagnostic"));

  r = run("basis", c);
  CHECK(r.exit_status == 1);
  CHECK(r.data["stages"]["basis"]["status"] == "skipped");

  c = cusp_config();
  c["k"] = {0};
  r = run("ext-witness", c);
  CHECK(r.exit_status == 2);
  CHECK(r.data["stages"]["ext_witness"]["diagnostic"] == kExtWitnessRefusal);

  CHECK(run("frobnicate", cusp_config()).exit_status == 2);
  c = cusp_config();
  c["f"] = "2x";
  r = run("all", c);
  CHECK(r.exit_status == 2);
  CHECK(r.data["status"] == "input_error");

  json arr{{"vars", {"x", "y", "z"}}, {"f", "x*y*z*(x+y+z)"}, {"weights", {"1/4", "1/4", "1/4"}}};
  r = run("basis", arr);
  CHECK(r.exit_status == 1);
  CHECK(r.data["stages"]["basis"]["status"] == "inconsistent");
}

TEST_CASE("weights are normalized before use")
{
  json c = cusp_config();
  c["weights"] = {"1", "3/2"};
  const Report r = run("basis", c);
  CHECK(r.exit_status == 0);
  CHECK(r.data["stages"]["wqh"]["normalized_weights"] == nlohmann::ordered_json({"1/3", "1/2"}));
  CHECK(r.data["stages"]["basis"]["chi"] == "1/3*x*Dx + 1/2*y*Dy");
}

TEST_CASE("reports are reproducible and round trip")
{
  json c = cusp_config();
  c["seed"] = 77;
  const std::string a = render(run("all", c), OutputFormat::Json);
  const std::string b = render(run("all", c), OutputFormat::Json);
  CHECK(a == b);
  CHECK(render(run("all", c), OutputFormat::Text) == render(run("all", c), OutputFormat::Text));
  const auto parsed = nlohmann::ordered_json::parse(a);
  CHECK(parsed.dump(2) + "\n" == a);
  std::size_t count = 0;
  check_rationals(parsed, count);
  CHECK(count > 10);
  CHECK(parsed["config"]["seed"] == 77);
  CHECK(parse_rational(parsed["stages"]["basis"]["deltas"][0]["nu"].get<std::string>()) == q(1, 6));
}

TEST_CASE("text rendering")
{
  const std::string t = render(run("wqh", cusp_config()), OutputFormat::Text);
  CHECK(t.find("status: ok") != std::string::npos);
  CHECK(t.find("normalized_weights: [1/3, 1/2]") != std::string::npos);
}

TEST_CASE("corpus configurations pass")
{
  for (const json& c : {
           json{{"vars", {"x", "y"}}, {"f", "x*y"}, {"weights", {"1/2", "1/2"}}},
           json{{"vars", {"x", "y", "z"}}, {"f", "x*y*z"}, {"weights", {"1/3", "1/3", "1/3"}}},
           json{{"vars", {"x", "y"}}, {"f", "x"}, {"weights", {"1", "0"}}},
           json{{"vars", {"x", "y", "z"}}, {"f", "x*y*(x+y)*(x*z+y)"}, {"weights", {"1/4", "1/4", "0"}}},
       }) {
    json cc = c;
    cc["samples"] = 3;
    cc["degree_bound"] = 4;
    CAPTURE(cc.dump());
    CHECK(run("all", cc).exit_status == 0);
  }
}

}
