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

// Command-line front end. Talks to the library only through lfd.h.

#include "lfd/lfd.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitInput = 2;

int input_error(const std::string& message)
{
  std::cerr << "lfd: error: " << message << "\n";
  return kExitInput;
}

std::vector<std::string> split(const std::string& s)
{
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

struct Flags {
  std::string command;
  std::string config_file;
  std::string output_file;
  std::optional<std::string> vars, f, weights, k, format, slice_bound;
  std::optional<unsigned> degree_bound, samples;
  std::optional<std::uint64_t> seed;
};

// JSON text of the config: file contents first, then flag overrides.
nlohmann::json build_config(const Flags& fl)
{
  nlohmann::json j = nlohmann::json::object();
  if (!fl.config_file.empty()) {
    std::ifstream in(fl.config_file);
    if (!in)
      throw std::runtime_error("cannot read config file '" + fl.config_file + "'");
    j = nlohmann::json::parse(in);
    if (!j.is_object())
      throw std::runtime_error("config file must hold a JSON object");
  }
  if (fl.vars)
    j["vars"] = split(*fl.vars);
  if (fl.f)
    j["f"] = *fl.f;
  if (fl.weights)
    j["weights"] = split(*fl.weights);
  if (fl.k) {
    nlohmann::json ks = nlohmann::json::array();
    for (const auto& s : split(*fl.k)) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size() || s.empty())
        throw std::runtime_error("--k expects comma-separated integers, got '" + s + "'");
      ks.push_back(v);
    }
    j["k"] = ks;
  }
  if (fl.degree_bound)
    j["degree_bound"] = *fl.degree_bound;
  if (fl.seed)
    j["seed"] = *fl.seed;
  if (fl.format)
    j["format"] = *fl.format;
  if (fl.samples)
    j["samples"] = *fl.samples;
  if (fl.slice_bound)
    j["slice_bound"] = *fl.slice_bound;
  return j;
}

int render(lfd_report_t* report, std::string& out)
{
  size_t len = 0;
  int rc = lfd_report_render(report, nullptr, nullptr, &len);
  if (rc != LFD_ERROR_INSUFFICIENT_BUFFER)
    return rc;
  std::string buf(len, '\0');
  rc = lfd_report_render(report, nullptr, buf.data(), &len);
  if (rc == LFD_OK)
    out.assign(buf.data(), len - 1);
  return rc;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Logarithmic free divisor toolkit: adapted bases, Spencer complexes, Ext witnesses"};
  app.set_version_flag("--version", std::string("lfd ") + lfd_version());

  Flags fl;
  const std::vector<std::string> commands{"wqh", "logder", "basis", "spencer",
                                          "verify", "ext-witness", "annihilator", "all"};
  app.add_option("command", fl.command, "wqh | logder | basis | spencer | verify | ext-witness | annihilator | all")
      ->required()
      ->check(CLI::IsMember(commands));
  app.add_option("-c,--config", fl.config_file, "JSON config file; flags override its keys");
  app.add_option("--vars", fl.vars, "comma-separated variable names");
  app.add_option("--f", fl.f, "defining polynomial, e.g. \"x^3 - y^2\"");
  app.add_option("--weights", fl.weights, "comma-separated p/q weights");
  app.add_option("--k", fl.k, "comma-separated nonnegative integers");
  app.add_option("--degree-bound", fl.degree_bound, "degree of random test polynomials");
  app.add_option("--seed", fl.seed, "seed of the random checks");
  app.add_option("--format", fl.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--samples", fl.samples, "random samples per randomized check");
  app.add_option("--slice-bound", fl.slice_bound, "largest slice weight for the graded oracle");
  app.add_option("-o,--output", fl.output_file, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  nlohmann::json config;
  try {
    config = build_config(fl);
  } catch (const std::exception& e) {
    return input_error(e.what());
  }

  lfd_session_t* session = nullptr;
  if (lfd_session_create(&session, config.dump().c_str()) != LFD_OK)
    return input_error(lfd_last_error_message());

  lfd_report_t* report = nullptr;
  int rc = lfd_session_run(session, fl.command.c_str(), &report);
  lfd_session_destroy(session);
  if (rc != LFD_OK)
    return input_error(lfd_last_error_message());

  int status = kExitInput;
  std::string text;
  rc = lfd_report_exit_status(report, &status);
  if (rc == LFD_OK)
    rc = render(report, text);
  lfd_report_destroy(report);
  if (rc != LFD_OK)
    return input_error(lfd_last_error_message());

  if (fl.output_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(fl.output_file, std::ios::binary);
    if (!(out << text))
      return input_error("cannot write '" + fl.output_file + "'");
  }
  return status;
}
