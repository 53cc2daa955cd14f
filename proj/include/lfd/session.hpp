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

#ifndef LFD_SESSION_HPP
#define LFD_SESSION_HPP

#include "lfd/polynomial.hpp"
#include "lfd/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lfd {

enum class OutputFormat { Text, Json };

struct SessionConfig {
  std::vector<std::string> vars;
  Polynomial f;
  std::vector<Rational> weights;
  std::vector<unsigned> k{1};
  unsigned degree_bound = 8;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::Text;
  // Random samples per randomized check.
  unsigned samples = 20;
  // Largest slice weight visited by the graded oracle.
  Rational slice_bound{3};
};

// Keys: vars, f, weights, k, degree_bound, seed, format, samples,
// slice_bound. Unknown keys are rejected. Throws InvalidArgument,
// ParseError or DimensionMismatch.
SessionConfig config_from_json(const nlohmann::json& j);

// The JSON object config_from_json reads back to the same config.
nlohmann::ordered_json config_to_json(const SessionConfig& c);

struct Report {
  nlohmann::ordered_json data;
  int exit_status = 0;  // 0 ok, 1 mathematical inconsistency, 2 input error
};

const std::vector<std::string>& session_commands();

// Never throws for bad input: input errors become exit status 2.
Report run(const std::string& command, const SessionConfig& config);
Report run(const std::string& command, const nlohmann::json& config);

std::string render(const Report& r, OutputFormat format);

} // namespace lfd

#endif
