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

#ifndef LFD_PARSER_HPP
#define LFD_PARSER_HPP

#include "lfd/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lfd {

// Grammar, whitespace insignificant:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | integer '/' integer | identifier | '(' expr ')'
// Juxtaposition ("2x", "x y") is a syntax error. Throws ParseError carrying
// the byte offset of the offending token.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

// Nonempty, distinct identifiers. Throws InvalidArgument.
void validate_variable_names(const std::vector<std::string>& vars);

} // namespace lfd

#endif
