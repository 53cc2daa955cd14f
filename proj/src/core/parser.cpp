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

#include "lfd/parser.hpp"

#include "lfd/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace lfd {

namespace {

constexpr unsigned kMaxExponent = 4096;

bool ident_start(char c)
{
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c)
{
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool digit(char c)
{
  return std::isdigit(static_cast<unsigned char>(c));
}

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : m_text(text), m_vars(vars) {}

  Polynomial parse()
  {
    skip_space();
    if (m_pos == m_text.size())
      throw ParseError("empty expression", m_pos);
    Polynomial p = expr();
    skip_space();
    if (m_pos != m_text.size())
      fail_unexpected();
    return p;
  }

private:
  void skip_space()
  {
    while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos])))
      ++m_pos;
  }

  char peek()
  {
    skip_space();
    return m_pos < m_text.size() ? m_text[m_pos] : '\0';
  }

  [[noreturn]] void fail_unexpected()
  {
    skip_space();
    if (m_pos == m_text.size())
      throw ParseError("unexpected end of input", m_pos);
    const char c = m_text[m_pos];
    if (ident_start(c) || digit(c) || c == '(')
      throw ParseError("implicit multiplication is not allowed, use '*'", m_pos);
    throw ParseError(std::string("unexpected character '") + c + "'", m_pos);
  }

  Polynomial expr()
  {
    Polynomial acc = term();
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-')
        return acc;
      ++m_pos;
      Polynomial rhs = term();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
  }

  Polynomial term()
  {
    Polynomial acc = unary();
    while (peek() == '*') {
      ++m_pos;
      acc = acc * unary();
    }
    return acc;
  }

  Polynomial unary()
  {
    const char c = peek();
    if (c == '-') {
      ++m_pos;
      return -unary();
    }
    if (c == '+') {
      ++m_pos;
      return unary();
    }
    return power();
  }

  Polynomial power()
  {
    Polynomial base = primary();
    if (peek() != '^')
      return base;
    ++m_pos;
    skip_space();
    const std::size_t start = m_pos;
    if (m_pos == m_text.size() || !digit(m_text[m_pos]))
      throw ParseError("exponent must be a nonnegative integer", m_pos);
    while (m_pos < m_text.size() && digit(m_text[m_pos]))
      ++m_pos;
    const std::string digits(m_text.substr(start, m_pos - start));
    if (digits.size() > 5 || std::stoul(digits) > kMaxExponent)
      throw ParseError("exponent too large", start);
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  Polynomial primary()
  {
    const char c = peek();
    const std::size_t start = m_pos;
    if (c == '(') {
      ++m_pos;
      Polynomial inner = expr();
      if (peek() != ')')
        throw ParseError("expected ')'", m_pos);
      ++m_pos;
      return inner;
    }
    if (digit(c))
      return Polynomial(m_vars.size(), number());
    if (ident_start(c)) {
      while (m_pos < m_text.size() && ident_char(m_text[m_pos]))
        ++m_pos;
      const std::string name(m_text.substr(start, m_pos - start));
      auto it = std::find(m_vars.begin(), m_vars.end(), name);
      if (it == m_vars.end())
        throw ParseError("unknown identifier '" + name + "'", start);
      return Polynomial::variable(m_vars.size(), static_cast<std::size_t>(it - m_vars.begin()));
    }
    if (m_pos == m_text.size())
      throw ParseError("unexpected end of input", m_pos);
    throw ParseError(std::string("unexpected character '") + c + "'", m_pos);
  }

  // integer or integer '/' integer
  Rational number()
  {
    auto digits = [&] {
      const std::size_t s = m_pos;
      while (m_pos < m_text.size() && digit(m_text[m_pos]))
        ++m_pos;
      return std::string(m_text.substr(s, m_pos - s));
    };
    const std::string num = digits();
    std::size_t save = m_pos;
    if (peek() == '/') {
      const std::size_t slash = m_pos;
      ++m_pos;
      skip_space();
      if (m_pos == m_text.size() || !digit(m_text[m_pos]))
        throw ParseError("division is only allowed between integer literals", slash);
      const std::string den = digits();
      if (mpz_class(den) == 0)
        throw ParseError("zero denominator", slash + 1);
      Rational r{mpz_class(num), mpz_class(den)};
      r.canonicalize();
      return r;
    }
    m_pos = save;
    return Rational(mpz_class(num));
  }

  std::string_view m_text;
  const std::vector<std::string>& m_vars;
  std::size_t m_pos = 0;
};

} // namespace

void validate_variable_names(const std::vector<std::string>& vars)
{
  if (vars.empty())
    throw InvalidArgument("at least one variable is required");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !ident_start(v.front()) ||
        !std::all_of(v.begin(), v.end(), ident_char))
      throw InvalidArgument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw InvalidArgument("duplicate variable name '" + v + "'");
  }
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars)
{
  validate_variable_names(vars);
  return Parser(text, vars).parse();
}

} // namespace lfd
