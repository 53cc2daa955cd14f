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

#include "lfd/rational.hpp"

#include "lfd/errors.hpp"

#include <cctype>

namespace lfd {

std::string to_pq(const Rational& r)
{
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_short(const Rational& r)
{
  if (is_integer(r))
    return r.get_num().get_str();
  return to_pq(r);
}

Rational parse_rational(std::string_view text)
{
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
      s.remove_prefix(1);
    if (s.empty())
      return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || den.empty() || den.front() == '-' || den.front() == '+' || !valid_int(den))
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+')
    n.erase(0, 1);
  mpz_class numerator(n, 10);
  mpz_class denominator(std::string(den), 10);
  if (denominator == 0)
    throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::strong_ordering compare(const Rational& a, const Rational& b)
{
  const int c = cmp(a, b);
  if (c < 0)
    return std::strong_ordering::less;
  if (c > 0)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

const Rational& ExtendedRational::value() const
{
  if (m_infinite)
    throw InvalidArgument("value() of +infinity");
  return m_value;
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b)
{
  if (a.m_infinite || b.m_infinite)
    return ExtendedRational::infinity();
  return ExtendedRational(Rational(a.m_value + b.m_value));
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b)
{
  if (a.m_infinite || b.m_infinite)
    return a.m_infinite == b.m_infinite;
  return a.m_value == b.m_value;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b)
{
  if (a.m_infinite || b.m_infinite) {
    if (a.m_infinite == b.m_infinite)
      return std::strong_ordering::equal;
    return a.m_infinite ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return compare(a.m_value, b.m_value);
}

std::string ExtendedRational::to_string() const
{
  return m_infinite ? std::string("inf") : to_pq(m_value);
}

} // namespace lfd
