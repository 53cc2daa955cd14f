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

#ifndef LFD_RATIONAL_HPP
#define LFD_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace lfd {

// Exact rationals. mpq_class keeps the canonical form (den > 0, coprime).
using Rational = mpq_class;

// "p/q" with q > 0 always present, "3/1" for integers.
std::string to_pq(const Rational& r);

// Short form: "3", "-1/2".
std::string to_short(const Rational& r);

// Accepts "p", "p/q", optional sign. Throws InvalidArgument.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// A rational or +infinity (the w-order of the zero polynomial).
class ExtendedRational {
public:
  ExtendedRational() : m_infinite(true) {}
  ExtendedRational(Rational value) : m_infinite(false), m_value(std::move(value)) {}

  static ExtendedRational infinity() { return {}; }

  bool is_infinite() const noexcept { return m_infinite; }
  // Throws InvalidArgument on +infinity.
  const Rational& value() const;

  friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

  // "inf" or "p/q".
  std::string to_string() const;

private:
  bool m_infinite;
  Rational m_value;
};

std::strong_ordering compare(const Rational& a, const Rational& b);

} // namespace lfd

#endif
