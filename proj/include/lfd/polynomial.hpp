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

#ifndef LFD_POLYNOMIAL_HPP
#define LFD_POLYNOMIAL_HPP

#include "lfd/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lfd {

using Exponent = std::uint32_t;

// x^alpha for alpha in N^n.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : m_exps(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : m_exps(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const noexcept { return m_exps.size(); }
  Exponent operator[](std::size_t i) const { return m_exps[i]; }
  Exponent& operator[](std::size_t i) { return m_exps[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return m_exps; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  // Lexicographic on the exponent vector, used as the canonical storage order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Exponent> m_exps;
};

Rational dot(const Monomial& m, const std::vector<Rational>& w);

// Sparse polynomial over Q in a fixed number of variables. Stored terms are
// never zero. Values are immutable in practice; all operations return new
// polynomials.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : m_nvars(nvars) {}
  Polynomial(std::size_t nvars, const Rational& constant);

  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& coef);

  std::size_t nvars() const noexcept { return m_nvars; }
  const TermMap& terms() const noexcept { return m_terms; }
  std::size_t size() const noexcept { return m_terms.size(); }
  bool is_zero() const noexcept { return m_terms.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  std::uint64_t total_degree() const;

  // Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial derivative(std::size_t var) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;

  // Terms sorted by degree-reverse-lexicographic order, largest first.
  std::string to_string(const std::vector<std::string>& names) const;

private:
  void check_same(const Polynomial& other) const;

  std::size_t m_nvars = 0;
  TermMap m_terms;
};

// q * h = p for some h: returns h. Throws InvalidArgument if q == 0.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q);

// Names "x", "y", "z" for n <= 3, then "x1".."xn".
std::vector<std::string> default_names(std::size_t nvars);

} // namespace lfd

#endif
