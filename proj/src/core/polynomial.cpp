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

#include "lfd/polynomial.hpp"

#include "lfd/errors.hpp"

#include <algorithm>

namespace lfd {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power)
{
  Monomial m(nvars);
  m.m_exps.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const
{
  std::uint64_t d = 0;
  for (auto e : m_exps)
    d += e;
  return d;
}

bool Monomial::is_one() const
{
  return std::all_of(m_exps.begin(), m_exps.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const
{
  for (std::size_t i = 0; i < m_exps.size(); ++i)
    if (m_exps[i] > other.m_exps[i])
      return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
  Monomial r(a);
  for (std::size_t i = 0; i < r.m_exps.size(); ++i)
    r.m_exps[i] += b.m_exps[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
  Monomial r(a);
  for (std::size_t i = 0; i < r.m_exps.size(); ++i)
    r.m_exps[i] -= b.m_exps[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
  Monomial r(a);
  for (std::size_t i = 0; i < r.m_exps.size(); ++i)
    r.m_exps[i] = std::max(a.m_exps[i], b.m_exps[i]);
  return r;
}

Rational dot(const Monomial& m, const std::vector<Rational>& w)
{
  if (w.size() != m.nvars())
    throw DimensionMismatch(m.nvars(), w.size());
  Rational s(0);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (m[i] != 0)
      s += w[i] * m[i];
  return s;
}

Polynomial::Polynomial(std::size_t nvars, const Rational& constant) : m_nvars(nvars)
{
  if (constant != 0)
    m_terms.emplace(Monomial(nvars), constant);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index)
{
  Polynomial p(nvars);
  p.m_terms.emplace(Monomial::variable(nvars, index), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& coef)
{
  Polynomial p(m.nvars());
  p.add_term(m, coef);
  return p;
}

bool Polynomial::is_constant() const
{
  return m_terms.empty() || (m_terms.size() == 1 && m_terms.begin()->first.is_one());
}

Rational Polynomial::constant_term() const
{
  return coefficient(Monomial(m_nvars));
}

Rational Polynomial::coefficient(const Monomial& m) const
{
  auto it = m_terms.find(m);
  return it == m_terms.end() ? Rational(0) : it->second;
}

std::uint64_t Polynomial::total_degree() const
{
  std::uint64_t d = 0;
  for (const auto& [m, c] : m_terms)
    d = std::max(d, m.degree());
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
  if (m.nvars() != m_nvars)
    throw DimensionMismatch(m_nvars, m.nvars());
  if (c == 0)
    return;
  auto [it, inserted] = m_terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      m_terms.erase(it);
  }
}

Polynomial Polynomial::derivative(std::size_t var) const
{
  if (var >= m_nvars)
    throw DimensionMismatch("derivative with respect to variable " + std::to_string(var) +
                            " in a ring of " + std::to_string(m_nvars) + " variables");
  Polynomial r(m_nvars);
  for (const auto& [m, c] : m_terms) {
    if (m[var] == 0)
      continue;
    Monomial d(m);
    d[var] -= 1;
    r.m_terms.emplace(std::move(d), c * m[var]);
  }
  return r;
}

void Polynomial::check_same(const Polynomial& other) const
{
  if (other.m_nvars != m_nvars)
    throw DimensionMismatch(m_nvars, other.m_nvars);
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
  check_same(other);
  for (const auto& [m, c] : other.m_terms)
    add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
  check_same(other);
  for (const auto& [m, c] : other.m_terms)
    add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
  if (c == 0) {
    m_terms.clear();
    return *this;
  }
  for (auto& [m, coef] : m_terms)
    coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
  a.check_same(b);
  Polynomial r(a.m_nvars);
  for (const auto& [ma, ca] : a.m_terms)
    for (const auto& [mb, cb] : b.m_terms)
      r.add_term(ma * mb, ca * cb);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
  return a.m_nvars == b.m_nvars && a.m_terms == b.m_terms;
}

Polynomial Polynomial::pow(unsigned e) const
{
  Polynomial result(m_nvars, Rational(1));
  Polynomial base(*this);
  while (e != 0) {
    if (e & 1u)
      result = result * base;
    e >>= 1u;
    if (e != 0)
      base = base * base;
  }
  return result;
}

namespace {

bool degrevlex_greater(const Monomial& a, const Monomial& b)
{
  const auto da = a.degree(), db = b.degree();
  if (da != db)
    return da > db;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i])
      return a[i] < b[i];
  }
  return false;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names)
{
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0)
      continue;
    if (!s.empty())
      s += '*';
    s += names[i];
    if (m[i] > 1)
      s += '^' + std::to_string(m[i]);
  }
  return s;
}

} // namespace

std::string Polynomial::to_string(const std::vector<std::string>& names) const
{
  if (names.size() != m_nvars)
    throw DimensionMismatch(m_nvars, names.size());
  if (m_terms.empty())
    return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(m_terms.size());
  for (const auto& t : m_terms)
    order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return degrevlex_greater(a->first, b->first); });

  std::string out;
  bool first = true;
  for (const auto* t : order) {
    const Rational& c = t->second;
    const bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t->first.is_one()) {
      out += to_short(mag);
    } else {
      if (mag != 1)
        out += to_short(mag) + "*";
      out += monomial_string(t->first, names);
    }
  }
  return out;
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& q)
{
  if (q.is_zero())
    throw InvalidArgument("exact_divide: division by the zero polynomial");
  if (p.nvars() != q.nvars())
    throw DimensionMismatch(p.nvars(), q.nvars());
  // Storage order is lex, a monomial order, so the last term leads.
  const auto& [lead_q, lead_c] = *q.terms().rbegin();
  Polynomial rest(p);
  Polynomial quotient(p.nvars());
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms().rbegin();
    if (!lead_q.divides(m))
      return std::nullopt;
    Polynomial t = Polynomial::monomial(m / lead_q, c / lead_c);
    quotient += t;
    rest -= t * q;
  }
  return quotient;
}

std::vector<std::string> default_names(std::size_t nvars)
{
  if (nvars <= 3) {
    static const char* base[] = {"x", "y", "z"};
    return std::vector<std::string>(base, base + nvars);
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= nvars; ++i)
    names.push_back("x" + std::to_string(i));
  return names;
}

} // namespace lfd
