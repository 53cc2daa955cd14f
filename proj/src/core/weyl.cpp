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

#include "lfd/weyl.hpp"

#include "lfd/errors.hpp"

#include <algorithm>

namespace lfd {

VectorField::VectorField(std::vector<Polynomial> coeffs) : m_coeffs(std::move(coeffs))
{
  for (const auto& c : m_coeffs)
    if (c.nvars() != m_coeffs.size())
      throw DimensionMismatch("vector field with " + std::to_string(m_coeffs.size()) +
                              " components over " + std::to_string(c.nvars()) + " variables");
}

VectorField VectorField::zero(std::size_t nvars)
{
  return VectorField(std::vector<Polynomial>(nvars, Polynomial(nvars)));
}

bool VectorField::is_zero() const
{
  return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial VectorField::apply(const Polynomial& g) const
{
  if (g.nvars() != nvars())
    throw DimensionMismatch(nvars(), g.nvars());
  Polynomial r(nvars());
  for (std::size_t i = 0; i < nvars(); ++i)
    if (!m_coeffs[i].is_zero())
      r += m_coeffs[i] * g.derivative(i);
  return r;
}

VectorField& VectorField::operator+=(const VectorField& other)
{
  if (other.nvars() != nvars())
    throw DimensionMismatch(nvars(), other.nvars());
  for (std::size_t i = 0; i < nvars(); ++i)
    m_coeffs[i] += other.m_coeffs[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other)
{
  if (other.nvars() != nvars())
    throw DimensionMismatch(nvars(), other.nvars());
  for (std::size_t i = 0; i < nvars(); ++i)
    m_coeffs[i] -= other.m_coeffs[i];
  return *this;
}

VectorField operator*(const Polynomial& p, const VectorField& v)
{
  std::vector<Polynomial> c;
  c.reserve(v.nvars());
  for (const auto& a : v.m_coeffs)
    c.push_back(p * a);
  return VectorField(std::move(c));
}

VectorField operator*(const Rational& s, const VectorField& v)
{
  std::vector<Polynomial> c;
  c.reserve(v.nvars());
  for (const auto& a : v.m_coeffs)
    c.push_back(s * a);
  return VectorField(std::move(c));
}

namespace {

std::string wrap(const Polynomial& p, const std::vector<std::string>& names)
{
  std::string s = p.to_string(names);
  return p.size() > 1 ? "(" + s + ")" : s;
}

std::string partials_string(const Monomial& beta, const std::vector<std::string>& names)
{
  std::string s;
  for (std::size_t i = 0; i < beta.nvars(); ++i) {
    if (beta[i] == 0)
      continue;
    if (!s.empty())
      s += '*';
    s += "D" + names[i];
    if (beta[i] > 1)
      s += '^' + std::to_string(beta[i]);
  }
  return s;
}

// Appends "coef*partials" with the sign folded into the separator.
void append_term(std::string& s, const Polynomial& p, const std::string& partials,
                 const std::vector<std::string>& names)
{
  const bool negative = p.size() == 1 && sgn(p.terms().begin()->second) < 0;
  const Polynomial mag = negative ? -p : p;
  std::string body;
  if (partials.empty())
    body = s.empty() && !negative ? mag.to_string(names) : wrap(mag, names);
  else if (mag == Polynomial(p.nvars(), Rational(1)))
    body = partials;
  else
    body = wrap(mag, names) + "*" + partials;
  if (s.empty())
    s = negative ? "-" + body : body;
  else
    s += (negative ? " - " : " + ") + body;
}

Polynomial nth_derivative(Polynomial p, const Monomial& alpha)
{
  for (std::size_t i = 0; i < alpha.nvars(); ++i)
    for (Exponent e = 0; e < alpha[i] && !p.is_zero(); ++e)
      p = p.derivative(i);
  return p;
}

mpz_class binomial(Exponent n, Exponent k)
{
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

} // namespace

std::string VectorField::to_string(const std::vector<std::string>& names) const
{
  if (names.size() != nvars())
    throw DimensionMismatch(nvars(), names.size());
  std::string s;
  for (std::size_t i = 0; i < nvars(); ++i)
    if (!m_coeffs[i].is_zero())
      append_term(s, m_coeffs[i], "D" + names[i], names);
  return s.empty() ? "0" : s;
}

DifferentialOperator::DifferentialOperator(const Polynomial& p) : m_nvars(p.nvars())
{
  add_term(Monomial(m_nvars), p);
}

DifferentialOperator::DifferentialOperator(const VectorField& v) : m_nvars(v.nvars())
{
  for (std::size_t i = 0; i < m_nvars; ++i)
    add_term(Monomial::variable(m_nvars, i), v[i]);
}

DifferentialOperator DifferentialOperator::constant(std::size_t nvars, const Rational& c)
{
  return DifferentialOperator(Polynomial(nvars, c));
}

DifferentialOperator DifferentialOperator::partial(std::size_t nvars, std::size_t var)
{
  DifferentialOperator d(nvars);
  d.add_term(Monomial::variable(nvars, var), Polynomial(nvars, Rational(1)));
  return d;
}

std::uint64_t DifferentialOperator::order() const
{
  std::uint64_t o = 0;
  for (const auto& [beta, p] : m_terms)
    o = std::max(o, beta.degree());
  return o;
}

void DifferentialOperator::add_term(const Monomial& beta, const Polynomial& coef)
{
  if (beta.nvars() != m_nvars)
    throw DimensionMismatch(m_nvars, beta.nvars());
  if (coef.nvars() != m_nvars)
    throw DimensionMismatch(m_nvars, coef.nvars());
  if (coef.is_zero())
    return;
  auto [it, inserted] = m_terms.try_emplace(beta, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero())
      m_terms.erase(it);
  }
}

DifferentialOperator& DifferentialOperator::operator+=(const DifferentialOperator& other)
{
  if (other.m_nvars != m_nvars)
    throw DimensionMismatch(m_nvars, other.m_nvars);
  for (const auto& [beta, p] : other.m_terms)
    add_term(beta, p);
  return *this;
}

DifferentialOperator& DifferentialOperator::operator-=(const DifferentialOperator& other)
{
  if (other.m_nvars != m_nvars)
    throw DimensionMismatch(m_nvars, other.m_nvars);
  for (const auto& [beta, p] : other.m_terms)
    add_term(beta, -p);
  return *this;
}

DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b)
{
  return op_multiply(a, b);
}

std::string DifferentialOperator::to_string(const std::vector<std::string>& names) const
{
  if (names.size() != m_nvars)
    throw DimensionMismatch(m_nvars, names.size());
  if (m_terms.empty())
    return "0";
  std::string s;
  for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
    const auto& [beta, p] = *it;
    append_term(s, p, beta.is_one() ? std::string() : partials_string(beta, names), names);
  }
  return s;
}

MeroFraction::MeroFraction(Polynomial numerator, Polynomial base, unsigned exponent)
    : m_num(std::move(numerator)), m_base(std::move(base)), m_exp(exponent)
{
  if (m_base.is_zero())
    throw InvalidArgument("fraction with zero base");
  if (m_num.nvars() != m_base.nvars())
    throw DimensionMismatch(m_base.nvars(), m_num.nvars());
  if (m_num.is_zero()) {
    m_exp = 0;
    return;
  }
  while (m_exp > 0) {
    auto q = exact_divide(m_num, m_base);
    if (!q)
      break;
    m_num = std::move(*q);
    --m_exp;
  }
}

std::string MeroFraction::to_string(const std::vector<std::string>& names) const
{
  std::string s = m_num.to_string(names);
  if (m_exp == 0)
    return s;
  s = "(" + s + ")/(" + m_base.to_string(names) + ")";
  if (m_exp > 1)
    s += "^" + std::to_string(m_exp);
  return s;
}

DifferentialOperator op_multiply(const DifferentialOperator& P, const DifferentialOperator& Q)
{
  if (P.nvars() != Q.nvars())
    throw DimensionMismatch(P.nvars(), Q.nvars());
  const std::size_t n = P.nvars();
  DifferentialOperator R(n);
  for (const auto& [beta, p] : P.terms()) {
    // Enumerate alpha <= beta componentwise.
    std::vector<Exponent> alpha(n, 0);
    while (true) {
      Monomial a(alpha);
      mpz_class weight = 1;
      for (std::size_t i = 0; i < n; ++i)
        weight *= binomial(beta[i], alpha[i]);
      for (const auto& [gamma, q] : Q.terms()) {
        Polynomial dq = nth_derivative(q, a);
        if (dq.is_zero())
          continue;
        R.add_term((beta / a) * gamma, Rational(weight) * (p * dq));
      }
      std::size_t i = 0;
      while (i < n && alpha[i] == beta[i])
        alpha[i++] = 0;
      if (i == n)
        break;
      ++alpha[i];
    }
  }
  return R;
}

Polynomial op_apply(const DifferentialOperator& P, const Polynomial& g)
{
  if (P.nvars() != g.nvars())
    throw DimensionMismatch(P.nvars(), g.nvars());
  Polynomial r(g.nvars());
  for (const auto& [beta, p] : P.terms()) {
    Polynomial d = nth_derivative(g, beta);
    if (!d.is_zero())
      r += p * d;
  }
  return r;
}

MeroFraction apply_to_inverse_power(const DifferentialOperator& P, const Polynomial& f, unsigned k)
{
  if (f.is_zero())
    throw InvalidArgument("apply_to_inverse_power: f = 0");
  if (k == 0)
    throw InvalidArgument("apply_to_inverse_power: k must be positive");
  if (P.nvars() != f.nvars())
    throw DimensionMismatch(P.nvars(), f.nvars());
  const std::size_t n = f.nvars();
  std::vector<Polynomial> grad;
  for (std::size_t i = 0; i < n; ++i)
    grad.push_back(f.derivative(i));

  // D^beta (1/f^k) = numerator / f^(k + |beta|)
  std::map<Monomial, Polynomial> memo;
  memo.emplace(Monomial(n), Polynomial(n, Rational(1)));
  auto derive = [&](const Monomial& beta) {
    auto build = [&](auto& self, const Monomial& b) -> const Polynomial& {
      if (auto it = memo.find(b); it != memo.end())
        return it->second;
      std::size_t i = 0;
      while (b[i] == 0)
        ++i;
      Monomial prev = b;
      prev[i] -= 1;
      const Polynomial& g = self(self, prev);
      const unsigned m = k + static_cast<unsigned>(prev.degree());
      Polynomial next = f * g.derivative(i) - Rational(m) * (g * grad[i]);
      return memo.emplace(b, std::move(next)).first->second;
    };
    return build(build, beta);
  };

  const unsigned top = k + static_cast<unsigned>(P.order());
  Polynomial total(n);
  for (const auto& [beta, p] : P.terms()) {
    const Polynomial& num = derive(beta);
    const unsigned m = k + static_cast<unsigned>(beta.degree());
    total += p * num * f.pow(top - m);
  }
  return MeroFraction(std::move(total), f, top);
}

VectorField vf_bracket(const VectorField& d, const VectorField& e)
{
  if (d.nvars() != e.nvars())
    throw DimensionMismatch(d.nvars(), e.nvars());
  std::vector<Polynomial> c;
  c.reserve(d.nvars());
  for (std::size_t j = 0; j < d.nvars(); ++j)
    c.push_back(d.apply(e[j]) - e.apply(d[j]));
  return VectorField(std::move(c));
}

ExtendedRational vf_w_order(const VectorField& d, const WeightVector& w)
{
  if (d.nvars() != w.size())
    throw DimensionMismatch(d.nvars(), w.size());
  ExtendedRational best = ExtendedRational::infinity();
  for (std::size_t i = 0; i < d.nvars(); ++i) {
    ExtendedRational o = w_order(d[i], w);
    if (o.is_infinite())
      continue;
    ExtendedRational v(Rational(o.value() - w[i]));
    if (v < best)
      best = v;
  }
  return best;
}

std::map<Rational, VectorField> vf_wqh_parts(const VectorField& d, const WeightVector& w)
{
  if (d.nvars() != w.size())
    throw DimensionMismatch(d.nvars(), w.size());
  const std::size_t n = d.nvars();
  std::map<Rational, std::vector<Polynomial>> parts;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [m, c] : d[i].terms()) {
      auto [it, inserted] = parts.try_emplace(Rational(dot(m, w.values()) - w[i]),
                                              std::vector<Polynomial>(n, Polynomial(n)));
      it->second[i].add_term(m, c);
    }
  std::map<Rational, VectorField> out;
  for (auto& [mu, coeffs] : parts)
    out.emplace(mu, VectorField(std::move(coeffs)));
  return out;
}

std::optional<Rational> vf_weight(const VectorField& d, const WeightVector& w)
{
  auto parts = vf_wqh_parts(d, w);
  if (parts.size() != 1)
    return std::nullopt;
  return parts.begin()->first;
}

VectorField euler_field(const WeightVector& w)
{
  const std::size_t n = w.size();
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < n; ++i)
    c.push_back(w[i] * Polynomial::variable(n, i));
  return VectorField(std::move(c));
}

DifferentialOperator shifted(const VectorField& v, const Rational& c)
{
  DifferentialOperator op(v);
  op += DifferentialOperator::constant(v.nvars(), c);
  return op;
}

} // namespace lfd
