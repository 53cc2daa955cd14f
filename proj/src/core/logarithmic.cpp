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

#include "lfd/logarithmic.hpp"

#include "lfd/errors.hpp"
#include "lfd/groebner.hpp"

#include <algorithm>
#include <numeric>

namespace lfd {

namespace {

ModuleElement as_element(const VectorField& v)
{
  return v.coeffs();
}

// Scale to integer coefficients with content 1, first nonzero component's
// lex-leading coefficient positive.
VectorField primitive(const VectorField& v)
{
  mpz_class den_lcm = 1;
  for (const auto& c : v.coeffs())
    for (const auto& [m, q] : c.terms())
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  mpz_class content = 0;
  for (const auto& c : v.coeffs())
    for (const auto& [m, q] : c.terms()) {
      mpz_class scaled = q.get_num() * (den_lcm / q.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
  if (content == 0)
    return v;
  Rational factor(den_lcm, content);
  factor.canonicalize();
  for (const auto& c : v.coeffs())
    if (!c.is_zero()) {
      if (sgn(c.terms().rbegin()->second) < 0)
        factor = -factor;
      break;
    }
  return factor * v;
}

} // namespace

LogDerivationSet log_derivations(const Polynomial& f)
{
  if (f.is_constant())
    throw InvalidArgument("log_derivations: f must be nonconstant");
  const std::size_t n = f.nvars();
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < n; ++i)
    g.push_back(f.derivative(i));
  g.push_back(-f);
  LogDerivationSet out;
  for (auto& s : syzygy_basis(g)) {
    Polynomial cofactor = s.back();
    s.pop_back();
    out.fields.emplace_back(std::move(s));
    out.cofactors.push_back(std::move(cofactor));
  }
  return out;
}

std::vector<VectorField> theta_basis(const Polynomial& f, const WeightVector& w)
{
  if (f.nvars() != w.size())
    throw DimensionMismatch(f.nvars(), w.size());
  const auto wq = is_wqh(f, w);
  if (!wq.weight || *wq.weight != 1)
    throw NotWqh("theta_basis: f is not weakly quasi-homogeneous of weight 1");
  const std::size_t n = f.nvars();
  std::vector<Polynomial> grad;
  for (std::size_t i = 0; i < n; ++i)
    grad.push_back(f.derivative(i));

  std::vector<VectorField> gens;
  for (auto& s : syzygy_basis(grad)) {
    for (auto& [mu, part] : vf_wqh_parts(VectorField(std::move(s)), w)) {
      VectorField p = primitive(part);
      if (std::find(gens.begin(), gens.end(), p) == gens.end())
        gens.push_back(std::move(p));
    }
  }
  // Drop members generated by the others, last first.
  for (std::size_t i = gens.size(); i-- > 0 && gens.size() > 1;) {
    std::vector<ModuleElement> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i)
        others.push_back(as_element(gens[j]));
    if (lift(as_element(gens[i]), others))
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return gens;
}

Polynomial coefficient_determinant(const std::vector<VectorField>& fields)
{
  const std::size_t n = fields.size();
  if (n == 0)
    throw InvalidArgument("determinant of an empty matrix");
  const std::size_t nvars = fields.front().nvars();
  std::vector<std::vector<Polynomial>> M;
  for (const auto& v : fields) {
    if (v.nvars() != n)
      throw DimensionMismatch(n, v.nvars());
    M.push_back(v.coeffs());
  }
  // Fraction-free Bareiss elimination; every division is exact.
  int sign = 1;
  Polynomial prev(nvars, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && M[r][k].is_zero())
        ++r;
      if (r == n)
        return Polynomial(nvars);
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        auto q = exact_divide(num, prev);
        if (!q)
          throw Inconsistency("Bareiss step is not exact");
        M[i][j] = std::move(*q);
      }
      M[i][k] = Polynomial(nvars);
    }
    prev = M[k][k];
  }
  return Rational(sign) * M[n - 1][n - 1];
}

SaitoResult saito_check(const std::vector<VectorField>& fields, const Polynomial& f)
{
  if (fields.size() != f.nvars())
    throw InvalidArgument("saito_check needs exactly " + std::to_string(f.nvars()) + " fields, got " +
                          std::to_string(fields.size()));
  SaitoResult r{coefficient_determinant(fields), Polynomial(f.nvars()), false};
  if (r.determinant.is_zero())
    return r;
  if (auto u = exact_divide(r.determinant, f)) {
    r.unit = std::move(*u);
    r.ok = r.unit.constant_term() != 0;
  }
  return r;
}

AdaptedBasis adapted_basis(const Polynomial& f, const WeightVector& w)
{
  const std::size_t n = f.nvars();
  if (w.size() != n)
    throw DimensionMismatch(n, w.size());
  if (n < 2)
    throw InvalidArgument("adapted_basis needs at least two variables");
  const auto wq = is_wqh(f, w);
  if (!wq.weight)
    throw NotWqh("f is not weakly quasi-homogeneous for the given weights");
  if (*wq.weight != 1)
    throw NotWqh("f has weight " + to_short(*wq.weight) + ", expected 1; normalize the weights first");

  const VectorField chi = euler_field(w);
  const std::vector<VectorField> theta = theta_basis(f, w);
  std::vector<Rational> mu;
  for (const auto& t : theta) {
    auto m = vf_weight(t, w);
    if (!m)
      throw Inconsistency("theta generator is not weighted homogeneous");
    mu.push_back(*m);
  }
  if (theta.size() < n - 1)
    throw NotCertified("freeness not certified: only " + std::to_string(theta.size()) +
                       " generators annihilate f");

  // det of {chi} + selection is WQH of weight sum(w) + sum(nu); it can only
  // be a unit times f when that weight is 1.
  const Rational sum_w = std::accumulate(w.values().begin(), w.values().end(), Rational(0));
  std::vector<std::size_t> pick(n - 1);
  std::iota(pick.begin(), pick.end(), 0);
  bool nonconstant_unit_seen = false;
  while (true) {
    Rational total = sum_w;
    for (auto i : pick)
      total += mu[i];
    if (total == 1) {
      std::vector<VectorField> fields{chi};
      for (auto i : pick)
        fields.push_back(theta[i]);
      SaitoResult s = saito_check(fields, f);
      if (s.ok && !s.unit.is_constant())
        nonconstant_unit_seen = true;
      if (s.ok && s.unit.is_constant()) {
        AdaptedBasis b{f, w, chi, {}, {}, {}, s.unit.constant_term()};
        for (auto i : pick) {
          b.deltas.push_back(theta[i]);
          b.nus.push_back(mu[i]);
        }
        b.deltas[0] = Rational(1 / b.unit) * b.deltas[0];
        for (std::size_t i = 0; i < b.deltas.size(); ++i)
          for (std::size_t j = i + 1; j < b.deltas.size(); ++j) {
            VectorField br = vf_bracket(b.deltas[i], b.deltas[j]);
            std::vector<ModuleElement> gens;
            for (const auto& d : b.deltas)
              gens.push_back(as_element(d));
            auto c = lift(as_element(br), gens);
            if (!c)
              throw Inconsistency("bracket [delta_" + std::to_string(i + 2) + ", delta_" +
                                  std::to_string(j + 2) + "] does not lift into the basis");
            // Keep the component of the weight the grading forces.
            for (std::size_t l = 0; l < c->size(); ++l) {
              const Rational target = b.nus[i] + b.nus[j] - b.nus[l];
              auto parts = wqh_decompose((*c)[l], w);
              auto it = parts.find(target);
              (*c)[l] = it == parts.end() ? Polynomial(n) : it->second;
            }
            b.brackets.emplace(std::make_pair(i, j), std::move(*c));
          }
        if (auto defect = basis_defect(b); !defect.empty())
          throw Inconsistency(defect);
        return b;
      }
    }
    // next combination in lexicographic order
    std::size_t k = n - 1;
    while (k-- > 0) {
      if (pick[k] < theta.size() - (n - 1) + k)
        break;
    }
    if (k == static_cast<std::size_t>(-1))
      break;
    ++pick[k];
    for (std::size_t j = k + 1; j < n - 1; ++j)
      pick[j] = pick[j - 1] + 1;
  }
  if (nonconstant_unit_seen)
    throw NotCertified("freeness certified only as a germ: the Saito unit is not constant");
  throw NotCertified("freeness not certified: no Saito determinant among the weighted generators");
}

std::string basis_defect(const AdaptedBasis& b)
{
  const std::size_t n = b.nvars();
  if (b.deltas.size() + 1 != n || b.nus.size() != b.deltas.size())
    return "basis has the wrong number of fields";
  if (b.chi != euler_field(b.weight))
    return "chi is not the Euler field of the weights";
  std::vector<VectorField> fields{b.chi};
  fields.insert(fields.end(), b.deltas.begin(), b.deltas.end());
  if (coefficient_determinant(fields) != b.f)
    return "coefficient determinant differs from f";
  for (std::size_t i = 0; i < b.deltas.size(); ++i) {
    const std::string label = "delta_" + std::to_string(i + 2);
    if (!b.deltas[i].apply(b.f).is_zero())
      return label + " does not annihilate f";
    if (vf_weight(b.deltas[i], b.weight) != b.nus[i])
      return label + " is not weighted homogeneous of weight " + to_short(b.nus[i]);
    if (vf_bracket(b.chi, b.deltas[i]) != b.nus[i] * b.deltas[i])
      return "[chi, " + label + "] differs from nu * " + label;
  }
  for (std::size_t i = 0; i < b.deltas.size(); ++i)
    for (std::size_t j = i + 1; j < b.deltas.size(); ++j) {
      auto it = b.brackets.find({i, j});
      if (it == b.brackets.end() || it->second.size() != b.deltas.size())
        return "bracket table entry missing";
      VectorField sum = VectorField::zero(n);
      for (std::size_t l = 0; l < b.deltas.size(); ++l)
        sum += it->second[l] * b.deltas[l];
      if (sum != vf_bracket(b.deltas[i], b.deltas[j]))
        return "bracket table does not reproduce [delta_" + std::to_string(i + 2) + ", delta_" +
               std::to_string(j + 2) + "]";
    }
  return {};
}

WeightInequalities weight_inequalities(const AdaptedBasis& b)
{
  const std::size_t m = b.nus.size();
  WeightInequalities out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    WeightInequality e;
    e.value = 1;
    for (std::size_t j = 0; j < m; ++j)
      if (mask & (std::uint64_t{1} << j)) {
        e.subset.push_back(j + 2);
        e.value -= b.nus[j];
      }
    e.positive = sgn(e.value) > 0;
    out.all_positive = out.all_positive && e.positive;
    out.entries.push_back(std::move(e));
  }
  return out;
}

std::vector<DifferentialOperator> ann1_generators(const AdaptedBasis& b, unsigned k)
{
  std::vector<DifferentialOperator> ops{shifted(b.chi, Rational(k))};
  for (const auto& d : b.deltas)
    ops.emplace_back(d);
  return ops;
}

std::vector<DifferentialOperator> ann1_generators(const LogDerivationSet& s, unsigned k)
{
  if (s.fields.size() != s.cofactors.size())
    throw InvalidArgument("log derivation set with mismatched cofactors");
  std::vector<DifferentialOperator> ops;
  for (std::size_t i = 0; i < s.fields.size(); ++i) {
    DifferentialOperator op(s.fields[i]);
    op += DifferentialOperator(Rational(k) * s.cofactors[i]);
    ops.push_back(std::move(op));
  }
  return ops;
}

std::vector<bool> annihilation_check(const std::vector<DifferentialOperator>& ops,
                                     const Polynomial& f, unsigned k)
{
  if (k == 0)
    throw InvalidArgument("annihilation_check needs k >= 1");
  std::vector<bool> out;
  out.reserve(ops.size());
  for (const auto& op : ops)
    out.push_back(apply_to_inverse_power(op, f, k).is_zero());
  return out;
}

} // namespace lfd
