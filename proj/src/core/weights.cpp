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

#include "lfd/weights.hpp"

#include "lfd/errors.hpp"

namespace lfd {

WeightVector::WeightVector(std::vector<Rational> w) : m_w(std::move(w))
{
  if (m_w.empty())
    throw InvalidArgument("weight vector must be nonempty");
  bool positive = false;
  for (const auto& wi : m_w) {
    if (sgn(wi) < 0)
      throw InvalidArgument("weight vector has a negative coordinate " + to_short(wi));
    positive = positive || sgn(wi) > 0;
  }
  if (!positive)
    throw InvalidArgument("weight vector needs at least one positive coordinate");
}

std::size_t WeightVector::rank() const
{
  std::size_t r = 0;
  for (const auto& wi : m_w)
    r += sgn(wi) != 0;
  return r;
}

ExtendedRational w_order(const Polynomial& p, const WeightVector& w)
{
  if (p.nvars() != w.size())
    throw DimensionMismatch(p.nvars(), w.size());
  ExtendedRational best = ExtendedRational::infinity();
  for (const auto& [m, c] : p.terms()) {
    ExtendedRational v(dot(m, w.values()));
    if (v < best)
      best = v;
  }
  return best;
}

std::map<Rational, Polynomial> wqh_decompose(const Polynomial& p, const WeightVector& w)
{
  if (p.nvars() != w.size())
    throw DimensionMismatch(p.nvars(), w.size());
  std::map<Rational, Polynomial> parts;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = parts.try_emplace(dot(m, w.values()), p.nvars());
    it->second.add_term(m, c);
  }
  return parts;
}

WqhResult is_wqh(const Polynomial& p, const WeightVector& w)
{
  if (p.nvars() != w.size())
    throw DimensionMismatch(p.nvars(), w.size());
  WqhResult result;
  if (p.is_zero()) {
    result.zero = true;
    return result;
  }
  std::optional<Rational> weight;
  for (const auto& [m, c] : p.terms()) {
    Rational v = dot(m, w.values());
    if (!weight)
      weight = v;
    else if (*weight != v)
      return result;
  }
  result.weight = weight;
  return result;
}

WeightVector normalize_weight(const Polynomial& f, const WeightVector& w)
{
  const auto r = is_wqh(f, w);
  if (!r.weight)
    throw NotWqh(r.zero ? "the zero polynomial has no weight" : "polynomial is not weakly quasi-homogeneous for the given weights");
  if (sgn(*r.weight) <= 0)
    throw NotWqh("polynomial has nonpositive weight " + to_short(*r.weight));
  std::vector<Rational> scaled;
  scaled.reserve(w.size());
  for (const auto& wi : w.values())
    scaled.push_back(wi / *r.weight);
  return WeightVector(std::move(scaled));
}

} // namespace lfd
