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

#ifndef LFD_WEIGHTS_HPP
#define LFD_WEIGHTS_HPP

#include "lfd/polynomial.hpp"
#include "lfd/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lfd {

// w in Q^n with w_i >= 0 and at least one w_i > 0.
class WeightVector {
public:
  // Throws InvalidArgument when the sign conditions fail.
  explicit WeightVector(std::vector<Rational> w);

  std::size_t size() const noexcept { return m_w.size(); }
  const Rational& operator[](std::size_t i) const { return m_w[i]; }
  const std::vector<Rational>& values() const noexcept { return m_w; }
  // Number of nonzero coordinates.
  std::size_t rank() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
  std::vector<Rational> m_w;
};

ExtendedRational w_order(const Polynomial& p, const WeightVector& w);

// Splits p into weakly quasi-homogeneous parts keyed by weight, increasing.
std::map<Rational, Polynomial> wqh_decompose(const Polynomial& p, const WeightVector& w);

struct WqhResult {
  std::optional<Rational> weight;
  bool zero = false;
};

// The common weight of all monomials of p, if there is one. The zero
// polynomial yields no weight and zero = true.
WqhResult is_wqh(const Polynomial& p, const WeightVector& w);

// w / nu where nu is the weight of f under w. Throws NotWqh if f is not WQH
// of a positive weight.
WeightVector normalize_weight(const Polynomial& f, const WeightVector& w);

} // namespace lfd

#endif
