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

#ifndef LFD_LOGARITHMIC_HPP
#define LFD_LOGARITHMIC_HPP

#include "lfd/polynomial.hpp"
#include "lfd/weights.hpp"
#include "lfd/weyl.hpp"

#include <map>
#include <utility>
#include <vector>

namespace lfd {

// Generators delta_i of Der(-log f) with delta_i(f) = cofactors[i] * f.
struct LogDerivationSet {
  std::vector<VectorField> fields;
  std::vector<Polynomial> cofactors;
};

// Syzygies of (df/dx_1, ..., df/dx_n, -f). Throws InvalidArgument for a
// constant f.
LogDerivationSet log_derivations(const Polynomial& f);

// Weighted homogeneous generators of the fields annihilating f, normalized to
// primitive integer coefficients and with redundant members removed. Throws
// NotWqh unless f has weight 1 under w.
std::vector<VectorField> theta_basis(const Polynomial& f, const WeightVector& w);

// det of the n x n matrix whose rows are the coefficients of the fields.
Polynomial coefficient_determinant(const std::vector<VectorField>& fields);

struct SaitoResult {
  Polynomial determinant;
  Polynomial unit;  // det = unit * f when ok
  bool ok = false;
};

// Saito certificate: det = u f with u(0) != 0. Throws InvalidArgument unless
// exactly n fields are given.
SaitoResult saito_check(const std::vector<VectorField>& fields, const Polynomial& f);

// {chi, delta_2, ..., delta_n}: delta_i(f) = 0, delta_i WQH of weight nus,
// coefficient determinant equal to f. Brackets [delta_i, delta_j] expand as
// sum_l brackets[{i, j}][l] * delta_l where indices are 0-based positions in
// `deltas` (so position 0 is delta_2).
struct AdaptedBasis {
  Polynomial f;
  WeightVector weight;
  VectorField chi;
  std::vector<VectorField> deltas;
  std::vector<Rational> nus;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Polynomial>> brackets;
  // Constant the first delta was divided by to make det = f.
  Rational unit{1};

  std::size_t nvars() const noexcept { return f.nvars(); }
};

// Throws NotWqh when f is not of weight 1, NotCertified when no subset of the
// weighted generators passes Saito's criterion with a constant unit,
// Inconsistency when a bracket fails to lift.
AdaptedBasis adapted_basis(const Polynomial& f, const WeightVector& w);

// Rechecks every defining identity of the basis; returns a description of
// the first one that fails, empty when all hold.
std::string basis_defect(const AdaptedBasis& b);

struct WeightInequality {
  std::vector<std::size_t> subset;  // basis labels in {2, ..., n}
  Rational value;                   // 1 - sum of nu_j over the subset
  bool positive = false;
};

struct WeightInequalities {
  std::vector<WeightInequality> entries;
  bool all_positive = true;
};

// All 2^(n-1) subsets, in increasing bitmask order.
WeightInequalities weight_inequalities(const AdaptedBasis& b);

// {chi + k, delta_2, ..., delta_n}.
std::vector<DifferentialOperator> ann1_generators(const AdaptedBasis& b, unsigned k);
// {delta_i + k a_i}.
std::vector<DifferentialOperator> ann1_generators(const LogDerivationSet& s, unsigned k);

// Whether P(1/f^k) = 0 for each operator. Throws InvalidArgument for k = 0.
std::vector<bool> annihilation_check(const std::vector<DifferentialOperator>& ops,
                                     const Polynomial& f, unsigned k);

} // namespace lfd

#endif
