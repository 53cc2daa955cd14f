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

#ifndef LFD_SPENCER_HPP
#define LFD_SPENCER_HPP

#include "lfd/logarithmic.hpp"
#include "lfd/polynomial.hpp"
#include "lfd/weyl.hpp"

#include <string>
#include <vector>

namespace lfd {

// Strictly increasing basis labels from {1, ..., n}; label 1 is chi + k.
using WedgeIndex = std::vector<std::size_t>;

// All size-`level` index sets in lexicographic order.
std::vector<WedgeIndex> wedge_basis(std::size_t n, std::size_t level);

struct DiagonalEntry {
  std::size_t row;      // source index I = {1} u T
  std::size_t column;   // target index T
  Rational constant;    // k - sum_{j in T} nu_j
};

// phi_level(e_I) = sum_J matrix[I][J] e_J, sources of size `level`.
struct SpencerLevel {
  std::size_t level = 0;
  std::vector<WedgeIndex> sources;
  std::vector<WedgeIndex> targets;
  std::vector<std::vector<DifferentialOperator>> matrix;
  std::vector<std::size_t> r_rows, s_rows;  // sources with / without label 1
  std::vector<std::size_t> r_cols, s_cols;  // same split of the targets
  std::vector<DiagonalEntry> diagonal;      // the X block, one entry per R row
};

struct SpencerComplex {
  AdaptedBasis basis;
  unsigned k = 0;
  std::vector<SpencerLevel> levels;  // levels[l - 1] holds phi_l, l = 1..n

  std::size_t n() const noexcept { return basis.nvars(); }
  const SpencerLevel& level(std::size_t l) const { return levels.at(l - 1); }
  // Basis of the degree-l term, l = 0..n.
  std::vector<WedgeIndex> wedges(std::size_t l) const { return wedge_basis(n(), l); }
};

// Throws InvalidArgument if the bracket table is incomplete.
SpencerComplex spencer_matrices(const AdaptedBasis& b, unsigned k);

// phi_{l-1} o phi_l = 0 for every l, with Weyl-algebra products.
bool verify_complex(const SpencerComplex& C);

// Every X block is diagonal with entries chi + constant (and zero elsewhere
// in the R-to-S corner).
bool x_blocks_diagonal(const SpencerComplex& C);

// components[i] belongs to wedge_basis(n, level)[i].
struct CochainTuple {
  std::size_t level = 0;
  std::vector<Polynomial> components;

  bool is_zero() const;
  friend bool operator==(const CochainTuple&, const CochainTuple&) = default;
};

CochainTuple zero_cochain(const SpencerComplex& C, std::size_t level);

// (phi_l^* u)_I = sum_J matrix[I][J](u_J) for u of level l - 1.
CochainTuple dual_apply(const SpencerComplex& C, std::size_t level, const CochainTuple& u);

// The unique h with (chi + c) h = psi. Throws Resonance when c + nu = 0 for a
// weight nu occurring in psi.
Polynomial euler_solve(const Rational& c, const Polynomial& psi, const WeightVector& w);

struct ExtWitness {
  enum class Status { Witness, CocycleRejected, Mismatch };
  Status status = Status::Witness;
  CochainTuple witness;   // level l - 1 preimage; empty at l = 0
  CochainTuple residual;  // phi_{l+1}^* z when rejected, z - phi_l^* u on mismatch
};

inline constexpr const char* kExtWitnessRefusal =
    "ext_witness refused: k = 0 leaves chi - sum(nu_j) without a positive shift, so the "
    "diagonal Euler systems are not invertible; use k >= 1";

// Preimage of the cocycle z under phi_l^*, built from the diagonal Euler
// systems. Throws Refused when C.k == 0.
ExtWitness ext_witness(const SpencerComplex& C, std::size_t level, const CochainTuple& z);

struct SliceDims {
  std::size_t space = 0;   // dim of the level-l slice
  std::size_t kernel = 0;  // dim ker phi_{l+1}^* on the slice
  std::size_t image = 0;   // dim im phi_l^* in the slice
  bool exact() const noexcept { return kernel == image; }
};

// Restricts the dual complex to weight slices: component I of a level-l
// cochain of slice nu lives in Q[x]_{nu + sum_{i in I} nu_i}. Requires all
// weights positive and C.k >= 1.
SliceDims graded_slice_oracle(const SpencerComplex& C, std::size_t level, const Rational& nu);

// Slices nu <= bound touching levels l - 1, l, l + 1, increasing.
std::vector<Rational> slice_weights(const SpencerComplex& C, std::size_t level, const Rational& bound);

// Monomials of weight exactly mu; every weight must be positive.
std::vector<Monomial> monomials_of_weight(const WeightVector& w, const Rational& mu);

// Exact rank over Q.
std::size_t rank(std::vector<std::vector<Rational>> rows);

} // namespace lfd

#endif
