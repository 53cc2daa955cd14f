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

#ifndef LFD_GROEBNER_HPP
#define LFD_GROEBNER_HPP

#include "lfd/polynomial.hpp"
#include "lfd/rational.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace lfd {

// An element of O^m. The rank is the number of components.
using ModuleElement = std::vector<Polynomial>;

// Monomial order plus the term-over-position extension to free modules.
// Positions below `eliminate` dominate every position at or above it, which
// turns the extension into a block order (used for syzygies and lifts).
struct MonomialOrder {
  enum class Kind { DegRevLex, Lex, Weighted };

  Kind kind = Kind::DegRevLex;
  // Per-variable weights for Kind::Weighted, ties broken by degrevlex.
  std::vector<Rational> weights;
  std::size_t eliminate = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, {}, 0}; }
  static MonomialOrder weighted(std::vector<Rational> w) { return {Kind::Weighted, std::move(w), 0}; }

  std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) const;
  // Term (a, pa) versus (b, pb) in the module order.
  std::strong_ordering compare_terms(const Monomial& a, std::size_t pa,
                                     const Monomial& b, std::size_t pb) const;
};

struct GroebnerBasis {
  std::vector<ModuleElement> generators;
  MonomialOrder order;
  std::size_t rank = 0;
  std::size_t nvars = 0;
};

struct LeadTerm {
  Monomial monomial;
  std::size_t position = 0;
  Rational coefficient;
};

// Leading term under the order; nullopt for the zero element.
std::optional<LeadTerm> lead_term(const ModuleElement& e, const MonomialOrder& order);

// Reduced Groebner basis of the submodule spanned by gens. Throws
// DimensionMismatch on ranks that disagree, InvalidArgument on empty input.
GroebnerBasis buchberger(const std::vector<ModuleElement>& gens,
                         const MonomialOrder& order = MonomialOrder::degrevlex());

struct NormalForm {
  ModuleElement remainder;
  std::vector<Polynomial> quotients;
};

// Full division: e = sum quotients[i] * G[i] + remainder, no remainder term
// divisible by a leading term of G.
NormalForm normal_form(const ModuleElement& e, const GroebnerBasis& G);

// Checks that every S-pair reduces to zero modulo G.
bool satisfies_buchberger_criterion(const GroebnerBasis& G);

// Generators of {a : sum a_i gens_i = 0}.
std::vector<ModuleElement> module_syzygies(const std::vector<ModuleElement>& gens);

// Generators of {a : sum a_i g_i = 0} for polynomials g_i. Throws
// InvalidArgument if every g_i is zero.
std::vector<ModuleElement> syzygy_basis(const std::vector<Polynomial>& g);

// Coefficients c with target = sum c_j gens_j, or nullopt if target is not
// in the submodule.
std::optional<std::vector<Polynomial>> lift(const ModuleElement& target,
                                            const std::vector<ModuleElement>& gens);

// sum coeffs_j * gens_j, componentwise.
ModuleElement combine(const std::vector<Polynomial>& coeffs, const std::vector<ModuleElement>& gens);

bool is_zero(const ModuleElement& e);

} // namespace lfd

#endif
