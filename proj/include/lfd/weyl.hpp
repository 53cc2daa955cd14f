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

#ifndef LFD_WEYL_HPP
#define LFD_WEYL_HPP

#include "lfd/polynomial.hpp"
#include "lfd/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lfd {

// delta = sum_i a_i d_i.
class VectorField {
public:
  VectorField() = default;
  explicit VectorField(std::vector<Polynomial> coeffs);
  static VectorField zero(std::size_t nvars);

  std::size_t nvars() const noexcept { return m_coeffs.size(); }
  const Polynomial& operator[](std::size_t i) const { return m_coeffs[i]; }
  const std::vector<Polynomial>& coeffs() const noexcept { return m_coeffs; }
  bool is_zero() const;

  // delta(g) = sum_i a_i dg/dx_i
  Polynomial apply(const Polynomial& g) const;

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Polynomial& p, const VectorField& v);
  friend VectorField operator*(const Rational& c, const VectorField& v);
  friend bool operator==(const VectorField&, const VectorField&) = default;

  // "2*y*Dx + 3*x^2*Dy"
  std::string to_string(const std::vector<std::string>& names) const;

private:
  std::vector<Polynomial> m_coeffs;
};

// sum_beta p_beta(x) D^beta, coefficients to the left of all derivatives.
class DifferentialOperator {
public:
  using TermMap = std::map<Monomial, Polynomial>;

  DifferentialOperator() = default;
  explicit DifferentialOperator(std::size_t nvars) : m_nvars(nvars) {}
  // Multiplication by p (order 0).
  explicit DifferentialOperator(const Polynomial& p);
  explicit DifferentialOperator(const VectorField& v);
  static DifferentialOperator constant(std::size_t nvars, const Rational& c);
  static DifferentialOperator partial(std::size_t nvars, std::size_t var);

  std::size_t nvars() const noexcept { return m_nvars; }
  const TermMap& terms() const noexcept { return m_terms; }
  bool is_zero() const noexcept { return m_terms.empty(); }
  // max |beta|; 0 for the zero operator.
  std::uint64_t order() const;

  void add_term(const Monomial& beta, const Polynomial& coef);

  DifferentialOperator& operator+=(const DifferentialOperator& other);
  DifferentialOperator& operator-=(const DifferentialOperator& other);
  friend DifferentialOperator operator+(DifferentialOperator a, const DifferentialOperator& b) { return a += b; }
  friend DifferentialOperator operator-(DifferentialOperator a, const DifferentialOperator& b) { return a -= b; }
  friend DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b);
  friend bool operator==(const DifferentialOperator&, const DifferentialOperator&) = default;

  std::string to_string(const std::vector<std::string>& names) const;

private:
  std::size_t m_nvars = 0;
  TermMap m_terms;
};

// numerator / base^exponent for a fixed nonzero base f.
class MeroFraction {
public:
  // Cancels powers of base from the numerator. Throws InvalidArgument if
  // base is zero.
  MeroFraction(Polynomial numerator, Polynomial base, unsigned exponent);

  const Polynomial& numerator() const noexcept { return m_num; }
  const Polynomial& base() const noexcept { return m_base; }
  unsigned exponent() const noexcept { return m_exp; }
  bool is_zero() const noexcept { return m_num.is_zero(); }

  std::string to_string(const std::vector<std::string>& names) const;

private:
  Polynomial m_num;
  Polynomial m_base;
  unsigned m_exp;
};

DifferentialOperator op_multiply(const DifferentialOperator& P, const DifferentialOperator& Q);
Polynomial op_apply(const DifferentialOperator& P, const Polynomial& g);

// P(1/f^k). Throws InvalidArgument for f = 0 or k = 0.
MeroFraction apply_to_inverse_power(const DifferentialOperator& P, const Polynomial& f, unsigned k);

VectorField vf_bracket(const VectorField& d, const VectorField& e);

ExtendedRational vf_w_order(const VectorField& d, const WeightVector& w);
std::map<Rational, VectorField> vf_wqh_parts(const VectorField& d, const WeightVector& w);
// The common weight of every monomial a_{i,alpha} x^alpha D_i, if any. Zero
// fields have no weight.
std::optional<Rational> vf_weight(const VectorField& d, const WeightVector& w);

// chi = sum w_i x_i D_i
VectorField euler_field(const WeightVector& w);

// chi + c as an operator.
DifferentialOperator shifted(const VectorField& v, const Rational& c);

} // namespace lfd

#endif
