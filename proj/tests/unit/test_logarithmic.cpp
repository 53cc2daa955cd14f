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

#include "generators.hpp"

#include "lfd/errors.hpp"
#include "lfd/groebner.hpp"
#include "lfd/logarithmic.hpp"
#include "lfd/parser.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace lfd;
using namespace lfd::testing;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};

Polynomial P(const std::string& s, const std::vector<std::string>& v = xy)
{
  return parse_polynomial(s, v);
}

VectorField F(std::initializer_list<const char*> parts, const std::vector<std::string>& v = xy)
{
  std::vector<Polynomial> c;
  for (const char* p : parts)
    c.push_back(P(p, v));
  return VectorField(std::move(c));
}

WeightVector W(std::initializer_list<Rational> w)
{
  return WeightVector(std::vector<Rational>(w));
}

// Sum over permutations, independent of the elimination used by the library.
Polynomial leibniz_det(const std::vector<VectorField>& rows)
{
  const std::size_t n = rows.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(rows[0].nvars());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        inversions += perm[i] > perm[j] ? 1 : 0;
    Polynomial term(rows[0].nvars(), Rational(inversions % 2 ? -1 : 1));
    for (std::size_t i = 0; i < n; ++i)
      term = term * rows[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<VectorField> basis_fields(const AdaptedBasis& b)
{
  std::vector<VectorField> v{b.chi};
  v.insert(v.end(), b.deltas.begin(), b.deltas.end());
  return v;
}

struct Example {
  const char* name;
  std::vector<std::string> vars;
  const char* f;
  std::vector<Rational> w;
};

std::vector<Example> corpus()
{
  return {
      {"cusp", xy, "x^3 - y^2", {q(1, 3), q(1, 2)}},
      {"xy", xy, "x*y", {q(1, 2), q(1, 2)}},
      {"xyz", xyz, "x*y*z", {q(1, 3), q(1, 3), q(1, 3)}},
      {"lwqh", xyz, "x*y*(x+y)*(x*z+y)", {q(1, 4), q(1, 4), q(0)}},
      {"smooth", xy, "x", {q(1), q(0)}},
  };
}

} // namespace

TEST_SUITE("logarithmic") {

TEST_CASE("log derivations of the examples")
{
  for (const char* text : {"x*y", "x^3 - y^2", "x"}) {
    const Polynomial f = P(text);
    const auto s = log_derivations(f);
    REQUIRE_FALSE(s.fields.empty());
    for (std::size_t i = 0; i < s.fields.size(); ++i)
      CHECK(s.fields[i].apply(f) == s.cofactors[i] * f);
  }
  // x dx and y dy are logarithmic along xy, with cofactor 1.
  const auto s = log_derivations(P("x*y"));
  std::vector<ModuleElement> gens;
  for (std::size_t i = 0; i < s.fields.size(); ++i) {
    ModuleElement e = s.fields[i].coeffs();
    e.push_back(s.cofactors[i]);
    gens.push_back(e);
  }
  CHECK(lift({P("x"), P("0"), P("1")}, gens).has_value());
  CHECK(lift({P("0"), P("y"), P("1")}, gens).has_value());
  CHECK_THROWS_AS(log_derivations(P("3")), InvalidArgument);
}

TEST_CASE("theta bases")
{
  auto t = theta_basis(P("x^3 - y^2"), W({q(1, 3), q(1, 2)}));
  REQUIRE(t.size() == 1);
  CHECK(t[0] == F({"2*y", "3*x^2"}));

  t = theta_basis(P("x*y"), W({q(1, 2), q(1, 2)}));
  REQUIRE(t.size() == 1);
  CHECK((t[0] == F({"x", "-y"}) || t[0] == F({"-x", "y"})));

  t = theta_basis(P("x*y*z", xyz), W({q(1, 3), q(1, 3), q(1, 3)}));
  CHECK(t.size() == 2);
  for (const auto& d : t)
    CHECK(d.apply(P("x*y*z", xyz)).is_zero());

  CHECK_THROWS_AS(theta_basis(P("x^2 + y^3"), W({q(1), q(1)})), NotWqh);
}

TEST_CASE("saito criterion")
{
  auto r = saito_check({F({"1/3*x", "1/2*y"}), F({"2*y", "3*x^2"})}, P("x^3 - y^2"));
  CHECK(r.ok);
  CHECK(r.unit == P("1"));
  r = saito_check({F({"1/2*x", "1/2*y"}), F({"x", "-y"})}, P("x*y"));
  CHECK(r.ok);
  CHECK(r.unit == P("-1"));
  CHECK_FALSE(saito_check({F({"x", "0"}), F({"0", "x"})}, P("x*y")).ok);
  CHECK_FALSE(saito_check({F({"x", "0"}), F({"x", "0"})}, P("x*y")).ok);
  CHECK_THROWS_AS(saito_check({F({"x", "0"})}, P("x*y")), InvalidArgument);
}

TEST_CASE("determinant matches the permutation expansion")
{
  Gen g(41);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    std::vector<VectorField> rows;
    for (std::size_t i = 0; i < n; ++i)
      rows.push_back(g.field(n, 3));
    CHECK(coefficient_determinant(rows) == leibniz_det(rows));
  }
}

TEST_CASE("cusp basis")
{
  const auto b = adapted_basis(P("x^3 - y^2"), W({q(1, 3), q(1, 2)}));
  CHECK(b.chi == F({"1/3*x", "1/2*y"}));
  REQUIRE(b.deltas.size() == 1);
  CHECK(b.deltas[0] == F({"2*y", "3*x^2"}));
  CHECK(b.nus[0] == q(1, 6));
  CHECK(leibniz_det(basis_fields(b)) == b.f);
  CHECK(vf_bracket(b.chi, b.deltas[0]) == q(1, 6) * b.deltas[0]);
  CHECK(basis_defect(b).empty());

  const auto wi = weight_inequalities(b);
  REQUIRE(wi.entries.size() == 2);
  CHECK(wi.entries[0].subset.empty());
  CHECK(wi.entries[0].value == q(1));
  CHECK(wi.entries[1].subset == std::vector<std::size_t>{2});
  CHECK(wi.entries[1].value == q(5, 6));
  CHECK(wi.all_positive);
}

TEST_CASE("normal crossing bases")
{
  const auto b2 = adapted_basis(P("x*y"), W({q(1, 2), q(1, 2)}));
  CHECK(leibniz_det(basis_fields(b2)) == b2.f);
  CHECK(b2.nus == std::vector<Rational>{q(0)});

  const auto b3 = adapted_basis(P("x*y*z", xyz), W({q(1, 3), q(1, 3), q(1, 3)}));
  CHECK(leibniz_det(basis_fields(b3)) == b3.f);
  CHECK(b3.nus == std::vector<Rational>{q(0), q(0)});
  for (const auto& e : weight_inequalities(b3).entries)
    CHECK(e.value == q(1));
}

TEST_CASE("lwqh surface basis")
{
  const Polynomial f = P("x*y*(x+y)*(x*z+y)", xyz);
  const auto b = adapted_basis(f, W({q(1, 4), q(1, 4), q(0)}));
  CHECK(b.deltas.size() == 2);
  CHECK(leibniz_det(basis_fields(b)) == f);
  CHECK(basis_defect(b).empty());
  CHECK(weight_inequalities(b).all_positive);
}

TEST_CASE("adapted basis postconditions hold on the corpus")
{
  for (const auto& ex : corpus()) {
    CAPTURE(ex.name);
    const Polynomial f = P(ex.f, ex.vars);
    const WeightVector w(ex.w);
    const auto b = adapted_basis(f, w);
    CHECK(b.chi == euler_field(w));
    CHECK(coefficient_determinant(basis_fields(b)) == f);
    for (std::size_t i = 0; i < b.deltas.size(); ++i) {
      CHECK(b.deltas[i].apply(f).is_zero());
      CHECK(vf_weight(b.deltas[i], w) == b.nus[i]);
      CHECK(vf_bracket(b.chi, b.deltas[i]) == b.nus[i] * b.deltas[i]);
    }
    for (const auto& [ij, coeffs] : b.brackets) {
      VectorField sum = VectorField::zero(f.nvars());
      for (std::size_t l = 0; l < coeffs.size(); ++l)
        sum += coeffs[l] * b.deltas[l];
      CHECK(vf_bracket(b.deltas[ij.first], b.deltas[ij.second]) == sum);
    }
    CHECK(weight_inequalities(b).all_positive);
    for (unsigned k = 1; k <= 5; ++k) {
      for (bool ok : annihilation_check(ann1_generators(b, k), f, k))
        CHECK(ok);
    }
  }
}

TEST_CASE("log derivations split off the Euler part")
{
  for (const auto& ex : corpus()) {
    CAPTURE(ex.name);
    const Polynomial f = P(ex.f, ex.vars);
    const VectorField chi = euler_field(WeightVector(ex.w));
    const auto s = log_derivations(f);
    for (std::size_t i = 0; i < s.fields.size(); ++i)
      CHECK((s.fields[i] - s.cofactors[i] * chi).apply(f).is_zero());
    for (unsigned k = 1; k <= 3; ++k)
      for (bool ok : annihilation_check(ann1_generators(s, k), f, k))
        CHECK(ok);
  }
}

TEST_CASE("rejections")
{
  CHECK_THROWS_AS(adapted_basis(P("x^2 + y^3"), W({q(1), q(1)})), NotWqh);
  CHECK_THROWS_AS(adapted_basis(P("x^3 - y^2"), W({q(1), q(1)})), NotWqh);
  // Four generic planes through the origin do not form a free arrangement.
  CHECK_THROWS_AS(adapted_basis(P("x*y*z*(x+y+z)", xyz), W({q(1, 4), q(1, 4), q(1, 4)})), NotCertified);
  CHECK_THROWS_AS(annihilation_check({DifferentialOperator::partial(2, 0)}, P("x"), 0), InvalidArgument);
}

TEST_CASE("generators of the first-order annihilator")
{
  const auto b = adapted_basis(P("x^3 - y^2"), W({q(1, 3), q(1, 2)}));
  auto ops = ann1_generators(b, 1);
  REQUIRE(ops.size() == 2);
  CHECK(ops[0] == shifted(b.chi, q(1)));
  CHECK(ops[1] == DifferentialOperator(b.deltas[0]));
  ops = ann1_generators(b, 0);
  CHECK(ops[0] == DifferentialOperator(b.chi));
  CHECK(annihilation_check({shifted(b.chi, q(3))}, b.f, 3) == std::vector<bool>{true});
  CHECK(annihilation_check({DifferentialOperator::partial(2, 0)}, P("x*y"), 1) == std::vector<bool>{false});

  const auto b3 = adapted_basis(P("x*y*z", xyz), W({q(1, 3), q(1, 3), q(1, 3)}));
  ops = ann1_generators(b3, 2);
  REQUIRE(ops.size() == 3);
  CHECK(ops[0] == shifted(b3.chi, q(2)));
}

}
