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
#include "lfd/parser.hpp"
#include "lfd/polynomial.hpp"
#include "lfd/rational.hpp"
#include "lfd/weights.hpp"

#include <doctest.h>

using namespace lfd;
using namespace lfd::testing;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};

Polynomial P(const std::string& s, const std::vector<std::string>& v = xy)
{
  return parse_polynomial(s, v);
}

WeightVector W(std::initializer_list<Rational> w)
{
  return WeightVector(std::vector<Rational>(w));
}

} // namespace

TEST_SUITE("rational") {

TEST_CASE("pq and short forms")
{
  CHECK(to_pq(q(3)) == "3/1");
  CHECK(to_pq(q(-2, 4)) == "-1/2");
  CHECK(to_short(q(3)) == "3");
  CHECK(to_short(q(5, 6)) == "5/6");
  CHECK(parse_rational("-10/4") == q(-5, 2));
  CHECK(parse_rational("7") == q(7));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
}

TEST_CASE("pq round trip over random values")
{
  Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Rational r = g.rational() * g.rational() + g.rational();
    CHECK(parse_rational(to_pq(r)) == r);
    CHECK(parse_rational(to_short(r)) == r);
  }
}

TEST_CASE("extended rationals order infinity last")
{
  const ExtendedRational inf;
  CHECK(inf.is_infinite());
  CHECK(ExtendedRational(q(5)) < inf);
  CHECK((inf + ExtendedRational(q(1))).is_infinite());
  CHECK((ExtendedRational(q(1, 2)) + ExtendedRational(q(1, 3))) == ExtendedRational(q(5, 6)));
  CHECK(inf.to_string() == "inf");
  CHECK_THROWS_AS(inf.value(), InvalidArgument);
}

}

TEST_SUITE("polynomial") {

TEST_CASE("ring axioms on random polynomials")
{
  Gen g(1);
  for (int i = 0; i < 60; ++i) {
    const Polynomial a = g.polynomial(3, 5), b = g.polynomial(3, 5), c = g.polynomial(3, 5);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a + Polynomial(3) == a);
  }
}

TEST_CASE("derivative obeys the Leibniz rule")
{
  Gen g(2);
  for (int i = 0; i < 60; ++i) {
    const Polynomial a = g.polynomial(2, 6), b = g.polynomial(2, 6);
    for (std::size_t v = 0; v < 2; ++v)
      CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
  }
}

TEST_CASE("exact division")
{
  CHECK(*exact_divide(P("x^2*y"), P("x")) == P("x*y"));
  CHECK_FALSE(exact_divide(P("x^3 - y^2"), P("x")).has_value());
  CHECK(*exact_divide(P("(x^3 - y^2)^2"), P("x^3 - y^2")) == P("x^3 - y^2"));
  CHECK(exact_divide(Polynomial(2), P("x + 1"))->is_zero());
  CHECK_THROWS_AS(exact_divide(P("x"), Polynomial(2)), InvalidArgument);

  Gen g(3);
  for (int i = 0; i < 60; ++i) {
    const Polynomial a = g.polynomial(3, 4), b = g.nonzero_polynomial(3, 4);
    const auto h = exact_divide(a * b, b);
    REQUIRE(h.has_value());
    CHECK(*h == a);
    if (!b.is_constant() && !a.is_zero()) {
      const Polynomial off = a * b + cst(3, q(1));
      CHECK_FALSE(exact_divide(off, b).has_value());
    }
  }
}

TEST_CASE("printing is canonical and parseable")
{
  CHECK(P("-y^2 + x^3").to_string(xy) == "x^3 - y^2");
  CHECK(P("1/2*x").to_string(xy) == "1/2*x");
  CHECK(P("-x + 0*y").to_string(xy) == "-x");
  CHECK(Polynomial(2).to_string(xy) == "0");
  Gen g(4);
  for (int i = 0; i < 200; ++i) {
    const Polynomial a = g.polynomial(3, 6, 8);
    CHECK(parse_polynomial(a.to_string(xyz), xyz) == a);
  }
}

TEST_CASE("default names")
{
  CHECK(default_names(2) == std::vector<std::string>{"x", "y"});
  CHECK(default_names(4) == std::vector<std::string>{"x1", "x2", "x3", "x4"});
}

}

TEST_SUITE("parser") {

TEST_CASE("accepted expressions")
{
  const Polynomial x = var(2, 0), y = var(2, 1);
  CHECK(P("x^3 - y^2") == x.pow(3) - y.pow(2));
  CHECK(P("1/2*x") == q(1, 2) * x);
  CHECK(P("-x^2") == -(x * x));
  CHECK(P("--x") == x);
  CHECK(P("2^3") == cst(2, q(8)));
  CHECK(P(" ( x + y ) ^ 2 ") == x * x + q(2) * x * y + y * y);
  CHECK(P("x^0") == cst(2, q(1)));
  const Polynomial X = var(3, 0), Y = var(3, 1), Z = var(3, 2);
  CHECK(P("x*y*(x+y)*(x*z+y)", xyz) ==
        X.pow(3) * Y * Z + X * X * Y * Y * Z + X * X * Y * Y + X * Y.pow(3));
}

TEST_CASE("errors carry byte offsets")
{
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      P(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    FAIL("expected a parse error for " << text);
    return 0;
  };
  CHECK(offset_of("2x") == 1);
  CHECK(offset_of("x y") == 2);
  CHECK(offset_of("x*(y+1)(x)") == 7);
  CHECK(offset_of("x + w") == 4);
  CHECK(offset_of("x +") == 3);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("x/2") == 1);
  CHECK(offset_of("1/0") == 2);
  CHECK(offset_of("x^y") == 2);
  CHECK(offset_of("(x + 1") == 6);
  CHECK(offset_of("x $ y") == 2);
}

TEST_CASE("variable name validation")
{
  CHECK_THROWS_AS(parse_polynomial("x", {}), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial("x", {"x", "x"}), InvalidArgument);
  CHECK_THROWS_AS(parse_polynomial("x", {"1x"}), InvalidArgument);
  CHECK(parse_polynomial("a_1*b2", {"a_1", "b2"}) == var(2, 0) * var(2, 1));
}

}

TEST_SUITE("weights") {

TEST_CASE("weight vector validation")
{
  CHECK_THROWS_AS(W({q(0), q(0)}), InvalidArgument);
  CHECK_THROWS_AS(W({q(-1), q(2)}), InvalidArgument);
  CHECK_THROWS_AS(WeightVector({}), InvalidArgument);
  CHECK(W({q(1, 4), q(1, 4), q(0)}).rank() == 2);
}

TEST_CASE("w-order examples")
{
  CHECK(w_order(P("x^3 - y^2"), W({q(1, 3), q(1, 2)})) == ExtendedRational(q(1)));
  CHECK(w_order(Polynomial(2), W({q(1), q(1)})).is_infinite());
  CHECK(w_order(P("x^2 + y^3"), W({q(1), q(1)})) == ExtendedRational(q(2)));
}

TEST_CASE("decomposition examples")
{
  const auto d = wqh_decompose(P("x^2 + x*y + y^3"), W({q(1), q(1)}));
  REQUIRE(d.size() == 2);
  CHECK(d.at(q(2)) == P("x^2 + x*y"));
  CHECK(d.at(q(3)) == P("y^3"));
  const auto e = wqh_decompose(P("x*z + y", xyz), W({q(1, 4), q(1, 4), q(0)}));
  REQUIRE(e.size() == 1);
  CHECK(e.at(q(1, 4)) == P("x*z + y", xyz));
  CHECK(wqh_decompose(Polynomial(2), W({q(1), q(1)})).empty());
}

TEST_CASE("wqh detection and normalization")
{
  const WeightVector lw = W({q(1, 4), q(1, 4), q(0)});
  CHECK(*is_wqh(P("x*y*(x+y)*(x*z+y)", xyz), lw).weight == q(1));
  CHECK_FALSE(is_wqh(P("x^2 + y^3"), W({q(1), q(1)})).weight.has_value());
  CHECK(*is_wqh(P("x^3 - y^2"), W({q(1, 3), q(1, 2)})).weight == q(1));
  CHECK(is_wqh(Polynomial(2), W({q(1), q(1)})).zero);

  CHECK(normalize_weight(P("x^3 - y^2"), W({q(1), q(3, 2)})) == W({q(1, 3), q(1, 2)}));
  CHECK(normalize_weight(P("x*y"), W({q(1), q(1)})) == W({q(1, 2), q(1, 2)}));
  CHECK(normalize_weight(P("x^3 - y^2"), W({q(1, 3), q(1, 2)})) == W({q(1, 3), q(1, 2)}));
  CHECK_THROWS_AS(normalize_weight(P("x^2 + y^3"), W({q(1), q(1)})), NotWqh);
  CHECK_THROWS_AS(normalize_weight(P("3"), W({q(1), q(1)})), NotWqh);
}

TEST_CASE("w-order is additive and decomposition sums back")
{
  Gen g(5);
  const WeightVector w = W({q(1, 3), q(1, 2), q(0)});
  for (int i = 0; i < 100; ++i) {
    const Polynomial a = g.nonzero_polynomial(3, 5), b = g.nonzero_polynomial(3, 5);
    CHECK(w_order(a * b, w) == w_order(a, w) + w_order(b, w));
    const auto parts = wqh_decompose(a, w);
    CHECK(w_order(a, w) == ExtendedRational(parts.begin()->first));
    Polynomial sum(3);
    for (const auto& [nu, part] : parts) {
      CHECK(*is_wqh(part, w).weight == nu);
      sum += part;
    }
    CHECK(sum == a);
  }
}

}
