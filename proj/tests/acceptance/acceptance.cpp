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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include "generators.hpp"

#include "lfd/errors.hpp"
#include "lfd/groebner.hpp"
#include "lfd/logarithmic.hpp"
#include "lfd/parser.hpp"
#include "lfd/session.hpp"
#include "lfd/spencer.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace lfd;
using namespace lfd::testing;

namespace {

struct Example {
  std::string name;
  std::vector<std::string> vars;
  std::string f;
  std::vector<Rational> w;

  Polynomial poly() const { return parse_polynomial(f, vars); }
  WeightVector weight() const { return WeightVector(w); }
};

const std::vector<Example>& corpus()
{
  static const std::vector<Example> c{
      {"cusp", {"x", "y"}, "x^3 - y^2", {q(1, 3), q(1, 2)}},
      {"xy", {"x", "y"}, "x*y", {q(1, 2), q(1, 2)}},
      {"xyz", {"x", "y", "z"}, "x*y*z", {q(1, 3), q(1, 3), q(1, 3)}},
      {"smooth", {"x", "y"}, "x", {q(1), q(0)}},
      {"lwqh", {"x", "y", "z"}, "x*y*(x+y)*(x*z+y)", {q(1, 4), q(1, 4), q(0)}},
  };
  return c;
}

// Collects failed checks; the first few are printed under the verdict.
class Criterion {
public:
  void check(bool ok, const std::string& what)
  {
    ++m_checks;
    if (!ok && m_failures.size() < 5)
      m_failures.push_back(what);
    m_ok = m_ok && ok;
  }
  void note(const std::string& s) { m_notes = s; }
  bool ok() const { return m_ok; }
  const std::vector<std::string>& failures() const { return m_failures; }
  const std::string& notes() const { return m_notes; }
  std::size_t checks() const { return m_checks; }

private:
  bool m_ok = true;
  std::size_t m_checks = 0;
  std::vector<std::string> m_failures;
  std::string m_notes;
};

std::vector<VectorField> fields_of(const AdaptedBasis& b)
{
  std::vector<VectorField> v{b.chi};
  v.insert(v.end(), b.deltas.begin(), b.deltas.end());
  return v;
}

// ---------------------------------------------------------------- criteria

void cusp_pipeline(Criterion& c)
{
  const Example& ex = corpus()[0];
  const Polynomial f = ex.poly();
  const AdaptedBasis b = adapted_basis(f, ex.weight());
  const VectorField ref({parse_polynomial("2*y", ex.vars), parse_polynomial("3*x^2", ex.vars)});
  c.check(b.chi == euler_field(ex.weight()), "chi is the Euler field");
  c.check(b.deltas.size() == 1, "one delta");
  if (b.deltas.size() != 1)
    return;
  const auto& d = b.deltas[0];
  const Rational scale = d[0].coefficient(Monomial({0, 1})) / 2;
  c.check(scale != 0 && d == scale * ref, "delta_2 is a multiple of 2y Dx + 3x^2 Dy");
  c.check(b.nus[0] == q(1, 6), "nu_2 = 1/6");
  c.check(coefficient_determinant(fields_of(b)) == f, "det = f");
  c.check(vf_bracket(b.chi, d) == q(1, 6) * d, "[chi, delta_2] = 1/6 delta_2");
  const auto wi = weight_inequalities(b);
  c.check(wi.entries.size() == 2 && wi.entries[0].value == q(1) && wi.entries[1].value == q(5, 6),
          "inequality values {1, 5/6}");
  c.check(wi.all_positive, "inequalities positive");
  c.note("delta_2 = " + d.to_string(ex.vars));
}

void normal_crossings(Criterion& c)
{
  for (const Example* ex : {&corpus()[1], &corpus()[2]}) {
    const Polynomial f = ex->poly();
    const AdaptedBasis b = adapted_basis(f, ex->weight());
    // Undo the normalization to recover the raw Saito unit.
    auto raw = fields_of(b);
    raw[1] = b.unit * raw[1];
    const SaitoResult s = saito_check(raw, f);
    c.check(s.ok && s.unit.is_constant() && abs(s.unit.constant_term()) == 1,
            ex->name + ": Saito determinant is +-f");
    c.check(coefficient_determinant(fields_of(b)) == f, ex->name + ": normalized det = f");
    for (const auto& nu : b.nus)
      c.check(nu == 0, ex->name + ": nu = 0");
    for (unsigned k = 1; k <= 5; ++k)
      for (bool ok : annihilation_check(ann1_generators(b, k), f, k))
        c.check(ok, ex->name + ": annihilation at k = " + std::to_string(k));
  }
}

void lwqh_divisor(Criterion& c)
{
  const Example& ex = corpus()[4];
  const Polynomial f = ex.poly();
  const auto r = is_wqh(f, ex.weight());
  c.check(r.weight && *r.weight == 1, "WQH of weight 1");
  const AdaptedBasis b = adapted_basis(f, ex.weight());
  c.check(basis_defect(b).empty(), "basis identities: " + basis_defect(b));
  c.check(coefficient_determinant(fields_of(b)) == f, "det = f");
  nlohmann::json cfg{{"vars", ex.vars}, {"f", ex.f}, {"weights", {"1/4", "1/4", "0"}}, {"k", {1, 2, 3}}};
  const Report rep = run("all", cfg);
  c.check(rep.exit_status == 0, "full pipeline exit status " + std::to_string(rep.exit_status));
}

void complex_property(Criterion& c)
{
  Gen g(404);
  std::size_t tuples = 0;
  for (const auto& ex : corpus()) {
    const AdaptedBasis b = adapted_basis(ex.poly(), ex.weight());
    for (unsigned k = 0; k <= 5; ++k)
      c.check(verify_complex(spencer_matrices(b, k)), ex.name + ": complex at k = " + std::to_string(k));
    const auto C = spencer_matrices(b, 1);
    const std::size_t n = C.n();
    std::size_t here = 0;
    while (here < 100)
      for (std::size_t l = 1; l < n; ++l) {
        const auto u = g.cochain(C, l - 1, 8);
        c.check(dual_apply(C, l + 1, dual_apply(C, l, u)).is_zero(), ex.name + ": dual d o d");
        ++here;
      }
    tuples += here;
  }
  c.note(std::to_string(tuples) + " random tuples");
}

void euler_solver(Criterion& c)
{
  Gen g(505);
  std::size_t trips = 0;
  for (const auto* ex : {&corpus()[0], &corpus()[2], &corpus()[4]}) {
    const WeightVector w = ex->weight();
    const VectorField chi = euler_field(w);
    for (int t = 0; t < 200; ++t) {
      const Polynomial psi = g.polynomial(w.size(), 12, 6);
      for (const Rational& cc : {q(1), q(1, 2), q(5, 6)}) {
        const auto op = shifted(chi, cc);
        c.check(op_apply(op, euler_solve(cc, psi, w)) == psi, ex->name + ": (chi+c) o solve");
        c.check(euler_solve(cc, op_apply(op, psi), w) == psi, ex->name + ": solve o (chi+c)");
        ++trips;
      }
    }
  }
  const Example& cusp = corpus()[0];
  bool named = false;
  try {
    euler_solve(q(-1, 3), parse_polynomial("x", cusp.vars), cusp.weight());
  } catch (const Resonance& e) {
    named = e.weight() == "1/3" && std::string(e.what()).find("1/3") != std::string::npos;
  }
  c.check(named, "resonant c = -1/3 rejected naming weight 1/3");
  c.note(std::to_string(trips) + " round trips");
}

void ext_vanishing(Criterion& c)
{
  Gen g(606);
  std::size_t witnesses = 0;
  for (const auto& ex : corpus()) {
    const AdaptedBasis b = adapted_basis(ex.poly(), ex.weight());
    for (unsigned k = 1; k <= 3; ++k) {
      const auto C = spencer_matrices(b, k);
      for (std::size_t l = 1; l <= C.n(); ++l)
        for (int t = 0; t < 50; ++t) {
          const auto z = dual_apply(C, l, g.cochain(C, l - 1, 6));
          const auto r = ext_witness(C, l, z);
          c.check(r.status == ExtWitness::Status::Witness && dual_apply(C, l, r.witness) == z,
                  ex.name + ": witness at level " + std::to_string(l) + ", k = " + std::to_string(k));
          ++witnesses;
        }
      const auto r0 = ext_witness(C, 0, zero_cochain(C, 0));
      c.check(r0.status == ExtWitness::Status::Witness, ex.name + ": level 0");
    }
  }
  std::size_t slices = 0;
  const Example& ex = corpus()[0];
  const AdaptedBasis b = adapted_basis(ex.poly(), ex.weight());
  for (unsigned k = 1; k <= 3; ++k) {
    const auto C = spencer_matrices(b, k);
    for (std::size_t l = 0; l <= C.n(); ++l)
      for (const auto& nu : slice_weights(C, l, q(3))) {
        const SliceDims d = graded_slice_oracle(C, l, nu);
        c.check(d.exact(), "cusp slice level " + std::to_string(l) + " nu " + to_short(nu));
        ++slices;
      }
  }
  c.note(std::to_string(witnesses) + " witnesses, " + std::to_string(slices) + " cusp slices");
}

void groebner_soundness(Criterion& c)
{
  Gen g(707);
  int instances = 0, syzygies = 0;
  while (instances < 120) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t rank = static_cast<std::size_t>(g.integer(1, 2));
    std::vector<ModuleElement> gens(static_cast<std::size_t>(g.integer(1, 3)));
    bool nonzero = false;
    for (auto& e : gens) {
      for (std::size_t r = 0; r < rank; ++r)
        e.push_back(g.polynomial(n, 4, 3));
      nonzero = nonzero || !is_zero(e);
    }
    if (!nonzero)
      continue;
    ++instances;
    std::vector<Rational> w;
    for (std::size_t i = 0; i < n; ++i)
      w.push_back(Rational(static_cast<long>(i + 1)));
    for (const auto& order : {MonomialOrder::degrevlex(), MonomialOrder::weighted(w)}) {
      const auto G = buchberger(gens, order);
      c.check(satisfies_buchberger_criterion(G), "S-pairs reduce to zero");
      for (const auto& e : gens)
        c.check(is_zero(normal_form(e, G).remainder), "generators reduce to zero");
    }
    for (const auto& s : module_syzygies(gens)) {
      c.check(is_zero(combine(s, gens)), "syzygy re-expands to zero");
      ++syzygies;
    }
    std::vector<Polynomial> coeffs;
    for (std::size_t j = 0; j < gens.size(); ++j)
      coeffs.push_back(g.polynomial(n, 2, 2));
    const ModuleElement target = combine(coeffs, gens);
    const auto l = lift(target, gens);
    c.check(l && combine(*l, gens) == target, "lift re-expands");
  }
  c.note(std::to_string(instances) + " instances, " + std::to_string(syzygies) + " syzygies");
}

void negative_controls(Criterion& c)
{
  const Example& ex = corpus()[0];
  const AdaptedBasis b = adapted_basis(ex.poly(), ex.weight());
  bool refused = false;
  try {
    const auto C = spencer_matrices(b, 0);
    ext_witness(C, 1, zero_cochain(C, 1));
  } catch (const Refused& e) {
    refused = std::string(e.what()) == kExtWitnessRefusal;
  }
  c.check(refused, "k = 0 refused with the documented diagnostic");

  AdaptedBasis bad = b;
  bad.nus[0] += 1;
  c.check(!verify_complex(spencer_matrices(bad, 1)), "perturbed [chi, delta_2] constant detected");

  AdaptedBasis surface = adapted_basis(corpus()[4].poly(), corpus()[4].weight());
  auto& coeffs = surface.brackets.begin()->second;
  coeffs[0] = coeffs[0] + Polynomial(3, q(1, 7));
  c.check(!verify_complex(spencer_matrices(surface, 1)), "corrupted bracket coefficient detected");

  bool rejected = false;
  try {
    adapted_basis(parse_polynomial("x^2 + y^3", ex.vars), WeightVector(std::vector<Rational>{q(1), q(1)}));
  } catch (const NotWqh&) {
    rejected = true;
  }
  c.check(rejected, "non-WQH input rejected");
}

} // namespace

int main()
{
  struct Entry {
    int id;
    const char* title;
    double budget;  // seconds, 0 for none
    std::function<void(Criterion&)> body;
  };
  const std::vector<Entry> entries{
      {1, "cusp pipeline", 1.0, cusp_pipeline},
      {2, "normal crossings", 1.0, normal_crossings},
      {3, "LWQH-not-LQH divisor", 30.0, lwqh_divisor},
      {4, "complex property", 0, complex_property},
      {5, "Euler solver", 0, euler_solver},
      {6, "constructive Ext vanishing", 0, ext_vanishing},
      {7, "Groebner engine soundness", 0, groebner_soundness},
      {8, "negative controls", 0, negative_controls},
  };
  int failed = 0;
  for (const auto& e : entries) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      e.body(c);
    } catch (const std::exception& ex) {
      c.check(false, std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.budget > 0)
      c.check(secs < e.budget, "runtime over budget");
    std::printf("[%s] %d %s: %zu checks, %.3f s%s%s%s\n", c.ok() ? "PASS" : "FAIL", e.id, e.title,
                c.checks(), secs, e.budget > 0 ? " (budget " : "",
                e.budget > 0 ? (std::to_string(static_cast<int>(e.budget)) + " s)").c_str() : "",
                c.notes().empty() ? "" : ("; " + c.notes()).c_str());
    for (const auto& f : c.failures())
      std::printf("       failed: %s\n", f.c_str());
    failed += c.ok() ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failed, entries.size());
  return failed == 0 ? 0 : 1;
}
