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

#include "lfd/session.hpp"

#include "lfd/errors.hpp"
#include "lfd/logarithmic.hpp"
#include "lfd/parser.hpp"
#include "lfd/spencer.hpp"
#include "lfd/weights.hpp"
#include "lfd/weyl.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace lfd {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr unsigned kMaxK = 64;
constexpr unsigned kMaxDegree = 32;
constexpr unsigned kMaxSamples = 100000;

const std::set<std::string> kKnownKeys = {"vars", "f", "weights", "k", "degree_bound",
                                          "seed", "format", "samples", "slice_bound"};

// ---------------------------------------------------------------- config

unsigned read_unsigned(const json& v, const char* key, unsigned max)
{
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw InvalidArgument(std::string("config key '") + key + "' must be a nonnegative integer");
  if (v.get<unsigned long long>() > max)
    throw InvalidArgument(std::string("config key '") + key + "' exceeds " + std::to_string(max));
  return v.get<unsigned>();
}

Rational read_rational(const json& v, const char* key)
{
  if (v.is_string())
    return parse_rational(v.get<std::string>());
  if (v.is_number_integer())
    return Rational(mpz_class(std::to_string(v.get<long long>())));
  throw InvalidArgument(std::string("config key '") + key + "' needs \"p/q\" strings");
}

// ---------------------------------------------------------------- sampling

class Sampler {
public:
  Sampler(std::uint64_t seed, std::size_t nvars, unsigned degree)
      : m_rng(seed), m_nvars(nvars), m_degree(degree) {}

  Rational coefficient()
  {
    std::uniform_int_distribution<int> num(-9, 8), den(1, 4);
    int p = num(m_rng);
    if (p >= 0)
      ++p;  // skip zero
    Rational r(p, den(m_rng));
    r.canonicalize();
    return r;
  }

  Polynomial polynomial(unsigned degree)
  {
    std::uniform_int_distribution<unsigned> terms(0, 6), deg(0, degree);
    std::uniform_int_distribution<std::size_t> var(0, m_nvars - 1);
    Polynomial p(m_nvars);
    const unsigned t = terms(m_rng);
    for (unsigned i = 0; i < t; ++i) {
      Monomial m(m_nvars);
      for (unsigned d = deg(m_rng); d > 0; --d)
        ++m[var(m_rng)];
      p.add_term(m, coefficient());
    }
    return p;
  }

  Polynomial polynomial() { return polynomial(m_degree); }

  CochainTuple cochain(const SpencerComplex& C, std::size_t level)
  {
    CochainTuple u = zero_cochain(C, level);
    for (auto& c : u.components)
      c = polynomial();
    return u;
  }

private:
  std::mt19937_64 m_rng;
  std::size_t m_nvars;
  unsigned m_degree;
};

// ---------------------------------------------------------------- report helpers

struct Context {
  const SessionConfig& cfg;
  std::vector<std::string> names;
  std::optional<WeightVector> weight;  // normalized, once the wqh stage passed
  std::optional<AdaptedBasis> basis;
  std::string basis_failure;
  Sampler sampler;
};

ordered_json poly_json(const Polynomial& p, const Context& ctx)
{
  return p.to_string(ctx.names);
}

ordered_json rationals_json(const std::vector<Rational>& v)
{
  ordered_json a = ordered_json::array();
  for (const auto& r : v)
    a.push_back(to_pq(r));
  return a;
}

ordered_json labels_json(const WedgeIndex& I)
{
  ordered_json a = ordered_json::array();
  for (auto i : I)
    a.push_back(i);
  return a;
}

ordered_json skipped(const std::string& why)
{
  return {{"status", "skipped"}, {"diagnostic", why}};
}

// ---------------------------------------------------------------- stages

ordered_json stage_wqh(Context& ctx)
{
  const auto& f = ctx.cfg.f;
  const WeightVector w(ctx.cfg.weights);
  ordered_json out;
  ordered_json parts = ordered_json::array();
  for (const auto& [nu, part] : wqh_decompose(f, w))
    parts.push_back({{"weight", to_pq(nu)}, {"part", poly_json(part, ctx)}});
  const WqhResult r = is_wqh(f, w);
  out["status"] = "ok";
  out["wqh"] = r.weight.has_value();
  out["weight"] = r.weight ? ordered_json(to_pq(*r.weight)) : ordered_json(nullptr);
  out["decomposition"] = std::move(parts);
  try {
    ctx.weight = normalize_weight(f, w);
    out["normalized_weights"] = rationals_json(ctx.weight->values());
  } catch (const NotWqh& e) {
    out["status"] = "inconsistent";
    out["diagnostic"] = e.what();
  }
  return out;
}

ordered_json stage_derivations(Context& ctx)
{
  const auto& f = ctx.cfg.f;
  ordered_json out{{"status", "ok"}};
  const LogDerivationSet s = log_derivations(f);
  ordered_json gens = ordered_json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < s.fields.size(); ++i) {
    const bool ok = s.fields[i].apply(f) == s.cofactors[i] * f;
    all_ok = all_ok && ok;
    gens.push_back({{"field", s.fields[i].to_string(ctx.names)},
                    {"cofactor", poly_json(s.cofactors[i], ctx)},
                    {"logarithmic", ok}});
  }
  out["generators"] = std::move(gens);
  if (s.fields.size() == f.nvars()) {
    const SaitoResult sr = saito_check(s.fields, f);
    out["saito"] = {{"determinant", poly_json(sr.determinant, ctx)},
                    {"unit", poly_json(sr.unit, ctx)},
                    {"certified", sr.ok}};
  } else {
    out["saito"] = nullptr;
  }
  if (!all_ok) {
    out["status"] = "inconsistent";
    out["diagnostic"] = "a generator is not logarithmic along f";
  }
  return out;
}

ordered_json stage_basis(Context& ctx)
{
  ordered_json out{{"status", "ok"}};
  try {
    ctx.basis = adapted_basis(ctx.cfg.f, *ctx.weight);
  } catch (const NotCertified& e) {
    ctx.basis_failure = e.what();
    return {{"status", "inconsistent"}, {"diagnostic", e.what()}};
  } catch (const Inconsistency& e) {
    ctx.basis_failure = e.what();
    return {{"status", "inconsistent"}, {"diagnostic", e.what()}};
  }
  const AdaptedBasis& b = *ctx.basis;
  out["chi"] = b.chi.to_string(ctx.names);
  ordered_json deltas = ordered_json::array();
  for (std::size_t i = 0; i < b.deltas.size(); ++i)
    deltas.push_back({{"label", i + 2},
                      {"field", b.deltas[i].to_string(ctx.names)},
                      {"nu", to_pq(b.nus[i])}});
  out["deltas"] = std::move(deltas);
  out["unit"] = to_pq(b.unit);
  std::vector<VectorField> all{b.chi};
  all.insert(all.end(), b.deltas.begin(), b.deltas.end());
  const Polynomial det = coefficient_determinant(all);
  out["determinant"] = poly_json(det, ctx);
  out["determinant_equals_f"] = det == b.f;
  ordered_json brackets = ordered_json::array();
  for (const auto& [ij, coeffs] : b.brackets) {
    ordered_json c = ordered_json::array();
    for (const auto& p : coeffs)
      c.push_back(poly_json(p, ctx));
    brackets.push_back({{"i", ij.first + 2}, {"j", ij.second + 2}, {"coefficients", std::move(c)}});
  }
  out["brackets"] = std::move(brackets);
  const std::string defect = basis_defect(b);
  out["identities_hold"] = defect.empty();
  if (!defect.empty()) {
    out["status"] = "inconsistent";
    out["diagnostic"] = defect;
  }
  return out;
}

ordered_json stage_inequalities(Context& ctx)
{
  const WeightInequalities wi = weight_inequalities(*ctx.basis);
  ordered_json entries = ordered_json::array();
  for (const auto& e : wi.entries)
    entries.push_back({{"subset", labels_json(e.subset)}, {"value", to_pq(e.value)}, {"positive", e.positive}});
  ordered_json out{{"status", wi.all_positive ? "ok" : "inconsistent"},
                   {"all_positive", wi.all_positive},
                   {"entries", std::move(entries)}};
  if (!wi.all_positive)
    out["diagnostic"] = "1 - sum of nu_j over some subset is not positive";
  return out;
}

ordered_json stage_spencer(Context& ctx)
{
  ordered_json per_k = ordered_json::array();
  bool ok = true;
  for (unsigned k : ctx.cfg.k) {
    const SpencerComplex C = spencer_matrices(*ctx.basis, k);
    ordered_json levels = ordered_json::array();
    for (const auto& L : C.levels) {
      ordered_json rows = ordered_json::array();
      for (std::size_t I = 0; I < L.sources.size(); ++I) {
        ordered_json entries = ordered_json::array();
        for (const auto& op : L.matrix[I])
          entries.push_back(op.to_string(ctx.names));
        rows.push_back({{"source", labels_json(L.sources[I])}, {"entries", std::move(entries)}});
      }
      ordered_json targets = ordered_json::array();
      for (const auto& T : L.targets)
        targets.push_back(labels_json(T));
      ordered_json diag = ordered_json::array();
      for (const auto& d : L.diagonal)
        diag.push_back({{"source", labels_json(L.sources[d.row])},
                        {"target", labels_json(L.targets[d.column])},
                        {"constant", to_pq(d.constant)}});
      levels.push_back({{"level", L.level},
                        {"targets", std::move(targets)},
                        {"rows", std::move(rows)},
                        {"x_block", std::move(diag)}});
    }
    const bool diag = x_blocks_diagonal(C);
    ok = ok && diag;
    per_k.push_back({{"k", k}, {"x_blocks_diagonal", diag}, {"levels", std::move(levels)}});
  }
  ordered_json out{{"status", ok ? "ok" : "inconsistent"}, {"complexes", std::move(per_k)}};
  if (!ok)
    out["diagnostic"] = "an X block is not diagonal";
  return out;
}

ordered_json stage_verify(Context& ctx)
{
  const AdaptedBasis& b = *ctx.basis;
  const std::size_t n = b.nvars();
  const unsigned samples = ctx.cfg.samples;
  bool ok = true;

  ordered_json per_k = ordered_json::array();
  for (unsigned k : ctx.cfg.k) {
    const SpencerComplex C = spencer_matrices(b, k);
    const bool complex_ok = verify_complex(C);
    ok = ok && complex_ok;
    ordered_json dd = ordered_json::array();
    for (std::size_t l = 1; l < n; ++l) {
      unsigned zero = 0;
      for (unsigned s = 0; s < samples; ++s) {
        const CochainTuple u = ctx.sampler.cochain(C, l - 1);
        zero += dual_apply(C, l + 1, dual_apply(C, l, u)).is_zero() ? 1 : 0;
      }
      ok = ok && zero == samples;
      dd.push_back({{"level", l}, {"samples", samples}, {"zero", zero}});
    }
    ordered_json entry{{"k", k}, {"complex", complex_ok}, {"dual_dd", std::move(dd)}};
    if (b.weight.rank() == n && k >= 1) {
      ordered_json slices = ordered_json::array();
      bool exact = true;
      for (std::size_t l = 0; l <= n; ++l)
        for (const auto& nu : slice_weights(C, l, ctx.cfg.slice_bound)) {
          const SliceDims d = graded_slice_oracle(C, l, nu);
          exact = exact && d.exact();
          slices.push_back({{"level", l}, {"nu", to_pq(nu)}, {"space", d.space},
                            {"kernel", d.kernel}, {"image", d.image}});
        }
      ok = ok && exact;
      entry["slices_exact"] = exact;
      entry["slices"] = std::move(slices);
    }
    per_k.push_back(std::move(entry));
  }

  ordered_json euler = ordered_json::array();
  for (const Rational& c : {Rational(1), Rational(1, 2), Rational(5, 6)}) {
    const DifferentialOperator op = shifted(b.chi, c);
    unsigned passed = 0;
    for (unsigned s = 0; s < samples; ++s) {
      const Polynomial psi = ctx.sampler.polynomial();
      const bool left = op_apply(op, euler_solve(c, psi, b.weight)) == psi;
      const bool right = euler_solve(c, op_apply(op, psi), b.weight) == psi;
      passed += left && right ? 1 : 0;
    }
    ok = ok && passed == samples;
    euler.push_back({{"c", to_pq(c)}, {"samples", samples}, {"round_trips", passed}});
  }

  ordered_json out{{"status", ok ? "ok" : "inconsistent"},
                   {"complexes", std::move(per_k)},
                   {"euler", std::move(euler)}};
  if (!ok)
    out["diagnostic"] = "an exactness or round-trip check failed";
  return out;
}

ordered_json stage_ext_witness(Context& ctx)
{
  const AdaptedBasis& b = *ctx.basis;
  const std::size_t n = b.nvars();
  const unsigned samples = ctx.cfg.samples;
  bool ok = true, refused = false;
  ordered_json per_k = ordered_json::array();
  for (unsigned k : ctx.cfg.k) {
    if (k == 0) {
      refused = true;
      per_k.push_back({{"k", 0}, {"status", "refused"}, {"diagnostic", kExtWitnessRefusal}});
      continue;
    }
    const SpencerComplex C = spencer_matrices(b, k);
    ordered_json levels = ordered_json::array();
    for (std::size_t l = 0; l <= n; ++l) {
      unsigned verified = 0, rejected = 0, mismatched = 0;
      const unsigned count = l == 0 ? 1 : samples;
      for (unsigned s = 0; s < count; ++s) {
        const CochainTuple z =
            l == 0 ? zero_cochain(C, 0) : dual_apply(C, l, ctx.sampler.cochain(C, l - 1));
        switch (ext_witness(C, l, z).status) {
        case ExtWitness::Status::Witness: ++verified; break;
        case ExtWitness::Status::CocycleRejected: ++rejected; break;
        case ExtWitness::Status::Mismatch: ++mismatched; break;
        }
      }
      ok = ok && verified == count;
      levels.push_back({{"level", l}, {"coboundaries", count}, {"verified", verified},
                        {"rejected", rejected}, {"mismatched", mismatched}});
    }
    // Every top-level cochain is a cocycle, so random ones must lift as well.
    unsigned top = 0;
    for (unsigned s = 0; s < samples; ++s)
      top += ext_witness(C, n, ctx.sampler.cochain(C, n)).status == ExtWitness::Status::Witness ? 1 : 0;
    ok = ok && top == samples;
    per_k.push_back({{"k", k}, {"status", "ok"}, {"levels", std::move(levels)},
                     {"top_level_random", {{"samples", samples}, {"verified", top}}}});
  }
  ordered_json out{{"status", refused ? "refused" : ok ? "ok" : "inconsistent"},
                   {"witnesses", std::move(per_k)}};
  if (refused)
    out["diagnostic"] = kExtWitnessRefusal;
  else if (!ok)
    out["diagnostic"] = "a coboundary had no verified preimage";
  return out;
}

ordered_json stage_annihilator(Context& ctx)
{
  const AdaptedBasis& b = *ctx.basis;
  bool ok = true;
  ordered_json per_k = ordered_json::array();
  for (unsigned k : ctx.cfg.k) {
    const auto ops = ann1_generators(b, k);
    std::vector<std::string> labels{"chi+" + std::to_string(k)};
    for (std::size_t i = 0; i < b.deltas.size(); ++i)
      labels.push_back("delta_" + std::to_string(i + 2));
    ordered_json table = ordered_json::array();
    if (k == 0) {
      for (std::size_t i = 0; i < ops.size(); ++i)
        table.push_back({{"generator", labels[i]}, {"operator", ops[i].to_string(ctx.names)},
                         {"annihilates", nullptr}});
      per_k.push_back({{"k", 0}, {"table", std::move(table)},
                       {"note", "1/f^0 = 1 is not a negative power; no check performed"}});
      continue;
    }
    const std::vector<bool> kills = annihilation_check(ops, b.f, k);
    for (std::size_t i = 0; i < ops.size(); ++i) {
      ok = ok && kills[i];
      table.push_back({{"generator", labels[i]}, {"operator", ops[i].to_string(ctx.names)},
                       {"annihilates", static_cast<bool>(kills[i])}});
    }
    per_k.push_back({{"k", k}, {"table", std::move(table)}});
  }
  ordered_json out{{"status", ok ? "ok" : "inconsistent"}, {"annihilators", std::move(per_k)}};
  if (!ok)
    out["diagnostic"] = "a generator does not annihilate 1/f^k";
  return out;
}

// ---------------------------------------------------------------- pipeline

enum Stage { Wqh, Derivations, Basis, Inequalities, Spencer, Verify, ExtW, Annihilator };

std::vector<Stage> stages_for(const std::string& command)
{
  if (command == "wqh")
    return {Wqh};
  if (command == "logder")
    return {Wqh, Derivations};
  if (command == "basis")
    return {Wqh, Basis, Inequalities};
  if (command == "spencer")
    return {Wqh, Basis, Spencer};
  if (command == "verify")
    return {Wqh, Basis, Verify};
  if (command == "ext-witness")
    return {Wqh, Basis, ExtW};
  if (command == "annihilator")
    return {Wqh, Basis, Annihilator};
  if (command == "all")
    return {Wqh, Derivations, Basis, Inequalities, Spencer, Verify, ExtW, Annihilator};
  throw InvalidArgument("unknown command '" + command + "'");
}

const char* stage_name(Stage s)
{
  switch (s) {
  case Wqh: return "wqh";
  case Derivations: return "derivations";
  case Basis: return "basis";
  case Inequalities: return "inequalities";
  case Spencer: return "spencer";
  case Verify: return "verify";
  case ExtW: return "ext_witness";
  case Annihilator: return "annihilator";
  }
  return "";
}

ordered_json header(const std::string& command)
{
  return {{"tool", "lfd"}, {"version", kVersion}, {"command", command}};
}

Report input_error(const std::string& command, const std::string& message)
{
  Report r;
  r.data = header(command);
  r.data["status"] = "input_error";
  r.data["exit_status"] = 2;
  r.data["error"] = message;
  r.exit_status = 2;
  return r;
}

int severity(const std::string& status)
{
  if (status == "refused")
    return 2;
  if (status == "inconsistent")
    return 1;
  return 0;
}

void render_text(std::ostringstream& os, const ordered_json& v, int indent)
{
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const ordered_json& x) {
    return x.is_string() ? x.get<std::string>() : x.dump();
  };
  auto flat = [&](const ordered_json& a) {
    return std::all_of(a.begin(), a.end(), [](const ordered_json& x) {
      return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const ordered_json& y) {
        return y.is_primitive();
      }));
    });
  };
  auto inline_array = [&](const ordered_json& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i)
        s += ", ";
      s += a[i].is_array() ? a[i].dump() : scalar(a[i]);
    }
    return s + "]";
  };
  if (v.is_object()) {
    for (const auto& [key, x] : v.items()) {
      if (x.is_primitive())
        os << pad << key << ": " << scalar(x) << "\n";
      else if (x.is_array() && flat(x))
        os << pad << key << ": " << inline_array(x) << "\n";
      else {
        os << pad << key << ":\n";
        render_text(os, x, indent + 1);
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object()) {
        os << pad << "-\n";
        render_text(os, x, indent + 1);
      } else if (x.is_array() && flat(x)) {
        os << pad << "- " << inline_array(x) << "\n";
      } else if (x.is_array()) {
        os << pad << "-\n";
        render_text(os, x, indent + 1);
      } else {
        os << pad << "- " << scalar(x) << "\n";
      }
    }
  }
}

} // namespace

// ---------------------------------------------------------------- public

SessionConfig config_from_json(const json& j)
{
  if (!j.is_object())
    throw InvalidArgument("config must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!kKnownKeys.count(key))
      throw InvalidArgument("unknown config key '" + key + "'");
  for (const char* key : {"vars", "f", "weights"})
    if (!j.contains(key))
      throw InvalidArgument(std::string("config key '") + key + "' is required");

  SessionConfig c;
  const json& vars = j.at("vars");
  if (!vars.is_array())
    throw InvalidArgument("config key 'vars' must be an array of identifiers");
  for (const auto& v : vars) {
    if (!v.is_string())
      throw InvalidArgument("config key 'vars' must be an array of identifiers");
    c.vars.push_back(v.get<std::string>());
  }
  validate_variable_names(c.vars);

  if (!j.at("f").is_string())
    throw InvalidArgument("config key 'f' must be a polynomial string");
  c.f = parse_polynomial(j.at("f").get<std::string>(), c.vars);

  const json& w = j.at("weights");
  if (!w.is_array())
    throw InvalidArgument("config key 'weights' must be an array of \"p/q\" strings");
  for (const auto& x : w)
    c.weights.push_back(read_rational(x, "weights"));
  if (c.weights.size() != c.vars.size())
    throw DimensionMismatch("weights: expected " + std::to_string(c.vars.size()) + " entries, got " +
                            std::to_string(c.weights.size()));
  (void)WeightVector(c.weights);

  if (j.contains("k")) {
    const json& k = j.at("k");
    c.k.clear();
    if (k.is_array()) {
      for (const auto& x : k)
        c.k.push_back(read_unsigned(x, "k", kMaxK));
    } else {
      c.k.push_back(read_unsigned(k, "k", kMaxK));
    }
    if (c.k.empty())
      throw InvalidArgument("config key 'k' must list at least one value");
  }
  if (j.contains("degree_bound"))
    c.degree_bound = read_unsigned(j.at("degree_bound"), "degree_bound", kMaxDegree);
  if (j.contains("seed")) {
    const json& s = j.at("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
      throw InvalidArgument("config key 'seed' must be a nonnegative integer");
    c.seed = s.get<std::uint64_t>();
  }
  if (j.contains("format")) {
    const json& f = j.at("format");
    if (f == "text")
      c.format = OutputFormat::Text;
    else if (f == "json")
      c.format = OutputFormat::Json;
    else
      throw InvalidArgument("config key 'format' must be \"text\" or \"json\"");
  }
  if (j.contains("samples"))
    c.samples = read_unsigned(j.at("samples"), "samples", kMaxSamples);
  if (j.contains("slice_bound")) {
    c.slice_bound = read_rational(j.at("slice_bound"), "slice_bound");
    if (sgn(c.slice_bound) < 0)
      throw InvalidArgument("config key 'slice_bound' must be nonnegative");
  }
  return c;
}

ordered_json config_to_json(const SessionConfig& c)
{
  ordered_json k = ordered_json::array();
  for (auto x : c.k)
    k.push_back(x);
  return {{"vars", c.vars},
          {"f", c.f.to_string(c.vars)},
          {"weights", rationals_json(c.weights)},
          {"k", std::move(k)},
          {"degree_bound", c.degree_bound},
          {"seed", c.seed},
          {"format", c.format == OutputFormat::Json ? "json" : "text"},
          {"samples", c.samples},
          {"slice_bound", to_pq(c.slice_bound)}};
}

const std::vector<std::string>& session_commands()
{
  static const std::vector<std::string> commands{"wqh", "logder", "basis", "spencer",
                                                 "verify", "ext-witness", "annihilator", "all"};
  return commands;
}

Report run(const std::string& command, const SessionConfig& config)
{
  std::vector<Stage> stages;
  try {
    stages = stages_for(command);
    (void)WeightVector(config.weights);
    if (config.weights.size() != config.vars.size() || config.f.nvars() != config.vars.size())
      throw DimensionMismatch("config: f, vars and weights disagree on the number of variables");
  } catch (const Error& e) {
    return input_error(command, e.what());
  }

  Context ctx{config, config.vars, std::nullopt, std::nullopt, {},
              Sampler(config.seed, config.vars.size(), config.degree_bound)};
  Report r;
  r.data = header(command);
  r.data["config"] = config_to_json(config);
  ordered_json out = ordered_json::object();
  int worst = 0;
  try {
    for (Stage s : stages) {
      ordered_json st;
      const bool needs_weight = s != Wqh;
      const bool needs_basis = s != Wqh && s != Derivations && s != Basis;
      if (needs_weight && !ctx.weight)
        st = skipped("f is not weakly quasi-homogeneous for the given weights");
      else if (needs_basis && !ctx.basis)
        st = skipped("no adapted basis: " + ctx.basis_failure);
      else if (s == Wqh)
        st = stage_wqh(ctx);
      else if (s == Derivations)
        st = stage_derivations(ctx);
      else if (s == Basis)
        st = stage_basis(ctx);
      else if (s == Inequalities)
        st = stage_inequalities(ctx);
      else if (s == Spencer)
        st = stage_spencer(ctx);
      else if (s == Verify)
        st = stage_verify(ctx);
      else if (s == ExtW)
        st = stage_ext_witness(ctx);
      else
        st = stage_annihilator(ctx);
      worst = std::max(worst, severity(st.at("status").get<std::string>()));
      out[stage_name(s)] = std::move(st);
    }
  } catch (const InvalidArgument& e) {
    return input_error(command, e.what());
  } catch (const DimensionMismatch& e) {
    return input_error(command, e.what());
  } catch (const Error& e) {
    out["failure"] = {{"status", "inconsistent"}, {"diagnostic", e.what()}};
    worst = std::max(worst, 1);
  }
  r.data["stages"] = std::move(out);
  r.exit_status = worst;
  r.data["status"] = worst == 0 ? "ok" : worst == 1 ? "inconsistent" : "refused";
  r.data["exit_status"] = worst;
  return r;
}

Report run(const std::string& command, const json& config)
{
  SessionConfig c;
  try {
    c = config_from_json(config);
  } catch (const Error& e) {
    return input_error(command, e.what());
  }
  return run(command, c);
}

std::string render(const Report& r, OutputFormat format)
{
  if (format == OutputFormat::Json)
    return r.data.dump(2) + "\n";
  std::ostringstream os;
  render_text(os, r.data, 0);
  return os.str();
}

} // namespace lfd
