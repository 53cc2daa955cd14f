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

#include "lfd/groebner.hpp"

#include "lfd/errors.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace lfd {

std::strong_ordering MonomialOrder::compare_monomials(const Monomial& a, const Monomial& b) const
{
  auto degrevlex = [](const Monomial& x, const Monomial& y) {
    const auto dx = x.degree(), dy = y.degree();
    if (dx != dy)
      return dx <=> dy;
    for (std::size_t i = x.nvars(); i-- > 0;)
      if (x[i] != y[i])
        return y[i] <=> x[i];
    return std::strong_ordering::equal;
  };
  switch (kind) {
  case Kind::Lex:
    return a <=> b;
  case Kind::Weighted: {
    if (auto c = compare(dot(a, weights), dot(b, weights)); c != 0)
      return c;
    return degrevlex(a, b);
  }
  case Kind::DegRevLex:
  default:
    return degrevlex(a, b);
  }
}

std::strong_ordering MonomialOrder::compare_terms(const Monomial& a, std::size_t pa,
                                                  const Monomial& b, std::size_t pb) const
{
  const bool block_a = pa >= eliminate, block_b = pb >= eliminate;
  if (block_a != block_b)
    return block_a ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = compare_monomials(a, b); c != 0)
    return c;
  return pb <=> pa;
}

namespace {

struct Term {
  Monomial mon;
  std::size_t pos;
  Rational coef;
};

// Terms in increasing module order: the leading term is back().
using SparseVec = std::vector<Term>;

class Engine {
public:
  Engine(MonomialOrder order, std::size_t rank, std::size_t nvars)
      : m_order(std::move(order)), m_rank(rank), m_nvars(nvars) {}

  std::strong_ordering cmp(const Term& a, const Term& b) const
  {
    return m_order.compare_terms(a.mon, a.pos, b.mon, b.pos);
  }

  SparseVec to_sparse(const ModuleElement& e) const
  {
    SparseVec v;
    for (std::size_t p = 0; p < e.size(); ++p)
      for (const auto& [m, c] : e[p].terms())
        v.push_back({m, p, c});
    std::sort(v.begin(), v.end(), [this](const Term& a, const Term& b) { return cmp(a, b) < 0; });
    return v;
  }

  ModuleElement to_module(const SparseVec& v) const
  {
    ModuleElement e(m_rank, Polynomial(m_nvars));
    for (const auto& t : v)
      e[t.pos].add_term(t.mon, t.coef);
    return e;
  }

  // h - c * m * g
  SparseVec axpy(const SparseVec& h, const Rational& c, const Monomial& m, const SparseVec& g) const
  {
    SparseVec out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < h.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(h[i++]);
        continue;
      }
      Term shifted{g[j].mon * m, g[j].pos, Rational(-c * g[j].coef)};
      if (i == h.size()) {
        out.push_back(std::move(shifted));
        ++j;
        continue;
      }
      const auto order = cmp(h[i], shifted);
      if (order < 0) {
        out.push_back(h[i++]);
      } else if (order > 0) {
        out.push_back(std::move(shifted));
        ++j;
      } else {
        Rational sum = h[i].coef + shifted.coef;
        if (sum != 0)
          out.push_back({h[i].mon, h[i].pos, std::move(sum)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  static void make_monic(SparseVec& v)
  {
    if (v.empty())
      return;
    Rational inv = 1 / v.back().coef;
    for (auto& t : v)
      t.coef *= inv;
  }

  std::optional<std::size_t> find_reducer(const Term& t, const std::vector<SparseVec>& G,
                                          std::optional<std::size_t> skip = std::nullopt) const
  {
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (skip && *skip == i)
        continue;
      const Term& lead = G[i].back();
      if (lead.pos == t.pos && lead.mon.divides(t.mon))
        return i;
    }
    return std::nullopt;
  }

  // Full reduction of h by G. When `stop_below` is set, stops as soon as the
  // leading term's position is at or above it (the remainder then holds the
  // untouched rest). Quotients are accumulated when requested.
  SparseVec reduce(SparseVec h, const std::vector<SparseVec>& G,
                   std::vector<Polynomial>* quotients,
                   std::optional<std::size_t> stop_at_position = std::nullopt,
                   std::optional<std::size_t> skip = std::nullopt) const
  {
    SparseVec remainder;  // collected in decreasing order
    while (!h.empty()) {
      if (stop_at_position && h.back().pos >= *stop_at_position)
        break;
      const Term& t = h.back();
      if (auto r = find_reducer(t, G, skip)) {
        const Term& lead = G[*r].back();
        Rational q = t.coef / lead.coef;
        Monomial mq = t.mon / lead.mon;
        if (quotients)
          (*quotients)[*r].add_term(mq, q);
        h = axpy(h, q, mq, G[*r]);
      } else {
        remainder.push_back(std::move(h.back()));
        h.pop_back();
      }
    }
    // remainder terms are all greater than what is left in h
    h.insert(h.end(), std::make_move_iterator(remainder.rbegin()),
             std::make_move_iterator(remainder.rend()));
    return h;
  }

  SparseVec spoly(const SparseVec& f, const SparseVec& g) const
  {
    const Term& lf = f.back();
    const Term& lg = g.back();
    Monomial l = lcm(lf.mon, lg.mon);
    SparseVec scaled_f = axpy(SparseVec{}, Rational(-1 / lf.coef), l / lf.mon, f);
    return axpy(scaled_f, Rational(1 / lg.coef), l / lg.mon, g);
  }

  std::vector<SparseVec> run(std::vector<SparseVec> G) const
  {
    std::set<std::tuple<std::uint64_t, std::size_t, std::size_t>> pairs;
    auto add_pairs = [&](std::size_t j) {
      for (std::size_t i = 0; i < j; ++i) {
        const Term& a = G[i].back();
        const Term& b = G[j].back();
        if (a.pos != b.pos)
          continue;
        Monomial l = lcm(a.mon, b.mon);
        // Product criterion, valid for ideals only.
        if (m_rank == 1 && l == a.mon * b.mon)
          continue;
        pairs.emplace(l.degree(), i, j);
      }
    };
    for (std::size_t j = 0; j < G.size(); ++j)
      add_pairs(j);
    auto pending = [&](std::size_t a, std::size_t b) {
      if (a > b)
        std::swap(a, b);
      const Term& ta = G[a].back();
      const Term& tb = G[b].back();
      if (ta.pos != tb.pos)
        return false;
      return pairs.count({lcm(ta.mon, tb.mon).degree(), a, b}) > 0;
    };
    // Chain criterion: some G[k] with leading term dividing lcm(i, j) and
    // neither (i, k) nor (j, k) still pending.
    auto chained = [&](std::size_t i, std::size_t j) {
      const Term& a = G[i].back();
      const Monomial l = lcm(a.mon, G[j].back().mon);
      for (std::size_t k = 0; k < G.size(); ++k) {
        if (k == i || k == j)
          continue;
        const Term& c = G[k].back();
        if (c.pos == a.pos && c.mon.divides(l) && !pending(i, k) && !pending(j, k))
          return true;
      }
      return false;
    };
    while (!pairs.empty()) {
      auto [deg, i, j] = *pairs.begin();
      pairs.erase(pairs.begin());
      if (chained(i, j))
        continue;
      SparseVec r = reduce(spoly(G[i], G[j]), G, nullptr);
      if (r.empty())
        continue;
      make_monic(r);
      G.push_back(std::move(r));
      add_pairs(G.size() - 1);
    }
    return interreduce(std::move(G));
  }

  std::vector<SparseVec> interreduce(std::vector<SparseVec> G) const
  {
    std::vector<SparseVec> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
      const Term& li = G[i].back();
      bool redundant = false;
      for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
        if (j == i)
          continue;
        const Term& lj = G[j].back();
        if (lj.pos != li.pos || !lj.mon.divides(li.mon))
          continue;
        redundant = lj.mon != li.mon || j < i;
      }
      if (!redundant)
        minimal.push_back(G[i]);
    }
    std::vector<SparseVec> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      SparseVec lead_only{minimal[i].back()};
      SparseVec tail(minimal[i].begin(), minimal[i].end() - 1);
      SparseVec t = reduce(std::move(tail), minimal, nullptr, std::nullopt, i);
      t.push_back(lead_only.back());
      make_monic(t);
      reduced.push_back(std::move(t));
    }
    std::sort(reduced.begin(), reduced.end(),
              [this](const SparseVec& a, const SparseVec& b) { return cmp(a.back(), b.back()) < 0; });
    return reduced;
  }

private:
  MonomialOrder m_order;
  std::size_t m_rank;
  std::size_t m_nvars;
};

// Validates shape and returns (rank, nvars).
std::pair<std::size_t, std::size_t> shape_of(const std::vector<ModuleElement>& gens)
{
  if (gens.empty())
    throw InvalidArgument("need at least one generator");
  const std::size_t rank = gens.front().size();
  if (rank == 0)
    throw InvalidArgument("module elements must have positive rank");
  const std::size_t nvars = gens.front().front().nvars();
  for (const auto& g : gens) {
    if (g.size() != rank)
      throw DimensionMismatch(rank, g.size());
    for (const auto& p : g)
      if (p.nvars() != nvars)
        throw DimensionMismatch(nvars, p.nvars());
  }
  return {rank, nvars};
}

void check_element(const ModuleElement& e, std::size_t rank, std::size_t nvars)
{
  if (e.size() != rank)
    throw DimensionMismatch(rank, e.size());
  for (const auto& p : e)
    if (p.nvars() != nvars)
      throw DimensionMismatch(nvars, p.nvars());
}

struct Augmented {
  GroebnerBasis basis;
  std::size_t rank;
};

// Groebner basis of {(g_i, e_i)} in O^(r+m) with the first r positions
// eliminated.
Augmented augmented_basis(const std::vector<ModuleElement>& gens)
{
  const auto [rank, nvars] = shape_of(gens);
  const std::size_t m = gens.size();
  std::vector<ModuleElement> aug;
  aug.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    ModuleElement e(gens[i]);
    for (std::size_t j = 0; j < m; ++j)
      e.push_back(Polynomial(nvars, Rational(i == j ? 1 : 0)));
    aug.push_back(std::move(e));
  }
  MonomialOrder order = MonomialOrder::degrevlex();
  order.eliminate = rank;
  return {buchberger(aug, order), rank};
}

} // namespace

std::optional<LeadTerm> lead_term(const ModuleElement& e, const MonomialOrder& order)
{
  std::optional<LeadTerm> best;
  for (std::size_t p = 0; p < e.size(); ++p)
    for (const auto& [m, c] : e[p].terms())
      if (!best || order.compare_terms(m, p, best->monomial, best->position) > 0)
        best = LeadTerm{m, p, c};
  return best;
}

GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, const MonomialOrder& order)
{
  const auto [rank, nvars] = shape_of(gens);
  Engine engine(order, rank, nvars);
  std::vector<SparseVec> G;
  for (const auto& g : gens) {
    SparseVec v = engine.to_sparse(g);
    if (v.empty())
      continue;
    Engine::make_monic(v);
    G.push_back(std::move(v));
  }
  GroebnerBasis out{{}, order, rank, nvars};
  if (G.empty())
    return out;
  for (const auto& v : engine.run(std::move(G)))
    out.generators.push_back(engine.to_module(v));
  return out;
}

NormalForm normal_form(const ModuleElement& e, const GroebnerBasis& G)
{
  check_element(e, G.rank, G.nvars);
  Engine engine(G.order, G.rank, G.nvars);
  std::vector<SparseVec> gens;
  for (const auto& g : G.generators)
    gens.push_back(engine.to_sparse(g));
  std::vector<Polynomial> quotients(gens.size(), Polynomial(G.nvars));
  SparseVec r = engine.reduce(engine.to_sparse(e), gens, &quotients);
  return {engine.to_module(r), std::move(quotients)};
}

bool satisfies_buchberger_criterion(const GroebnerBasis& G)
{
  Engine engine(G.order, G.rank, G.nvars);
  std::vector<SparseVec> gens;
  for (const auto& g : G.generators) {
    gens.push_back(engine.to_sparse(g));
    if (gens.back().empty())
      return false;
  }
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (gens[i].back().pos != gens[j].back().pos)
        continue;
      if (!engine.reduce(engine.spoly(gens[i], gens[j]), gens, nullptr).empty())
        return false;
    }
  return true;
}

std::vector<ModuleElement> module_syzygies(const std::vector<ModuleElement>& gens)
{
  const Augmented aug = augmented_basis(gens);
  const MonomialOrder& order = aug.basis.order;
  std::vector<ModuleElement> syz;
  for (const auto& g : aug.basis.generators) {
    auto lead = lead_term(g, order);
    if (!lead || lead->position < aug.rank)
      continue;
    syz.emplace_back(g.begin() + static_cast<std::ptrdiff_t>(aug.rank), g.end());
  }
  return syz;
}

std::vector<ModuleElement> syzygy_basis(const std::vector<Polynomial>& g)
{
  if (g.empty())
    throw InvalidArgument("syzygy_basis of an empty list");
  if (std::all_of(g.begin(), g.end(), [](const Polynomial& p) { return p.is_zero(); }))
    throw InvalidArgument("syzygy_basis: all entries are zero");
  std::vector<ModuleElement> gens;
  gens.reserve(g.size());
  for (const auto& p : g)
    gens.push_back(ModuleElement{p});
  return module_syzygies(gens);
}

std::optional<std::vector<Polynomial>> lift(const ModuleElement& target,
                                            const std::vector<ModuleElement>& gens)
{
  const auto [rank, nvars] = shape_of(gens);
  check_element(target, rank, nvars);
  const Augmented aug = augmented_basis(gens);
  const std::size_t m = gens.size();
  Engine engine(aug.basis.order, rank + m, nvars);
  std::vector<SparseVec> G;
  for (const auto& g : aug.basis.generators)
    G.push_back(engine.to_sparse(g));
  ModuleElement padded(target);
  padded.resize(rank + m, Polynomial(nvars));
  SparseVec h = engine.reduce(engine.to_sparse(padded), G, nullptr, rank);
  if (!h.empty() && h.back().pos < rank)
    return std::nullopt;
  std::vector<Polynomial> coeffs(m, Polynomial(nvars));
  for (const auto& t : h)
    coeffs[t.pos - rank].add_term(t.mon, -t.coef);
  return coeffs;
}

ModuleElement combine(const std::vector<Polynomial>& coeffs, const std::vector<ModuleElement>& gens)
{
  if (coeffs.size() != gens.size())
    throw DimensionMismatch(gens.size(), coeffs.size());
  const auto [rank, nvars] = shape_of(gens);
  ModuleElement out(rank, Polynomial(nvars));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t p = 0; p < rank; ++p)
      out[p] += coeffs[j] * gens[j][p];
  return out;
}

bool is_zero(const ModuleElement& e)
{
  return std::all_of(e.begin(), e.end(), [](const Polynomial& p) { return p.is_zero(); });
}

} // namespace lfd
