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

#include "lfd/spencer.hpp"

#include "lfd/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lfd {

namespace {

DifferentialOperator scaled(const DifferentialOperator& op, const Rational& c)
{
  DifferentialOperator out(op.nvars());
  for (const auto& [beta, p] : op.terms())
    out.add_term(beta, c * p);
  return out;
}

std::map<WedgeIndex, std::size_t> index_of(const std::vector<WedgeIndex>& basis)
{
  std::map<WedgeIndex, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i)
    idx.emplace(basis[i], i);
  return idx;
}

struct BracketTerm {
  std::size_t label;
  Polynomial coefficient;
};

Rational shift_of(const AdaptedBasis& b, const WedgeIndex& I)
{
  Rational s(0);
  for (auto label : I)
    if (label >= 2)
      s += b.nus[label - 2];
  return s;
}

void enumerate_up_to(const WeightVector& w, std::size_t var, const Rational& budget,
                     Rational used, std::set<Rational>& out)
{
  if (var == w.size()) {
    out.insert(used);
    return;
  }
  for (Rational acc = used; acc <= budget; acc += w[var])
    enumerate_up_to(w, var + 1, budget, acc, out);
}

void enumerate_exact(const WeightVector& w, std::size_t var, const Rational& remaining,
                     std::vector<Exponent>& exps, std::vector<Monomial>& out)
{
  if (var + 1 == w.size()) {
    Rational e = remaining / w[var];
    if (is_integer(e)) {
      exps[var] = static_cast<Exponent>(e.get_num().get_ui());
      out.emplace_back(exps);
    }
    return;
  }
  Rational rem = remaining;
  for (Exponent e = 0; sgn(rem) >= 0; ++e, rem -= w[var]) {
    exps[var] = e;
    enumerate_exact(w, var + 1, rem, exps, out);
  }
  exps[var] = 0;
}

} // namespace

std::vector<WedgeIndex> wedge_basis(std::size_t n, std::size_t level)
{
  std::vector<WedgeIndex> out;
  if (level > n)
    return out;
  WedgeIndex I(level);
  for (std::size_t i = 0; i < level; ++i)
    I[i] = i + 1;
  while (true) {
    out.push_back(I);
    std::size_t k = level;
    while (k-- > 0)
      if (I[k] < n - level + k + 1)
        break;
    if (k == static_cast<std::size_t>(-1))
      break;
    ++I[k];
    for (std::size_t j = k + 1; j < level; ++j)
      I[j] = I[j - 1] + 1;
  }
  return out;
}

SpencerComplex spencer_matrices(const AdaptedBasis& b, unsigned k)
{
  const std::size_t n = b.nvars();
  if (b.deltas.size() + 1 != n || b.nus.size() + 1 != n)
    throw InvalidArgument("spencer_matrices: basis needs n - 1 fields with weights");
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      auto it = b.brackets.find({i, j});
      if (it == b.brackets.end() || it->second.size() + 1 != n)
        throw InvalidArgument("spencer_matrices: missing bracket table entry for (" +
                              std::to_string(i + 2) + ", " + std::to_string(j + 2) + ")");
    }

  // tilde[label], label 1..n
  std::vector<DifferentialOperator> tilde(n + 1);
  tilde[1] = shifted(b.chi, Rational(k));
  for (std::size_t i = 2; i <= n; ++i)
    tilde[i] = DifferentialOperator(b.deltas[i - 2]);

  // [tilde_a, tilde_b] in the tilde basis, a < b
  auto bracket = [&](std::size_t a, std::size_t c) {
    std::vector<BracketTerm> terms;
    if (a == 1) {
      terms.push_back({c, Polynomial(n, b.nus[c - 2])});
      return terms;
    }
    const auto& coeffs = b.brackets.at({a - 2, c - 2});
    for (std::size_t l = 0; l < coeffs.size(); ++l)
      if (!coeffs[l].is_zero())
        terms.push_back({l + 2, coeffs[l]});
    return terms;
  };

  SpencerComplex C{b, k, {}};
  for (std::size_t l = 1; l <= n; ++l) {
    SpencerLevel L;
    L.level = l;
    L.sources = wedge_basis(n, l);
    L.targets = wedge_basis(n, l - 1);
    const auto target_idx = index_of(L.targets);
    L.matrix.assign(L.sources.size(), std::vector<DifferentialOperator>(L.targets.size(), DifferentialOperator(n)));
    for (std::size_t r = 0; r < L.sources.size(); ++r) {
      const WedgeIndex& I = L.sources[r];
      for (std::size_t p = 0; p < l; ++p) {
        WedgeIndex T(I);
        T.erase(T.begin() + static_cast<std::ptrdiff_t>(p));
        const Rational sign(p % 2 == 0 ? 1 : -1);
        L.matrix[r][target_idx.at(T)] += scaled(tilde[I[p]], sign);
      }
      for (std::size_t p = 0; p < l; ++p)
        for (std::size_t q = p + 1; q < l; ++q) {
          WedgeIndex rest;
          for (std::size_t t = 0; t < l; ++t)
            if (t != p && t != q)
              rest.push_back(I[t]);
          // positions are 1-based in the sign (-1)^(i+j)
          const int sign = (p + q) % 2 == 0 ? 1 : -1;
          for (const auto& term : bracket(I[p], I[q])) {
            if (std::find(rest.begin(), rest.end(), term.label) != rest.end())
              continue;
            const auto before = std::count_if(rest.begin(), rest.end(),
                                              [&](std::size_t x) { return x < term.label; });
            WedgeIndex T(rest);
            T.insert(T.begin() + before, term.label);
            const int s = before % 2 == 0 ? sign : -sign;
            L.matrix[r][target_idx.at(T)] += DifferentialOperator(Rational(s) * term.coefficient);
          }
        }
    }
    for (std::size_t r = 0; r < L.sources.size(); ++r)
      (L.sources[r].front() == 1 ? L.r_rows : L.s_rows).push_back(r);
    for (std::size_t c = 0; c < L.targets.size(); ++c)
      (!L.targets[c].empty() && L.targets[c].front() == 1 ? L.r_cols : L.s_cols).push_back(c);
    for (auto r : L.r_rows) {
      WedgeIndex tail(L.sources[r].begin() + 1, L.sources[r].end());
      L.diagonal.push_back({r, target_idx.at(tail), Rational(Rational(k) - shift_of(b, tail))});
    }
    C.levels.push_back(std::move(L));
  }
  return C;
}

bool verify_complex(const SpencerComplex& C)
{
  for (std::size_t l = 2; l <= C.n(); ++l) {
    const auto& A = C.level(l).matrix;
    const auto& B = C.level(l - 1).matrix;
    const std::size_t cols = C.level(l - 1).targets.size();
    for (const auto& row : A)
      for (std::size_t K = 0; K < cols; ++K) {
        DifferentialOperator sum(C.n());
        for (std::size_t J = 0; J < row.size(); ++J)
          if (!row[J].is_zero() && !B[J][K].is_zero())
            sum += op_multiply(row[J], B[J][K]);
        if (!sum.is_zero())
          return false;
      }
  }
  return true;
}

bool x_blocks_diagonal(const SpencerComplex& C)
{
  for (const auto& L : C.levels) {
    if (L.diagonal.size() != L.r_rows.size() || L.r_rows.size() != L.s_cols.size())
      return false;
    for (const auto& d : L.diagonal)
      for (auto c : L.s_cols) {
        const auto& entry = L.matrix[d.row][c];
        if (c == d.column ? entry != shifted(C.basis.chi, d.constant) : !entry.is_zero())
          return false;
      }
  }
  return true;
}

bool CochainTuple::is_zero() const
{
  return std::all_of(components.begin(), components.end(), [](const Polynomial& p) { return p.is_zero(); });
}

CochainTuple zero_cochain(const SpencerComplex& C, std::size_t level)
{
  return {level, std::vector<Polynomial>(C.wedges(level).size(), Polynomial(C.n()))};
}

CochainTuple dual_apply(const SpencerComplex& C, std::size_t level, const CochainTuple& u)
{
  if (level < 1 || level > C.n())
    throw InvalidArgument("dual_apply: level " + std::to_string(level) + " outside 1.." + std::to_string(C.n()));
  const SpencerLevel& L = C.level(level);
  if (u.level + 1 != level || u.components.size() != L.targets.size())
    throw DimensionMismatch("dual_apply: cochain of level " + std::to_string(u.level) +
                            " does not feed phi_" + std::to_string(level));
  CochainTuple out{level, {}};
  out.components.reserve(L.sources.size());
  for (const auto& row : L.matrix) {
    Polynomial s(C.n());
    for (std::size_t J = 0; J < row.size(); ++J)
      if (!row[J].is_zero() && !u.components[J].is_zero())
        s += op_apply(row[J], u.components[J]);
    out.components.push_back(std::move(s));
  }
  return out;
}

Polynomial euler_solve(const Rational& c, const Polynomial& psi, const WeightVector& w)
{
  Polynomial h(psi.nvars());
  for (const auto& [nu, part] : wqh_decompose(psi, w)) {
    Rational denom = c + nu;
    if (denom == 0)
      throw Resonance("euler_solve: chi + " + to_short(c) + " is resonant at weight " + to_short(nu),
                      to_pq(nu));
    h += Rational(1 / denom) * part;
  }
  return h;
}

ExtWitness ext_witness(const SpencerComplex& C, std::size_t level, const CochainTuple& z)
{
  if (C.k == 0)
    throw Refused(kExtWitnessRefusal);
  const std::size_t n = C.n();
  if (level > n)
    throw InvalidArgument("ext_witness: level " + std::to_string(level) + " outside 0.." + std::to_string(n));
  if (z.level != level || z.components.size() != C.wedges(level).size())
    throw DimensionMismatch("ext_witness: cochain does not live at level " + std::to_string(level));

  ExtWitness out;
  if (level < n) {
    CochainTuple d = dual_apply(C, level + 1, z);
    if (!d.is_zero()) {
      out.status = ExtWitness::Status::CocycleRejected;
      out.residual = std::move(d);
      return out;
    }
  }
  if (level == 0) {
    // ker phi_1^* is zero; a cocycle here must vanish.
    out.witness = {0, {}};
    if (!z.is_zero()) {
      out.status = ExtWitness::Status::Mismatch;
      out.residual = z;
    }
    return out;
  }

  const SpencerLevel& L = C.level(level);
  CochainTuple u = zero_cochain(C, level - 1);
  for (const auto& d : L.diagonal) {
    try {
      u.components[d.column] = euler_solve(d.constant, z.components[d.row], C.basis.weight);
    } catch (const Resonance& e) {
      throw Inconsistency(std::string("diagonal Euler system is resonant for k >= 1: ") + e.what());
    }
  }
  CochainTuple image = dual_apply(C, level, u);
  if (image != z) {
    out.status = ExtWitness::Status::Mismatch;
    out.residual = z;
    for (std::size_t i = 0; i < image.components.size(); ++i)
      out.residual.components[i] -= image.components[i];
  }
  out.witness = std::move(u);
  return out;
}

std::vector<Monomial> monomials_of_weight(const WeightVector& w, const Rational& mu)
{
  if (w.rank() != w.size())
    throw InvalidArgument("monomials_of_weight needs every weight positive");
  std::vector<Monomial> out;
  if (sgn(mu) < 0)
    return out;
  std::vector<Exponent> exps(w.size(), 0);
  enumerate_exact(w, 0, mu, exps, out);
  return out;
}

std::size_t rank(std::vector<std::vector<Rational>> rows)
{
  std::size_t r = 0;
  if (rows.empty())
    return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0)
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0)
        continue;
      Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

SliceDims graded_slice_oracle(const SpencerComplex& C, std::size_t level, const Rational& nu)
{
  const auto& b = C.basis;
  const std::size_t n = C.n();
  if (b.weight.rank() != n)
    throw InvalidArgument("graded_slice_oracle needs every weight positive (finite slices)");
  if (C.k == 0)
    throw InvalidArgument("graded_slice_oracle needs k >= 1");
  if (level > n)
    throw InvalidArgument("graded_slice_oracle: level outside 0..n");

  struct Slice {
    std::vector<WedgeIndex> wedges;
    std::vector<std::vector<Monomial>> monomials;      // per component
    std::vector<std::map<Monomial, std::size_t>> pos;  // coordinate of each monomial
    std::vector<std::size_t> offset;
    std::size_t dim = 0;
  };
  auto slice = [&](std::size_t l) {
    Slice s;
    s.wedges = C.wedges(l);
    for (const auto& I : s.wedges) {
      s.offset.push_back(s.dim);
      s.monomials.push_back(monomials_of_weight(b.weight, nu + shift_of(b, I)));
      std::map<Monomial, std::size_t> p;
      for (std::size_t i = 0; i < s.monomials.back().size(); ++i)
        p.emplace(s.monomials.back()[i], s.dim + i);
      s.dim += s.monomials.back().size();
      s.pos.push_back(std::move(p));
    }
    return s;
  };
  // Matrix of phi_{l+1}^* : slice(l) -> slice(l + 1), rows indexed by the
  // target coordinates.
  auto matrix_rank = [&](std::size_t from) -> std::size_t {
    const Slice src = slice(from);
    const Slice dst = slice(from + 1);
    if (src.dim == 0 || dst.dim == 0)
      return 0;
    const SpencerLevel& L = C.level(from + 1);
    // one row per source coordinate: rank is transpose-invariant
    std::vector<std::vector<Rational>> rows;
    for (std::size_t J = 0; J < src.wedges.size(); ++J)
      for (const auto& m : src.monomials[J]) {
        std::vector<Rational> row(dst.dim, Rational(0));
        const Polynomial g = Polynomial::monomial(m, Rational(1));
        for (std::size_t I = 0; I < dst.wedges.size(); ++I) {
          const auto& op = L.matrix[I][J];
          if (op.is_zero())
            continue;
          const Polynomial image = op_apply(op, g);
          for (const auto& [mon, c] : image.terms()) {
            auto it = dst.pos[I].find(mon);
            if (it == dst.pos[I].end())
              throw Inconsistency("dual Spencer differential does not respect the weight grading");
            row[it->second] += c;
          }
        }
        rows.push_back(std::move(row));
      }
    return rank(std::move(rows));
  };

  SliceDims d;
  d.space = slice(level).dim;
  d.kernel = d.space - (level < n ? matrix_rank(level) : 0);
  d.image = level > 0 ? matrix_rank(level - 1) : 0;
  return d;
}

std::vector<Rational> slice_weights(const SpencerComplex& C, std::size_t level, const Rational& bound)
{
  const auto& b = C.basis;
  const std::size_t n = C.n();
  if (b.weight.rank() != n)
    throw InvalidArgument("slice_weights needs every weight positive");
  std::vector<Rational> shifts;
  for (std::size_t l = level == 0 ? 0 : level - 1; l <= std::min(level + 1, n); ++l)
    for (const auto& I : C.wedges(l))
      shifts.push_back(shift_of(b, I));
  Rational max_shift(0);
  for (const auto& s : shifts)
    if (s > max_shift)
      max_shift = s;
  std::set<Rational> achievable;
  enumerate_up_to(b.weight, 0, Rational(bound + max_shift), Rational(0), achievable);
  std::set<Rational> out;
  for (const auto& mu : achievable)
    for (const auto& s : shifts) {
      Rational v = mu - s;
      if (v <= bound)
        out.insert(v);
    }
  return {out.begin(), out.end()};
}

} // namespace lfd
