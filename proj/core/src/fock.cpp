#include "dcorr/fock.hpp"

#include <algorithm>
#include <bit>

#include "dcorr/errors.hpp"

namespace dcorr {

namespace {

constexpr int kMaxBits = 31;

int mask_energy_x2(std::uint32_t m) {
  int e = 0;
  for (int j = 0; m; ++j, m >>= 1)
    if (m & 1u) e += 2 * j + 1;
  return e;
}

// Which family a fermion touches, and whether it creates there.
std::pair<std::size_t, bool> target_of(const FockSpace& space, const Fermion& f) {
  const bool create = !f.annihilates();
  switch (f.kind) {
    case Fermion::Kind::PsiPlus:
      if (f.pair >= space.pairs) break;
      return {create ? space.plus_family(f.pair) : space.minus_family(f.pair), create};
    case Fermion::Kind::PsiMinus:
      if (f.pair >= space.pairs) break;
      return {create ? space.minus_family(f.pair) : space.plus_family(f.pair), create};
    case Fermion::Kind::Phi:
      if (!space.neutral) throw UsageError("no neutral fermion in this Fock space");
      return {space.neutral_family(), create};
  }
  throw UsageError("fermion pair index out of range");
}

}  // namespace

Gradings gradings(const FockSpace& space, const FockState& s) {
  Gradings g;
  for (auto m : s.occ) g.energy_x2 += mask_energy_x2(m);
  for (std::size_t p = 0; p < space.pairs; ++p)
    g.charges.push_back(std::popcount(s.occ[space.plus_family(p)]) - std::popcount(s.occ[space.minus_family(p)]));
  if (space.neutral) g.alpha_parity = std::popcount(s.occ[space.neutral_family()]) % 2;
  return g;
}

FockState vacuum(const FockSpace& space) { return FockState{std::vector<std::uint32_t>(space.families(), 0)}; }

std::vector<std::vector<FockState>> enumerate_states(const FockSpace& space, int max_energy_x2) {
  if (max_energy_x2 < 0) throw UsageError("maximum energy must be non-negative");
  if (max_energy_x2 > 2 * kMaxBits) throw UsageError("maximum energy too large for the mode bitmask");
  std::vector<std::pair<std::uint32_t, int>> masks;
  const int bits = (max_energy_x2 + 1) / 2;
  for (std::uint32_t m = 0; m < (1u << bits); ++m) {
    const int e = mask_energy_x2(m);
    if (e <= max_energy_x2) masks.emplace_back(m, e);
  }
  std::vector<std::vector<FockState>> levels(static_cast<std::size_t>(max_energy_x2) + 1);
  FockState cur = vacuum(space);
  auto rec = [&](auto&& self, std::size_t f, int used) -> void {
    if (f == space.families()) {
      levels[static_cast<std::size_t>(used)].push_back(cur);
      return;
    }
    for (const auto& [m, e] : masks) {
      if (used + e > max_energy_x2) continue;
      cur.occ[f] = m;
      self(self, f + 1, used + e);
    }
    cur.occ[f] = 0;
  };
  rec(rec, 0, 0);
  for (auto& level : levels) std::sort(level.begin(), level.end());
  return levels;
}

std::optional<std::pair<int, FockState>> apply_fermion(const FockSpace& space, const Fermion& f, const FockState& s) {
  if (f.mode_x2 % 2 == 0) throw UsageError("fermion modes lie in ℤ + ½");
  const auto [fam, create] = target_of(space, f);
  const int j = (std::abs(f.mode_x2) - 1) / 2;
  if (j >= kMaxBits) throw UsageError("fermion mode too large");
  const std::uint32_t bit = 1u << j;
  const bool occupied = s.occ[fam] & bit;
  if (create == occupied) return std::nullopt;
  // Sign: creators standing to the left of this slot in the canonical product.
  int passed = 0;
  for (std::size_t g = 0; g < fam; ++g) passed += std::popcount(s.occ[g]);
  passed += std::popcount(s.occ[fam] & ~((bit << 1) - 1u));
  FockState r = s;
  r.occ[fam] ^= bit;
  return std::make_pair(passed % 2 ? -1 : 1, std::move(r));
}

StateSum<int> apply_bilinear(const FockSpace& space, const Fermion& a, const Fermion& b, const FockState& s,
                             bool normal_ordered) {
  StateSum<int> out;
  const bool swap = normal_ordered && a.annihilates() && !b.annihilates();
  const Fermion& first = swap ? a : b;
  const Fermion& second = swap ? b : a;
  auto r1 = apply_fermion(space, first, s);
  if (!r1) return out;
  auto r2 = apply_fermion(space, second, r1->second);
  if (!r2) return out;
  out.emplace(r2->second, (swap ? -1 : 1) * r1->first * r2->first);
  return out;
}

namespace {

// Species: pairs 0..l−1, then the neutral fermion as index l.
struct Species {
  std::size_t index;
  bool is_neutral;
};

std::vector<Species> all_species(const FockSpace& space) {
  std::vector<Species> v;
  for (std::size_t p = 0; p < space.pairs; ++p) v.push_back({p, false});
  if (space.neutral) v.push_back({space.pairs, true});
  return v;
}

using KTerms = std::map<FockState, std::map<int, int>>;  // state → (k_x2 → integer coefficient)

// :𝔇(t): restricted to the listed species, as integer combinations of t^k.
KTerms normal_D_terms(const FockSpace& space, const std::vector<Species>& species, const FockState& s) {
  KTerms out;
  const int e = gradings(space, s).energy_x2;
  auto add = [&](const StateSum<int>& r, int k) {
    for (const auto& [st, c] : r) {
      int& slot = out[st][k];
      slot += c;
    }
  };
  for (int k = -e; k <= e; ++k) {
    if (k % 2 == 0) continue;
    for (const auto& sp : species) {
      if (sp.is_neutral) {
        add(apply_bilinear(space, {Fermion::Kind::Phi, 0, -k}, {Fermion::Kind::Phi, 0, k}, s, true), k);
      } else {
        add(apply_bilinear(space, {Fermion::Kind::PsiPlus, sp.index, -k}, {Fermion::Kind::PsiMinus, sp.index, k}, s, true), k);
        add(apply_bilinear(space, {Fermion::Kind::PsiMinus, sp.index, -k}, {Fermion::Kind::PsiPlus, sp.index, k}, s, true), k);
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    auto& m = it->second;
    for (auto jt = m.begin(); jt != m.end();) jt = jt->second == 0 ? m.erase(jt) : std::next(jt);
    it = m.empty() ? out.erase(it) : std::next(it);
  }
  return out;
}

int central_x2_of(const std::vector<Species>& species) {
  int c = 0;
  for (const auto& sp : species) c += sp.is_neutral ? 1 : 2;
  return c;
}

// (t_j^{½} − t_j^{−½})·𝔇_S(t_j) for a species set S, applied to a vector.
StateSum<LaurentPoly> apply_numerator(const FockSpace& space, const Workspace& ws, std::size_t j,
                                      const std::vector<Species>& species, const StateSum<LaurentPoly>& v) {
  StateSum<LaurentPoly> out;
  const LaurentPoly d = ws.t_diff(j);
  const BigRational central = central_x2_of(species);
  std::vector<int> mono(ws.n(), 0);
  for (const auto& [s, c] : v) {
    for (const auto& [st, ks] : normal_D_terms(space, species, s)) {
      LaurentPoly p(ws.table());
      for (const auto& [k, n] : ks) {
        mono[j] = k;
        p += ws.t_monomial(mono, n).num();
      }
      mono[j] = 0;
      LaurentPoly term = c * (p * d);
      auto [it, inserted] = out.try_emplace(st, term);
      if (!inserted) it->second += term;
    }
    LaurentPoly diag = c * central;
    auto [it, inserted] = out.try_emplace(s, diag);
    if (!inserted) it->second += diag;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// Applies 𝔇(t_j) in numerator form; returns the power of (t_j^{½} − t_j^{−½}) divided out.
int apply_D_numerator(const FockSpace& space, const Workspace& ws, std::size_t j, Realization realization,
                      StateSum<LaurentPoly>& v) {
  const std::vector<Species> species = all_species(space);
  if (realization == Realization::Additive) {
    v = apply_numerator(space, ws, j, species, v);
    return 1;
  }
  for (const auto& sp : species) v = apply_numerator(space, ws, j, {sp}, v);
  return static_cast<int>(species.size());
}

}  // namespace

StateVector apply_D(const FockSpace& space, const Workspace& ws, std::size_t j, const FockState& s,
                    Realization realization) {
  if (j >= ws.n()) throw UsageError("apply_D: t index out of range");
  if (s.occ.size() != space.families()) throw UsageError("apply_D: state does not belong to this space");
  StateSum<LaurentPoly> v;
  v.emplace(s, LaurentPoly(ws.table(), 1));
  const int pw = apply_D_numerator(space, ws, j, realization, v);
  LaurentPoly den(ws.table(), 1);
  for (int i = 0; i < pw; ++i) den = den * ws.t_diff(j);
  StateVector out;
  for (auto& [st, c] : v) out.emplace(st, RatFunc::reduce(std::move(c), den));
  return out;
}

HalfSeries oracle_trace(const FockSpace& space, const Workspace& ws, int max_energy_x2, const TraceOptions& options) {
  if (options.z_grading && ws.n_z() < space.pairs) throw UsageError("z-grading needs one z-variable per fermion pair");
  std::vector<std::size_t> points = options.points;
  if (points.empty())
    for (std::size_t j = 0; j < ws.n(); ++j) points.push_back(j);
  for (auto j : points)
    if (j >= ws.n()) throw UsageError("oracle_trace: point index out of range");

  const auto levels = enumerate_states(space, max_energy_x2);
  HalfSeries out(ws.table(), max_energy_x2);
  LaurentPoly den(ws.table(), 1);
  bool den_ready = false;
  for (std::size_t e = 0; e < levels.size(); ++e) {
    LaurentPoly acc(ws.table());
    for (const auto& s : levels[e]) {
      const Gradings g = gradings(space, s);
      if (options.projector == TraceOptions::Projector::Even && g.alpha_parity != 0) continue;
      if (options.projector == TraceOptions::Projector::Odd && g.alpha_parity != 1) continue;
      int sign = 1;
      if (options.parity_sign && g.alpha_parity) sign = -sign;
      if (options.charge_parity_sign) {
        int total = 0;
        for (int c : g.charges) total += c;
        if (total % 2 != 0) sign = -sign;
      }
      StateSum<LaurentPoly> v;
      v.emplace(s, LaurentPoly(ws.table(), sign));
      std::vector<int> powers(ws.n(), 0);
      // tr 𝔇(t_{i₁})⋯𝔇(t_{i_n}): the rightmost factor acts first.
      for (auto it = points.rbegin(); it != points.rend() && !v.empty(); ++it)
        powers[*it] += apply_D_numerator(space, ws, *it, options.realization, v);
      if (!den_ready) {
        for (std::size_t j = 0; j < ws.n(); ++j)
          for (int i = 0; i < powers[j]; ++i) den = den * ws.t_diff(j);
        den_ready = true;
      }
      auto it = v.find(s);
      if (it == v.end()) continue;
      LaurentPoly c = std::move(it->second);
      if (options.z_grading) {
        std::vector<int> ze(ws.n_z(), 0);
        for (std::size_t p = 0; p < space.pairs; ++p) ze[p] = 2 * g.charges[p];
        c = c * ws.z_monomial(ze).num();
      }
      acc += c;
    }
    if (!den_ready) continue;
    out.add_term(static_cast<int>(e), RatFunc::reduce(std::move(acc), den));
  }
  return out;
}

HalfSeries extract_module_function(const HalfSeries& trace, const Partition& lambda, std::size_t l,
                                   DenominatorReading reading, std::optional<int> order_x2) {
  if (order_x2 && trace.order_x2() && *order_x2 > *trace.order_x2())
    throw std::out_of_range("extraction order beyond the trace's truncation order");
  const VarTablePtr& src = trace.vars();
  const std::vector<int> lam = lambda.padded(l);
  const WeightVec rho = rho_B(l);
  const LaurentPoly delta = reading == DenominatorReading::Minus ? weyl_denominator_B(l)
                                                                 : alternant(rho, EntrySign::Plus);
  // Map z1…zl onto the trace's table and keep every other variable.
  std::vector<std::size_t> zpos(l);
  for (std::size_t i = 0; i < l; ++i) {
    auto idx = src->index_of("z" + std::to_string(i + 1));
    if (!idx) throw UsageError("extraction needs z" + std::to_string(i + 1) + " in the trace");
    zpos[i] = *idx;
  }
  std::vector<bool> is_z(src->size(), false);
  for (auto p : zpos) is_z[p] = true;
  std::vector<VarDesc> kept;
  for (std::size_t i = 0; i < src->size(); ++i)
    if (!is_z[i] && (*src)[i].kind == VarKind::T) kept.push_back((*src)[i]);
  for (std::size_t i = 0; i < src->size(); ++i)
    if (!is_z[i] && (*src)[i].kind != VarKind::T) throw UsageError("extraction: unexpected extra z-variable " + (*src)[i].name);
  const VarTablePtr dst = VarTable::make(kept);

  auto project = [&](const Exponents& e) {
    Exponents r;
    r.reserve(dst->size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (!is_z[i]) r.push_back(e[i]);
    return r;
  };
  Exponents want(l);
  for (std::size_t i = 0; i < l; ++i) want[i] = 2 * lam[i] + rho[i].x2;

  const std::optional<int> order = order_x2 ? order_x2 : trace.order_x2();
  HalfSeries out(dst, order);
  for (const auto& [qe, c] : trace.terms()) {
    if (order && qe > *order) break;
    LaurentPoly den(dst);
    for (const auto& [e, v] : c.den().terms()) {
      for (auto p : zpos)
        if (e[p] != 0) throw InvariantError("extraction: trace denominator depends on z");
      den.add_term(project(e), v);
    }
    LaurentPoly num(dst);
    for (const auto& [e, v] : c.num().terms()) {
      for (const auto& [de, dv] : delta.terms()) {
        bool hit = true;
        for (std::size_t i = 0; i < l && hit; ++i) hit = e[zpos[i]] + de[i] == want[i];
        if (hit) num.add_term(project(e), v * dv);
      }
    }
    out.add_term(qe, RatFunc::reduce(std::move(num), std::move(den)));
  }
  return out;
}

}  // namespace dcorr
