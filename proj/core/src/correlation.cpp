#include "dcorr/correlation.hpp"

#include "dcorr/errors.hpp"

namespace dcorr {

namespace {

std::vector<std::size_t> members(Subset s, std::size_t n) {
  std::vector<std::size_t> v;
  for (std::size_t j = 0; j < n; ++j)
    if (s & (1u << j)) v.push_back(j);
  return v;
}

void check_subset(const Workspace& ws, Subset s) {
  if (ws.n() > 16 || (s >> ws.n()) != 0) throw UsageError("subset refers to points outside the workspace");
}

HalfSeries power_series(const HalfSeries& base, std::size_t e, int order_x2) {
  HalfSeries r = HalfSeries::one(base.vars(), order_x2);
  for (std::size_t i = 0; i < e; ++i) r = HalfSeries::multiply(r, base, order_x2);
  return r;
}

// ∏ (1 − q^{e}) over the listed doubled exponents; zero exponents give a zero factor.
HalfSeries finite_product(const VarTablePtr& vars, const std::vector<int>& exps_x2, int order_x2) {
  HalfSeries r = HalfSeries::one(vars, order_x2);
  for (int e : exps_x2) {
    HalfSeries f = HalfSeries::one(vars);
    f -= HalfSeries::monomial(e, RatFunc(vars, 1));
    r = HalfSeries::multiply(r, f, order_x2);
  }
  return r;
}

}  // namespace

HalfSeries gl_function(const Workspace& ws, const GenPartition& lambda, int order_x2) {
  const std::size_t l = lambda.parts.size();
  const VarTablePtr& vars = ws.table();
  int norm = 0, size = 0;
  for (int x : lambda.parts) {
    norm += x * x;
    size += x;
  }
  // q^{‖λ‖²/2} has doubled exponent ‖λ‖².
  const int inner = order_x2 - norm;
  if (inner < 0) return HalfSeries(vars, order_x2);
  std::vector<int> vdm;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j)
      vdm.push_back(2 * (lambda.parts[i] - lambda.parts[j] + static_cast<int>(j) - static_cast<int>(i)));
  HalfSeries r = power_series(f_bo(ws, inner), l, inner);
  r = HalfSeries::multiply(r, finite_product(vars, vdm, inner), inner);
  r *= ws.t_monomial(std::vector<int>(ws.n(), 2 * size));
  return r.shifted(norm);
}

HalfSeries gl_function(const GenPartition& lambda, std::size_t n, int order_x2) {
  return gl_function(*Workspace::symbolic(n), lambda, order_x2);
}

HalfSeries epsilon_sum(const Workspace& ws, Subset subset, int k, int order_x2) {
  check_subset(ws, subset);
  return ws.memo("esum/" + std::to_string(subset) + "/" + std::to_string(k) + "/" + std::to_string(order_x2), [&] {
    const std::vector<std::size_t> idx = members(subset, ws.n());
    HalfSeries total(ws.table(), order_x2);
    for (const auto& [eps, sign] : sign_vectors(idx.size())) {
      std::vector<std::vector<int>> args;
      std::vector<int> mono(ws.n(), 0);
      for (std::size_t a = 0; a < idx.size(); ++a) {
        std::vector<int> y(ws.n(), 0);
        y[idx[a]] = eps[a];
        args.push_back(std::move(y));
        mono[idx[a]] = 2 * k * eps[a];
      }
      HalfSeries term = f_bo(ws, args, order_x2);
      term *= ws.t_monomial(mono, sign);
      total += term;
    }
    return total;
  });
}

HalfSeries fock_trace_closed(const Workspace& ws, ZWeight z, int order_x2) {
  return fock_trace_closed(ws, full_subset(ws), z, order_x2);
}

HalfSeries fock_trace_closed(const Workspace& ws, Subset subset, ZWeight z, int order_x2) {
  if (z == ZWeight::Formal && ws.n_z() == 0) throw UsageError("formal z-grading needs a workspace with a z-variable");
  HalfSeries total(ws.table(), order_x2);
  for (int k = 0; k * k <= order_x2; ++k) {
    for (int kk : k == 0 ? std::vector<int>{0} : std::vector<int>{k, -k}) {
      HalfSeries term = epsilon_sum(ws, subset, kk, order_x2 - k * k);
      if (z == ZWeight::Formal) {
        std::vector<int> ze(ws.n_z(), 0);
        ze[0] = 2 * kk;
        term *= ws.z_monomial(ze);
      } else if (z == ZWeight::MinusOne && kk % 2 != 0) {
        term = -term;
      }
      total += term.shifted(k * k);
    }
  }
  return total;
}

HalfSeries vacuum_convolution(const Workspace& ws, Subset subset, bool twisted, int order_x2) {
  HalfSeries total(ws.table(), order_x2);
  // Enumerate every I ⊆ subset, including ∅ and the full set.
  for (Subset i = subset;; i = (i - 1) & subset) {
    total += HalfSeries::multiply(d_half_vacuum(ws, i, twisted, order_x2),
                                  d_half_vacuum(ws, subset & ~i, twisted, order_x2), order_x2);
    if (i == 0) break;
  }
  return total;
}

HalfSeries d_half_vacuum(const Workspace& ws, bool twisted, int order_x2) {
  return d_half_vacuum(ws, full_subset(ws), twisted, order_x2);
}

HalfSeries d_half_vacuum(const Workspace& ws, Subset subset, bool twisted, int order_x2) {
  check_subset(ws, subset);
  const std::string key = std::string(twisted ? "vtw/" : "vun/") + std::to_string(subset) + "/" + std::to_string(order_x2);
  return ws.memo(key, [&] {
    const VarTablePtr& vars = ws.table();
    HalfSeries base = pochhammer_inf(RatFunc(vars, twisted ? 1 : -1), 1, order_x2);
    if (subset == 0) return base;
    HalfSeries rest = fock_trace_closed(ws, subset, twisted ? ZWeight::MinusOne : ZWeight::PlusOne, order_x2);
    for (Subset i = (subset - 1) & subset; i != 0; i = (i - 1) & subset) {
      rest -= HalfSeries::multiply(d_half_vacuum(ws, i, twisted, order_x2),
                                   d_half_vacuum(ws, subset & ~i, twisted, order_x2), order_x2);
    }
    HalfSeries r = HalfSeries::multiply(rest, base.inverse(), order_x2);
    r *= BigRational(1, 2);
    return r;
  });
}

HalfSeries w2_one_point(const Workspace& ws, PochReading reading, int order_x2) {
  if (ws.n() != 1) throw UsageError("the one-point formula needs a one-point workspace");
  const VarTablePtr& vars = ws.table();
  HalfSeries p = pochhammer_inf(RatFunc(vars, 1), 1, order_x2, reading == PochReading::BaseQ ? 2 : 1);
  // Σ_{m≥1} Σ_{r≥1} q^{r(m−½)} (t^{m−½} − t^{−(m−½)})
  HalfSeries s(vars, order_x2);
  for (int h = 1; h <= order_x2; h += 2) {
    const RatFunc c = ws.t_monomial({h}) - ws.t_monomial({-h});
    for (int e = h; e <= order_x2; e += h) s.add_term(e, c);
  }
  HalfSeries inner = HalfSeries::constant(RatFunc::reduce(LaurentPoly(vars, 1), ws.t_diff(0)), order_x2);
  inner -= s;
  return HalfSeries::multiply(p, inner, order_x2);
}

HalfSeries weyl_epsilon_sum(const Workspace& ws, const Partition& lambda, std::size_t l, int order_x2, WeylSign sign) {
  (void)lambda.padded(l);
  HalfSeries total(ws.table(), order_x2);
  const Subset all = full_subset(ws);
  for (const auto& [sigma, chi] : enumerate_WB(l)) {
    const std::vector<int> k = shifted_weight(lambda, sigma);
    int e = 0;
    for (int x : k) e += x * x;
    if (e > order_x2) continue;
    const int inner = order_x2 - e;
    HalfSeries term = HalfSeries::one(ws.table(), inner);
    for (std::size_t a = 0; a < l; ++a) term = HalfSeries::multiply(term, epsilon_sum(ws, all, k[a], inner), inner);
    const int s = sign == WeylSign::Length ? chi : sigma.permutation_sign();
    if (s < 0) term = -term;
    total += term.shifted(e);
  }
  return total;
}

HalfSeries d_sum_function(const Workspace& ws, const Partition& lambda, std::size_t l, int order_x2) {
  return HalfSeries::multiply(d_half_vacuum(ws, false, order_x2), weyl_epsilon_sum(ws, lambda, l, order_x2), order_x2);
}

HalfSeries d_twisted_function(const Workspace& ws, const Partition& lambda, std::size_t l, int order_x2, WeylSign sign) {
  return HalfSeries::multiply(d_half_vacuum(ws, true, order_x2), weyl_epsilon_sum(ws, lambda, l, order_x2, sign),
                              order_x2);
}

HalfSeries irreducible_function(const Workspace& ws, const BLabel& label, std::size_t l, int order_x2, WeylSign sign) {
  HalfSeries d = d_sum_function(ws, label.partition, l, order_x2);
  HalfSeries b = d_twisted_function(ws, label.partition, l, order_x2, sign);
  HalfSeries r = label.det ? d - b : d + b;
  r *= BigRational(1, 2);
  return r;
}

}  // namespace dcorr
