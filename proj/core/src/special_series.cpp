#include "dcorr/special_series.hpp"

#include <numeric>
#include <algorithm>

#include "dcorr/errors.hpp"

namespace dcorr {

HalfSeries pochhammer_inf(const RatFunc& coeff, int alpha_x2, int order_x2, int step_x2) {
  if (alpha_x2 <= 0) throw UsageError("non-truncating Pochhammer argument");
  if (step_x2 <= 0) throw UsageError("Pochhammer step must be positive");
  if (order_x2 < 0) throw UsageError("truncation order must be non-negative");
  std::map<int, RatFunc> acc;
  acc.emplace(0, RatFunc(coeff.vars(), 1));
  const RatFunc minus_a = -coeff;
  for (int e = alpha_x2; e <= order_x2; e += step_x2) {
    // Multiply by (1 − a q^e); terms pushed past the order are dropped.
    std::vector<std::pair<int, RatFunc>> shifted;
    for (const auto& [x, c] : acc) {
      if (x + e > order_x2) break;
      shifted.emplace_back(x + e, c * minus_a);
    }
    for (auto& [x, c] : shifted) {
      auto [jt, inserted] = acc.try_emplace(x, c);
      if (!inserted) {
        jt->second += c;
        if (jt->second.is_zero()) acc.erase(jt);
      }
    }
  }
  HalfSeries r(coeff.vars(), order_x2);
  for (auto& [e, c] : acc) r.add_term(e, c);
  return r;
}

HalfSeries euler_inverse(const VarTablePtr& vars, int order_x2) {
  return pochhammer_inf(RatFunc(vars, 1), 2, order_x2).inverse();
}

const VarTablePtr& formal_table() {
  static const VarTablePtr table = VarTable::make({{"t", VarKind::T}});
  return table;
}

HalfSeries series_tddt(const HalfSeries& s, std::size_t var) {
  HalfSeries r(s.vars(), s.order_x2(), s.low_x2());
  for (const auto& [e, c] : s.terms()) {
    if (!c.is_polynomial()) throw UsageError("series_tddt: coefficient is not a Laurent polynomial");
    r.add_term(e, RatFunc(c.num().tddt(var)));
  }
  return r;
}

namespace {

std::mutex formal_mutex;
std::map<std::pair<int, int>, HalfSeries> formal_theta_cache;
std::map<int, HalfSeries> formal_inverse_cache;

HalfSeries formal_theta(int order_x2) {
  const VarTablePtr& x = formal_table();
  const RatFunc one(x, 1);
  const RatFunc tt = RatFunc(LaurentPoly::monomial(x, {2}));
  const RatFunc tinv = RatFunc(LaurentPoly::monomial(x, {-2}));
  HalfSeries s = HalfSeries::constant(RatFunc(LaurentPoly::monomial(x, {1}) - LaurentPoly::monomial(x, {-1})));
  HalfSeries euler = euler_inverse(x, order_x2);
  s = HalfSeries::multiply(s, euler * euler, order_x2);
  s = HalfSeries::multiply(s, pochhammer_inf(tt, 2, order_x2), order_x2);
  s = HalfSeries::multiply(s, pochhammer_inf(tinv, 2, order_x2), order_x2);
  return s;
}

std::string point_key(const std::vector<int>& x) { return key_of(x); }

}  // namespace

HalfSeries formal_theta_deriv(int k, int order_x2) {
  if (k < 0) throw UsageError("theta derivative order must be non-negative");
  {
    std::lock_guard<std::mutex> lock(formal_mutex);
    if (auto it = formal_theta_cache.find({k, order_x2}); it != formal_theta_cache.end()) return it->second;
  }
  HalfSeries s = k == 0 ? formal_theta(order_x2) : series_tddt(formal_theta_deriv(k - 1, order_x2), 0);
  std::lock_guard<std::mutex> lock(formal_mutex);
  return formal_theta_cache.try_emplace({k, order_x2}, std::move(s)).first->second;
}

HalfSeries formal_inverse_theta(int order_x2) {
  {
    std::lock_guard<std::mutex> lock(formal_mutex);
    if (auto it = formal_inverse_cache.find(order_x2); it != formal_inverse_cache.end()) return it->second;
  }
  HalfSeries s = formal_theta_deriv(0, order_x2).inverse();
  std::lock_guard<std::mutex> lock(formal_mutex);
  return formal_inverse_cache.try_emplace(order_x2, std::move(s)).first->second;
}

HalfSeries map_univariate(const HalfSeries& s, const VarTablePtr& target, const VarImage& image) {
  if (s.vars()->size() != 1) throw UsageError("map_univariate: source must have one variable");
  const VarMap m(s.vars(), target, {image});
  HalfSeries r(target, s.order_x2(), s.low_x2());
  for (const auto& [e, c] : s.terms()) {
    LaurentPoly den = m.apply(c.den());
    if (den.is_zero()) throw EvaluationPointError("theta denominator vanishes at the evaluation point");
    r.add_term(e, RatFunc::from_coprime(m.apply(c.num()), std::move(den)));
  }
  return r;
}

HalfSeries theta(const ThetaArg& x, int order_x2) { return theta_deriv(0, x, order_x2); }

HalfSeries theta_deriv(int k, const ThetaArg& x, int order_x2) {
  if (!x.vars || x.exps.size() != x.vars->size()) throw UsageError("ThetaArg: exponent vector does not match its table");
  for (std::size_t i = 0; i < x.exps.size(); ++i) {
    if (x.exps[i] < -1 || x.exps[i] > 1) throw UsageError("ThetaArg exponents must be in {-1, 0, 1}");
    if (x.exps[i] != 0 && (*x.vars)[i].kind != VarKind::T) throw UsageError("ThetaArg must use t-variables");
  }
  return map_univariate(formal_theta_deriv(k, order_x2), x.vars, VarImage{1, x.exps});
}

HalfSeries theta_deriv_at(const Workspace& ws, int k, const std::vector<int>& x, int order_x2) {
  return ws.memo("theta/" + std::to_string(k) + "/" + point_key(x) + "/" + std::to_string(order_x2), [&] {
    return map_univariate(formal_theta_deriv(k, order_x2), ws.table(), ws.image_of(x));
  });
}

HalfSeries inverse_theta_at(const Workspace& ws, const std::vector<int>& x, int order_x2) {
  if (std::all_of(x.begin(), x.end(), [](int e) { return e == 0; }))
    throw DivisionByZero("Θ(1) = 0 has no inverse");
  return ws.memo("itheta/" + point_key(x) + "/" + std::to_string(order_x2), [&] {
    return map_univariate(formal_inverse_theta(order_x2), ws.table(), ws.image_of(x));
  });
}

namespace {

BigRational factorial(int k) {
  BigRational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

HalfSeries f_bo_compute(const Workspace& ws, const std::vector<std::vector<int>>& args, int order_x2) {
  const std::size_t m = args.size();
  const VarTablePtr& vars = ws.table();
  HalfSeries euler = euler_inverse(vars, order_x2);
  if (m == 0) return euler;

  std::vector<std::size_t> sigma(m);
  std::iota(sigma.begin(), sigma.end(), 0);
  HalfSeries total(vars, order_x2);
  do {
    // prefix[j] = y_{σ(1)} ⋯ y_{σ(j)}
    std::vector<std::vector<int>> prefix(m + 1, std::vector<int>(ws.n(), 0));
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t v = 0; v < ws.n(); ++v) prefix[j][v] = prefix[j - 1][v] + args[sigma[j - 1]][v];

    // Entry (i, j), 1-based: Θ^{(j−i+1)}(prefix[m−j]) / (j−i+1)!, zero below the subdiagonal.
    auto entry = [&](std::size_t i, std::size_t j) -> std::optional<HalfSeries> {
      const int k = static_cast<int>(j) - static_cast<int>(i) + 1;
      if (k < 0) return std::nullopt;
      HalfSeries s = theta_deriv_at(ws, k, prefix[m - j], order_x2);
      if (s.is_zero()) return std::nullopt;
      if (k > 1) s *= BigRational(1 / factorial(k));
      return s;
    };
    std::vector<std::vector<std::optional<HalfSeries>>> mat(m);
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = 1; j <= m; ++j) mat[i - 1].push_back(entry(i, j));

    std::map<unsigned, HalfSeries> memo;
    auto minor = [&](auto&& self, unsigned used) -> HalfSeries {
      const auto row = static_cast<std::size_t>(__builtin_popcount(used));
      if (row == m) return HalfSeries::one(vars);
      if (auto it = memo.find(used); it != memo.end()) return it->second;
      HalfSeries acc(vars, order_x2);
      int sign = 1;
      for (std::size_t c = 0; c < m; ++c) {
        if (used & (1u << c)) continue;
        if (mat[row][c]) {
          HalfSeries sub = self(self, used | (1u << c));
          if (!sub.is_zero()) {
            HalfSeries term = HalfSeries::multiply(*mat[row][c], sub, order_x2);
            if (sign > 0) acc += term; else acc -= term;
          }
        }
        sign = -sign;
      }
      memo.emplace(used, acc);
      return acc;
    };
    HalfSeries term = minor(minor, 0u);
    for (std::size_t j = 1; j <= m && !term.is_zero(); ++j)
      term = HalfSeries::multiply(term, inverse_theta_at(ws, prefix[j], order_x2), order_x2);
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return HalfSeries::multiply(total, euler, order_x2);
}

}  // namespace

HalfSeries f_bo(const Workspace& ws, const std::vector<std::vector<int>>& args, int order_x2) {
  if (order_x2 < 0) throw UsageError("truncation order must be non-negative");
  std::string key = "fbo/" + std::to_string(order_x2);
  for (const auto& a : args) {
    if (a.size() != ws.n()) throw UsageError("f_bo: argument has wrong arity");
    key += "/" + point_key(a);
  }
  return ws.memo(key, [&] { return f_bo_compute(ws, args, order_x2); });
}

HalfSeries f_bo(const Workspace& ws, int order_x2) {
  std::vector<std::vector<int>> args(ws.n(), std::vector<int>(ws.n(), 0));
  for (std::size_t j = 0; j < ws.n(); ++j) args[j][j] = 1;
  return f_bo(ws, args, order_x2);
}

HalfSeries f_bo(std::size_t n, int order_x2) { return f_bo(*Workspace::symbolic(n), order_x2); }

HalfSeries f_bo_one_point(const Workspace& ws, const std::vector<int>& y, int order_x2) {
  return HalfSeries::multiply(euler_inverse(ws.table(), order_x2), inverse_theta_at(ws, y, order_x2), order_x2);
}

}  // namespace dcorr
