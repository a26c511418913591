#include "dcorr/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "dcorr/errors.hpp"

namespace dcorr {

namespace {

std::optional<int> min_order(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

HalfSeries::HalfSeries(VarTablePtr vars, std::optional<int> order_x2, int low_x2)
    : vars_(std::move(vars)), order_x2_(order_x2), low_x2_(low_x2) {
  if (!vars_) throw UsageError("HalfSeries requires a variable table");
}

HalfSeries HalfSeries::one(VarTablePtr vars, std::optional<int> order_x2) {
  return constant(RatFunc(std::move(vars), 1), order_x2);
}

HalfSeries HalfSeries::monomial(int q_x2, RatFunc coeff, std::optional<int> order_x2) {
  HalfSeries s(coeff.vars(), order_x2, q_x2);
  s.add_term(q_x2, coeff);
  return s;
}

int HalfSeries::valuation_bound_x2() const {
  if (!terms_.empty()) return terms_.begin()->first;
  if (order_x2_) return *order_x2_ + 1;
  return std::numeric_limits<int>::max() / 4;
}

RatFunc HalfSeries::coefficient(int q_x2) const {
  if (order_x2_ && q_x2 > *order_x2_)
    throw std::out_of_range("coefficient of q^{" + HalfInt::from_x2(q_x2).str() + "} is beyond the truncation order");
  auto it = terms_.find(q_x2);
  return it == terms_.end() ? RatFunc(vars_) : it->second;
}

void HalfSeries::add_term(int q_x2, const RatFunc& c) {
  if (order_x2_ && q_x2 > *order_x2_) return;
  if (c.is_zero()) return;
  require_same_table(vars_, c.vars(), "HalfSeries::add_term");
  low_x2_ = std::min(low_x2_, q_x2);
  auto [it, inserted] = terms_.try_emplace(q_x2, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HalfSeries HalfSeries::truncated(int order_x2) const {
  HalfSeries r(vars_, min_order(order_x2_, order_x2), low_x2_);
  for (const auto& [e, c] : terms_) {
    if (e > *r.order_x2_) break;
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

HalfSeries HalfSeries::shifted(int shift_x2) const {
  HalfSeries r(vars_, order_x2_ ? std::optional<int>(*order_x2_ + shift_x2) : std::nullopt, low_x2_ + shift_x2);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift_x2, c);
  return r;
}

HalfSeries& HalfSeries::operator+=(const HalfSeries& o) {
  require_same_table(vars_, o.vars_, "HalfSeries addition");
  order_x2_ = min_order(order_x2_, o.order_x2_);
  if (order_x2_) terms_.erase(terms_.upper_bound(*order_x2_), terms_.end());
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  low_x2_ = std::min(low_x2_, o.low_x2_);
  return *this;
}

HalfSeries& HalfSeries::operator-=(const HalfSeries& o) { return *this += -o; }

HalfSeries& HalfSeries::operator*=(const RatFunc& c) {
  require_same_table(vars_, c.vars(), "HalfSeries scaling");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

HalfSeries& HalfSeries::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

HalfSeries HalfSeries::operator-() const {
  HalfSeries r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

HalfSeries HalfSeries::multiply(const HalfSeries& a, const HalfSeries& b, std::optional<int> cap_x2) {
  require_same_table(a.vars_, b.vars_, "HalfSeries multiplication");
  std::optional<int> order;
  const bool a_zero = a.is_exact() && a.is_zero(), b_zero = b.is_exact() && b.is_zero();
  if (a_zero || b_zero) return HalfSeries(a.vars_, std::nullopt, a.low_x2_ + b.low_x2_);
  if (a.order_x2_) order = *a.order_x2_ + b.valuation_bound_x2();
  if (b.order_x2_) order = min_order(order, *b.order_x2_ + a.valuation_bound_x2());
  order = min_order(order, cap_x2);
  HalfSeries r(a.vars_, order, a.low_x2_ + b.low_x2_);
  // Accumulate row by row so the map insertions stay local.
  for (const auto& [ea, ca] : a.terms_) {
    if (order && ea + b.valuation_bound_x2() > *order) break;
    for (const auto& [eb, cb] : b.terms_) {
      if (order && ea + eb > *order) break;
      r.add_term(ea + eb, ca * cb);
    }
  }
  return r;
}

HalfSeries HalfSeries::inverse(std::optional<int> cap_x2) const {
  if (terms_.empty()) throw DivisionByZero("inverse of a series with no known nonzero term");
  const int e0 = terms_.begin()->first;
  const RatFunc a0_inv = terms_.begin()->second.inverse();
  if (terms_.size() == 1 && !order_x2_) {
    HalfSeries r = monomial(-e0, a0_inv);
    return cap_x2 ? r.truncated(*cap_x2) : r;
  }
  std::optional<int> order;
  if (order_x2_) order = *order_x2_ - 2 * e0;
  order = min_order(order, cap_x2);
  if (!order) throw UsageError("inverse of an exact non-monomial series needs a truncation order");
  // b = q^{-e0}·b' with a' = a·q^{-e0}; b'_m = -(1/a'_0) Σ_{0<i≤m} a'_i b'_{m-i}.
  const int top = *order + e0;
  std::map<int, RatFunc> bp;
  bp.emplace(0, a0_inv);
  for (int m = 1; m <= top; ++m) {
    RatFunc acc(vars_);
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
      const int i = it->first - e0;
      if (i > m) break;
      auto jt = bp.find(m - i);
      if (jt != bp.end()) acc += it->second * jt->second;
    }
    if (!acc.is_zero()) bp.emplace(m, -(acc * a0_inv));
  }
  HalfSeries r(vars_, order, -e0);
  for (auto& [m, c] : bp) r.terms_.emplace_hint(r.terms_.end(), m - e0, std::move(c));
  return r;
}

HalfSeries HalfSeries::map(const VarMap& m) const {
  require_same_table(vars_, m.source(), "HalfSeries::map");
  HalfSeries r(m.target(), order_x2_, low_x2_);
  for (const auto& [e, c] : terms_) {
    RatFunc v = c.map(m);
    if (!v.is_zero()) r.terms_.emplace_hint(r.terms_.end(), e, std::move(v));
  }
  return r;
}

bool operator==(const HalfSeries& a, const HalfSeries& b) {
  return same_table(a.vars_, b.vars_) && a.order_x2_ == b.order_x2_ && a.terms_ == b.terms_;
}

std::string HalfSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    // Negative rational constants print as " - |c|".
    const bool neg_const = c.is_polynomial() && c.num().is_constant() && c.num().constant_term() < 0;
    const RatFunc shown = neg_const ? -c : c;
    out << (first ? (neg_const ? "-" : "") : (neg_const ? " - " : " + "));
    first = false;
    const std::string cs = shown.str();
    const bool wrap = shown.num().size() > 1 || !shown.den().is_one();
    if (e == 0) {
      out << (wrap ? "(" + cs + ")" : cs);
      continue;
    }
    if (!shown.is_one()) out << (wrap ? "(" + cs + ")" : cs) << '*';
    out << "q";
    if (e != 2) out << "^{" << HalfInt::from_x2(e).str() << '}';
  }
  if (order_x2_) {
    if (!first) out << " + ";
    first = false;
    out << "O(q^{" << HalfInt::from_x2(*order_x2_ + 1).str() << "})";
  }
  if (first) out << "0";
  return out.str();
}

std::optional<int> first_mismatch(const HalfSeries& a, const HalfSeries& b, std::optional<int> limit_x2) {
  require_same_table(a.vars(), b.vars(), "first_mismatch");
  const std::optional<int> limit = min_order(min_order(a.order_x2(), b.order_x2()), limit_x2);
  auto ia = a.terms().begin(), ib = b.terms().begin();
  const auto ea = a.terms().end(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    int e;
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      e = ia->first;
      if (limit && e > *limit) return std::nullopt;
      return e;
    }
    if (ia == ea || ib->first < ia->first) {
      e = ib->first;
      if (limit && e > *limit) return std::nullopt;
      return e;
    }
    e = ia->first;
    if (limit && e > *limit) return std::nullopt;
    if (!(ia->second == ib->second)) return e;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

HalfSeries substitute_monomial(const HalfSeries& a, std::size_t var, const std::vector<int>& target) {
  const auto& vars = a.vars();
  if (var >= vars->size() || target.size() != vars->size()) throw UsageError("substitute_monomial: bad variable or target");
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (target[j] < -1 || target[j] > 1) throw UsageError("substitute_monomial: target exponents must be in {-1, 0, 1}");
    if (target[j] != 0 && (*vars)[j].kind != VarKind::T) throw UsageError("substitute_monomial: target must use t-variables");
  }
  VarMap m = VarMap::identity(vars);
  // u_var = t_var^{1/2} goes to the square root of the target, i.e. ∏ u_j^{target_j}.
  m.image(var).mono = target;
  return a.map(m);
}

HalfSeries evaluate(const HalfSeries& a, const std::map<std::size_t, BigRational>& assignment) {
  const auto& src = a.vars();
  std::vector<VarDesc> kept;
  std::vector<std::size_t> new_index(src->size(), 0);
  for (std::size_t i = 0; i < src->size(); ++i) {
    if (assignment.count(i)) continue;
    new_index[i] = kept.size();
    kept.push_back((*src)[i]);
  }
  VarTablePtr dst = VarTable::make(kept);
  std::vector<VarImage> images(src->size());
  for (std::size_t i = 0; i < src->size(); ++i) {
    images[i].mono.assign(dst->size(), 0);
    auto it = assignment.find(i);
    if (it != assignment.end()) {
      if (it->second == 0) throw UsageError("evaluate: zero is not a valid value for " + (*src)[i].name);
      images[i].scale = it->second;
    } else {
      images[i].mono[new_index[i]] = 1;
    }
  }
  return a.map(VarMap(src, dst, std::move(images)));
}

namespace {

LaurentPoly specialize_poly(const LaurentPoly& p, std::size_t var, const BigRational& value, const VarTablePtr& dst) {
  LaurentPoly r(dst);
  Exponents e(dst->size());
  for (const auto& [es, c] : p.terms()) {
    if (es[var] % 2 != 0) throw UsageError("specialize_integral: half-odd exponent in " + (*p.vars())[var].name);
    for (std::size_t i = 0, j = 0; i < es.size(); ++i)
      if (i != var) e[j++] = es[i];
    r.add_term(e, c * power(value, es[var] / 2));
  }
  return r;
}

}  // namespace

HalfSeries specialize_integral(const HalfSeries& a, std::size_t var, const BigRational& value) {
  const auto& src = a.vars();
  if (var >= src->size()) throw UsageError("specialize_integral: variable index out of range");
  if (value == 0) throw UsageError("specialize_integral: zero value");
  std::vector<VarDesc> kept;
  for (std::size_t i = 0; i < src->size(); ++i)
    if (i != var) kept.push_back((*src)[i]);
  VarTablePtr dst = VarTable::make(kept);
  HalfSeries r(dst, a.order_x2(), a.low_x2());
  for (const auto& [e, c] : a.terms()) {
    LaurentPoly d = specialize_poly(c.den(), var, value, dst);
    if (d.is_zero()) throw EvaluationPointError("denominator vanishes at " + (*src)[var].name + " = " + to_string(value));
    r.add_term(e, RatFunc::reduce(specialize_poly(c.num(), var, value, dst), std::move(d)));
  }
  return r;
}

}  // namespace dcorr
