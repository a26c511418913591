#include "dcorr/qdimension.hpp"

#include "dcorr/errors.hpp"

namespace dcorr {

HalfSeries weyl_q_sum(const VarTablePtr& vars, const Partition& lambda, std::size_t l, WeylSign sign) {
  HalfSeries s(vars, std::nullopt);
  for (const auto& [sigma, chi] : enumerate_WB(l)) {
    int e = 0;
    for (int x : shifted_weight(lambda, sigma)) e += x * x;
    s.add_term(e, RatFunc(vars, sign == WeylSign::Length ? chi : sigma.permutation_sign()));
  }
  return s;
}

HalfSeries weyl_q_product(const VarTablePtr& vars, const Partition& lambda, std::size_t l) {
  const std::vector<int> lam = lambda.padded(l);
  std::vector<int> exps;
  int norm = 0;
  for (std::size_t i = 0; i < l; ++i) {
    norm += lam[i] * lam[i];
    // λ_i + l − i + ½ with 1-based i, doubled.
    exps.push_back(2 * lam[i] + 2 * static_cast<int>(l - i - 1) + 1);
    for (std::size_t j = i + 1; j < l; ++j) {
      exps.push_back(2 * (lam[i] - lam[j] + static_cast<int>(j - i)));
      exps.push_back(2 * (lam[i] + lam[j] + static_cast<int>(2 * l - i - j) - 1));
    }
  }
  HalfSeries r = HalfSeries::monomial(norm, RatFunc(vars, 1));
  for (int e : exps) {
    HalfSeries f = HalfSeries::one(vars);
    f -= HalfSeries::monomial(e, RatFunc(vars, 1));
    r = HalfSeries::multiply(r, f);
  }
  return r;
}

namespace {

// (c·q^{±½}; q)_∞ / (q;q)_∞^l × (Weyl part), where c = −1 for Q⁺ and +1 for Q⁻.
HalfSeries q_series(const Partition& lambda, std::size_t l, int order_x2, const QDimForm& form, int c) {
  if (order_x2 < 0) throw UsageError("truncation order must be non-negative");
  const VarTablePtr& vars = VarTable::empty();
  // The as-printed prefactor carries an extra exact factor (1 − c·q^{−½}), which
  // lowers the order by ½; the inner part is computed one step further.
  const bool printed = form.reading == QDimForm::Reading::AsPrinted;
  const int inner = printed ? order_x2 + 1 : order_x2;
  HalfSeries r = pochhammer_inf(RatFunc(vars, c), 1, inner);
  HalfSeries euler = euler_inverse(vars, inner);
  for (std::size_t i = 0; i < l; ++i) r = HalfSeries::multiply(r, euler, inner);
  HalfSeries w = form.shape == QDimForm::Shape::WeylSum ? weyl_q_sum(vars, lambda, l, form.sign)
                                                        : weyl_q_product(vars, lambda, l);
  r = HalfSeries::multiply(r, w, inner);
  if (printed) {
    HalfSeries f = HalfSeries::one(vars);
    f -= HalfSeries::monomial(-1, RatFunc(vars, c));
    r = HalfSeries::multiply(r, f);
  }
  return r.truncated(order_x2);
}

}  // namespace

HalfSeries q_plus(const Partition& lambda, std::size_t l, int order_x2, const QDimForm& form) {
  return q_series(lambda, l, order_x2, form, -1);
}

HalfSeries q_minus(const Partition& lambda, std::size_t l, int order_x2, const QDimForm& form) {
  return q_series(lambda, l, order_x2, form, 1);
}

HalfSeries qdim_irreducible(const BLabel& label, std::size_t l, int order_x2, const QDimForm& form) {
  HalfSeries p = q_plus(label.partition, l, order_x2, form);
  HalfSeries m = q_minus(label.partition, l, order_x2, form);
  HalfSeries r = label.det ? p - m : p + m;
  r *= BigRational(1, 2);
  return r;
}

}  // namespace dcorr
