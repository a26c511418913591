#pragma once

#include <map>
#include <optional>
#include <string>

#include "dcorr/half_int.hpp"
#include "dcorr/ratfunc.hpp"

namespace dcorr {

/// Truncated formal series Σ c_e q^e with e ∈ ½ℤ and c_e ∈ RatFunc.
///
/// Every coefficient with exponent ≤ order() is exact; nothing above the order
/// is known. An exact series (finite, e.g. 1 − q) has no order. Exponents are
/// stored doubled. `low_x2` is a lower bound on stored exponents.
class HalfSeries {
 public:
  using Terms = std::map<int, RatFunc>;

  /// Zero series known through order_x2 (nullopt = exactly zero).
  HalfSeries(VarTablePtr vars, std::optional<int> order_x2, int low_x2 = 0);

  static HalfSeries one(VarTablePtr vars, std::optional<int> order_x2 = std::nullopt);
  static HalfSeries monomial(int q_x2, RatFunc coeff, std::optional<int> order_x2 = std::nullopt);
  static HalfSeries constant(RatFunc coeff, std::optional<int> order_x2 = std::nullopt) {
    return monomial(0, std::move(coeff), order_x2);
  }

  const VarTablePtr& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::optional<int> order_x2() const { return order_x2_; }
  bool is_exact() const { return !order_x2_; }
  int low_x2() const { return low_x2_; }

  bool is_zero() const { return terms_.empty(); }

  /// Exponent of the first stored term, or the first unknown exponent when no
  /// term is stored. A valid lower bound for the true valuation.
  int valuation_bound_x2() const;

  /// Coefficient of q^{q_x2/2}. Throws std::out_of_range above the order.
  RatFunc coefficient(int q_x2) const;

  /// Sets (or merges into) a coefficient; exponents above the order are dropped.
  void add_term(int q_x2, const RatFunc& c);

  HalfSeries truncated(int order_x2) const;
  /// Multiplies by q^{shift_x2/2}; the order shifts along.
  HalfSeries shifted(int shift_x2) const;

  HalfSeries& operator+=(const HalfSeries& other);
  HalfSeries& operator-=(const HalfSeries& other);
  HalfSeries& operator*=(const RatFunc& c);
  HalfSeries& operator*=(const BigRational& c);
  HalfSeries operator-() const;

  friend HalfSeries operator+(HalfSeries a, const HalfSeries& b) { return a += b; }
  friend HalfSeries operator-(HalfSeries a, const HalfSeries& b) { return a -= b; }
  friend HalfSeries operator*(HalfSeries a, const RatFunc& c) { return a *= c; }
  friend HalfSeries operator*(HalfSeries a, const BigRational& c) { return a *= c; }
  friend HalfSeries operator*(const HalfSeries& a, const HalfSeries& b) { return multiply(a, b); }

  /// Cauchy product. The result order is min(N_a + v_b, N_b + v_a) with v the
  /// valuation bounds, further capped by `cap_x2`.
  static HalfSeries multiply(const HalfSeries& a, const HalfSeries& b,
                             std::optional<int> cap_x2 = std::nullopt);

  /// Multiplicative inverse. For an exact non-monomial input `cap_x2` is
  /// required. Throws DivisionByZero for a series with no known nonzero term.
  HalfSeries inverse(std::optional<int> cap_x2 = std::nullopt) const;

  /// Applies a homomorphism to every coefficient; zero images are dropped.
  HalfSeries map(const VarMap& m) const;

  /// Identical order and terms.
  friend bool operator==(const HalfSeries& a, const HalfSeries& b);

  std::string str() const;

 private:
  VarTablePtr vars_;
  std::optional<int> order_x2_;
  int low_x2_ = 0;
  Terms terms_;
};

/// First exponent ≤ min(order_a, order_b, limit) where the coefficients differ.
std::optional<int> first_mismatch(const HalfSeries& a, const HalfSeries& b,
                                  std::optional<int> limit_x2 = std::nullopt);

inline bool agree(const HalfSeries& a, const HalfSeries& b, std::optional<int> limit_x2 = std::nullopt) {
  return !first_mismatch(a, b, limit_x2);
}

/// Substitutes t_var ↦ target, where target is a product of the table's
/// t-variables with true exponents in {-1, 0, 1}. An all-zero target means 1.
HalfSeries substitute_monomial(const HalfSeries& a, std::size_t var, const std::vector<int>& target);

/// Assigns u_i = t_i^{½} ↦ value for the listed variables and drops them from
/// the table. Throws EvaluationPointError if a denominator vanishes.
HalfSeries evaluate(const HalfSeries& a, const std::map<std::size_t, BigRational>& assignment);

/// Specializes a variable whose stored exponents are all even at an integral
/// value (z ↦ ±1). Throws UsageError for a half-odd exponent.
HalfSeries specialize_integral(const HalfSeries& a, std::size_t var, const BigRational& value);

}  // namespace dcorr
