#pragma once

#include <string>

#include "dcorr/laurent.hpp"

namespace dcorr {

/// Element of the fraction field of the Laurent ring.
///
/// Canonical form: num/den reduced by a multivariate gcd; den carries no
/// monomial factor and is monic under the lexicographic order. Two equal
/// rational functions therefore have identical representations.
class RatFunc {
 public:
  explicit RatFunc(VarTablePtr vars);
  RatFunc(VarTablePtr vars, const BigRational& constant);
  RatFunc(LaurentPoly poly);  // NOLINT(google-explicit-constructor): the ring embeds

  /// Reduces num/den to canonical form. Throws DivisionByZero when den = 0.
  static RatFunc reduce(LaurentPoly num, LaurentPoly den);

  /// Skips the gcd; caller guarantees gcd(num, den) is a unit.
  static RatFunc from_coprime(LaurentPoly num, LaurentPoly den);

  const VarTablePtr& vars() const { return num_.vars(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc inverse() const;
  RatFunc operator-() const;

  RatFunc& operator+=(const RatFunc& other);
  RatFunc& operator-=(const RatFunc& other);
  RatFunc& operator*=(const RatFunc& other);
  RatFunc& operator*=(const BigRational& c);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator*(RatFunc a, const BigRational& c) { return a *= c; }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Equality by cross-multiplication; agrees with == on canonical values.
  static bool cross_equal(const RatFunc& a, const RatFunc& b);

  /// Applies a variable homomorphism. A vanishing image of the denominator
  /// raises EvaluationPointError.
  RatFunc map(const VarMap& m) const;

  /// Sole coefficient when the value is a rational constant; UsageError otherwise.
  BigRational constant_value() const;

  std::string str() const;

 private:
  RatFunc(LaurentPoly num, LaurentPoly den, int /*tag*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_units();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace dcorr
