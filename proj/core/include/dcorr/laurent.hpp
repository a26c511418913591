#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcorr/half_int.hpp"
#include "dcorr/rational.hpp"
#include "dcorr/var_table.hpp"

namespace dcorr {

/// Exponent vector; entry i is TWICE the true exponent of variable i.
using Exponents = std::vector<int>;

/// Sparse multivariate Laurent polynomial over ℚ with exponents in ½ℤ.
///
/// Terms are kept in an ordered map keyed by the doubled exponent vector, so
/// the lexicographically largest key is the leading term. No zero coefficient
/// is ever stored and every key has length vars()->size().
class LaurentPoly {
 public:
  using Terms = std::map<Exponents, BigRational>;

  explicit LaurentPoly(VarTablePtr vars);
  LaurentPoly(VarTablePtr vars, const BigRational& constant);

  static LaurentPoly monomial(VarTablePtr vars, Exponents exps_x2, const BigRational& coeff = 1);

  const VarTablePtr& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  /// True for zero as well.
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;

  BigRational constant_term() const;
  const Exponents& leading_exponents() const;
  const BigRational& leading_coefficient() const;

  /// Componentwise minimum (resp. maximum) of the doubled exponents; zero vector for 0.
  Exponents min_exponents() const;
  Exponents max_exponents() const;

  /// True exponent of variable `var` in a stored key.
  static HalfInt true_exponent(const Exponents& key, std::size_t var) { return HalfInt::from_x2(key[var]); }

  /// Adds c·x^exps, merging with an existing term.
  void add_term(const Exponents& exps_x2, const BigRational& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const BigRational& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const BigRational& c) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// (t d/dt) in variable `var`: t^{m/2}·M ↦ (m/2)·t^{m/2}·M. `var` must be t-type.
  LaurentPoly tddt(std::size_t var) const;

  /// Multiplies by the monomial x^{by} (doubled exponents).
  LaurentPoly shifted(const Exponents& by) const;

  /// Human-readable form with true exponents, e.g. "t1^{1/2} - t1^{-1/2}".
  std::string str() const;

 private:
  VarTablePtr vars_;
  Terms terms_;
};

/// Quotient a/b when b divides a exactly in the Laurent ring; nullopt otherwise.
/// Throws DivisionByZero for b = 0.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// A greatest common divisor, defined up to units c·x^m. The returned divisor is
/// monomial-free with positive leading coefficient, or the constant 1.
/// Computed with recursive subresultant remainder sequences over ℤ.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Image of one source variable under a monomial homomorphism:
/// u ↦ scale · x^{mono}, where u is the stored (half-exponent) unit of the source
/// variable and mono is a doubled exponent vector in the target table.
struct VarImage {
  BigRational scale = 1;
  Exponents mono;
};

/// Ring homomorphism sending each source variable to a scaled monomial of a
/// target table. Covers substitution t ↦ t₁t₂, inversion t ↦ t^{-1} and numeric
/// evaluation (empty monomial, scale = value of t^{½}).
class VarMap {
 public:
  VarMap(VarTablePtr source, VarTablePtr target, std::vector<VarImage> images);

  /// Identity on `table` except for the listed overrides.
  static VarMap identity(const VarTablePtr& table);

  const VarTablePtr& source() const { return source_; }
  const VarTablePtr& target() const { return target_; }
  VarImage& image(std::size_t source_var) { return images_[source_var]; }

  LaurentPoly apply(const LaurentPoly& p) const;

 private:
  VarTablePtr source_;
  VarTablePtr target_;
  std::vector<VarImage> images_;
};

}  // namespace dcorr
