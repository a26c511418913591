#include "dcorr/ratfunc.hpp"

#include "dcorr/errors.hpp"

namespace dcorr {

RatFunc::RatFunc(VarTablePtr vars) : num_(vars), den_(vars, 1) {}

RatFunc::RatFunc(VarTablePtr vars, const BigRational& constant) : num_(vars, constant), den_(vars, 1) {}

RatFunc::RatFunc(LaurentPoly poly) : num_(std::move(poly)), den_(num_.vars(), 1) {}

void RatFunc::normalize_units() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(num_.vars(), 1);
    return;
  }
  if (den_.is_monomial()) {
    const auto& [e, c] = *den_.terms().begin();
    Exponents neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    num_ = num_.shifted(neg) * BigRational(1 / c);
    den_ = LaurentPoly(num_.vars(), 1);
    return;
  }
  Exponents m = den_.min_exponents();
  for (auto& x : m) x = -x;
  const BigRational lc = 1 / den_.leading_coefficient();
  den_ = den_.shifted(m) * lc;
  num_ = num_.shifted(m) * lc;
}

RatFunc RatFunc::reduce(LaurentPoly num, LaurentPoly den) {
  require_same_table(num.vars(), den.vars(), "RatFunc::reduce");
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (!num.is_zero() && !den.is_monomial() && !num.is_monomial()) {
    LaurentPoly g = gcd(num, den);
    if (!g.is_one()) {
      auto qn = divide_exact(num, g);
      auto qd = divide_exact(den, g);
      if (!qn || !qd) throw InvariantError("gcd does not divide its arguments");
      num = std::move(*qn);
      den = std::move(*qd);
    }
  }
  return from_coprime(std::move(num), std::move(den));
}

RatFunc RatFunc::from_coprime(LaurentPoly num, LaurentPoly den) {
  require_same_table(num.vars(), den.vars(), "RatFunc::from_coprime");
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  RatFunc r(std::move(num), std::move(den), 0);
  r.normalize_units();
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return from_coprime(den_, num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  require_same_table(vars(), o.vars(), "RatFunc addition");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    // a/d + b/d: only factors of d can cancel.
    return *this = reduce(num_ + o.num_, den_);
  }
  if (den_.is_one()) return *this = from_coprime(num_ * o.den_ + o.num_, o.den_);
  if (o.den_.is_one()) return *this = from_coprime(num_ + o.num_ * den_, den_);
  LaurentPoly g = gcd(den_, o.den_);
  if (g.is_one()) return *this = from_coprime(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  // Henrici: with d1 = g·d1', d2 = g·d2', the sum is (n1 d2' + n2 d1') / (g d1' d2'),
  // and any further cancellation divides g.
  LaurentPoly d1 = *divide_exact(den_, g);
  LaurentPoly d2 = *divide_exact(o.den_, g);
  LaurentPoly n = num_ * d2 + o.num_ * d1;
  if (n.is_zero()) return *this = RatFunc(vars());
  LaurentPoly h = gcd(n, g);
  if (!h.is_one()) {
    n = *divide_exact(n, h);
    g = *divide_exact(g, h);
  }
  return *this = from_coprime(std::move(n), g * d1 * d2);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  require_same_table(vars(), o.vars(), "RatFunc multiplication");
  if (is_zero() || o.is_zero()) return *this = RatFunc(vars());
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  LaurentPoly n1 = num_, d2 = o.den_, n2 = o.num_, d1 = den_;
  if (!d2.is_one()) {
    LaurentPoly g = gcd(n1, d2);
    if (!g.is_one()) {
      n1 = *divide_exact(n1, g);
      d2 = *divide_exact(d2, g);
    }
  }
  if (!d1.is_one()) {
    LaurentPoly g = gcd(n2, d1);
    if (!g.is_one()) {
      n2 = *divide_exact(n2, g);
      d1 = *divide_exact(d1, g);
    }
  }
  return *this = from_coprime(n1 * n2, d1 * d2);
}

RatFunc& RatFunc::operator*=(const BigRational& c) {
  if (c == 0) return *this = RatFunc(vars());
  num_ *= c;
  return *this;
}

bool RatFunc::cross_equal(const RatFunc& a, const RatFunc& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc RatFunc::map(const VarMap& m) const {
  LaurentPoly d = m.apply(den_);
  if (d.is_zero()) throw EvaluationPointError("denominator vanishes under substitution: " + den_.str());
  LaurentPoly n = m.apply(num_);
  return reduce(std::move(n), std::move(d));
}

BigRational RatFunc::constant_value() const {
  if (!num_.is_constant() || !den_.is_constant()) throw UsageError("not a constant: " + str());
  return num_.constant_term() / den_.constant_term();
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
  return n + "/(" + den_.str() + ")";
}

}  // namespace dcorr
