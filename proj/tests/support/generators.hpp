#pragma once

// Small random generators for property tests. Deterministic per seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dcorr/series.hpp"

namespace dcorr::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [lo, hi].
  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return rng_() & 1u; }

  BigRational rational(int max_num = 5, int max_den = 4) {
    BigRational r(integer(-max_num, max_num), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  BigRational nonzero_rational(int max_num = 5, int max_den = 4) {
    for (;;) {
      BigRational r = rational(max_num, max_den);
      if (r != 0) return r;
    }
  }

  /// Random polynomial with up to `max_terms` terms and doubled exponents in [-max_e, max_e].
  LaurentPoly laurent(const VarTablePtr& vars, int max_terms = 4, int max_e = 4) {
    LaurentPoly p(vars);
    const int terms = integer(0, max_terms);
    for (int i = 0; i < terms; ++i) {
      Exponents e(vars->size());
      for (auto& x : e) x = integer(-max_e, max_e);
      p.add_term(e, nonzero_rational());
    }
    return p;
  }

  LaurentPoly nonzero_laurent(const VarTablePtr& vars, int max_terms = 4, int max_e = 4) {
    for (;;) {
      LaurentPoly p = laurent(vars, max_terms, max_e);
      if (!p.is_zero()) return p;
    }
  }

  RatFunc ratfunc(const VarTablePtr& vars, int max_terms = 3, int max_e = 4) {
    return RatFunc::reduce(laurent(vars, max_terms, max_e), nonzero_laurent(vars, max_terms, max_e));
  }

  RatFunc nonzero_ratfunc(const VarTablePtr& vars, int max_terms = 3, int max_e = 4) {
    return RatFunc::reduce(nonzero_laurent(vars, max_terms, max_e), nonzero_laurent(vars, max_terms, max_e));
  }

  /// Series with terms at q-exponents in [low, order] (doubled), known through order.
  HalfSeries series(const VarTablePtr& vars, int low_x2, int order_x2, int max_terms = 4, bool fractions = true) {
    HalfSeries s(vars, order_x2, low_x2);
    const int terms = integer(0, max_terms);
    for (int i = 0; i < terms; ++i) {
      const int e = integer(low_x2, order_x2);
      s.add_term(e, fractions ? ratfunc(vars, 2, 2) : RatFunc(laurent(vars, 2, 2)));
    }
    return s;
  }

  /// Series whose q^{low} coefficient is nonzero, so it can be inverted.
  HalfSeries invertible_series(const VarTablePtr& vars, int low_x2, int order_x2) {
    HalfSeries s = series(vars, low_x2 + 1, order_x2, 3);
    s.add_term(low_x2, nonzero_ratfunc(vars, 2, 2));
    return s;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline VarTablePtr t_table(std::size_t n) {
  std::vector<VarDesc> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back({"t" + std::to_string(i + 1), VarKind::T});
  return VarTable::make(v);
}

}  // namespace dcorr::testing
