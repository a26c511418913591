#pragma once

// Infinite q-Pochhammer products, the theta function and the Bloch-Okounkov function.

#include <vector>

#include "dcorr/workspace.hpp"

namespace dcorr {

/// (a; q^{step})_∞ = ∏_{r≥0} (1 − a·q^{r·step}) for a = coeff·q^{α}, truncated at
/// order. `coeff` is any coefficient (usually ±1 or a t-monomial). Exponents are doubled;
/// the default step is q¹. Throws UsageError("non-truncating Pochhammer argument") for α ≤ 0.
HalfSeries pochhammer_inf(const RatFunc& coeff, int alpha_x2, int order_x2, int step_x2 = 2);

/// 1/(q;q)_∞ over `vars`.
HalfSeries euler_inverse(const VarTablePtr& vars, int order_x2);

/// Monomial argument ∏ x_i^{exps_i} with exps_i ∈ {−1, 0, 1}; all zero means x = 1.
struct ThetaArg {
  VarTablePtr vars;
  std::vector<int> exps;
};

/// Single-variable table {t} used for Θ before substitution.
const VarTablePtr& formal_table();

/// Θ^{(k)}(t) over formal_table(), memoized.
HalfSeries formal_theta_deriv(int k, int order_x2);
/// 1/Θ(t) over formal_table(), memoized.
HalfSeries formal_inverse_theta(int order_x2);

HalfSeries theta(const ThetaArg& x, int order_x2);
/// (t d/dt)^k Θ, differentiated in the formal argument and then substituted.
HalfSeries theta_deriv(int k, const ThetaArg& x, int order_x2);

/// Θ^{(k)}(x) and 1/Θ(x) at the workspace point x = ∏ t_j^{e_j}, cached in ws.
HalfSeries theta_deriv_at(const Workspace& ws, int k, const std::vector<int>& x, int order_x2);
HalfSeries inverse_theta_at(const Workspace& ws, const std::vector<int>& x, int order_x2);

/// F_bo(q; y₁, …, y_m) for arguments y_i = ∏ t_j^{e_ij} via the S_m sum of
/// determinants of Θ-derivatives. F_bo() = 1/(q;q)_∞. Cached in ws.
HalfSeries f_bo(const Workspace& ws, const std::vector<std::vector<int>>& args, int order_x2);

/// F_bo(q; t₁, …, tₙ) over the workspace's own points.
HalfSeries f_bo(const Workspace& ws, int order_x2);

/// Symbolic F_bo(q; t₁, …, tₙ) in a fresh table t1…tn.
HalfSeries f_bo(std::size_t n, int order_x2);

/// (q;q)_∞^{−1} Θ(y)^{−1}, the one-point closed form.
HalfSeries f_bo_one_point(const Workspace& ws, const std::vector<int>& y, int order_x2);

/// Per-coefficient t d/dt on a series whose coefficients are Laurent polynomials.
HalfSeries series_tddt(const HalfSeries& s, std::size_t var);

/// Maps a series over a one-variable table into another table, assuming its
/// coefficients are reduced. A nonconstant monomial image keeps them coprime.
HalfSeries map_univariate(const HalfSeries& s, const VarTablePtr& target, const VarImage& image);

}  // namespace dcorr
