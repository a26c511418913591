#pragma once

// q-dimensions Q± of L(Λ(λ)) ⊕ L(Λ(λ⊗det)) and of the irreducible summands.

#include "dcorr/correlation.hpp"

namespace dcorr {

struct QDimForm {
  enum class Shape { WeylSum, Product };
  /// AsPrinted uses the prefactor (∓q^{−½};q)_∞, Corrected uses (∓q^{+½};q)_∞.
  enum class Reading { AsPrinted, Corrected };

  Shape shape = Shape::WeylSum;
  Reading reading = Reading::Corrected;
  /// Sign of σ in the Weyl-sum shape; ignored by the product shape.
  WeylSign sign = WeylSign::Length;
};

/// Σ_σ sign(σ) q^{‖λ+ρ−σ(ρ)‖²/2} as an exact finite series over `vars`.
HalfSeries weyl_q_sum(const VarTablePtr& vars, const Partition& lambda, std::size_t l, WeylSign sign = WeylSign::Length);

/// q^{‖λ‖²/2} ∏_i (1 − q^{λ_i+l−i+½}) ∏_{i<j} (1 − q^{λ_i−λ_j+j−i})(1 − q^{λ_i+λ_j+2l−i−j+1}).
HalfSeries weyl_q_product(const VarTablePtr& vars, const Partition& lambda, std::size_t l);

HalfSeries q_plus(const Partition& lambda, std::size_t l, int order_x2, const QDimForm& form = {});
HalfSeries q_minus(const Partition& lambda, std::size_t l, int order_x2, const QDimForm& form = {});

/// (Q⁺ ± Q⁻)/2 by the det flag.
HalfSeries qdim_irreducible(const BLabel& label, std::size_t l, int order_x2, const QDimForm& form = {});

}  // namespace dcorr
