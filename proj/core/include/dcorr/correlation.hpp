#pragma once

// Closed and recursive formulas for the correlation functions.

#include "dcorr/lie.hpp"
#include "dcorr/special_series.hpp"

namespace dcorr {

/// q^{‖λ‖²/2}(t₁⋯tₙ)^{|λ|} ∏_{i<j}(1 − q^{λ_i−λ_j+j−i}) F_bo(q; t)^l with l = |parts|.
HalfSeries gl_function(const Workspace& ws, const GenPartition& lambda, int order_x2);
HalfSeries gl_function(const GenPartition& lambda, std::size_t n, int order_x2);

/// Points of the workspace used by a computation, as a bitmask over t₁…tₙ.
using Subset = unsigned;
inline Subset full_subset(const Workspace& ws) { return (1u << ws.n()) - 1u; }

/// Σ_{ε ∈ {±1}^I} [ε] (Π t_I^ε)^k F_bo(q; t_I^ε).
HalfSeries epsilon_sum(const Workspace& ws, Subset subset, int k, int order_x2);

enum class ZWeight { Formal, PlusOne, MinusOne };

/// Σ_k z^k q^{k²/2} epsilon_sum(k). With ZWeight::Formal, z is the workspace's z1;
/// otherwise z is specialized to ±1.
HalfSeries fock_trace_closed(const Workspace& ws, ZWeight z, int order_x2);
HalfSeries fock_trace_closed(const Workspace& ws, Subset subset, ZWeight z, int order_x2);

/// Level-½ vacuum function on t_I: twisted carries (−1)^α, base (q^{½};q)_∞;
/// untwisted has base (−q^{½};q)_∞. Computed by the subset recursion, memoized.
HalfSeries d_half_vacuum(const Workspace& ws, Subset subset, bool twisted, int order_x2);
HalfSeries d_half_vacuum(const Workspace& ws, bool twisted, int order_x2);

/// Σ_{I ⊆ S} V(t_I) V(t_{S∖I}) for the vacuum function V.
HalfSeries vacuum_convolution(const Workspace& ws, Subset subset, bool twisted, int order_x2);

/// Reading of the prefactor (q^{½})_∞ in the one-point formula.
enum class PochReading { BaseQ, BaseHalfQ };  // (q^{½};q)_∞ or (q^{½};q^{½})_∞

/// −P·Σ_{m≥1} q^{m−½}(t^{m−½} − t^{−m+½})/(1 − q^{m−½}) + P·t^{½}/(t − 1), n = 1.
HalfSeries w2_one_point(const Workspace& ws, PochReading reading, int order_x2);

/// Sign attached to σ ∈ W(B_l) in the Weyl-group sums. Length is (−1)^{ℓ(σ)};
/// Permutation keeps only the sign of the underlying permutation.
enum class WeylSign { Length, Permutation };

/// Σ_σ sign(σ) q^{‖λ+ρ−σ(ρ)‖²/2} ∏_a epsilon_sum(k_a), k = λ+ρ−σ(ρ).
HalfSeries weyl_epsilon_sum(const Workspace& ws, const Partition& lambda, std::size_t l, int order_x2,
                            WeylSign sign = WeylSign::Length);

/// 𝔻^{l+½}_λ: untwisted vacuum prefactor times the Weyl-group sum.
HalfSeries d_sum_function(const Workspace& ws, const Partition& lambda, std::size_t l, int order_x2);
/// 𝔻̄^{l+½}_λ: twisted vacuum prefactor times the Weyl-group sum.
HalfSeries d_twisted_function(const Workspace& ws, const Partition& lambda, std::size_t l, int order_x2,
                              WeylSign sign = WeylSign::Length);
/// 𝔇_λ = (𝔻 + 𝔻̄)/2 and 𝔇_{λ⊗det} = (𝔻 − 𝔻̄)/2.
HalfSeries irreducible_function(const Workspace& ws, const BLabel& label, std::size_t l, int order_x2,
                                WeylSign sign = WeylSign::Length);

}  // namespace dcorr
