#pragma once

// Brute-force Fock space of l complex fermion pairs and (optionally) one neutral fermion.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dcorr/lie.hpp"
#include "dcorr/workspace.hpp"

namespace dcorr {

/// Families are ordered ψ^{+,1}, ψ^{−,1}, …, ψ^{+,l}, ψ^{−,l}, φ.
struct FockSpace {
  std::size_t pairs = 0;
  bool neutral = true;

  std::size_t families() const { return 2 * pairs + (neutral ? 1 : 0); }
  std::size_t plus_family(std::size_t p) const { return 2 * p; }
  std::size_t minus_family(std::size_t p) const { return 2 * p + 1; }
  std::size_t neutral_family() const { return 2 * pairs; }
  /// Twice the level C: 2l + 1 with the neutral fermion, 2l without.
  int central_x2() const { return static_cast<int>(2 * pairs) + (neutral ? 1 : 0); }
};

/// Occupation bitmask per family; bit j set means mode j + ½ is excited.
struct FockState {
  std::vector<std::uint32_t> occ;

  friend auto operator<=>(const FockState&, const FockState&) = default;
  friend bool operator==(const FockState&, const FockState&) = default;
};

struct Gradings {
  int energy_x2 = 0;
  std::vector<int> charges;  // |plus_p| − |minus_p|
  int alpha_parity = 0;      // |neutral| mod 2
};

Gradings gradings(const FockSpace& space, const FockState& s);
FockState vacuum(const FockSpace& space);

/// All states with energy ≤ max_energy, grouped by doubled energy (index = energy_x2).
std::vector<std::vector<FockState>> enumerate_states(const FockSpace& space, int max_energy_x2);

/// A fermion mode ψ^{±,p}_n or φ_n with n = mode_x2/2 ∈ ℤ + ½.
struct Fermion {
  enum class Kind { PsiPlus, PsiMinus, Phi };
  Kind kind = Kind::Phi;
  std::size_t pair = 0;
  int mode_x2 = 1;

  bool annihilates() const { return mode_x2 > 0; }
};

/// Applies one fermion operator: (sign, new state), or nullopt when the result is 0.
std::optional<std::pair<int, FockState>> apply_fermion(const FockSpace& space, const Fermion& f, const FockState& s);

/// Finite linear combination of basis states.
template <typename Coeff>
using StateSum = std::map<FockState, Coeff>;
using StateVector = StateSum<RatFunc>;

/// a·b applied to s (b first), normal ordered when `normal_ordered` is set.
StateSum<int> apply_bilinear(const FockSpace& space, const Fermion& a, const Fermion& b, const FockState& s,
                             bool normal_ordered = false);

/// How 𝔇(t) acts on the composite space. Additive is the Lie-algebra action
/// (sum over families, central term 2C/(t^{½}−t^{−½})). Factorized is the
/// product over species (φ; each pair) of each species' own 𝔇(t).
enum class Realization { Additive, Factorized };

/// 𝔇(t_j) applied to s, coefficients in ws.
StateVector apply_D(const FockSpace& space, const Workspace& ws, std::size_t j, const FockState& s,
                    Realization realization = Realization::Additive);

struct TraceOptions {
  enum class Projector { None, Even, Odd };

  bool z_grading = false;           // z_p^{charge_p}, needs ws.n_z() ≥ pairs
  bool parity_sign = false;         // (−1)^α
  bool charge_parity_sign = false;  // (−1)^{Σ charge_p}
  Projector projector = Projector::None;  // onto even or odd α
  Realization realization = Realization::Additive;
  /// Order of the points t_{points[0]} … in the operator product; empty means t₁…tₙ.
  std::vector<std::size_t> points;
};

/// tr q^{L₀} (insertions) 𝔇(t_{i₁})⋯𝔇(t_{i_n}) level by level, exact through max_energy.
HalfSeries oracle_trace(const FockSpace& space, const Workspace& ws, int max_energy_x2, const TraceOptions& options = {});

enum class DenominatorReading { Minus, Plus };

/// Multiplies a z-graded trace by the type-B denominator (Minus: the alternating
/// sum; Plus: det(z_j^{ρ_i} + z_j^{−ρ_i})) and reads off the coefficient of z^{λ+ρ}.
/// The result lives on the t-variables only. Throws std::out_of_range when
/// `order_x2` exceeds the trace's order.
HalfSeries extract_module_function(const HalfSeries& trace, const Partition& lambda, std::size_t l,
                                   DenominatorReading reading = DenominatorReading::Minus,
                                   std::optional<int> order_x2 = std::nullopt);

}  // namespace dcorr
