#pragma once

// Partitions, Σ(B) labels, the hyperoctahedral group W(B_l) and type-B characters.

#include <string>
#include <utility>
#include <vector>

#include "dcorr/half_int.hpp"
#include "dcorr/ratfunc.hpp"

namespace dcorr {

/// λ₁ ≥ … ≥ λ_k ≥ 0. Trailing zeros are kept; `padded(l)` extends to length l.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  std::size_t length() const { return parts.size(); }
  int size() const;  // |λ|
  std::vector<int> padded(std::size_t l) const;
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Weakly decreasing integers, negative entries allowed.
struct GenPartition {
  std::vector<int> parts;

  GenPartition() = default;
  explicit GenPartition(std::vector<int> p);
};

/// Irreducible O(2l+1) label: λ or λ⊗det.
struct BLabel {
  Partition partition;
  bool det = false;

  std::string str() const;
  friend bool operator==(const BLabel&, const BLabel&) = default;
};

/// All partitions with at most `max_len` parts, each part ≤ max_part, as
/// length-`max_len` vectors. Ordered by size, then reverse lexicographically.
std::vector<Partition> partitions_in_box(std::size_t max_len, int max_part);

/// Element of W(B_l): v ↦ (signs[i]·v[perm⁻¹(i)])_i. `perm` is 0-based, perm[i] = σ(i).
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> signs;

  static SignedPerm identity(std::size_t l);
  std::size_t rank() const { return perm.size(); }
  int permutation_sign() const;
  /// (−1)^{ℓ(σ)}: determinant of the signed permutation matrix.
  int character() const;
  std::vector<int> inverse_perm() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
};

using WeightVec = std::vector<HalfInt>;

/// Product στ, acting as σ after τ.
SignedPerm compose(const SignedPerm& sigma, const SignedPerm& tau);

/// (σ, (−1)^{ℓ(σ)}) for all 2^l·l! elements, in a fixed order.
std::vector<std::pair<SignedPerm, int>> enumerate_WB(std::size_t l);

WeightVec rho_B(std::size_t l);
WeightVec act(const SignedPerm& sigma, const WeightVec& v);
BigRational norm_sq(const WeightVec& v);
/// Four times the squared norm; an integer for half-integral vectors.
int norm_sq_x4(const WeightVec& v);

/// λ + ρ − σ(ρ), whose components are integers.
std::vector<int> shifted_weight(const Partition& lambda, const SignedPerm& sigma);

/// Table z1 … zl of z-type variables.
VarTablePtr z_table(std::size_t l);

/// Σ_{σ ∈ W(B_l)} (−1)^{ℓ(σ)} z^{σ(ρ)} in z_table(l).
LaurentPoly weyl_denominator_B(std::size_t l);

enum class EntrySign { Minus, Plus };

/// det(z_j^{a_i} ∓ z_j^{−a_i})_{i,j} for half-integers a_i, in z_table(a.size()).
LaurentPoly alternant(const std::vector<HalfInt>& a, EntrySign sign = EntrySign::Minus);

/// Determinant of a square matrix of Laurent polynomials by cofactor expansion.
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m);

/// Character of the O(2l+1)-module labelled by λ (λ and λ⊗det agree), as the
/// exact quotient of two alternants. Throws InvariantError if the division is inexact.
LaurentPoly char_B(const Partition& lambda, std::size_t l);

/// (ε, ε₁⋯ε_n) for all ε ∈ {±1}^n; ε = (+1,…,+1) first.
std::vector<std::pair<std::vector<int>, int>> sign_vectors(std::size_t n);

}  // namespace dcorr
