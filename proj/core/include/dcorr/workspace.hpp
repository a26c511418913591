#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dcorr/series.hpp"

namespace dcorr {

/// Shared setting for one family of computations with n points t₁…tₙ and
/// optionally z-variables z₁…z_m.
///
/// In symbolic mode the table is (t1, …, tn, z1, …, zm). In evaluated mode each
/// u_j = t_j^{½} is a fixed nonzero rational and only the z's remain symbolic;
/// every t-monomial collapses to a number. Series built for the same workspace
/// are cached by key.
class Workspace {
 public:
  static std::shared_ptr<const Workspace> symbolic(std::size_t n, std::size_t n_z = 0);
  static std::shared_ptr<const Workspace> evaluated(std::vector<BigRational> u_point, std::size_t n_z = 0);

  const VarTablePtr& table() const { return table_; }
  std::size_t n() const { return n_; }
  std::size_t n_z() const { return n_z_; }
  bool is_evaluated() const { return evaluated_; }
  const std::vector<BigRational>& point() const { return point_; }

  /// Table index of t_j (symbolic mode) and of z_i.
  std::size_t t_index(std::size_t j) const;
  std::size_t z_index(std::size_t i) const;

  /// Image of u_x = x^{½} for x = ∏ t_j^{e_j}, e_j ∈ {−1, 0, 1}.
  VarImage image_of(const std::vector<int>& t_exps) const;

  /// ∏ t_j^{e_j/2} for doubled exponents e, as an element of the coefficient field.
  RatFunc t_monomial(const std::vector<int>& t_exps_x2, const BigRational& c = 1) const;
  RatFunc z_monomial(const std::vector<int>& z_exps_x2, const BigRational& c = 1) const;

  /// t_j^{½} − t_j^{−½}.
  LaurentPoly t_diff(std::size_t j) const;

  /// Returns the cached series under `key`, computing it with `make` on a miss.
  /// `make` may itself call memo (no lock is held while it runs).
  HalfSeries memo(const std::string& key, const std::function<HalfSeries()>& make) const;

 private:
  Workspace() = default;

  VarTablePtr table_;
  std::size_t n_ = 0;
  std::size_t n_z_ = 0;
  bool evaluated_ = false;
  std::vector<BigRational> point_;

  mutable std::mutex mutex_;
  mutable std::map<std::string, HalfSeries> cache_;
};

using WorkspacePtr = std::shared_ptr<const Workspace>;

/// Compact cache-key text for an integer vector.
std::string key_of(const std::vector<int>& v);

}  // namespace dcorr
