#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcorr {

/// t-type variables are the correlation-function arguments; z-type variables
/// carry the torus grading of the Fock space. Both allow exponents in ½ℤ.
enum class VarKind { T, Z };

struct VarDesc {
  std::string name;
  VarKind kind = VarKind::T;

  friend bool operator==(const VarDesc&, const VarDesc&) = default;
};

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

/// Ordered, immutable list of indeterminates shared by every polynomial of a
/// computation. Two tables are compatible when their descriptors agree.
class VarTable {
 public:
  explicit VarTable(std::vector<VarDesc> vars);

  static VarTablePtr make(std::vector<VarDesc> vars);
  static VarTablePtr empty();

  std::size_t size() const { return vars_.size(); }
  const VarDesc& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<VarDesc>& descriptors() const { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VarTable& a, const VarTable& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<VarDesc> vars_;
};

bool same_table(const VarTablePtr& a, const VarTablePtr& b);

/// Throws UsageError naming `what` when the tables differ.
void require_same_table(const VarTablePtr& a, const VarTablePtr& b, const char* what);

}  // namespace dcorr
