#include "dcorr/var_table.hpp"

#include <set>

#include "dcorr/errors.hpp"

namespace dcorr {

VarTable::VarTable(std::vector<VarDesc> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw UsageError("variable with empty name");
    if (!seen.insert(v.name).second) throw UsageError("duplicate variable name '" + v.name + "'");
  }
}

VarTablePtr VarTable::make(std::vector<VarDesc> vars) {
  return std::make_shared<const VarTable>(std::move(vars));
}

VarTablePtr VarTable::empty() {
  static const VarTablePtr table = make({});
  return table;
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_table(const VarTablePtr& a, const VarTablePtr& b, const char* what) {
  if (!same_table(a, b)) throw UsageError(std::string(what) + ": operands use different variable tables");
}

}  // namespace dcorr
