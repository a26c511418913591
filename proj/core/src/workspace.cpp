#include "dcorr/workspace.hpp"

#include "dcorr/errors.hpp"

namespace dcorr {

namespace {

std::vector<VarDesc> names(std::size_t n, std::size_t n_z) {
  std::vector<VarDesc> v;
  for (std::size_t j = 1; j <= n; ++j) v.push_back({"t" + std::to_string(j), VarKind::T});
  for (std::size_t i = 1; i <= n_z; ++i) v.push_back({"z" + std::to_string(i), VarKind::Z});
  return v;
}

}  // namespace

std::shared_ptr<const Workspace> Workspace::symbolic(std::size_t n, std::size_t n_z) {
  std::shared_ptr<Workspace> ws(new Workspace());
  ws->table_ = VarTable::make(names(n, n_z));
  ws->n_ = n;
  ws->n_z_ = n_z;
  return ws;
}

std::shared_ptr<const Workspace> Workspace::evaluated(std::vector<BigRational> u_point, std::size_t n_z) {
  for (const auto& u : u_point)
    if (u == 0) throw UsageError("evaluation point coordinates must be nonzero");
  std::shared_ptr<Workspace> ws(new Workspace());
  ws->table_ = VarTable::make(names(0, n_z));
  ws->n_ = u_point.size();
  ws->n_z_ = n_z;
  ws->evaluated_ = true;
  ws->point_ = std::move(u_point);
  return ws;
}

std::size_t Workspace::t_index(std::size_t j) const {
  if (evaluated_) throw UsageError("t-variables are numeric in an evaluated workspace");
  if (j >= n_) throw UsageError("t index out of range");
  return j;
}

std::size_t Workspace::z_index(std::size_t i) const {
  if (i >= n_z_) throw UsageError("z index out of range");
  return (evaluated_ ? 0 : n_) + i;
}

VarImage Workspace::image_of(const std::vector<int>& t_exps) const {
  if (t_exps.size() != n_) throw UsageError("point has wrong arity");
  VarImage im;
  im.mono.assign(table_->size(), 0);
  for (std::size_t j = 0; j < n_; ++j) {
    const int e = t_exps[j];
    if (e < -1 || e > 1) throw UsageError("point exponents must be in {-1, 0, 1}");
    if (e == 0) continue;
    if (evaluated_) {
      im.scale *= e > 0 ? point_[j] : BigRational(1 / point_[j]);
    } else {
      im.mono[j] = e;
    }
  }
  return im;
}

RatFunc Workspace::t_monomial(const std::vector<int>& t_exps_x2, const BigRational& c) const {
  if (t_exps_x2.size() != n_) throw UsageError("t-monomial has wrong arity");
  Exponents e(table_->size(), 0);
  BigRational scale = c;
  for (std::size_t j = 0; j < n_; ++j) {
    if (t_exps_x2[j] == 0) continue;
    if (evaluated_) {
      scale *= power(point_[j], t_exps_x2[j]);
    } else {
      e[j] = t_exps_x2[j];
    }
  }
  return RatFunc(LaurentPoly::monomial(table_, std::move(e), scale));
}

RatFunc Workspace::z_monomial(const std::vector<int>& z_exps_x2, const BigRational& c) const {
  if (z_exps_x2.size() != n_z_) throw UsageError("z-monomial has wrong arity");
  Exponents e(table_->size(), 0);
  for (std::size_t i = 0; i < n_z_; ++i) e[z_index(i)] = z_exps_x2[i];
  return RatFunc(LaurentPoly::monomial(table_, std::move(e), c));
}

LaurentPoly Workspace::t_diff(std::size_t j) const {
  std::vector<int> up(n_, 0), down(n_, 0);
  up[j] = 1;
  down[j] = -1;
  return t_monomial(up).num() - t_monomial(down).num();
}

HalfSeries Workspace::memo(const std::string& key, const std::function<HalfSeries()>& make) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  HalfSeries value = make();
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.try_emplace(key, std::move(value)).first->second;
}

std::string key_of(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace dcorr
