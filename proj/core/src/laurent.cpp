#include "dcorr/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "dcorr/errors.hpp"

namespace dcorr {

LaurentPoly::LaurentPoly(VarTablePtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw UsageError("LaurentPoly requires a variable table");
}

LaurentPoly::LaurentPoly(VarTablePtr vars, const BigRational& constant) : LaurentPoly(std::move(vars)) {
  if (constant != 0) terms_.emplace(Exponents(vars_->size(), 0), constant);
}

LaurentPoly LaurentPoly::monomial(VarTablePtr vars, Exponents exps_x2, const BigRational& coeff) {
  LaurentPoly p(std::move(vars));
  if (exps_x2.size() != p.vars_->size()) throw UsageError("monomial: exponent vector has wrong length");
  if (coeff != 0) p.terms_.emplace(std::move(exps_x2), coeff);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

BigRational LaurentPoly::constant_term() const {
  auto it = terms_.find(Exponents(vars_->size(), 0));
  return it == terms_.end() ? BigRational(0) : it->second;
}

const Exponents& LaurentPoly::leading_exponents() const {
  if (terms_.empty()) throw UsageError("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const BigRational& LaurentPoly::leading_coefficient() const {
  if (terms_.empty()) throw UsageError("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

Exponents LaurentPoly::min_exponents() const {
  Exponents m(vars_->size(), 0);
  if (terms_.empty()) return m;
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Exponents LaurentPoly::max_exponents() const {
  Exponents m(vars_->size(), 0);
  if (terms_.empty()) return m;
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

void LaurentPoly::add_term(const Exponents& exps_x2, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps_x2, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_table(vars_, other.vars_, "LaurentPoly addition");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_table(vars_, other.vars_, "LaurentPoly subtraction");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_table(a.vars_, b.vars_, "LaurentPoly multiplication");
  LaurentPoly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = a.vars_->size();
  Exponents e(n);
  BigRational c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      r.add_term(e, c);
    }
  }
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return same_table(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::tddt(std::size_t var) const {
  if (var >= vars_->size()) throw UsageError("tddt: variable index out of range");
  if ((*vars_)[var].kind != VarKind::T) throw UsageError("tddt: variable '" + (*vars_)[var].name + "' is not t-type");
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    BigRational half(e[var], 2);
    half.canonicalize();
    r.terms_.emplace(e, c * half);
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponents& by) const {
  if (by.size() != vars_->size()) throw UsageError("shifted: exponent vector has wrong length");
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += by[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(s), c);
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigRational mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << '*';
      any = true;
      mono << (*vars_)[i].name;
      if (e[i] != 2) mono << "^{" << HalfInt::from_x2(e[i]).str() << '}';
    }
    if (!any) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << '*';
      out << mono.str();
    }
  }
  return out.str();
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_table(a.vars(), b.vars(), "divide_exact");
  if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
  LaurentPoly q(a.vars());
  if (a.is_zero()) return q;
  const std::size_t n = a.vars()->size();
  if (b.is_monomial()) {
    const auto& [eb, cb] = *b.terms().begin();
    Exponents neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = -eb[i];
    return a.shifted(neg) * BigRational(1 / cb);
  }
  Exponents ma = a.min_exponents(), mb = b.min_exponents();
  Exponents neg_a(n), neg_b(n), back(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_a[i] = -ma[i];
    neg_b[i] = -mb[i];
    back[i] = ma[i] - mb[i];
  }
  LaurentPoly r = a.shifted(neg_a);
  const LaurentPoly bs = b.shifted(neg_b);
  const Exponents& eb = bs.leading_exponents();
  const BigRational& cb = bs.leading_coefficient();
  Exponents et(n), e(n);
  while (!r.is_zero()) {
    const Exponents& er = r.leading_exponents();
    for (std::size_t i = 0; i < n; ++i) {
      et[i] = er[i] - eb[i];
      if (et[i] < 0) return std::nullopt;
    }
    BigRational ct = r.leading_coefficient() / cb;
    q.add_term(et, ct);
    for (const auto& [ebt, cbt] : bs.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = et[i] + ebt[i];
      r.add_term(e, -ct * cbt);
    }
  }
  return q.shifted(back);
}

VarMap::VarMap(VarTablePtr source, VarTablePtr target, std::vector<VarImage> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size()) throw UsageError("VarMap: one image per source variable required");
  for (auto& im : images_) {
    if (im.mono.empty()) im.mono.assign(target_->size(), 0);
    if (im.mono.size() != target_->size()) throw UsageError("VarMap: image monomial has wrong length");
    if (im.scale == 0) throw UsageError("VarMap: zero scale");
  }
}

VarMap VarMap::identity(const VarTablePtr& table) {
  std::vector<VarImage> images(table->size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i].mono.assign(table->size(), 0);
    images[i].mono[i] = 1;
  }
  return VarMap(table, table, std::move(images));
}

LaurentPoly VarMap::apply(const LaurentPoly& p) const {
  require_same_table(p.vars(), source_, "VarMap::apply");
  LaurentPoly r(target_);
  const std::size_t ns = source_->size(), nt = target_->size();
  // Powers of the scales recur across terms; cache them per variable.
  std::vector<std::map<int, BigRational>> scale_pow(ns);
  Exponents e(nt);
  for (const auto& [es, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    BigRational coeff = c;
    for (std::size_t i = 0; i < ns; ++i) {
      const int k = es[i];
      if (k == 0) continue;
      const VarImage& im = images_[i];
      for (std::size_t j = 0; j < nt; ++j) e[j] += k * im.mono[j];
      if (im.scale != 1) {
        auto it = scale_pow[i].find(k);
        if (it == scale_pow[i].end()) it = scale_pow[i].emplace(k, power(im.scale, k)).first;
        coeff *= it->second;
      }
    }
    r.add_term(e, coeff);
  }
  return r;
}

}  // namespace dcorr
