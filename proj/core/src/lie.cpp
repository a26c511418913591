#include "dcorr/lie.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "dcorr/errors.hpp"

namespace dcorr {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw UsageError("partition parts must be non-negative");
    if (i > 0 && parts[i] > parts[i - 1]) throw UsageError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> Partition::padded(std::size_t l) const {
  std::vector<int> v = parts;
  while (v.size() > l && v.back() == 0) v.pop_back();
  if (v.size() > l) throw UsageError("partition " + str() + " has more than " + std::to_string(l) + " non-zero parts");
  v.resize(l, 0);
  return v;
}

std::string Partition::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
  out << ')';
  return out.str();
}

GenPartition::GenPartition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) throw UsageError("generalized partition must be weakly decreasing");
}

std::string BLabel::str() const { return partition.str() + (det ? "⊗det" : ""); }

std::vector<Partition> partitions_in_box(std::size_t max_len, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur(max_len, 0);
  // Depth-first over weakly decreasing sequences.
  auto rec = [&](auto&& self, std::size_t i, int cap) -> void {
    if (i == max_len) {
      out.emplace_back(cur);
      return;
    }
    for (int v = cap; v >= 0; --v) {
      cur[i] = v;
      self(self, i + 1, v);
    }
    cur[i] = 0;
  };
  rec(rec, 0, max_part);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.size() < b.size(); });
  return out;
}

SignedPerm SignedPerm::identity(std::size_t l) {
  SignedPerm s;
  s.perm.resize(l);
  std::iota(s.perm.begin(), s.perm.end(), 0);
  s.signs.assign(l, 1);
  return s;
}

int SignedPerm::permutation_sign() const {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

int SignedPerm::character() const {
  int c = permutation_sign();
  for (int s : signs) c *= s;
  return c;
}

std::vector<int> SignedPerm::inverse_perm() const {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  return inv;
}

SignedPerm compose(const SignedPerm& sigma, const SignedPerm& tau) {
  if (sigma.rank() != tau.rank()) throw UsageError("compose: ranks differ");
  const std::size_t l = sigma.rank();
  const std::vector<int> sigma_inv = sigma.inverse_perm();
  SignedPerm r;
  r.perm.resize(l);
  r.signs.resize(l);
  for (std::size_t i = 0; i < l; ++i) {
    r.perm[i] = sigma.perm[static_cast<std::size_t>(tau.perm[i])];
    r.signs[i] = sigma.signs[i] * tau.signs[static_cast<std::size_t>(sigma_inv[i])];
  }
  return r;
}

std::vector<std::pair<SignedPerm, int>> enumerate_WB(std::size_t l) {
  std::vector<std::pair<SignedPerm, int>> out;
  SignedPerm s = SignedPerm::identity(l);
  do {
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      for (std::size_t i = 0; i < l; ++i) s.signs[i] = (mask >> i) & 1u ? -1 : 1;
      out.emplace_back(s, s.character());
    }
  } while (std::next_permutation(s.perm.begin(), s.perm.end()));
  return out;
}

WeightVec rho_B(std::size_t l) {
  WeightVec rho(l);
  for (std::size_t i = 0; i < l; ++i) rho[i] = HalfInt::from_x2(static_cast<int>(2 * (l - i)) - 1);
  return rho;
}

WeightVec act(const SignedPerm& sigma, const WeightVec& v) {
  if (sigma.rank() != v.size()) throw UsageError("act: rank mismatch");
  WeightVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto j = static_cast<std::size_t>(sigma.perm[i]);
    r[j] = HalfInt::from_x2(sigma.signs[j] * v[i].x2);
  }
  return r;
}

int norm_sq_x4(const WeightVec& v) {
  int s = 0;
  for (const auto& x : v) s += x.x2 * x.x2;
  return s;
}

BigRational norm_sq(const WeightVec& v) {
  BigRational r(norm_sq_x4(v), 4);
  r.canonicalize();
  return r;
}

std::vector<int> shifted_weight(const Partition& lambda, const SignedPerm& sigma) {
  const std::size_t l = sigma.rank();
  const std::vector<int> lam = lambda.padded(l);
  const WeightVec rho = rho_B(l);
  const WeightVec srho = act(sigma, rho);
  std::vector<int> k(l);
  for (std::size_t i = 0; i < l; ++i) k[i] = lam[i] + (rho[i].x2 - srho[i].x2) / 2;
  return k;
}

VarTablePtr z_table(std::size_t l) {
  std::vector<VarDesc> v;
  for (std::size_t i = 1; i <= l; ++i) v.push_back({"z" + std::to_string(i), VarKind::Z});
  return VarTable::make(std::move(v));
}

LaurentPoly weyl_denominator_B(std::size_t l) {
  VarTablePtr z = z_table(l);
  LaurentPoly r(z);
  const WeightVec rho = rho_B(l);
  for (const auto& [sigma, chi] : enumerate_WB(l)) {
    const WeightVec w = act(sigma, rho);
    Exponents e(l);
    for (std::size_t i = 0; i < l; ++i) e[i] = w[i].x2;
    r.add_term(e, chi);
  }
  return r;
}

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw UsageError("determinant of an empty matrix needs a variable table");
  for (const auto& row : m)
    if (row.size() != n) throw UsageError("determinant: matrix is not square");
  if (n > 20) throw UsageError("determinant: matrix too large for cofactor expansion");
  // minor(mask) = determinant of rows popcount(mask).. with the columns NOT in mask.
  std::unordered_map<unsigned, LaurentPoly> memo;
  auto minor = [&](auto&& self, unsigned used) -> LaurentPoly {
    const auto row = static_cast<std::size_t>(__builtin_popcount(used));
    if (row == n) return LaurentPoly(m[0][0].vars(), 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    LaurentPoly acc(m[0][0].vars());
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      if (!m[row][c].is_zero()) {
        LaurentPoly term = m[row][c] * self(self, used | (1u << c));
        if (sign > 0) acc += term; else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(minor, 0u);
}

LaurentPoly alternant(const std::vector<HalfInt>& a, EntrySign sign) {
  const std::size_t l = a.size();
  VarTablePtr z = z_table(l);
  if (l == 0) return LaurentPoly(z, 1);
  std::vector<std::vector<LaurentPoly>> m(l, std::vector<LaurentPoly>(l, LaurentPoly(z)));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      Exponents e(l, 0);
      e[j] = a[i].x2;
      m[i][j] = LaurentPoly::monomial(z, e);
      e[j] = -a[i].x2;
      m[i][j].add_term(e, sign == EntrySign::Minus ? -1 : 1);
    }
  }
  return determinant(m);
}

LaurentPoly char_B(const Partition& lambda, std::size_t l) {
  const std::vector<int> lam = lambda.padded(l);
  const WeightVec rho = rho_B(l);
  std::vector<HalfInt> top(l);
  for (std::size_t i = 0; i < l; ++i) top[i] = HalfInt::integer(lam[i]) + rho[i];
  const LaurentPoly num = alternant(top);
  const LaurentPoly den = alternant(rho);
  auto q = divide_exact(num, den);
  if (!q) throw InvariantError("char_B: alternant quotient is not exact for " + lambda.str());
  return *q;
}

std::vector<std::pair<std::vector<int>, int>> sign_vectors(std::size_t n) {
  std::vector<std::pair<std::vector<int>, int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> e(n);
    int prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = (mask >> i) & 1u ? -1 : 1;
      prod *= e[i];
    }
    out.emplace_back(std::move(e), prod);
  }
  return out;
}

}  // namespace dcorr
