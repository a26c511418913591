#include <algorithm>
#include <optional>

#include "dcorr/errors.hpp"
#include "zpoly.hpp"

namespace dcorr {
namespace detail {

ZPoly ZPoly::constant(std::size_t n, const BigInt& c) {
  ZPoly p(n);
  if (c != 0) p.terms.emplace(Exponents(n, 0), c);
  return p;
}

bool ZPoly::is_constant() const {
  if (terms.empty()) return true;
  if (terms.size() > 1) return false;
  const auto& e = terms.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void ZPoly::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a.nvars);
  Exponents e(a.nvars);
  BigInt c;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      for (std::size_t i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      r.add_term(e, c);
    }
  }
  return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, -c);
  return r;
}

int degree(const ZPoly& a, std::size_t v) {
  int d = -1;
  for (const auto& [e, c] : a.terms) d = std::max(d, e[v]);
  return d;
}

ZPoly coeff(const ZPoly& a, std::size_t v, int d) {
  ZPoly r(a.nvars);
  for (const auto& [e, c] : a.terms) {
    if (e[v] != d) continue;
    Exponents s = e;
    s[v] = 0;
    r.terms.emplace(std::move(s), c);
  }
  return r;
}

namespace {

ZPoly times_var_power(ZPoly a, std::size_t v, int d) {
  ZPoly r(a.nvars);
  for (auto& [e, c] : a.terms) {
    Exponents s = e;
    s[v] += d;
    r.terms.emplace(std::move(s), std::move(c));
  }
  return r;
}

ZPoly power(const ZPoly& a, int e) {
  ZPoly r = ZPoly::constant(a.nvars, 1);
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

ZPoly normalized(ZPoly a) {
  if (!a.is_zero() && a.terms.rbegin()->second < 0)
    for (auto& [e, c] : a.terms) c = -c;
  return a;
}

BigInt integer_content(const ZPoly& a) {
  BigInt g = 0;
  for (const auto& [e, c] : a.terms) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Content with respect to v: gcd of the coefficients of the powers of x_v.
ZPoly content(const ZPoly& a, std::size_t v) {
  const int d = degree(a, v);
  ZPoly g(a.nvars);
  for (int i = d; i >= 0; --i) {
    ZPoly c = coeff(a, v, i);
    if (c.is_zero()) continue;
    g = zgcd(g, c);
    if (g.is_constant() && g.terms.begin()->second == 1) break;
  }
  return g;
}

// Last nonzero element of the subresultant remainder sequence of a and b in x_v.
ZPoly subresultant_gcd(ZPoly a, ZPoly b, std::size_t v) {
  if (degree(a, v) < degree(b, v)) std::swap(a, b);
  ZPoly g = ZPoly::constant(a.nvars, 1);
  ZPoly h = ZPoly::constant(a.nvars, 1);
  for (;;) {
    const int delta = degree(a, v) - degree(b, v);
    ZPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return b;
    if (degree(r, v) == 0) return r;
    a = std::move(b);
    b = exact_quotient(r, g * power(h, delta));
    g = coeff(a, v, degree(a, v));
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_quotient(power(g, delta), power(h, delta - 1));
    }
  }
}

}  // namespace

ZPoly exact_quotient(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw InvariantError("exact_quotient: division by zero");
  ZPoly q(a.nvars);
  ZPoly r = a;
  const Exponents eb = b.terms.rbegin()->first;
  const BigInt cb = b.terms.rbegin()->second;
  Exponents et(a.nvars), e(a.nvars);
  BigInt ct, rem;
  while (!r.is_zero()) {
    const auto& [er, cr] = *r.terms.rbegin();
    for (std::size_t i = 0; i < a.nvars; ++i) {
      et[i] = er[i] - eb[i];
      if (et[i] < 0) throw InvariantError("exact_quotient: inexact division");
    }
    mpz_tdiv_qr(ct.get_mpz_t(), rem.get_mpz_t(), cr.get_mpz_t(), cb.get_mpz_t());
    if (rem != 0) throw InvariantError("exact_quotient: inexact coefficient division");
    q.add_term(et, ct);
    for (const auto& [ebt, cbt] : b.terms) {
      for (std::size_t i = 0; i < a.nvars; ++i) e[i] = et[i] + ebt[i];
      r.add_term(e, -ct * cbt);
    }
  }
  return q;
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b, std::size_t v) {
  const int m = degree(a, v), n = degree(b, v);
  if (m < n) return a;
  const ZPoly lcb = coeff(b, v, n);
  ZPoly r = a;
  int e = m - n + 1;
  while (!r.is_zero() && degree(r, v) >= n) {
    const int dr = degree(r, v);
    ZPoly lcr = coeff(r, v, dr);
    r = lcb * r - times_var_power(lcr, v, dr - n) * b;
    --e;
  }
  return power(lcb, e) * r;
}

namespace {

std::optional<ZPoly> try_quotient(const ZPoly& a, const ZPoly& b) {
  ZPoly q(a.nvars);
  ZPoly r = a;
  const Exponents eb = b.terms.rbegin()->first;
  const BigInt cb = b.terms.rbegin()->second;
  Exponents et(a.nvars), e(a.nvars);
  BigInt ct, rem;
  while (!r.is_zero()) {
    const auto& [er, cr] = *r.terms.rbegin();
    for (std::size_t i = 0; i < a.nvars; ++i) {
      et[i] = er[i] - eb[i];
      if (et[i] < 0) return std::nullopt;
    }
    mpz_tdiv_qr(ct.get_mpz_t(), rem.get_mpz_t(), cr.get_mpz_t(), cb.get_mpz_t());
    if (rem != 0) return std::nullopt;
    q.add_term(et, ct);
    for (const auto& [ebt, cbt] : b.terms) {
      for (std::size_t i = 0; i < a.nvars; ++i) e[i] = et[i] + ebt[i];
      r.add_term(e, -ct * cbt);
    }
  }
  return q;
}

BigInt max_norm(const ZPoly& a) {
  BigInt m = 0;
  for (const auto& [e, c] : a.terms)
    if (abs(c) > m) m = abs(c);
  return m;
}

ZPoly divided(ZPoly a, const BigInt& c) {
  if (c != 1)
    for (auto& [e, v] : a.terms) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return a;
}

// a with x_v = xi.
ZPoly evaluate_at(const ZPoly& a, std::size_t v, const BigInt& xi) {
  ZPoly r(a.nvars);
  std::map<int, BigInt> pow;
  for (const auto& [e, c] : a.terms) {
    auto it = pow.find(e[v]);
    if (it == pow.end()) {
      BigInt p;
      mpz_pow_ui(p.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(e[v]));
      it = pow.emplace(e[v], p).first;
    }
    Exponents s = e;
    s[v] = 0;
    r.add_term(s, c * it->second);
  }
  return r;
}

// Inverse of evaluate_at on polynomials whose x_v-coefficients are below xi/2 in size.
ZPoly interpolate(const ZPoly& h, std::size_t v, const BigInt& xi) {
  ZPoly g(h.nvars);
  const BigInt half = xi / 2;
  for (const auto& [e, c] : h.terms) {
    BigInt rest = c, digit;
    for (int i = 0; rest != 0; ++i) {
      mpz_fdiv_r(digit.get_mpz_t(), rest.get_mpz_t(), xi.get_mpz_t());
      if (digit > half) digit -= xi;
      Exponents s = e;
      s[v] = i;
      g.add_term(s, digit);
      rest = (rest - digit) / xi;
    }
  }
  return g;
}

// Heuristic gcd by integer evaluation. Inputs have integer content 1; the
// result is checked by trial division, so a returned value is always correct.
std::optional<ZPoly> heuristic_gcd(const ZPoly& a, const ZPoly& b, int depth) {
  std::size_t v = a.nvars;
  for (std::size_t i = a.nvars; i-- > 0;) {
    if (degree(a, i) > 0 || degree(b, i) > 0) {
      v = i;
      break;
    }
  }
  if (v == a.nvars) return ZPoly::constant(a.nvars, 1);
  BigInt xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const ZPoly ea = evaluate_at(a, v, xi);
    const ZPoly eb = evaluate_at(b, v, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      const BigInt ca = integer_content(ea), cb = integer_content(eb);
      BigInt c;
      mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      std::optional<ZPoly> h;
      if (ea.is_constant() || eb.is_constant()) {
        h = ZPoly::constant(a.nvars, 1);
      } else if (depth < 4) {
        h = heuristic_gcd(divided(ea, ca), divided(eb, cb), depth + 1);
      }
      if (h) {
        ZPoly g = interpolate(*h * ZPoly::constant(a.nvars, c), v, xi);
        if (!g.is_zero()) {
          g = normalized(divided(g, integer_content(g)));
          if (try_quotient(a, g) && try_quotient(b, g)) return g;
        }
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

ZPoly prs_gcd(const ZPoly& a, const ZPoly& b) {
  std::size_t v = a.nvars;
  for (std::size_t i = a.nvars; i-- > 0;) {
    if (degree(a, i) > 0 || degree(b, i) > 0) {
      v = i;
      break;
    }
  }
  const ZPoly ca = content(a, v);
  const ZPoly cb = content(b, v);
  const ZPoly c = zgcd(ca, cb);
  const ZPoly pa = exact_quotient(a, ca);
  const ZPoly pb = exact_quotient(b, cb);
  if (degree(pa, v) == 0 || degree(pb, v) == 0) return normalized(c);
  ZPoly g = subresultant_gcd(pa, pb, v);
  if (degree(g, v) == 0) return normalized(c);
  g = exact_quotient(g, content(g, v));
  return normalized(c * g);
}

ZPoly zgcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  const BigInt ia = integer_content(a), ib = integer_content(b);
  BigInt ic;
  mpz_gcd(ic.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return ZPoly::constant(a.nvars, ic);
  const ZPoly pa = divided(a, ia), pb = divided(b, ib);
  if (auto g = heuristic_gcd(pa, pb, 0)) return normalized(*g * ZPoly::constant(a.nvars, ic));
  return normalized(prs_gcd(pa, pb) * ZPoly::constant(a.nvars, ic));
}

ZPoly heuristic_or_prs_gcd(const ZPoly& a, const ZPoly& b, bool heuristic) {
  if (a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant()) return zgcd(a, b);
  const BigInt ia = integer_content(a), ib = integer_content(b);
  BigInt ic;
  mpz_gcd(ic.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
  const ZPoly pa = divided(a, ia), pb = divided(b, ib);
  std::optional<ZPoly> g = heuristic ? heuristic_gcd(pa, pb, 0) : std::optional<ZPoly>(prs_gcd(pa, pb));
  if (!g) throw InvariantError("heuristic gcd gave up");
  return normalized(*g * ZPoly::constant(a.nvars, ic));
}

namespace {

// Clears denominators and the monomial factor; the result carries no unit
// information and is only meaningful up to c·x^m.
ZPoly to_zpoly(const LaurentPoly& p) {
  const std::size_t n = p.vars()->size();
  const Exponents m = p.min_exponents();
  BigInt l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(n);
  for (const auto& [e, c] : p.terms()) {
    Exponents s = e;
    for (std::size_t i = 0; i < n; ++i) s[i] -= m[i];
    BigInt v = c.get_num() * (l / c.get_den());
    z.terms.emplace(std::move(s), std::move(v));
  }
  return z;
}

}  // namespace
}  // namespace detail

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_table(a.vars(), b.vars(), "gcd");
  const auto& vars = a.vars();
  if (a.is_zero() && b.is_zero()) return LaurentPoly(vars);
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly(vars, 1);
  detail::ZPoly g = detail::zgcd(detail::to_zpoly(a), detail::to_zpoly(b));
  LaurentPoly r(vars);
  if (g.is_constant()) return LaurentPoly(vars, 1);
  BigInt content = 0;
  for (const auto& [e, c] : g.terms) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (const auto& [e, c] : g.terms) r.add_term(e, BigRational(c / content));
  return r;
}

}  // namespace dcorr
