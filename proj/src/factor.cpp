// Factorization of squarefree polynomials over Q by the Zassenhaus method:
// Berlekamp factorization modulo a small prime, linear Hensel lifting to a
// prime power beyond the Mignotte bound, then recombination of lifted factors
// by trial division over Z.

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "vhiggs/algebra.hpp"

namespace vhiggs::algebra {
namespace {

using ZPoly = std::vector<Integer>;
using ModPoly = std::vector<int64_t>;

// ---- arithmetic in F_p[x] --------------------------------------------------

int64_t mod(int64_t a, int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

int64_t pow_mod(int64_t b, int64_t e, int64_t p) {
  int64_t r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

int64_t inv_mod(int64_t a, int64_t p) { return pow_mod(a, p - 2, p); }

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly mp_sub(ModPoly a, const ModPoly& b, int64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

ModPoly mp_add(ModPoly a, const ModPoly& b, int64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  trim(a);
  return a;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> mp_divmod(ModPoly a, const ModPoly& b, int64_t p) {
  const int db = deg(b);
  if (db < 0) throw Error("division by zero mod p");
  if (deg(a) < db) return {{}, a};
  ModPoly q(static_cast<size_t>(deg(a) - db) + 1, 0);
  const int64_t inv = inv_mod(b.back(), p);
  for (int k = deg(a) - db; k >= 0; --k) {
    int64_t c = a[static_cast<size_t>(k + db)] * inv % p;
    q[static_cast<size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<size_t>(k + j);
      a[idx] = mod(a[idx] - c * b[static_cast<size_t>(j)], p);
    }
  }
  a.resize(static_cast<size_t>(db));
  trim(a);
  trim(q);
  return {q, a};
}

ModPoly mp_monic(ModPoly f, int64_t p) {
  if (f.empty()) return f;
  int64_t inv = inv_mod(f.back(), p);
  for (auto& c : f) c = c * inv % p;
  return f;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, int64_t p) {
  while (!b.empty()) {
    ModPoly r = mp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}

struct ModBezout {
  ModPoly s, t;
};

// s*a + t*b = 1 for coprime a, b.
ModBezout mp_bezout(const ModPoly& a, const ModPoly& b, int64_t p) {
  ModPoly r0 = a, r1 = b, s0 = {1}, s1, t0, t1 = {1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw Error("Hensel lifting needs coprime factors");
  int64_t inv = inv_mod(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

ModPoly mp_derivative(const ModPoly& f, int64_t p) {
  if (f.size() <= 1) return {};
  ModPoly d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) d[i - 1] = static_cast<int64_t>(i) % p * f[i] % p;
  trim(d);
  return d;
}

ModPoly reduce(const ZPoly& f, int64_t p) {
  ModPoly r(f.size());
  Integer pz = static_cast<long>(p);
  for (size_t i = 0; i < f.size(); ++i) {
    Integer c;
    mpz_fdiv_r(c.get_mpz_t(), f[i].get_mpz_t(), pz.get_mpz_t());
    r[i] = c.get_si();
  }
  trim(r);
  return r;
}

// Nullspace basis of a square matrix over F_p.
std::vector<std::vector<int64_t>> nullspace(std::vector<std::vector<int64_t>> a, int64_t p) {
  const size_t n = a.size();
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  size_t row = 0;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t sel = row;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(a[sel], a[row]);
    int64_t inv = inv_mod(a[row][col], p);
    for (auto& x : a[row]) x = x * inv % p;
    for (size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      int64_t f = a[r][col];
      for (size_t c = 0; c < n; ++c) a[r][c] = mod(a[r][c] - f * a[row][c], p);
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    is_pivot[col] = true;
    ++row;
  }
  std::vector<std::vector<int64_t>> basis;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int64_t> v(n, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      v[static_cast<size_t>(pivot_col_of_row[r])] = mod(-a[r][free], p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Monic irreducible factors of a monic squarefree f over F_p.
std::vector<ModPoly> berlekamp(const ModPoly& f, int64_t p) {
  const int n = deg(f);
  if (n <= 1) return {f};
  ModPoly xp = {1};
  {
    ModPoly base = {0, 1};
    int64_t e = p;
    while (e > 0) {
      if (e & 1) xp = mp_divmod(mp_mul(xp, base, p), f, p).second;
      base = mp_divmod(mp_mul(base, base, p), f, p).second;
      e >>= 1;
    }
  }
  // Column i of a holds x^(i p) mod f, so a - I acts on coefficient vectors
  // g with g^p == g (mod f) in its kernel.
  std::vector<std::vector<int64_t>> a(static_cast<size_t>(n), std::vector<int64_t>(static_cast<size_t>(n), 0));
  ModPoly cur = {1};
  for (int i = 0; i < n; ++i) {
    for (size_t j = 0; j < cur.size(); ++j) a[j][static_cast<size_t>(i)] = cur[j];
    cur = mp_divmod(mp_mul(cur, xp, p), f, p).second;
  }
  for (int i = 0; i < n; ++i) {
    auto k = static_cast<size_t>(i);
    a[k][k] = mod(a[k][k] - 1, p);
  }
  auto basis = nullspace(std::move(a), p);
  const size_t r = basis.size();
  std::vector<ModPoly> factors = {f};
  for (const auto& v : basis) {
    if (factors.size() == r) break;
    ModPoly g(v.begin(), v.end());
    trim(g);
    if (deg(g) <= 0) continue;
    std::vector<ModPoly> next;
    for (const auto& h : factors) {
      if (deg(h) <= 1) {
        next.push_back(h);
        continue;
      }
      ModPoly rest = h;
      for (int64_t s = 0; s < p && deg(rest) > 1; ++s) {
        ModPoly shifted = mp_sub(g, ModPoly{s}, p);
        ModPoly d = mp_gcd(rest, shifted, p);
        if (deg(d) > 0 && deg(d) < deg(rest)) {
          next.push_back(d);
          rest = mp_divmod(rest, d, p).first;
        }
      }
      next.push_back(rest);
    }
    factors = std::move(next);
  }
  if (factors.size() != r) throw Error("Berlekamp splitting did not separate all factors");
  return factors;
}

// ---- arithmetic in Z[x] and Z/M[x] -----------------------------------------

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly z_mod(ZPoly f, const Integer& m) {
  for (auto& c : f) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(f);
  return f;
}

ZPoly z_of(const ModPoly& f) {
  ZPoly r;
  r.reserve(f.size());
  for (int64_t c : f) r.emplace_back(static_cast<long>(c));
  return r;
}

ZPoly symmetric(ZPoly f, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : f) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(f);
  return f;
}

ZPoly primitive(ZPoly f) {
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return f;
  if (f.back() < 0) g = -g;
  for (auto& c : f) c /= g;
  return f;
}

// Exact division over Z; nullopt if b does not divide a.
std::optional<ZPoly> z_divide(const ZPoly& a, const ZPoly& b) {
  if (deg(a) < deg(b)) return std::nullopt;
  ZPoly rem = a;
  ZPoly q(static_cast<size_t>(deg(a) - deg(b)) + 1, Integer(0));
  const int db = deg(b);
  for (int k = deg(a) - db; k >= 0; --k) {
    const Integer& top = rem[static_cast<size_t>(k + db)];
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer c = top / b.back();
    q[static_cast<size_t>(k)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= c * b[static_cast<size_t>(j)];
  }
  trim(rem);
  if (!rem.empty()) return std::nullopt;
  trim(q);
  return q;
}

// Lifts f = a0 * b0 (mod p, both monic) to f = a * b (mod modulus).
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, const ModPoly& a0, const ModPoly& b0, int64_t p,
                                    const Integer& modulus) {
  auto [s, t] = mp_bezout(a0, b0, p);
  ZPoly a = z_of(a0);
  ZPoly b = z_of(b0);
  Integer m = static_cast<long>(p);
  Integer pz = static_cast<long>(p);
  while (m < modulus) {
    ZPoly ab = z_mul(a, b);
    ZPoly diff = f;
    if (ab.size() > diff.size()) diff.resize(ab.size(), Integer(0));
    for (size_t i = 0; i < ab.size(); ++i) diff[i] -= ab[i];
    ModPoly e(diff.size());
    for (size_t i = 0; i < diff.size(); ++i) {
      Integer q = diff[i] / m;  // exact: a*b == f mod m
      mpz_fdiv_r(q.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t());
      e[i] = q.get_si();
    }
    trim(e);
    auto [quo, rem] = mp_divmod(mp_mul(t, e, p), a0, p);
    ModPoly da = rem;
    ModPoly db = mp_add(mp_mul(s, e, p), mp_mul(quo, b0, p), p);
    for (size_t i = 0; i < da.size(); ++i) {
      if (i >= a.size()) a.resize(i + 1, Integer(0));
      a[i] += m * static_cast<long>(da[i]);
    }
    for (size_t i = 0; i < db.size(); ++i) {
      if (i >= b.size()) b.resize(i + 1, Integer(0));
      b[i] += m * static_cast<long>(db[i]);
    }
    m *= pz;
  }
  return {z_mod(a, modulus), z_mod(b, modulus)};
}

ModPoly mp_product(const std::vector<ModPoly>& fs, size_t lo, size_t hi, int64_t p) {
  ModPoly r = {1};
  for (size_t i = lo; i < hi; ++i) r = mp_mul(r, fs[i], p);
  return r;
}

void hensel_lift(const ZPoly& f, const std::vector<ModPoly>& fs, size_t lo, size_t hi, int64_t p,
                 const Integer& modulus, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(z_mod(f, modulus));
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  auto [a, b] = hensel_pair(f, mp_product(fs, lo, mid, p), mp_product(fs, mid, hi, p), p, modulus);
  hensel_lift(a, fs, lo, mid, p, modulus, out);
  hensel_lift(b, fs, mid, hi, p, modulus, out);
}

const std::vector<int64_t>& small_primes() {
  static const std::vector<int64_t> primes = [] {
    std::vector<int64_t> ps;
    for (int64_t n = 3; ps.size() < 200; n += 2) {
      bool prime = true;
      for (int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
          prime = false;
          break;
        }
      }
      if (prime) ps.push_back(n);
    }
    return ps;
  }();
  return primes;
}

// Irreducible factors (primitive, positive leading coefficient) of a
// primitive squarefree integer polynomial of degree >= 2.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  const int n = deg(f);
  const Integer lc = f.back();

  // Among the first few admissible primes pick the one with fewest modular
  // factors; fewer factors means a cheaper recombination.
  int64_t best_p = 0;
  std::vector<ModPoly> best_factors;
  int admissible = 0;
  for (int64_t p : small_primes()) {
    Integer pz = static_cast<long>(p);
    if (mpz_divisible_p(lc.get_mpz_t(), pz.get_mpz_t())) continue;
    ModPoly fp = reduce(f, p);
    if (deg(mp_gcd(fp, mp_derivative(fp, p), p)) != 0) continue;
    auto factors = berlekamp(mp_monic(fp, p), p);
    if (best_p == 0 || factors.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(factors);
    }
    if (best_factors.size() == 1 || ++admissible >= 5) break;
  }
  if (best_p == 0) throw Error("no admissible prime for factorization");
  if (best_factors.size() == 1) return {f};
  const int64_t p = best_p;

  // Coefficients of any factor are bounded by 2^n * ||f||_2 (Mignotte); the
  // recombined candidate carries the extra factor lc.
  Integer norm_sq = 0;
  for (const auto& c : f) norm_sq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
  norm += 1;
  Integer bound = Integer(2) * abs(lc) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  Integer modulus = static_cast<long>(p);
  while (modulus <= bound) modulus *= p;

  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  ZPoly monic_f = f;
  for (auto& c : monic_f) c *= lc_inv;
  monic_f = z_mod(monic_f, modulus);

  std::vector<ZPoly> lifted;
  hensel_lift(monic_f, best_factors, 0, best_factors.size(), p, modulus, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  size_t k = 1;
  while (2 * k <= lifted.size()) {
    bool found = false;
    std::vector<size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ZPoly cand = {rest.back()};
      for (size_t i : idx) cand = z_mod(z_mul(cand, lifted[i]), modulus);
      cand = primitive(symmetric(cand, modulus));
      if (auto quot = z_divide(rest, cand)) {
        result.push_back(cand);
        rest = *quot;
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) lifted.erase(lifted.begin() + static_cast<long>(*it));
        found = true;
        break;
      }
      // next combination
      size_t i = k;
      while (i > 0 && idx[i - 1] == lifted.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++k;
  }
  if (deg(rest) > 0) result.push_back(primitive(rest));
  return result;
}

Poly monic_rational(const ZPoly& f) {
  std::vector<Rational> c(f.begin(), f.end());
  return Poly(std::move(c)).monic();
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

}  // namespace

std::vector<Poly> yun_squarefree(const Poly& p) {
  if (p.is_zero()) throw Error("zero input");
  std::vector<Poly> parts;
  if (p.degree() == 0) return parts;
  Poly f = p.monic();
  Poly df = f.derivative();
  Poly a = gcd(f, df);
  Poly b = exact_div(f, a);
  Poly c = exact_div(df, a) - b.derivative();
  while (b.degree() > 0) {
    Poly d = gcd(b, c);
    parts.push_back(d);
    b = exact_div(b, d);
    c = exact_div(c, d) - b.derivative();
  }
  while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
  return parts;
}

std::vector<Poly> factor_squarefree(const Poly& p) {
  if (p.is_zero()) throw Error("zero input");
  std::vector<Poly> out;
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) return {p.monic()};
  ZPoly f = primitive_part(p).second;
  // Powers of z are split off first; they never survive the squarefree
  // test modulo p otherwise.
  size_t zeros = 0;
  while (zeros < f.size() && f[zeros] == 0) ++zeros;
  if (zeros > 1) throw Error("factor_squarefree: input is not squarefree");
  if (zeros == 1) {
    out.push_back(Poly::identity());
    f.erase(f.begin());
  }
  if (deg(f) == 1) {
    out.push_back(monic_rational(f));
  } else if (deg(f) >= 2) {
    for (const auto& g : zassenhaus(f)) out.push_back(monic_rational(g));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Factor> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw Error("zero input");
  auto parts = yun_squarefree(p);
  std::vector<Factor> out;
  for (size_t i = 0; i < parts.size(); ++i) {
    for (auto& g : factor_squarefree(parts[i])) out.push_back({std::move(g), static_cast<int>(i) + 1});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    return canonical_less(a.factor, b.factor);
  });
  return out;
}

bool is_irreducible(const Poly& p) {
  if (p.degree() < 1) return false;
  auto f = squarefree_decomposition(p);
  return f.size() == 1 && f[0].multiplicity == 1;
}

}  // namespace vhiggs::algebra
