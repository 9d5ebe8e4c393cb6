#pragma once

// Exact arithmetic in GF(p^a) for small prime powers.
//
// Elements are encoded as integers: the coefficient vector (c_0, ..., c_{a-1})
// of the polynomial-basis representative maps to sum c_i p^i.  Multiplication
// goes through log/antilog tables built once per field.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gba/error.hpp"

namespace gba {

using felem = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// (p, a) with q = p^a, or nullopt when q is not a prime power.
inline std::optional<std::pair<int, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = prime_factors(q);
  if (f.size() != 1) return std::nullopt;
  int a = 0;
  while (q > 1) {
    q /= f[0];
    ++a;
  }
  return std::pair<int, int>{static_cast<int>(f[0]), a};
}

namespace detail {

// Polynomials over GF(p), low-degree coefficient first, no trailing zeros
// except for the zero polynomial (empty).
using poly = std::vector<int>;

inline void poly_trim(poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int inv_mod(int x, int p) {
  int r = 1;
  for (int e = p - 2, b = x % p; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

inline poly poly_rem(poly f, const poly& g, int p) {
  poly_trim(f);
  const int dg = static_cast<int>(g.size()) - 1;
  const int lead_inv = inv_mod(g.back(), p);
  while (static_cast<int>(f.size()) - 1 >= dg) {
    const int shift = static_cast<int>(f.size()) - 1 - dg;
    const int c = f.back() * lead_inv % p;
    for (int i = 0; i <= dg; ++i) f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    poly_trim(f);
  }
  return f;
}

inline bool is_irreducible(const poly& f, int p) {
  const int a = static_cast<int>(f.size()) - 1;
  if (a <= 1) return a == 1;
  // trial division by every monic polynomial of degree 1..a/2
  for (int d = 1; d <= a / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 0; code < count; ++code) {
      poly g(d + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr std::uint32_t default_cap = 1u << 16;
  static constexpr felem none = std::numeric_limits<felem>::max();

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return a_; }
  std::uint32_t order() const noexcept { return q_; }
  // Monic defining polynomial, low-degree coefficient first (length a+1).
  const std::vector<int>& modulus() const noexcept { return irred_; }

  felem zero() const noexcept { return 0; }
  felem one() const noexcept { return 1; }

  felem add(felem x, felem y) const {
    if (p_ == 2) return x ^ y;
    if (a_ == 1) return (x + y) % q_;
    if (!add_table_.empty()) return add_table_[x * q_ + y];
    return add_digits(x, y, false);
  }

  felem sub(felem x, felem y) const {
    if (p_ == 2) return x ^ y;
    if (a_ == 1) return (x + q_ - y) % q_;
    return add(x, neg(y));
  }

  felem neg(felem x) const {
    if (p_ == 2) return x;
    if (a_ == 1) return (q_ - x) % q_;
    return neg_table_[x];
  }

  felem mul(felem x, felem y) const {
    if (x == 0 || y == 0) return 0;
    return exp_[log_[x] + log_[y]];
  }

  felem inv(felem x) const {
    if (x == 0) throw error(errc::division_by_zero, "inverse of zero in GF(" + std::to_string(q_) + ")");
    return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
  }

  felem div(felem x, felem y) const { return mul(x, inv(y)); }

  felem pow(felem x, long long e) const {
    if (x == 0) {
      if (e > 0) return 0;
      if (e == 0) return 1;
      throw error(errc::division_by_zero, "negative power of zero");
    }
    const long long m = static_cast<long long>(q_) - 1;
    long long k = (static_cast<long long>(log_[x]) * (e % m)) % m;
    if (k < 0) k += m;
    return exp_[static_cast<std::size_t>(k)];
  }

  // Image of an integer under Z -> GF(p) -> GF(q).
  felem from_int(long long v) const {
    long long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<felem>(r);
  }

  std::vector<int> coeffs(felem x) const {
    std::vector<int> c(a_);
    for (int i = 0; i < a_; ++i) {
      c[i] = static_cast<int>(x % p_);
      x /= p_;
    }
    return c;
  }

  felem from_coeffs(std::span<const int> c) const {
    if (static_cast<int>(c.size()) > a_) throw error(errc::spec_mismatch, "too many coefficients");
    felem x = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
      x = x * p_ + static_cast<felem>(((c[i] % p_) + p_) % p_);
    }
    return x;
  }

  // Primitive element used for the log tables.
  felem generator() const noexcept { return exp_[1 % (q_ - 1 == 0 ? 1 : q_ - 1)]; }
  std::uint32_t log(felem x) const {
    if (x == 0) throw error(errc::division_by_zero, "log of zero");
    return log_[x];
  }
  felem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  bool is_square(felem x) const { return x == 0 || sqrt_[x] != none; }
  std::optional<felem> sqrt(felem x) const {
    if (sqrt_[x] == none) return std::nullopt;
    return sqrt_[x];
  }

  // x^(p^k)
  felem frobenius(felem x, unsigned k) const {
    for (unsigned i = 0; i < k; ++i) x = pow(x, p_);
    return x;
  }

  // Absolute trace GF(q) -> GF(p), returned as an element of the prime field.
  felem trace(felem x) const {
    felem t = 0, y = x;
    for (int i = 0; i < a_; ++i) {
      t = add(t, y);
      y = pow(y, p_);
    }
    return t;
  }

  // Multiplicative order of a nonzero element.
  std::uint32_t element_order(felem x) const {
    const std::uint32_t m = q_ - 1;
    return m / std::gcd(m, log(x));
  }

  std::string format(felem x) const { return std::to_string(x); }

  std::string label() const { return "GF(" + std::to_string(q_) + ")"; }

 private:
  friend FieldPtr make_field(int p, int a, std::uint32_t cap);

  Field(int p, int a, std::vector<int> irred) : p_(p), a_(a), irred_(std::move(irred)) {
    q_ = 1;
    for (int i = 0; i < a_; ++i) q_ *= static_cast<std::uint32_t>(p_);
    build_tables();
  }

  felem add_digits(felem x, felem y, bool) const {
    felem r = 0, scale = 1;
    for (int i = 0; i < a_; ++i) {
      const felem dx = x % p_, dy = y % p_;
      r += ((dx + dy) % p_) * scale;
      x /= p_;
      y /= p_;
      scale *= p_;
    }
    return r;
  }

  felem poly_mul(felem x, felem y) const {
    auto cx = coeffs(x), cy = coeffs(y);
    std::vector<int> prod(2 * a_ - 1, 0);
    for (int i = 0; i < a_; ++i)
      for (int j = 0; j < a_; ++j) prod[i + j] = (prod[i + j] + cx[i] * cy[j]) % p_;
    for (int d = 2 * a_ - 2; d >= a_; --d) {
      const int c = prod[d];
      if (c == 0) continue;
      for (int i = 0; i <= a_; ++i)
        prod[d - a_ + i] = ((prod[d - a_ + i] - c * irred_[i]) % p_ + p_) % p_;
    }
    prod.resize(a_);
    return from_coeffs(prod);
  }

  felem poly_pow(felem x, std::uint64_t e) const {
    felem r = 1;
    while (e) {
      if (e & 1) r = poly_mul(r, x);
      x = poly_mul(x, x);
      e >>= 1;
    }
    return r;
  }

  void build_tables() {
    const std::uint32_t m = q_ - 1;
    felem g = 1;
    if (m > 1) {
      const auto primes = prime_factors(m);
      for (g = 1; g < q_; ++g) {
        bool primitive = true;
        for (auto r : primes)
          if (poly_pow(g, m / r) == 1) {
            primitive = false;
            break;
          }
        if (primitive) break;
      }
    }
    exp_.assign(2 * static_cast<std::size_t>(m) + 1, 0);
    log_.assign(q_, 0);
    felem x = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = poly_mul(x, g);
    }
    for (std::uint32_t i = m; i < exp_.size(); ++i) exp_[i] = exp_[i - m];

    if (p_ != 2 && a_ > 1) {
      neg_table_.resize(q_);
      for (felem v = 0; v < q_; ++v) {
        felem r = 0, scale = 1, t = v;
        for (int i = 0; i < a_; ++i) {
          r += ((p_ - t % p_) % p_) * scale;
          t /= p_;
          scale *= p_;
        }
        neg_table_[v] = r;
      }
      if (q_ <= 256) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (felem u = 0; u < q_; ++u)
          for (felem v = 0; v < q_; ++v) add_table_[u * q_ + v] = add_digits(u, v, false);
      }
    }

    sqrt_.assign(q_, none);
    for (felem v = 0; v < q_; ++v) {
      const felem s = mul(v, v);
      if (sqrt_[s] == none) sqrt_[s] = v;  // smallest root wins
    }
  }

  int p_;
  int a_;
  std::uint32_t q_ = 1;
  std::vector<int> irred_;
  std::vector<felem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<felem> neg_table_;
  std::vector<felem> add_table_;
  std::vector<felem> sqrt_;
};

// Deterministic field construction: the defining polynomial is the
// lexicographically smallest monic irreducible of degree a, comparing the
// coefficient vectors low-degree-first.
inline FieldPtr make_field(int p, int a, std::uint32_t cap = Field::default_cap) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw error(errc::non_prime, std::to_string(p) + " is not prime");
  if (a < 1) throw error(errc::precondition_violated, "field degree must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < a; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > cap) throw error(errc::cap_exceeded, std::to_string(p) + "^" + std::to_string(a) + " exceeds field cap " + std::to_string(cap));
  }
  // enumerate (c_0, ..., c_{a-1}) lexicographically, c_0 most significant
  std::vector<int> c(a, 0);
  while (true) {
    detail::poly f(c.begin(), c.end());
    f.push_back(1);
    if (detail::is_irreducible(f, p)) return FieldPtr(new Field(p, a, f));
    int i = a - 1;
    while (i >= 0 && ++c[i] == p) c[i--] = 0;
    if (i < 0) break;
  }
  throw error(errc::not_closed, "no irreducible polynomial found");
}

inline FieldPtr make_field_of_order(std::uint64_t q, std::uint32_t cap = Field::default_cap) {
  auto pa = prime_power(q);
  if (!pa) throw error(errc::non_prime, std::to_string(q) + " is not a prime power");
  return make_field(pa->first, pa->second, cap);
}

// Value-like element bound to its field.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr f, felem v) : f_(std::move(f)), v_(v) {
    if (f_ && v_ >= f_->order()) throw error(errc::spec_mismatch, "element code out of range");
  }
  static FieldElem from_int(FieldPtr f, long long v) {
    const felem e = f->from_int(v);
    return FieldElem(std::move(f), e);
  }

  felem value() const noexcept { return v_; }
  const FieldPtr& field() const noexcept { return f_; }
  bool is_zero() const noexcept { return v_ == 0; }

  FieldElem operator+(const FieldElem& o) const { check(o); return {f_, f_->add(v_, o.v_)}; }
  FieldElem operator-(const FieldElem& o) const { check(o); return {f_, f_->sub(v_, o.v_)}; }
  FieldElem operator*(const FieldElem& o) const { check(o); return {f_, f_->mul(v_, o.v_)}; }
  FieldElem operator/(const FieldElem& o) const { check(o); return {f_, f_->div(v_, o.v_)}; }
  FieldElem operator-() const { return {f_, f_->neg(v_)}; }
  FieldElem inv() const { return {f_, f_->inv(v_)}; }
  FieldElem pow(long long e) const { return {f_, f_->pow(v_, e)}; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.v_ == b.v_ && (a.f_ == b.f_ || (a.f_ && b.f_ && a.f_->order() == b.f_->order() &&
                                              a.f_->modulus() == b.f_->modulus()));
  }

 private:
  void check(const FieldElem& o) const {
    if (!f_ || !o.f_ || (f_ != o.f_ && (f_->order() != o.f_->order() || f_->modulus() != o.f_->modulus())))
      throw error(errc::spec_mismatch, "operands live in different fields");
  }

  FieldPtr f_;
  felem v_ = 0;
};

// x -> x^q on GF(q^2).
inline felem frobenius_q(const Field& f, felem x, std::uint32_t q) {
  if (static_cast<std::uint64_t>(q) * q != f.order())
    throw error(errc::spec_mismatch, f.label() + " is not GF(" + std::to_string(q) + "^2)");
  return f.pow(x, q);
}

inline FieldElem frobenius_q(const FieldElem& x, std::uint32_t q) {
  return FieldElem(x.field(), frobenius_q(*x.field(), x.value(), q));
}

// Elements of GF(q^2) fixed by x -> x^q, i.e. the subfield GF(q).
inline std::vector<felem> subfield_elements(const Field& f, std::uint32_t q) {
  std::vector<felem> out;
  for (felem x = 0; x < f.order(); ++x)
    if (frobenius_q(f, x, q) == x) out.push_back(x);
  return out;
}

// The Suzuki twist x -> x^(2^(a+1)) on GF(2^(2a+1)).
inline felem suzuki_theta(const Field& f, felem x, int a) {
  if (f.characteristic() != 2 || f.degree() != 2 * a + 1)
    throw error(errc::wrong_characteristic, f.label() + " is not GF(2^" + std::to_string(2 * a + 1) + ")");
  return f.pow(x, 1LL << (a + 1));
}

inline FieldElem suzuki_theta(const FieldElem& x, int a) {
  return FieldElem(x.field(), suzuki_theta(*x.field(), x.value(), a));
}

// {x^n : x != 0}, sorted by code.
inline std::vector<felem> power_residues(const Field& f, unsigned n) {
  std::vector<char> hit(f.order(), 0);
  for (felem x = 1; x < f.order(); ++x) hit[f.pow(x, n)] = 1;
  std::vector<felem> out;
  for (felem x = 0; x < f.order(); ++x)
    if (hit[x]) out.push_back(x);
  return out;
}

// All roots of y^2 + b y + c in the field, sorted by code.
inline std::vector<felem> solve_quadratic(const Field& f, felem b, felem c) {
  std::vector<felem> roots;
  if (f.characteristic() == 2) {
    if (b == 0) {
      // unique root c^(q/2)
      roots.push_back(f.pow(c, f.order() / 2));
      return roots;
    }
    // y = b z reduces to z^2 + z = c / b^2
    const felem d = f.div(c, f.mul(b, b));
    if (f.trace(d) != 0) return roots;
    for (felem z = 0; z < f.order(); ++z)
      if (f.add(f.mul(z, z), z) == d) roots.push_back(f.mul(b, z));
  } else {
    const felem disc = f.sub(f.mul(b, b), f.mul(f.from_int(4), c));
    auto s = f.sqrt(disc);
    if (!s) return roots;
    const felem half = f.inv(f.from_int(2));
    const felem nb = f.neg(b);
    roots.push_back(f.mul(f.add(nb, *s), half));
    roots.push_back(f.mul(f.sub(nb, *s), half));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace gba
