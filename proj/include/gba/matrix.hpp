#pragma once

// Small dense matrices (n <= 4) over a Field, stored as element codes.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "gba/error.hpp"
#include "gba/ffield.hpp"

namespace gba {

constexpr int max_dim = 4;

struct Matrix {
  int n = 0;
  std::array<felem, max_dim * max_dim> a{};

  felem operator()(int i, int j) const { return a[i * max_dim + j]; }
  felem& operator()(int i, int j) { return a[i * max_dim + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.n == y.n && x.a == y.a; }
  friend bool operator<(const Matrix& x, const Matrix& y) {
    if (x.n != y.n) return x.n < y.n;
    return x.a < y.a;
  }
};

struct Vec {
  int n = 0;
  std::array<felem, max_dim> v{};

  felem operator[](int i) const { return v[i]; }
  felem& operator[](int i) { return v[i]; }
  friend bool operator==(const Vec& x, const Vec& y) { return x.n == y.n && x.v == y.v; }
  friend bool operator<(const Vec& x, const Vec& y) { return x.v < y.v; }
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(m.n);
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) {
        h ^= m(i, j);
        h *= 1099511628211ull;
      }
    return static_cast<std::size_t>(h);
  }
};

struct VecHash {
  std::size_t operator()(const Vec& x) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < x.n; ++i) {
      h ^= x[i];
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline Matrix identity_matrix(int n) {
  Matrix m;
  m.n = n;
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

// Row-major entries given as element codes.
inline Matrix matrix_from_codes(const Field& f, int n, std::initializer_list<felem> codes) {
  if (n < 1 || n > max_dim || codes.size() != static_cast<std::size_t>(n * n))
    throw error(errc::length_mismatch, "matrix needs " + std::to_string(n * n) + " entries");
  Matrix m;
  m.n = n;
  int k = 0;
  for (felem c : codes) {
    if (c >= f.order()) throw error(errc::spec_mismatch, "entry code out of range");
    m(k / n, k % n) = c;
    ++k;
  }
  return m;
}

// Row-major integer entries, reduced into the prime field.
inline Matrix matrix_from_ints(const Field& f, int n, std::initializer_list<long long> ints) {
  if (n < 1 || n > max_dim || ints.size() != static_cast<std::size_t>(n * n))
    throw error(errc::length_mismatch, "matrix needs " + std::to_string(n * n) + " entries");
  Matrix m;
  m.n = n;
  int k = 0;
  for (long long v : ints) {
    m(k / n, k % n) = f.from_int(v);
    ++k;
  }
  return m;
}

inline Matrix mat_mul(const Field& f, const Matrix& x, const Matrix& y) {
  Matrix r;
  r.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      felem s = 0;
      for (int k = 0; k < x.n; ++k) s = f.add(s, f.mul(x(i, k), y(k, j)));
      r(i, j) = s;
    }
  return r;
}

inline Matrix mat_scale(const Field& f, felem lambda, const Matrix& x) {
  Matrix r = x;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r(i, j) = f.mul(lambda, x(i, j));
  return r;
}

inline Matrix mat_transpose(const Matrix& x) {
  Matrix r;
  r.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r(i, j) = x(j, i);
  return r;
}

// Transpose composed with x -> x^q entrywise.
inline Matrix mat_conj_transpose(const Field& f, const Matrix& x, std::uint32_t q) {
  Matrix r;
  r.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r(i, j) = frobenius_q(f, x(j, i), q);
  return r;
}

inline felem mat_trace(const Field& f, const Matrix& x) {
  felem t = 0;
  for (int i = 0; i < x.n; ++i) t = f.add(t, x(i, i));
  return t;
}

inline felem mat_det(const Field& f, Matrix x) {
  const int n = x.n;
  felem det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (x(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(x(c, j), x(piv, j));
      det = f.neg(det);
    }
    det = f.mul(det, x(c, c));
    const felem inv = f.inv(x(c, c));
    for (int r = c + 1; r < n; ++r) {
      if (x(r, c) == 0) continue;
      const felem m = f.mul(x(r, c), inv);
      for (int j = c; j < n; ++j) x(r, j) = f.sub(x(r, j), f.mul(m, x(c, j)));
    }
  }
  return det;
}

inline Matrix mat_inverse(const Field& f, const Matrix& x) {
  const int n = x.n;
  Matrix a = x, r = identity_matrix(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int row = c; row < n; ++row)
      if (a(row, c) != 0) {
        piv = row;
        break;
      }
    if (piv < 0) throw error(errc::division_by_zero, "singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(a(c, j), a(piv, j));
      std::swap(r(c, j), r(piv, j));
    }
    const felem inv = f.inv(a(c, c));
    for (int j = 0; j < n; ++j) {
      a(c, j) = f.mul(a(c, j), inv);
      r(c, j) = f.mul(r(c, j), inv);
    }
    for (int row = 0; row < n; ++row) {
      if (row == c || a(row, c) == 0) continue;
      const felem m = a(row, c);
      for (int j = 0; j < n; ++j) {
        a(row, j) = f.sub(a(row, j), f.mul(m, a(c, j)));
        r(row, j) = f.sub(r(row, j), f.mul(m, r(c, j)));
      }
    }
  }
  return r;
}

// Row vector times matrix.
inline Vec vec_mul(const Field& f, const Vec& v, const Matrix& m) {
  Vec r;
  r.n = v.n;
  for (int j = 0; j < v.n; ++j) {
    felem s = 0;
    for (int k = 0; k < v.n; ++k)
      if (v[k] != 0) s = f.add(s, f.mul(v[k], m(k, j)));
    r[j] = s;
  }
  return r;
}

inline Vec unit_vector(int n, int i) {
  Vec v;
  v.n = n;
  v[i] = 1;
  return v;
}

inline std::string format_matrix(const Matrix& m) {
  std::string s = "[";
  for (int i = 0; i < m.n; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < m.n; ++j) {
      if (j) s += ",";
      s += std::to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace gba
