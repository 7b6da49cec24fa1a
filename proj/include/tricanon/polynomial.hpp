#pragma once

// Univariate polynomials (coefficients from the constant term upward),
// characteristic polynomials, and exact roots over Q(i).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tricanon/errors.hpp"
#include "tricanon/gaussian.hpp"
#include "tricanon/matrix.hpp"

namespace tricanon {

template <class T>
using Poly = std::vector<T>;

template <class T>
void trim(Poly<T>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

/// Degree of p; the zero polynomial reports -1.
template <class T>
long degree(const Poly<T>& p) {
  for (std::size_t k = p.size(); k > 0; --k) {
    if (!p[k - 1].is_zero()) return static_cast<long>(k - 1);
  }
  return -1;
}

template <class T>
Poly<T> poly_add(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  trim(out);
  return out;
}

template <class T>
Poly<T> poly_sub(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
  trim(out);
  return out;
}

template <class T>
Poly<T> poly_mul(const Poly<T>& a, const Poly<T>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<T> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

template <class T>
Poly<T> poly_scale(Poly<T> a, const T& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

/// Quotient and remainder of a by a nonzero b.
template <class T>
std::pair<Poly<T>, Poly<T>> poly_divmod(Poly<T> a, Poly<T> b) {
  trim(a);
  trim(b);
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly<T> q(a.size() - b.size() + 1);
  T lead_inv = b.back().inverse();
  for (std::size_t k = q.size(); k > 0; --k) {
    std::size_t shift = k - 1;
    T c = a[shift + b.size() - 1] * lead_inv;
    q[shift] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  Poly<T> out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * T(static_cast<long>(k)));
  trim(out);
  return out;
}

/// Monic greatest common divisor.
template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = poly_scale(a, a.back().inverse());
  return a;
}

template <class T>
T poly_eval(const Poly<T>& p, const T& x) {
  T acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// p(a + x) expanded in powers of x.
template <class T>
Poly<T> taylor_shift(Poly<T> p, const T& a) {
  std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k > i; --k) p[k - 1] += a * p[k];
  }
  trim(p);
  return p;
}

/// Characteristic polynomial det(xI - M) via reduction to Hessenberg form.
template <class T>
Poly<T> charpoly(const Matrix<T>& m) {
  if (!m.is_square()) throw ShapeError("characteristic polynomial of a non-square matrix");
  std::size_t n = m.rows();
  Matrix<T> h = m;
  for (std::size_t c = 1; c + 1 < n; ++c) {
    std::size_t piv = c;
    while (piv < n && h(piv, c - 1).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(c, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c));
    }
    T inv = h(c, c - 1).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (h(i, c - 1).is_zero()) continue;
      T f = h(i, c - 1) * inv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= f * h(c, j);
      for (std::size_t r = 0; r < n; ++r) h(r, c) += f * h(r, i);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}, 1-based.
  std::vector<Poly<T>> p(n + 1);
  p[0] = {T(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly<T> next = poly_mul(Poly<T>{-h(k - 1, k - 1), T(1)}, p[k - 1]);
    T prod(1);
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod.is_zero()) break;
      T coef = h(i - 1, k - 1) * prod;
      if (!coef.is_zero()) next = poly_sub(next, poly_scale(p[i - 1], coef));
    }
    p[k] = std::move(next);
  }
  return p[n];
}

/// Coefficients as Gaussian rationals; throws when a radical survives.
template <class T>
Poly<Gaussian> to_gaussian_poly(const Poly<T>& p) {
  if constexpr (std::is_same_v<T, Gaussian>) {
    return p;
  } else {
    Poly<Gaussian> out;
    for (const auto& c : p) {
      auto g = c.to_gaussian();
      if (!g) throw EigenvalueOutsideField("characteristic polynomial has coefficients outside Q(i)");
      out.push_back(*g);
    }
    return out;
  }
}

struct Root {
  Gaussian value;
  std::size_t multiplicity;
};

/// All roots of a nonzero polynomial over Q(i), sorted by (|x|^2, re, im).
/// Throws EigenvalueOutsideField when the polynomial does not split over Q(i).
std::vector<Root> roots_in_field(const Poly<Gaussian>& p);

std::string poly_to_string(const Poly<Gaussian>& p);

}  // namespace tricanon
