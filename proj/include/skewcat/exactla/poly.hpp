#pragma once

// Dense univariate polynomials, coefficients from degree 0 upwards. Only what
// the decomposition code needs: division, gcd, modular powers, and root
// finding for polynomials that split into distinct linear factors over F_p.

#include "skewcat/exactla/matrix.hpp"

#include <random>

namespace skewcat {

template <class K>
using Poly = std::vector<K>;

template <class K>
void trim(Poly<K>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <class K>
Poly<K> poly_sub(Poly<K> a, const Poly<K>& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

template <class K>
Poly<K> poly_mul(const Poly<K>& a, const Poly<K>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<K> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

// Remainder of a modulo b (b nonzero).
template <class K>
Poly<K> poly_mod(Poly<K> a, const Poly<K>& b) {
  trim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  const K lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    K q = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(Poly<K> a, const Poly<K>& b) {
  trim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  const K lead_inv = b.back().inverse();
  Poly<K> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size()) {
    K c = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

template <class K>
Poly<K> make_monic(Poly<K> a) {
  trim(a);
  if (a.empty()) return a;
  K inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly<K> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

template <class K>
Poly<K> poly_powmod(Poly<K> base, std::uint64_t e, const Poly<K>& m, const FieldSpec& f) {
  Poly<K> r{one<K>(f)};
  base = poly_mod(base, m);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base), m);
    base = poly_mod(poly_mul(base, base), m);
    e >>= 1;
  }
  return r;
}

template <class K>
K poly_eval(const Poly<K>& a, const K& x) {
  K r{};
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

// Roots of a polynomial over F_p that is a product of distinct monic linear
// factors. Equal-degree splitting with a seeded generator, so the output is
// deterministic; roots are returned in increasing order.
inline std::vector<Fp> split_linear_roots(Poly<Fp> f, const FieldSpec& field) {
  f = make_monic(f);
  std::vector<Fp> roots;
  if (f.size() <= 1) return roots;
  const std::uint32_t p = field.p;
  if (p <= 4096 || f.size() == 2) {
    if (f.size() == 2) {
      roots.push_back(-f[0]);
    } else {
      for (std::uint32_t c = 0; c < p && roots.size() + 1 < f.size(); ++c) {
        Fp x(c, p);
        if (poly_eval(f, x).is_zero()) roots.push_back(x);
      }
    }
  } else {
    std::mt19937_64 rng(0x5eedu);
    std::vector<Poly<Fp>> work{f};
    while (!work.empty()) {
      Poly<Fp> g = work.back();
      work.pop_back();
      if (g.size() == 2) {
        roots.push_back(-g[1].inverse() * g[0]);
        continue;
      }
      for (;;) {
        Fp a(static_cast<std::int64_t>(rng() % p), p);
        Poly<Fp> lin{a, Fp(1, p)};
        Poly<Fp> h = poly_powmod(lin, (p - 1) / 2, g, field);
        h = poly_sub(h, Poly<Fp>{Fp(1, p)});
        Poly<Fp> d = poly_gcd(g, h);
        if (d.size() > 1 && d.size() < g.size()) {
          work.push_back(d);
          work.push_back(poly_divmod(g, d).first);
          break;
        }
      }
    }
  }
  if (roots.size() + 1 != f.size()) throw std::domain_error("split_linear_roots: polynomial does not split into distinct linear factors");
  std::sort(roots.begin(), roots.end(), [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
  return roots;
}

}  // namespace skewcat
