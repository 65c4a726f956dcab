#pragma once

// Finite-dimensional algebras by structure constants: radicals, quotients,
// centres, the Frobenius count of simple components, and complete sets of
// primitive orthogonal idempotents with lifting modulo the radical.

#include "skewcat/core/report.hpp"
#include "skewcat/exactla/poly.hpp"

#include <map>
#include <random>

namespace skewcat {

template <class K>
struct Algebra {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<K> mult;  // [(i*dim+j)*dim+k]: coefficient of e_k in e_i e_j
  Vec<K> unit;

  Vec<K> mul(const Vec<K>& a, const Vec<K>& b) const {
    Vec<K> r(dim, K{});
    for (std::size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (b[j].is_zero()) continue;
        const K c = a[i] * b[j];
        const K* row = &mult[(i * dim + j) * dim];
        for (std::size_t k = 0; k < dim; ++k)
          if (!row[k].is_zero()) r[k] += c * row[k];
      }
    }
    return r;
  }
  Vec<K> basis_vec(std::size_t i) const { return unit_vec<K>(field, dim, i); }
  Vec<K> zero() const { return Vec<K>(dim, K{}); }
  Vec<K> pow(Vec<K> a, std::uint64_t n) const {
    Vec<K> r = unit;
    while (n) {
      if (n & 1) r = mul(r, a);
      n >>= 1;
      if (n) a = mul(a, a);
    }
    return r;
  }
  Mat<K> left_matrix(const Vec<K>& a) const {
    return matrix_of<K>(field, dim, dim, [&](const Vec<K>& x) { return mul(a, x); });
  }
  bool is_commutative() const {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        if (mul(basis_vec(i), basis_vec(j)) != mul(basis_vec(j), basis_vec(i))) return false;
    return true;
  }
};

template <class K>
Report validate_algebra(const Algebra<K>& a) {
  Report r("algebra");
  r.ensure("shape");
  if (a.mult.size() != a.dim * a.dim * a.dim || a.unit.size() != a.dim) {
    r.violate("shape", "structure constants or unit have the wrong length");
    return r;
  }
  r.ensure("associativity");
  r.ensure("unit");
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec<K> ei = a.basis_vec(i);
    if (a.mul(a.unit, ei) != ei || a.mul(ei, a.unit) != ei) r.violate("unit", "e" + std::to_string(i));
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec<K> ij = a.mul(ei, a.basis_vec(j));
      for (std::size_t k = 0; k < a.dim; ++k)
        if (a.mul(ij, a.basis_vec(k)) != a.mul(ei, a.mul(a.basis_vec(j), a.basis_vec(k))))
          r.violate("associativity", "(e" + std::to_string(i) + ",e" + std::to_string(j) + ",e" + std::to_string(k) + ")");
    }
  }
  return r;
}

// Coordinates with respect to a linearly independent family in K^n.
template <class K>
class Frame {
 public:
  Frame() = default;
  Frame(const FieldSpec& f, std::size_t ambient, std::vector<Vec<K>> basis) : ambient_(ambient), basis_(std::move(basis)) {
    const std::size_t d = basis_.size();
    if (d == 0) return;
    Mat<K> m = Mat<K>::from_columns(ambient_, basis_);
    Echelon<K> e = rref(m.transpose());
    if (e.rank() != d) throw std::invalid_argument("Frame: family is linearly dependent");
    rows_ = e.pivots;
    Mat<K> sq(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) sq(i, j) = m(rows_[i], j);
    inv_ = inverse(sq, f);
  }

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vec<K>>& basis() const { return basis_; }

  std::optional<Vec<K>> try_coords(const Vec<K>& v) const {
    if (v.size() != ambient_) throw dimension_error("Frame: vector length mismatch");
    const std::size_t d = dim();
    Vec<K> sel(d);
    for (std::size_t i = 0; i < d; ++i) sel[i] = v[rows_[i]];
    Vec<K> c = d ? inv_.apply(sel) : Vec<K>{};
    if (lift(c) != v) return std::nullopt;
    return c;
  }
  Vec<K> coords(const Vec<K>& v) const {
    auto c = try_coords(v);
    if (!c) throw std::invalid_argument("Frame: vector outside the span");
    return *c;
  }
  Vec<K> lift(const Vec<K>& c) const {
    Vec<K> v(ambient_, K{});
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (!c[i].is_zero()) axpy(v, c[i], basis_[i]);
    return v;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec<K>> basis_;
  std::vector<std::size_t> rows_;
  Mat<K> inv_;
};

// An algebra realised on a subspace of some ambient space.
template <class K>
struct EmbeddedAlgebra {
  Algebra<K> alg;
  Frame<K> frame;

  Vec<K> lift(const Vec<K>& c) const { return frame.lift(c); }
  Vec<K> coords(const Vec<K>& v) const { return frame.coords(v); }
};

template <class K, class Mul>
EmbeddedAlgebra<K> embed_algebra(const FieldSpec& f, std::size_t ambient, std::vector<Vec<K>> basis, Mul&& mul, const Vec<K>& unit) {
  EmbeddedAlgebra<K> e;
  e.frame = Frame<K>(f, ambient, std::move(basis));
  const std::size_t d = e.frame.dim();
  Algebra<K>& a = e.alg;
  a.field = f;
  a.dim = d;
  a.mult.assign(d * d * d, K{});
  const auto& b = e.frame.basis();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = e.frame.try_coords(mul(b[i], b[j]));
      if (!c) throw std::invalid_argument("embed_algebra: subspace is not closed under multiplication");
      std::copy(c->begin(), c->end(), a.mult.begin() + (i * d + j) * d);
    }
  auto u = e.frame.try_coords(unit);
  if (!u) throw std::invalid_argument("embed_algebra: unit outside the subspace");
  a.unit = *u;
  return e;
}

// A subalgebra of a, spanned by the given vectors, with its own unit.
template <class K>
EmbeddedAlgebra<K> subalgebra(const Algebra<K>& a, const std::vector<Vec<K>>& spanning, const Vec<K>& unit) {
  std::vector<Vec<K>> b;
  {
    Subspace<K> s(a.dim, spanning);
    b = s.basis();
  }
  return embed_algebra<K>(a.field, a.dim, std::move(b), [&](const Vec<K>& x, const Vec<K>& y) { return a.mul(x, y); }, unit);
}

template <class K>
std::vector<Vec<K>> center_of_algebra(const Algebra<K>& a) {
  const std::size_t d = a.dim;
  Mat<K> m = matrix_of<K>(a.field, d, d * d, [&](const Vec<K>& x) {
    Vec<K> out;
    out.reserve(d * d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec<K> c = a.mul(x, a.basis_vec(j)) - a.mul(a.basis_vec(j), x);
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  });
  Subspace<K> z(d, kernel_basis(m, a.field));
  return z.basis();
}

// ---- radical -----------------------------------------------------------

namespace decomp_detail {

using u128 = unsigned __int128;

inline std::vector<std::uint64_t> int_mat_mul(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y, std::size_t n, std::uint64_t m) {
  std::vector<std::uint64_t> z(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t a = x[i * n + k];
      if (!a) continue;
      for (std::size_t j = 0; j < n; ++j) z[i * n + j] = static_cast<std::uint64_t>((z[i * n + j] + u128(a) * y[k * n + j]) % m);
    }
  return z;
}

// Tr(M^e) mod m for an integer matrix with entries in [0, m).
inline std::uint64_t int_trace_pow(std::vector<std::uint64_t> base, std::size_t n, std::uint64_t e, std::uint64_t m) {
  std::vector<std::uint64_t> r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % m;
  while (e) {
    if (e & 1) r = int_mat_mul(r, base, n, m);
    e >>= 1;
    if (e) base = int_mat_mul(base, base, n, m);
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + r[i * n + i]) % m;
  return t;
}

// g_i(a) = Tr(L~_a^{p^i}) / p^i mod p for an integer lift L~_a of L_a.
inline Fp lifted_trace(const Algebra<Fp>& a, const Vec<Fp>& x, unsigned i) {
  const std::uint64_t p = a.field.p;
  std::uint64_t pi = 1;
  for (unsigned k = 0; k < i; ++k) pi *= p;
  const std::uint64_t m = pi * p;
  Mat<Fp> l = a.left_matrix(x);
  const std::size_t n = a.dim;
  std::vector<std::uint64_t> lift(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) lift[r * n + c] = l(r, c).value();
  const std::uint64_t t = int_trace_pow(lift, n, pi, m);
  if (t % pi != 0) throw std::logic_error("radical: lifted trace not divisible by p^i");
  return Fp(static_cast<std::int64_t>(t / pi), a.field.p);
}

template <class K>
K trace_of(const Mat<K>& m) {
  K t{};
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Kernel of the trace form: all x with Tr(L_{x e_j}) = 0 for every j.
template <class K>
std::vector<Vec<K>> trace_form_kernel(const Algebra<K>& a) {
  const std::size_t d = a.dim;
  Mat<K> g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(j, i) = trace_of(a.left_matrix(a.mul(a.basis_vec(i), a.basis_vec(j))));
  return kernel_basis(g, a.field);
}

}  // namespace decomp_detail

// The radical without post-verification. Over Q the kernel of the trace
// form; over F_p the iterated lifted-trace refinement
//   I_i = { x in I_{i-1} : g_i(x b) = 0 for all b },  rad = I_l,
// with l = floor(log_p dim), I_{-1} = A and g_0 the ordinary trace.
template <class K>
std::vector<Vec<K>> radical_unverified(const Algebra<K>& a) {
  if (a.dim == 0) return {};
  if constexpr (!is_prime_field_v<K>) {
    Subspace<K> s(a.dim, decomp_detail::trace_form_kernel(a));
    return s.basis();
  } else {
    const std::uint64_t p = a.field.p;
    unsigned l = 0;
    for (std::uint64_t q = p; q <= a.dim; q *= p) ++l;
    std::vector<Vec<Fp>> cur = decomp_detail::trace_form_kernel(a);
    for (unsigned i = 1; i <= l && !cur.empty(); ++i) {
      const std::size_t k = cur.size();
      Mat<Fp> m(a.dim, k);
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t j = 0; j < a.dim; ++j) m(j, c) = decomp_detail::lifted_trace(a, a.mul(cur[c], a.basis_vec(j)), i);
      std::vector<Vec<Fp>> next;
      for (const auto& w : kernel_basis(m, a.field)) next.push_back(combine(cur, w, a.dim));
      cur = std::move(next);
    }
    Subspace<Fp> s(a.dim, cur);
    return s.basis();
  }
}

template <class K>
struct Quotient {
  Algebra<K> alg;
  std::vector<Vec<K>> ideal;       // reduced echelon basis in the big algebra
  std::vector<std::size_t> pivots;  // pivot column of each ideal row
  std::vector<std::size_t> reps;    // non-pivot coordinates, the quotient basis

  Vec<K> project(Vec<K> v) const {
    for (std::size_t r = 0; r < ideal.size(); ++r) {
      const K c = v[pivots[r]];
      if (!c.is_zero()) axpy(v, -c, ideal[r]);
    }
    Vec<K> q(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) q[i] = v[reps[i]];
    return q;
  }
  Vec<K> section(const Vec<K>& q, std::size_t big_dim, const FieldSpec& f) const {
    Vec<K> v(big_dim, K{});
    for (std::size_t i = 0; i < reps.size(); ++i) v[reps[i]] = q[i];
    (void)f;
    return v;
  }
};

// A / J for a two-sided ideal J given by any spanning set.
template <class K>
Quotient<K> quotient(const Algebra<K>& a, const std::vector<Vec<K>>& ideal) {
  Quotient<K> q;
  if (!ideal.empty()) {
    Echelon<K> e = rref(Mat<K>::from_rows(a.dim, ideal));
    for (std::size_t r = 0; r < e.rank(); ++r) q.ideal.push_back(e.reduced.row(r));
    q.pivots = e.pivots;
  }
  std::vector<bool> piv(a.dim, false);
  for (auto p : q.pivots) piv[p] = true;
  for (std::size_t c = 0; c < a.dim; ++c)
    if (!piv[c]) q.reps.push_back(c);
  const std::size_t d = q.reps.size();
  q.alg.field = a.field;
  q.alg.dim = d;
  q.alg.mult.assign(d * d * d, K{});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec<K> c = q.project(a.mul(a.basis_vec(q.reps[i]), a.basis_vec(q.reps[j])));
      std::copy(c.begin(), c.end(), q.alg.mult.begin() + (i * d + j) * d);
    }
  q.alg.unit = q.project(a.unit);
  return q;
}

template <class K>
bool is_two_sided_ideal(const Algebra<K>& a, const std::vector<Vec<K>>& j) {
  Subspace<K> s(a.dim, j);
  for (const auto& v : s.basis())
    for (std::size_t k = 0; k < a.dim; ++k)
      if (!s.contains(a.mul(a.basis_vec(k), v)) || !s.contains(a.mul(v, a.basis_vec(k)))) return false;
  return true;
}

// Smallest m with J^m = 0, if m <= dim J + 1.
template <class K>
std::optional<std::size_t> nilpotency_index(const Algebra<K>& a, const std::vector<Vec<K>>& j) {
  Subspace<K> base(a.dim, j);
  if (base.dim() == 0) return 1;
  Subspace<K> cur = base;
  for (std::size_t m = 1; m <= base.dim() + 1; ++m) {
    if (cur.dim() == 0) return m;
    std::vector<Vec<K>> prod;
    for (const auto& u : cur.basis())
      for (const auto& v : base.basis()) prod.push_back(a.mul(u, v));
    cur = Subspace<K>(a.dim, prod);
  }
  return std::nullopt;
}

template <class K>
Report verify_radical(const Algebra<K>& a, const std::vector<Vec<K>>& j) {
  Report r("radical");
  r.ensure("ideal");
  r.ensure("nilpotent");
  if (!is_two_sided_ideal(a, j)) r.violate("ideal", "computed radical is not a two-sided ideal");
  auto m = nilpotency_index(a, j);
  if (!m) r.violate("nilpotent", "powers of the computed radical do not reach 0");
  else r.ensure("nilpotent").detail = "index " + std::to_string(*m);
  if (!r.passed()) {
    r.add("quotient radical-free", Status::skipped, "earlier checks failed");
    return r;
  }
  r.ensure("quotient radical-free");
  Quotient<K> q = quotient(a, j);
  auto jq = radical_unverified(q.alg);
  if (!jq.empty()) r.violate("quotient radical-free", "quotient has radical of dimension " + std::to_string(jq.size()));
  return r;
}

// Radical with its post-verification; a failed check is an internal error.
template <class K>
std::vector<Vec<K>> radical(const Algebra<K>& a) {
  auto j = radical_unverified(a);
  Report r = verify_radical(a, j);
  if (!r.passed()) {
    std::string what = "radical post-verification failed (dim " + std::to_string(a.dim) + "):";
    for (const auto& c : r.checks())
      if (c.status != Status::pass) what += " " + c.name + (c.violations.empty() ? "" : " [" + c.violations.front() + "]");
    throw std::logic_error(what);
  }
  return j;
}

// ---- commutative semisimple algebras over F_p ---------------------------

// Fixed space of x -> x^p; linear because the algebra is commutative.
inline std::vector<Vec<Fp>> frobenius_fixed(const Algebra<Fp>& a) {
  Mat<Fp> f = matrix_of<Fp>(a.field, a.dim, a.dim, [&](const Vec<Fp>& x) { return a.pow(x, a.field.p); });
  return kernel_basis(f - Mat<Fp>::identity(a.field, a.dim), a.field);
}

// Number of simple components of a commutative semisimple algebra over F_p.
template <class K>
std::size_t count_simple_components(const Algebra<K>& a) {
  if constexpr (!is_prime_field_v<K>) {
    throw precondition_error("count_simple_components: only available over prime fields");
  } else {
    if (!a.is_commutative()) throw std::invalid_argument("count_simple_components: algebra is not commutative");
    return frobenius_fixed(a).size();
  }
}

// Number of idempotents by enumeration, when p^dim <= limit.
inline std::optional<std::uint64_t> count_idempotents_exhaustive(const Algebra<Fp>& a, std::uint64_t limit = 1000000) {
  const std::uint64_t p = a.field.p;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (total > limit / p) return std::nullopt;
    total *= p;
  }
  std::uint64_t count = 0;
  Vec<Fp> x(a.dim, Fp(0, a.field.p));
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t v = k;
    for (std::size_t i = 0; i < a.dim; ++i) {
      x[i] = Fp(static_cast<std::int64_t>(v % p), a.field.p);
      v /= p;
    }
    if (a.mul(x, x) == x) ++count;
  }
  return count;
}

// ---- idempotents --------------------------------------------------------

namespace decomp_detail {

template <class K>
K sample_scalar(const FieldSpec& f, std::mt19937_64& rng) {
  if constexpr (is_prime_field_v<K>) return Fp(static_cast<std::int64_t>(rng() % f.p), f.p);
  else return Rational(static_cast<std::int64_t>(rng() % 5) - 2);
}

// Monic minimal polynomial of x in a unital algebra.
template <class K>
Poly<K> element_min_poly(const Algebra<K>& a, const Vec<K>& x) {
  std::vector<Vec<K>> powers{a.unit};
  for (std::size_t d = 1; d <= a.dim + 1; ++d) {
    Vec<K> next = a.mul(powers.back(), x);
    auto c = solve_vec(Mat<K>::from_columns(a.dim, powers), next);
    if (c) {
      Poly<K> m(d + 1);
      for (std::size_t i = 0; i < d; ++i) m[i] = -(*c)[i];
      m[d] = one<K>(a.field);
      return m;
    }
    powers.push_back(std::move(next));
  }
  throw std::logic_error("element_min_poly: no dependence found");
}

inline std::vector<Fp> field_roots(const Poly<Fp>& m, const FieldSpec& f) {
  Poly<Fp> x{Fp(0, f.p), Fp(1, f.p)};
  Poly<Fp> xp = poly_powmod(x, f.p, m, f);
  Poly<Fp> g = poly_gcd(m, poly_sub(xp, x));
  return split_linear_roots(g, f);
}

inline std::vector<mpz_class> small_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> d;
  if (n == 0 || n > mpz_class("1000000000000")) return d;
  for (mpz_class k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      d.push_back(k);
      if (k * k != n) d.push_back(n / k);
    }
  return d;
}

// Rational roots by the rational root test; gives up on huge coefficients.
inline std::vector<Rational> field_roots(Poly<Rational> m, const FieldSpec&) {
  std::vector<Rational> roots;
  trim(m);
  if (m.size() <= 1) return roots;
  mpz_class den = 1;
  for (const auto& c : m) den = lcm(den, c.get().get_den());
  std::vector<mpz_class> z;
  for (const auto& c : m) z.push_back(mpz_class(c.get() * den));
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  if (low + 1 >= z.size()) return roots;
  for (const auto& num : small_divisors(z[low]))
    for (const auto& dd : small_divisors(z.back()))
      for (int sgn : {1, -1}) {
        Rational r(mpq_class(num * sgn, dd));
        if (poly_eval(m, r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  return roots;
}

// An idempotent f with fA = zA, for z in a semisimple algebra; it is
// found from f in zA acting as the identity on zA.
template <class K>
std::optional<Vec<K>> right_ideal_idempotent(const Algebra<K>& a, const Vec<K>& z) {
  std::vector<Vec<K>> gens;
  for (std::size_t i = 0; i < a.dim; ++i) gens.push_back(a.mul(z, a.basis_vec(i)));
  std::vector<Vec<K>> r;
  {
    Subspace<K> s(a.dim, gens);
    r = s.basis();
  }
  const std::size_t k = r.size();
  if (k == 0) return std::nullopt;
  Mat<K> m(a.dim * k, k);
  Vec<K> rhs(a.dim * k, K{});
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      Vec<K> p = a.mul(r[i], r[j]);
      for (std::size_t t = 0; t < a.dim; ++t) m(j * a.dim + t, i) = p[t];
    }
    for (std::size_t t = 0; t < a.dim; ++t) rhs[j * a.dim + t] = r[j][t];
  }
  auto x = solve_vec(m, rhs);
  if (!x) return std::nullopt;
  Vec<K> f = combine(r, *x, a.dim);
  if (a.mul(f, f) != f) return std::nullopt;
  return f;
}

}  // namespace decomp_detail

template <class K>
struct PrimitiveIdempotents {
  std::vector<Vec<K>> idems;
  std::vector<bool> proven;  // corner known to be a division algebra
};

struct SplitOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 400;
};

// A complete set of orthogonal idempotents of a semisimple algebra, split
// until every corner is a division algebra. Over F_p a corner eAe is a
// division algebra iff it is commutative with one simple component.
template <class K>
PrimitiveIdempotents<K> primitive_idempotents(const Algebra<K>& s, const SplitOptions& opt = {}) {
  using namespace decomp_detail;
  PrimitiveIdempotents<K> out;
  if (s.dim == 0) return out;
  std::mt19937_64 rng(opt.seed * 0x9e3779b97f4a7c15ull + 17);
  std::vector<Vec<K>> work{s.unit};
  while (!work.empty()) {
    Vec<K> e = work.back();
    work.pop_back();
    std::vector<Vec<K>> span;
    for (std::size_t i = 0; i < s.dim; ++i) span.push_back(s.mul(e, s.mul(s.basis_vec(i), e)));
    EmbeddedAlgebra<K> c = subalgebra(s, span, e);
    const Algebra<K>& ca = c.alg;
    if (ca.dim == 1) {
      out.idems.push_back(e);
      out.proven.push_back(true);
      continue;
    }
    const bool comm = ca.is_commutative();
    std::vector<Vec<K>> candidates;
    if constexpr (is_prime_field_v<K>) {
      if (comm) {
        auto fixed = frobenius_fixed(ca);
        if (fixed.size() == 1) {
          out.idems.push_back(e);
          out.proven.push_back(true);
          continue;
        }
        candidates = fixed;
      }
    }
    for (std::size_t i = 0; i < ca.dim; ++i) candidates.push_back(ca.basis_vec(i));
    for (const auto& z : center_of_algebra(ca)) candidates.push_back(z);
    std::optional<Vec<K>> f;
    auto try_candidate = [&](const Vec<K>& x) {
      Poly<K> m = element_min_poly(ca, x);
      if (m.size() < 3) return;
      for (const K& r : field_roots(m, s.field)) {
        Vec<K> z = x;
        axpy(z, -r, ca.unit);
        auto g = right_ideal_idempotent(ca, z);
        if (g && !is_zero_vec(*g) && *g != ca.unit) {
          f = g;
          return;
        }
      }
    };
    for (const auto& x : candidates) {
      try_candidate(x);
      if (f) break;
    }
    for (std::size_t t = 0; !f && t < opt.samples; ++t) {
      Vec<K> x(ca.dim);
      for (auto& v : x) v = sample_scalar<K>(s.field, rng);
      try_candidate(x);
    }
    if (!f) {
      if constexpr (is_prime_field_v<K>) {
        if (!comm) throw std::logic_error("primitive_idempotents: no zero divisor found in a noncommutative corner");
        throw std::logic_error("primitive_idempotents: Frobenius split produced no idempotent");
      }
      out.idems.push_back(e);
      out.proven.push_back(false);
      continue;
    }
    Vec<K> fe = c.lift(*f);
    work.push_back(e - fe);
    work.push_back(fe);
  }
  return out;
}

// Lifts orthogonal idempotents of A/J (J nilpotent) to A: each is lifted
// inside (1-E)A(1-E), E the sum of those already lifted, by iterating
// e <- 3e^2 - 2e^3; the last one is 1 - E.
template <class K>
std::vector<Vec<K>> lift_idempotents(const Algebra<K>& a, const Quotient<K>& q, const std::vector<Vec<K>>& seeds) {
  std::vector<Vec<K>> out;
  if (seeds.empty()) return out;
  const K three = from_int<K>(a.field, 3), two = from_int<K>(a.field, 2);
  Vec<K> sum = a.zero();
  for (std::size_t k = 0; k + 1 < seeds.size(); ++k) {
    Vec<K> c = a.unit - sum;
    Vec<K> e = a.mul(c, a.mul(q.section(seeds[k], a.dim, a.field), c));
    std::size_t it = 0;
    for (; it < 64; ++it) {
      Vec<K> e2 = a.mul(e, e);
      if (e2 == e) break;
      e = scaled(three, e2) - scaled(two, a.mul(e2, e));
    }
    if (it == 64) throw std::logic_error("lift_idempotents: Newton iteration did not converge");
    out.push_back(e);
    sum = sum + e;
  }
  out.push_back(a.unit - sum);
  return out;
}

template <class K>
Report check_idempotent_family(const Algebra<K>& a, const std::vector<Vec<K>>& es) {
  Report r("idempotents");
  r.ensure("idempotent");
  r.ensure("orthogonal");
  r.ensure("complete");
  Vec<K> sum = a.zero();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (a.mul(es[i], es[i]) != es[i]) r.violate("idempotent", "e" + std::to_string(i));
    if (is_zero_vec(es[i])) r.violate("idempotent", "e" + std::to_string(i) + " is zero");
    for (std::size_t j = 0; j < es.size(); ++j)
      if (i != j && !is_zero_vec(a.mul(es[i], es[j]))) r.violate("orthogonal", "e" + std::to_string(i) + " e" + std::to_string(j));
    sum = sum + es[i];
  }
  if (sum != a.unit) r.violate("complete", "sum differs from 1");
  return r;
}

}  // namespace skewcat
