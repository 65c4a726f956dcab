#pragma once

// Exhaustive axiom checks for categories, bimodules and triples. Every
// violated instance is named by the objects and basis elements involved.

#include "skewcat/core/report.hpp"
#include "skewcat/fincat/category.hpp"

namespace skewcat {

namespace detail {

template <class K>
std::string hom_label(const FinCat<K>& c, std::size_t x, std::size_t y, std::size_t i) {
  return c.basis[c.pair(x, y)][i] + ":" + c.objects[x] + "->" + c.objects[y];
}

template <class K>
void check_shapes(const FinCat<K>& c, Report& r) {
  const std::size_t m = c.n();
  r.ensure("shape");
  if (c.basis.size() != m * m) r.violate("shape", "basis table has wrong size");
  if (c.comp.size() != m * m * m) {
    r.violate("shape", "composition table has wrong size");
    return;
  }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (c.tensor(x, y, z).size() != c.dim(y, z) * c.dim(x, y) * c.dim(x, z))
          r.violate("shape", "composition tensor (" + c.objects[x] + "," + c.objects[y] + "," + c.objects[z] + ") has wrong size");
  if (c.ids.size() != m) r.violate("shape", "identity table has wrong size");
  for (std::size_t x = 0; x < m && x < c.ids.size(); ++x)
    if (c.ids[x].size() != c.dim(x, x)) r.violate("shape", "identity of " + c.objects[x] + " has wrong length");
}

}  // namespace detail

template <class K>
Report validate_category(const FinCat<K>& c) {
  Report r("category");
  detail::check_shapes(c, r);
  if (!r.passed()) return r;
  const std::size_t m = c.n();
  r.ensure("identity");
  r.ensure("associativity");
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t i = 0; i < c.dim(x, y); ++i) {
        Vec<K> a = unit_vec<K>(c.field, c.dim(x, y), i);
        if (c.compose(x, y, y, c.id(y), a) != a) r.violate("identity", "1 o " + detail::hom_label(c, x, y, i) + " != " + c.basis[c.pair(x, y)][i]);
        if (c.compose(x, x, y, a, c.id(x)) != a) r.violate("identity", detail::hom_label(c, x, y, i) + " o 1 != " + c.basis[c.pair(x, y)][i]);
      }
  // (c o b) o a == c o (b o a) for a: w->x, b: x->y, c: y->z
  for (std::size_t w = 0; w < m; ++w)
    for (std::size_t x = 0; x < m; ++x) {
      if (c.dim(w, x) == 0) continue;
      for (std::size_t y = 0; y < m; ++y) {
        if (c.dim(x, y) == 0) continue;
        for (std::size_t z = 0; z < m; ++z) {
          if (c.dim(y, z) == 0) continue;
          for (std::size_t k = 0; k < c.dim(y, z); ++k)
            for (std::size_t j = 0; j < c.dim(x, y); ++j) {
              Vec<K> cb = c.compose_basis(x, y, z, k, j);
              for (std::size_t i = 0; i < c.dim(w, x); ++i) {
                Vec<K> a = unit_vec<K>(c.field, c.dim(w, x), i);
                Vec<K> lhs = c.compose(w, x, z, cb, a);
                Vec<K> rhs = c.compose(w, y, z, unit_vec<K>(c.field, c.dim(y, z), k), c.compose_basis(w, x, y, j, i));
                if (lhs != rhs)
                  r.violate("associativity", "(" + detail::hom_label(c, y, z, k) + ", " + detail::hom_label(c, x, y, j) + ", " +
                                                 detail::hom_label(c, w, x, i) + ")");
              }
            }
        }
      }
    }
  return r;
}

// Bimodule axioms: (b'b)u = b'(bu), u(aa') = (ua)a', (bu)a = b(ua), 1u = u1 = u.
template <class K>
Report validate_bimodule(const Triple<K>& t) {
  Report r("bimodule");
  const FinCat<K>& c = t.cat;
  const std::size_t m = t.n();
  const FieldSpec& f = t.field();
  r.ensure("shape");
  if (t.bim.basis.size() != m * m || t.bim.left.size() != m * m * m || t.bim.right.size() != m * m * m) {
    r.violate("shape", "bimodule tables have wrong size");
    return r;
  }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z) {
        if (t.left_tensor(x, y, z).size() != t.dim(y, z) * t.bdim(x, y) * t.bdim(x, z))
          r.violate("shape", "left action tensor (" + c.objects[x] + "," + c.objects[y] + "," + c.objects[z] + ") has wrong size");
        if (t.right_tensor(x, y, z).size() != t.bdim(y, z) * t.dim(x, y) * t.bdim(x, z))
          r.violate("shape", "right action tensor (" + c.objects[x] + "," + c.objects[y] + "," + c.objects[z] + ") has wrong size");
      }
  if (!r.passed()) return r;

  auto el = [&](std::size_t x, std::size_t y, std::size_t i) {
    return t.bim.basis[c.pair(x, y)][i] + ":" + c.objects[x] + "->" + c.objects[y];
  };
  r.ensure("unit");
  r.ensure("left associativity");
  r.ensure("right associativity");
  r.ensure("bimodule compatibility");
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t i = 0; i < t.bdim(x, y); ++i) {
        Vec<K> u = unit_vec<K>(f, t.bdim(x, y), i);
        if (t.act_left(x, y, y, c.id(y), u) != u) r.violate("unit", "1." + el(x, y, i));
        if (t.act_right(x, x, y, u, c.id(x)) != u) r.violate("unit", el(x, y, i) + ".1");
      }
  for (std::size_t w = 0; w < m; ++w)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        for (std::size_t z = 0; z < m; ++z) {
          // left: b' in A(y,z), b in A(x,y), u in B(w,x)
          for (std::size_t k = 0; k < t.dim(y, z); ++k)
            for (std::size_t j = 0; j < t.dim(x, y); ++j)
              for (std::size_t i = 0; i < t.bdim(w, x); ++i) {
                Vec<K> b2 = unit_vec<K>(f, t.dim(y, z), k), b1 = unit_vec<K>(f, t.dim(x, y), j), u = unit_vec<K>(f, t.bdim(w, x), i);
                Vec<K> lhs = t.act_left(w, x, z, c.compose(x, y, z, b2, b1), u);
                Vec<K> rhs = t.act_left(w, y, z, b2, t.act_left(w, x, y, b1, u));
                if (lhs != rhs) r.violate("left associativity", "(" + detail::hom_label(c, y, z, k) + ", " + detail::hom_label(c, x, y, j) + ", " + el(w, x, i) + ")");
              }
          // right: u in B(y,z), a in A(x,y), a' in A(w,x)
          for (std::size_t k = 0; k < t.bdim(y, z); ++k)
            for (std::size_t j = 0; j < t.dim(x, y); ++j)
              for (std::size_t i = 0; i < t.dim(w, x); ++i) {
                Vec<K> u = unit_vec<K>(f, t.bdim(y, z), k), a = unit_vec<K>(f, t.dim(x, y), j), a2 = unit_vec<K>(f, t.dim(w, x), i);
                Vec<K> lhs = t.act_right(w, y, z, u, c.compose(w, x, y, a, a2));
                Vec<K> rhs = t.act_right(w, x, z, t.act_right(x, y, z, u, a), a2);
                if (lhs != rhs) r.violate("right associativity", "(" + el(y, z, k) + ", " + detail::hom_label(c, x, y, j) + ", " + detail::hom_label(c, w, x, i) + ")");
              }
          // (b u) a = b (u a): b in A(y,z), u in B(x,y), a in A(w,x)
          for (std::size_t k = 0; k < t.dim(y, z); ++k)
            for (std::size_t j = 0; j < t.bdim(x, y); ++j)
              for (std::size_t i = 0; i < t.dim(w, x); ++i) {
                Vec<K> b = unit_vec<K>(f, t.dim(y, z), k), u = unit_vec<K>(f, t.bdim(x, y), j), a = unit_vec<K>(f, t.dim(w, x), i);
                Vec<K> lhs = t.act_right(w, x, z, t.act_left(x, y, z, b, u), a);
                Vec<K> rhs = t.act_left(w, y, z, b, t.act_right(w, x, y, u, a));
                if (lhs != rhs) r.violate("bimodule compatibility", "(" + detail::hom_label(c, y, z, k) + ", " + el(x, y, j) + ", " + detail::hom_label(c, w, x, i) + ")");
              }
        }
  return r;
}

// Leibniz rule for the differentiation alone (assumes valid category and
// bimodule).
template <class K>
Report validate_differentiation(const Triple<K>& t) {
  Report r("differentiation");
  const FinCat<K>& c = t.cat;
  const std::size_t m = t.n();
  const FieldSpec& f = t.field();
  r.ensure("shape");
  if (t.diff.size() != m * m) {
    r.violate("shape", "differentiation table has wrong size");
    return r;
  }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const Mat<K>& d = t.diff[c.pair(x, y)];
      if (d.rows() != t.bdim(x, y) || d.cols() != t.dim(x, y))
        r.violate("shape", "differentiation on (" + c.objects[x] + "," + c.objects[y] + ") has wrong shape");
    }
  if (!r.passed()) return r;
  r.ensure("unit");
  r.ensure("leibniz");
  for (std::size_t x = 0; x < m; ++x)
    if (!is_zero_vec(t.d(x, x, c.id(x)))) r.violate("unit", "d(1_" + c.objects[x] + ") != 0");
  // d(b a) = (d b) a + b (d a) for a: x->y, b: y->z
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        for (std::size_t j = 0; j < t.dim(y, z); ++j)
          for (std::size_t i = 0; i < t.dim(x, y); ++i) {
            Vec<K> b = unit_vec<K>(f, t.dim(y, z), j), a = unit_vec<K>(f, t.dim(x, y), i);
            Vec<K> lhs = t.d(x, z, c.compose_basis(x, y, z, j, i));
            Vec<K> rhs = t.act_right(x, y, z, t.d(y, z, b), a) + t.act_left(x, y, z, b, t.d(x, y, a));
            if (lhs != rhs) r.violate("leibniz", "(" + detail::hom_label(c, y, z, j) + ", " + detail::hom_label(c, x, y, i) + ")");
          }
  return r;
}

// Full triple check: category, bimodule and differentiation.
template <class K>
Report validate_triple(const Triple<K>& t) {
  Report r("triple");
  Report rc = validate_category(t.cat);
  r.merge(rc, "category/");
  if (!rc.passed()) return r;
  Report rb = validate_bimodule(t);
  r.merge(rb, "bimodule/");
  if (!rb.passed()) return r;
  r.merge(validate_differentiation(t), "differentiation/");
  return r;
}

}  // namespace skewcat
