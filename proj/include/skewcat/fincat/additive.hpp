#pragma once

// The additive hull. A sum is a list of base objects; a morphism S -> T
// between sums is a flat vector of blocks, block (i,j) in Hom(S_j, T_i),
// blocks laid out row-major. The same layout is used for bimodule
// elements. Karoubi objects pair a sum with an idempotent endomorphism;
// morphisms between them are absorbed by both idempotents.

#include "skewcat/core/search.hpp"
#include "skewcat/fincat/category.hpp"

#include <functional>

namespace skewcat {

using Sum = std::vector<std::size_t>;

struct Layout {
  std::size_t rows = 0, cols = 0;  // |T|, |S|
  std::vector<std::size_t> offset; // [i*cols + j]
  std::vector<std::size_t> size;
  std::size_t total = 0;

  std::size_t at(std::size_t i, std::size_t j) const { return offset[i * cols + j]; }
  std::size_t len(std::size_t i, std::size_t j) const { return size[i * cols + j]; }
};

template <class DimFn>
Layout make_layout(const Sum& s, const Sum& t, DimFn&& dim) {
  Layout l;
  l.rows = t.size();
  l.cols = s.size();
  l.offset.resize(l.rows * l.cols);
  l.size.resize(l.rows * l.cols);
  for (std::size_t i = 0; i < l.rows; ++i)
    for (std::size_t j = 0; j < l.cols; ++j) {
      l.offset[i * l.cols + j] = l.total;
      l.size[i * l.cols + j] = dim(s[j], t[i]);
      l.total += l.size[i * l.cols + j];
    }
  return l;
}

template <class K>
Layout hom_layout(const FinCat<K>& c, const Sum& s, const Sum& t) {
  return make_layout(s, t, [&](std::size_t x, std::size_t y) { return c.dim(x, y); });
}

template <class K>
Layout bim_layout(const Triple<K>& tr, const Sum& s, const Sum& t) {
  return make_layout(s, t, [&](std::size_t x, std::size_t y) { return tr.bdim(x, y); });
}

template <class K>
Vec<K> get_block(const Layout& l, const Vec<K>& v, std::size_t i, std::size_t j) {
  const std::size_t o = l.at(i, j);
  return Vec<K>(v.begin() + o, v.begin() + o + l.len(i, j));
}

template <class K>
void add_block(const Layout& l, Vec<K>& v, std::size_t i, std::size_t j, const Vec<K>& b) {
  const std::size_t o = l.at(i, j);
  for (std::size_t k = 0; k < b.size(); ++k) v[o + k] += b[k];
}

template <class K>
void set_block(const Layout& l, Vec<K>& v, std::size_t i, std::size_t j, const Vec<K>& b) {
  std::copy(b.begin(), b.end(), v.begin() + l.at(i, j));
}

// Copies w (layout ls) into v (layout lb) with its block (0,0) at (ro, co).
template <class K>
void put_blocks(const Layout& lb, Vec<K>& v, std::size_t ro, std::size_t co, const Layout& ls, const Vec<K>& w) {
  for (std::size_t i = 0; i < ls.rows; ++i)
    for (std::size_t j = 0; j < ls.cols; ++j)
      if (ls.len(i, j)) set_block(lb, v, ro + i, co + j, get_block(ls, w, i, j));
}

template <class K>
Vec<K> take_blocks(const Layout& lb, const Vec<K>& v, std::size_t ro, std::size_t co, const Layout& ls) {
  Vec<K> w(ls.total);
  for (std::size_t i = 0; i < ls.rows; ++i)
    for (std::size_t j = 0; j < ls.cols; ++j)
      if (ls.len(i, j)) set_block(ls, w, i, j, get_block(lb, v, ro + i, co + j));
  return w;
}

inline Sum concat(const Sum& a, const Sum& b) {
  Sum r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// g o f for f: S -> T, g: T -> U.
template <class K>
Vec<K> add_compose(const FinCat<K>& c, const Sum& s, const Sum& t, const Sum& u, const Vec<K>& g, const Vec<K>& f) {
  Layout lf = hom_layout(c, s, t), lg = hom_layout(c, t, u), lr = hom_layout(c, s, u);
  if (f.size() != lf.total || g.size() != lg.total) throw dimension_error("add_compose: coordinate length mismatch");
  Vec<K> r(lr.total);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (lg.len(i, k) == 0 || lf.len(k, j) == 0 || lr.len(i, j) == 0) continue;
        add_block(lr, r, i, j, c.compose(s[j], t[k], u[i], get_block(lg, g, i, k), get_block(lf, f, k, j)));
      }
  return r;
}

// a.x for a: T -> U, x in B(S,T).
template <class K>
Vec<K> add_left(const Triple<K>& tr, const Sum& s, const Sum& t, const Sum& u, const Vec<K>& a, const Vec<K>& x) {
  Layout la = hom_layout(tr.cat, t, u), lx = bim_layout(tr, s, t), lr = bim_layout(tr, s, u);
  if (a.size() != la.total || x.size() != lx.total) throw dimension_error("add_left: coordinate length mismatch");
  Vec<K> r(lr.total);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (la.len(i, k) == 0 || lx.len(k, j) == 0 || lr.len(i, j) == 0) continue;
        add_block(lr, r, i, j, tr.act_left(s[j], t[k], u[i], get_block(la, a, i, k), get_block(lx, x, k, j)));
      }
  return r;
}

// x.a for x in B(T,U), a: S -> T.
template <class K>
Vec<K> add_right(const Triple<K>& tr, const Sum& s, const Sum& t, const Sum& u, const Vec<K>& x, const Vec<K>& a) {
  Layout lx = bim_layout(tr, t, u), la = hom_layout(tr.cat, s, t), lr = bim_layout(tr, s, u);
  if (a.size() != la.total || x.size() != lx.total) throw dimension_error("add_right: coordinate length mismatch");
  Vec<K> r(lr.total);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (lx.len(i, k) == 0 || la.len(k, j) == 0 || lr.len(i, j) == 0) continue;
        add_block(lr, r, i, j, tr.act_right(s[j], t[k], u[i], get_block(lx, x, i, k), get_block(la, a, k, j)));
      }
  return r;
}

// Blockwise differentiation of a: S -> T.
template <class K>
Vec<K> add_diff(const Triple<K>& tr, const Sum& s, const Sum& t, const Vec<K>& a) {
  Layout la = hom_layout(tr.cat, s, t), lr = bim_layout(tr, s, t);
  if (a.size() != la.total) throw dimension_error("add_diff: coordinate length mismatch");
  Vec<K> r(lr.total);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (la.len(i, j) && lr.len(i, j)) set_block(lr, r, i, j, tr.d(s[j], t[i], get_block(la, a, i, j)));
  return r;
}

template <class K>
Vec<K> add_identity(const FinCat<K>& c, const Sum& s) {
  Layout l = hom_layout(c, s, s);
  Vec<K> r(l.total);
  for (std::size_t i = 0; i < s.size(); ++i) set_block(l, r, i, i, c.id(s[i]));
  return r;
}

// Block-diagonal sum of a: S -> T and b: S' -> T'.
template <class K>
Vec<K> add_direct_sum(const FinCat<K>& c, const Sum& s1, const Sum& t1, const Vec<K>& a, const Sum& s2, const Sum& t2, const Vec<K>& b) {
  Layout la = hom_layout(c, s1, t1), lb = hom_layout(c, s2, t2);
  Sum s = concat(s1, s2), t = concat(t1, t2);
  Layout l = hom_layout(c, s, t);
  Vec<K> r(l.total);
  for (std::size_t i = 0; i < t1.size(); ++i)
    for (std::size_t j = 0; j < s1.size(); ++j) set_block(l, r, i, j, get_block(la, a, i, j));
  for (std::size_t i = 0; i < t2.size(); ++i)
    for (std::size_t j = 0; j < s2.size(); ++j) set_block(l, r, t1.size() + i, s1.size() + j, get_block(lb, b, i, j));
  return r;
}

// Object of the Karoubi envelope of add A: a sum with an idempotent.
template <class K>
struct AddObject {
  Sum summands;
  Vec<K> idem;

  static AddObject plain(const FinCat<K>& c, Sum s) {
    AddObject o{std::move(s), {}};
    o.idem = add_identity(c, o.summands);
    return o;
  }
  bool is_zero() const { return summands.empty() || is_zero_vec(idem); }
  friend bool operator==(const AddObject& a, const AddObject& b) { return a.summands == b.summands && a.idem == b.idem; }
};

template <class K>
struct AddMorphism {
  AddObject<K> src, dst;
  Vec<K> coords;
};

template <class K>
AddObject<K> add_object_sum(const FinCat<K>& c, const AddObject<K>& a, const AddObject<K>& b) {
  return AddObject<K>{concat(a.summands, b.summands), add_direct_sum(c, a.summands, a.summands, a.idem, b.summands, b.summands, b.idem)};
}

template <class K>
bool is_idempotent(const FinCat<K>& c, const Sum& s, const Vec<K>& e) {
  return add_compose(c, s, s, s, e, e) == e;
}

// f m e for m: X -> Y.
template <class K>
Vec<K> absorb(const FinCat<K>& c, const AddObject<K>& x, const AddObject<K>& y, const Vec<K>& m) {
  return add_compose(c, x.summands, y.summands, y.summands, y.idem, add_compose(c, x.summands, x.summands, y.summands, m, x.idem));
}

template <class K>
bool is_absorbed(const FinCat<K>& c, const AddObject<K>& x, const AddObject<K>& y, const Vec<K>& m) {
  return absorb(c, x, y, m) == m;
}

template <class K>
AddMorphism<K> add_compose(const FinCat<K>& c, const AddMorphism<K>& g, const AddMorphism<K>& f) {
  if (!(f.dst == g.src)) throw dimension_error("add_compose: target of f differs from source of g");
  return AddMorphism<K>{f.src, g.dst, add_compose(c, f.src.summands, f.dst.summands, g.dst.summands, g.coords, f.coords)};
}

template <class K>
AddMorphism<K> add_identity(const FinCat<K>& c, const AddObject<K>& x) {
  return AddMorphism<K>{x, x, x.idem};
}

// Basis of the absorbed subspace Hom(X,Y) = f Hom(S,T) e.
template <class K>
std::vector<Vec<K>> add_hom_basis(const FinCat<K>& c, const AddObject<K>& x, const AddObject<K>& y) {
  const std::size_t n = hom_layout(c, x.summands, y.summands).total;
  Mat<K> p = matrix_of<K>(c.field, n, n, [&](const Vec<K>& m) { return absorb(c, x, y, m); });
  // the projection is idempotent, so its column space is the absorbed space
  Subspace<K> img(n, [&] {
    std::vector<Vec<K>> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(p.column(j));
    return cols;
  }());
  return img.basis();
}

template <class K>
struct SplitIdempotent {
  AddObject<K> image;
  Vec<K> iota;  // image -> X
  Vec<K> pi;    // X -> image
};

// Splits an idempotent e on X. The image is (summands of X, e); iota and pi
// are both e. e = 0 gives the zero object.
template <class K>
SplitIdempotent<K> split_idempotent(const FinCat<K>& c, const AddObject<K>& x, const Vec<K>& e) {
  const Sum& s = x.summands;
  if (e.size() != hom_layout(c, s, s).total) throw dimension_error("split_idempotent: coordinate length mismatch");
  if (!is_idempotent(c, s, e)) throw std::invalid_argument("split_idempotent: input is not idempotent");
  if (!is_absorbed(c, x, x, e)) throw std::invalid_argument("split_idempotent: input is not an endomorphism of the given object");
  if (is_zero_vec(e)) return SplitIdempotent<K>{AddObject<K>{}, {}, {}};
  return SplitIdempotent<K>{AddObject<K>{s, e}, e, e};
}

// Inverse of an isomorphism m: X -> Y of Karoubi objects, if m is one.
template <class K>
std::optional<Vec<K>> add_inverse(const FinCat<K>& c, const AddObject<K>& x, const AddObject<K>& y, const Vec<K>& m) {
  const Sum &s = x.summands, &t = y.summands;
  const std::size_t n = hom_layout(c, t, s).total;
  if (y.is_zero() && x.is_zero()) return Vec<K>(n);
  // unknown b: Y -> X with b m = e_X, m b = e_Y, e_X b e_Y = b
  Mat<K> l1 = matrix_of<K>(c.field, n, hom_layout(c, s, s).total, [&](const Vec<K>& b) { return add_compose(c, s, t, s, b, m); });
  Mat<K> l2 = matrix_of<K>(c.field, n, hom_layout(c, t, t).total, [&](const Vec<K>& b) { return add_compose(c, t, s, t, m, b); });
  Mat<K> l3 = matrix_of<K>(c.field, n, n, [&](const Vec<K>& b) { return absorb(c, y, x, b) - b; });
  Mat<K> a = vstack<K>({l1, l2, l3}, n);
  Vec<K> rhs = x.idem;
  rhs.insert(rhs.end(), y.idem.begin(), y.idem.end());
  rhs.resize(a.rows());
  auto sol = solve_vec(a, rhs);
  return sol;
}

// Searches an isomorphism X -> Y of Karoubi objects.
template <class K>
SearchResult<K> find_add_iso(const FinCat<K>& c, const AddObject<K>& x, const AddObject<K>& y, const SearchOptions& opt,
                             const std::vector<Vec<K>>& witnesses = {}) {
  auto basis = add_hom_basis(c, x, y);
  const std::size_t n = hom_layout(c, x.summands, y.summands).total;
  return search_subspace<K>(c.field, basis, n, witnesses, opt, [&](const Vec<K>& m) { return add_inverse(c, x, y, m).has_value(); });
}

}  // namespace skewcat
