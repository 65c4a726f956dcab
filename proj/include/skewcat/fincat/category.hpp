#pragma once

// Finite K-linear categories, bimodules over them and differentiations,
// all given by structure constants.
//
// Coordinates: Hom(X,Y) has basis basis[X*n+Y]. The composition tensor of a
// triple (X,Y,Z) is stored flat; the coefficient of basis vector k of
// Hom(X,Z) in b_j o a_i (b_j: Y->Z, a_i: X->Y) sits at ((j*dXY)+i)*dXZ+k.
// Bimodule actions use the same layout with the bimodule basis in the
// appropriate slot.

#include "skewcat/exactla/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skewcat {

// r[k] = sum_{j,i} u[j] v[i] t[((j*d2)+i)*d3+k]
template <class K>
Vec<K> bilinear(const std::vector<K>& t, std::size_t d1, std::size_t d2, std::size_t d3, const Vec<K>& u, const Vec<K>& v) {
  if (u.size() != d1 || v.size() != d2) throw dimension_error("bilinear: argument length mismatch");
  Vec<K> r(d3);
  for (std::size_t j = 0; j < d1; ++j) {
    if (u[j].is_zero()) continue;
    for (std::size_t i = 0; i < d2; ++i) {
      if (v[i].is_zero()) continue;
      const K c = u[j] * v[i];
      const std::size_t base = (j * d2 + i) * d3;
      for (std::size_t k = 0; k < d3; ++k)
        if (!t[base + k].is_zero()) r[k] += c * t[base + k];
    }
  }
  return r;
}

template <class K>
struct FinCat {
  FieldSpec field;
  std::vector<std::string> objects;
  std::vector<std::vector<std::string>> basis;  // [x*n+y]
  std::vector<std::vector<K>> comp;             // [(x*n+y)*n+z]
  std::vector<Vec<K>> ids;                      // [x]

  FinCat() = default;
  FinCat(FieldSpec f, std::vector<std::string> objs) : field(f), objects(std::move(objs)) {
    basis.assign(n() * n(), {});
  }

  std::size_t n() const { return objects.size(); }
  std::size_t pair(std::size_t x, std::size_t y) const { return x * n() + y; }
  std::size_t dim(std::size_t x, std::size_t y) const { return basis[pair(x, y)].size(); }

  // Sizes every composition tensor and identity to zero. Call once the
  // bases are final.
  void allocate() {
    const std::size_t m = n();
    comp.assign(m * m * m, {});
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        for (std::size_t z = 0; z < m; ++z)
          comp[(x * m + y) * m + z].assign(dim(y, z) * dim(x, y) * dim(x, z), K{});
    ids.assign(m, {});
    for (std::size_t x = 0; x < m; ++x) ids[x].assign(dim(x, x), K{});
  }

  std::vector<K>& tensor(std::size_t x, std::size_t y, std::size_t z) { return comp[(x * n() + y) * n() + z]; }
  const std::vector<K>& tensor(std::size_t x, std::size_t y, std::size_t z) const { return comp[(x * n() + y) * n() + z]; }

  // b o a for b in Hom(y,z), a in Hom(x,y).
  Vec<K> compose(std::size_t x, std::size_t y, std::size_t z, const Vec<K>& b, const Vec<K>& a) const {
    return bilinear(tensor(x, y, z), dim(y, z), dim(x, y), dim(x, z), b, a);
  }

  // Coordinates of b_j o a_i.
  Vec<K> compose_basis(std::size_t x, std::size_t y, std::size_t z, std::size_t j, std::size_t i) const {
    const auto& t = tensor(x, y, z);
    const std::size_t d = dim(x, z), base = (j * dim(x, y) + i) * d;
    return Vec<K>(t.begin() + base, t.begin() + base + d);
  }
  void set_compose_basis(std::size_t x, std::size_t y, std::size_t z, std::size_t j, std::size_t i, const Vec<K>& v) {
    auto& t = tensor(x, y, z);
    const std::size_t d = dim(x, z), base = (j * dim(x, y) + i) * d;
    if (v.size() != d) throw dimension_error("set_compose_basis: wrong length");
    std::copy(v.begin(), v.end(), t.begin() + base);
  }

  const Vec<K>& id(std::size_t x) const { return ids[x]; }
  Vec<K> zero(std::size_t x, std::size_t y) const { return Vec<K>(dim(x, y)); }

  std::optional<std::size_t> object_index(const std::string& name) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == name) return i;
    return std::nullopt;
  }
};

// An A-bimodule. left: a in A(y,z), u in B(x,y) -> B(x,z), tensor index
// (x,y,z). right: u in B(x,y), a in A(w,x) -> B(w,y), tensor index (w,x,y).
template <class K>
struct Bimodule {
  std::vector<std::vector<std::string>> basis;  // [x*n+y]
  std::vector<std::vector<K>> left;
  std::vector<std::vector<K>> right;
};

template <class K>
struct Triple {
  FinCat<K> cat;
  Bimodule<K> bim;
  std::vector<Mat<K>> diff;  // [x*n+y]: A(x,y) -> B(x,y)

  const FieldSpec& field() const { return cat.field; }
  std::size_t n() const { return cat.n(); }
  std::size_t dim(std::size_t x, std::size_t y) const { return cat.dim(x, y); }
  std::size_t bdim(std::size_t x, std::size_t y) const { return bim.basis[cat.pair(x, y)].size(); }

  // Allocates zero bimodule actions and differentiation for the current bases.
  void allocate_bimodule() {
    const std::size_t m = n();
    bim.left.assign(m * m * m, {});
    bim.right.assign(m * m * m, {});
    diff.assign(m * m, Mat<K>());
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        diff[cat.pair(x, y)] = Mat<K>(bdim(x, y), dim(x, y));
        for (std::size_t z = 0; z < m; ++z)
          bim.left[(x * m + y) * m + z].assign(dim(y, z) * bdim(x, y) * bdim(x, z), K{});
      }
    for (std::size_t w = 0; w < m; ++w)
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
          bim.right[(w * m + x) * m + y].assign(bdim(x, y) * dim(w, x) * bdim(w, y), K{});
  }

  std::vector<K>& left_tensor(std::size_t x, std::size_t y, std::size_t z) { return bim.left[(x * n() + y) * n() + z]; }
  const std::vector<K>& left_tensor(std::size_t x, std::size_t y, std::size_t z) const { return bim.left[(x * n() + y) * n() + z]; }
  std::vector<K>& right_tensor(std::size_t w, std::size_t x, std::size_t y) { return bim.right[(w * n() + x) * n() + y]; }
  const std::vector<K>& right_tensor(std::size_t w, std::size_t x, std::size_t y) const { return bim.right[(w * n() + x) * n() + y]; }

  // a.u for a in A(y,z), u in B(x,y).
  Vec<K> act_left(std::size_t x, std::size_t y, std::size_t z, const Vec<K>& a, const Vec<K>& u) const {
    return bilinear(left_tensor(x, y, z), dim(y, z), bdim(x, y), bdim(x, z), a, u);
  }
  // u.a for u in B(x,y), a in A(w,x).
  Vec<K> act_right(std::size_t w, std::size_t x, std::size_t y, const Vec<K>& u, const Vec<K>& a) const {
    return bilinear(right_tensor(w, x, y), bdim(x, y), dim(w, x), bdim(w, y), u, a);
  }
  Vec<K> d(std::size_t x, std::size_t y, const Vec<K>& a) const { return diff[cat.pair(x, y)].apply(a); }
};

// The principal triple (A, A, 0) of a category.
template <class K>
Triple<K> principal_triple(const FinCat<K>& c) {
  Triple<K> t;
  t.cat = c;
  t.bim.basis = c.basis;
  const std::size_t m = c.n();
  t.bim.left = c.comp;
  t.bim.right = c.comp;
  t.diff.assign(m * m, Mat<K>());
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) t.diff[c.pair(x, y)] = Mat<K>(c.dim(x, y), c.dim(x, y));
  return t;
}

// Product category A x A'. Hom((x,x'),(y,y')) = A(x,y) + A'(x',y'), the
// first summand's basis first. Object (x,x') has index x*n' + x'.
template <class K>
FinCat<K> product_category(const FinCat<K>& a, const FinCat<K>& b) {
  std::vector<std::string> objs;
  for (const auto& x : a.objects)
    for (const auto& y : b.objects) objs.push_back("(" + x + "," + y + ")");
  FinCat<K> c(a.field, objs);
  const std::size_t na = a.n(), nb = b.n();
  auto idx = [nb](std::size_t x, std::size_t xp) { return x * nb + xp; };
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t xp = 0; xp < nb; ++xp)
      for (std::size_t y = 0; y < na; ++y)
        for (std::size_t yp = 0; yp < nb; ++yp) {
          auto& names = c.basis[c.pair(idx(x, xp), idx(y, yp))];
          for (const auto& f : a.basis[a.pair(x, y)]) names.push_back("(" + f + ",0)");
          for (const auto& g : b.basis[b.pair(xp, yp)]) names.push_back("(0," + g + ")");
        }
  c.allocate();
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t xp = 0; xp < nb; ++xp) {
      Vec<K> v = a.id(x);
      v.insert(v.end(), b.id(xp).begin(), b.id(xp).end());
      c.ids[idx(x, xp)] = std::move(v);
    }
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t xp = 0; xp < nb; ++xp)
      for (std::size_t y = 0; y < na; ++y)
        for (std::size_t yp = 0; yp < nb; ++yp)
          for (std::size_t z = 0; z < na; ++z)
            for (std::size_t zp = 0; zp < nb; ++zp) {
              const std::size_t X = idx(x, xp), Y = idx(y, yp), Z = idx(z, zp);
              const std::size_t d1 = a.dim(x, y), d2 = a.dim(y, z), d3 = a.dim(x, z);
              for (std::size_t j = 0; j < d2; ++j)
                for (std::size_t i = 0; i < d1; ++i) {
                  Vec<K> v = a.compose_basis(x, y, z, j, i);
                  v.resize(c.dim(X, Z));
                  c.set_compose_basis(X, Y, Z, j, i, v);
                }
              for (std::size_t j = 0; j < b.dim(yp, zp); ++j)
                for (std::size_t i = 0; i < b.dim(xp, yp); ++i) {
                  Vec<K> w = b.compose_basis(xp, yp, zp, j, i);
                  Vec<K> v(d3);
                  v.insert(v.end(), w.begin(), w.end());
                  c.set_compose_basis(X, Y, Z, d2 + j, d1 + i, v);
                }
            }
  return c;
}

}  // namespace skewcat
