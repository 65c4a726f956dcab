#pragma once

// The crossed group triple TG, materialized as an ordinary triple.
//
// AG(X,Y) = sum over s of A(X^s, Y) and BG(X,Y) = sum over s of B(X^s, Y),
// coordinates s-major in group order, basis ids "b[s]". Products follow
//   a[s] . b[t] = a o T_s(b) o lam(s,t,X) [st]
// for morphisms and elements alike; d acts componentwise.

#include "skewcat/fincat/validate.hpp"
#include "skewcat/groupact/factors.hpp"

namespace skewcat {

template <class K>
struct CrossedTriple {
  Triple<K> base;
  FiniteGroup group;
  GroupAction<K> action;
  FactorSystem<K> factors;
  Triple<K> tg;

  std::vector<std::size_t> hom_off, bim_off;  // [(x*n+y)*|G|+s]

  std::size_t order() const { return group.order(); }
  std::size_t hom_offset(std::size_t x, std::size_t y, std::size_t s) const { return hom_off[(x * base.n() + y) * order() + s]; }
  std::size_t bim_offset(std::size_t x, std::size_t y, std::size_t s) const { return bim_off[(x * base.n() + y) * order() + s]; }

  // a in A(x^s, y) placed as a[s] in AG(x,y).
  Vec<K> tag_hom(std::size_t x, std::size_t y, std::size_t s, const Vec<K>& a) const {
    Vec<K> v(tg.dim(x, y));
    std::copy(a.begin(), a.end(), v.begin() + hom_offset(x, y, s));
    return v;
  }
  Vec<K> tag_bim(std::size_t x, std::size_t y, std::size_t s, const Vec<K>& u) const {
    Vec<K> v(tg.bdim(x, y));
    std::copy(u.begin(), u.end(), v.begin() + bim_offset(x, y, s));
    return v;
  }
  // The s-component of an element of AG(x,y) / BG(x,y).
  Vec<K> hom_component(std::size_t x, std::size_t y, std::size_t s, const Vec<K>& v) const {
    const std::size_t o = hom_offset(x, y, s);
    return Vec<K>(v.begin() + o, v.begin() + o + base.dim(action.obj(s, x), y));
  }
  Vec<K> bim_component(std::size_t x, std::size_t y, std::size_t s, const Vec<K>& v) const {
    const std::size_t o = bim_offset(x, y, s);
    return Vec<K>(v.begin() + o, v.begin() + o + base.bdim(action.obj(s, x), y));
  }

  Vec<K> embed_hom(std::size_t x, std::size_t y, const Vec<K>& a) const { return tag_hom(x, y, group.unit(), a); }
  Vec<K> embed_bim(std::size_t x, std::size_t y, const Vec<K>& u) const { return tag_bim(x, y, group.unit(), u); }

  // Blockwise versions on add A: block (i,j) of the result is tag(S_j, T_i).
  Vec<K> tag_hom(const Sum& s, const Sum& t, std::size_t g, const Vec<K>& a) const {
    Layout l = hom_layout(base.cat, action.sum(g, s), t), lr = hom_layout(tg.cat, s, t);
    Vec<K> r(lr.total);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        if (lr.len(i, j)) set_block(lr, r, i, j, tag_hom(s[j], t[i], g, get_block(l, a, i, j)));
    return r;
  }
  Vec<K> tag_bim(const Sum& s, const Sum& t, std::size_t g, const Vec<K>& u) const {
    Layout l = bim_layout(base, action.sum(g, s), t), lr = bim_layout(tg, s, t);
    Vec<K> r(lr.total);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        if (lr.len(i, j)) set_block(lr, r, i, j, tag_bim(s[j], t[i], g, get_block(l, u, i, j)));
    return r;
  }
  Vec<K> hom_component(const Sum& s, const Sum& t, std::size_t g, const Vec<K>& v) const {
    Layout l = hom_layout(base.cat, action.sum(g, s), t), lv = hom_layout(tg.cat, s, t);
    Vec<K> r(l.total);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        if (l.len(i, j)) set_block(l, r, i, j, hom_component(s[j], t[i], g, get_block(lv, v, i, j)));
    return r;
  }
  Vec<K> bim_component(const Sum& s, const Sum& t, std::size_t g, const Vec<K>& v) const {
    Layout l = bim_layout(base, action.sum(g, s), t), lv = bim_layout(tg, s, t);
    Vec<K> r(l.total);
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < s.size(); ++j)
        if (l.len(i, j)) set_block(l, r, i, j, bim_component(s[j], t[i], g, get_block(lv, v, i, j)));
    return r;
  }
  Vec<K> embed_hom(const Sum& s, const Sum& t, const Vec<K>& a) const { return tag_hom(s, t, group.unit(), a); }
  Vec<K> embed_bim(const Sum& s, const Sum& t, const Vec<K>& u) const { return tag_bim(s, t, group.unit(), u); }
  AddObject<K> embed_object(const AddObject<K>& x) const { return AddObject<K>{x.summands, embed_hom(x.summands, x.summands, x.idem)}; }

  // ab in AG for b: x -> y, a: y -> z.
  Vec<K> compose(std::size_t x, std::size_t y, std::size_t z, const Vec<K>& a, const Vec<K>& b) const { return tg.cat.compose(x, y, z, a, b); }
};

template <class K>
CrossedTriple<K> build_crossed(const Triple<K>& t, const FiniteGroup& g, const GroupAction<K>& act, const FactorSystem<K>& lam) {
  CrossedTriple<K> ct{t, g, act, lam, {}, {}, {}};
  const std::size_t n = t.n(), o = g.order();
  const FinCat<K>& c = t.cat;
  const FieldSpec& f = t.field();
  Triple<K>& r = ct.tg;
  r.cat = FinCat<K>(f, c.objects);
  r.bim.basis.assign(n * n, {});
  ct.hom_off.assign(n * n * o, 0);
  ct.bim_off.assign(n * n * o, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto& hb = r.cat.basis[c.pair(x, y)];
      auto& bb = r.bim.basis[c.pair(x, y)];
      for (std::size_t s = 0; s < o; ++s) {
        ct.hom_off[(x * n + y) * o + s] = hb.size();
        ct.bim_off[(x * n + y) * o + s] = bb.size();
        const std::size_t xs = act.obj(s, x);
        for (const auto& b : c.basis[c.pair(xs, y)]) hb.push_back(b + "[" + g.name(s) + "]");
        for (const auto& b : t.bim.basis[c.pair(xs, y)]) bb.push_back(b + "[" + g.name(s) + "]");
      }
    }
  r.cat.allocate();
  r.allocate_bimodule();
  for (std::size_t x = 0; x < n; ++x) r.cat.ids[x] = ct.embed_hom(x, x, c.id(x));

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t s = 0; s < o; ++s)
          for (std::size_t u = 0; u < o; ++u) {
            const std::size_t su = g.mul(s, u);
            const std::size_t ys = act.obj(s, y), xu = act.obj(u, x), xus = act.obj(s, xu), xsu = act.obj(su, x);
            const Vec<K>& l = lam.at(s, u, x);  // X^{su} -> (X^u)^s
            // morphisms: b in A(y^s, z) tagged s, a in A(x^u, y) tagged u
            for (std::size_t j = 0; j < c.dim(ys, z); ++j)
              for (std::size_t i = 0; i < c.dim(xu, y); ++i) {
                Vec<K> b = unit_vec<K>(f, c.dim(ys, z), j), a = unit_vec<K>(f, c.dim(xu, y), i);
                Vec<K> v = c.compose(xsu, xus, z, c.compose(xus, ys, z, b, act.act_hom(t, s, xu, y, a)), l);
                r.cat.set_compose_basis(x, y, z, ct.hom_offset(y, z, s) + j, ct.hom_offset(x, y, u) + i, ct.tag_hom(x, z, su, v));
              }
            // left: b in A(y^s, z) tagged s, w in B(x^u, y) tagged u
            {
              auto& lt = r.left_tensor(x, y, z);
              const std::size_t dxy = r.bdim(x, y), dxz = r.bdim(x, z);
              for (std::size_t j = 0; j < c.dim(ys, z); ++j)
                for (std::size_t i = 0; i < t.bdim(xu, y); ++i) {
                  Vec<K> b = unit_vec<K>(f, c.dim(ys, z), j), w = unit_vec<K>(f, t.bdim(xu, y), i);
                  Vec<K> v = t.act_right(xsu, xus, z, t.act_left(xus, ys, z, b, act.act_bim(t, s, xu, y, w)), l);
                  Vec<K> tagged = ct.tag_bim(x, z, su, v);
                  const std::size_t jj = ct.hom_offset(y, z, s) + j, ii = ct.bim_offset(x, y, u) + i;
                  std::copy(tagged.begin(), tagged.end(), lt.begin() + (jj * dxy + ii) * dxz);
                }
            }
            // right: w in B(y^s, z) tagged s, a in A(x^u, y) tagged u
            {
              auto& rt = r.right_tensor(x, y, z);
              const std::size_t dxy = r.dim(x, y), dxz = r.bdim(x, z);
              for (std::size_t j = 0; j < t.bdim(ys, z); ++j)
                for (std::size_t i = 0; i < c.dim(xu, y); ++i) {
                  Vec<K> w = unit_vec<K>(f, t.bdim(ys, z), j), a = unit_vec<K>(f, c.dim(xu, y), i);
                  Vec<K> v = t.act_right(xsu, xus, z, t.act_right(xus, ys, z, w, act.act_hom(t, s, xu, y, a)), l);
                  Vec<K> tagged = ct.tag_bim(x, z, su, v);
                  const std::size_t jj = ct.bim_offset(y, z, s) + j, ii = ct.hom_offset(x, y, u) + i;
                  std::copy(tagged.begin(), tagged.end(), rt.begin() + (jj * dxy + ii) * dxz);
                }
            }
          }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Mat<K>& d = r.diff[c.pair(x, y)];
      for (std::size_t s = 0; s < o; ++s) {
        const std::size_t xs = act.obj(s, x);
        const Mat<K>& d0 = t.diff[c.pair(xs, y)];
        for (std::size_t i = 0; i < d0.rows(); ++i)
          for (std::size_t j = 0; j < d0.cols(); ++j) d(ct.bim_offset(x, y, s) + i, ct.hom_offset(x, y, s) + j) = d0(i, j);
      }
    }
  return ct;
}

// Associativity and unit laws of the crossed triple, the bimodule axioms,
// the Leibniz rule, and invertibility of every 1[s]: X -> X^s.
template <class K>
Report check_associativity(const CrossedTriple<K>& ct) {
  Report r("crossed");
  r.merge(validate_triple(ct.tg));
  r.ensure("group elements invertible");
  const FinCat<K>& c = ct.tg.cat;
  for (std::size_t x = 0; x < ct.base.n(); ++x)
    for (std::size_t s = 0; s < ct.order(); ++s) {
      const std::size_t xs = ct.action.obj(s, x);
      Vec<K> u = ct.tag_hom(x, xs, s, ct.base.cat.id(xs));
      if (!add_inverse(c, AddObject<K>::plain(c, {x}), AddObject<K>::plain(c, {xs}), u))
        r.violate("group elements invertible", "1[" + ct.group.name(s) + "] at " + c.objects[x]);
    }
  return r;
}

}  // namespace skewcat
