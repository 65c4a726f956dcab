#pragma once

// Factor systems: lam(s,t,X) in A(X^{st}, (X^t)^s), normalized, invertible,
// natural in X and satisfying the cocycle identity
//   T_r(lam(s,t,X)) o lam(r,st,X) = lam(r,s,X^t) o lam(rs,t,X).

#include "skewcat/groupact/action.hpp"

namespace skewcat {

template <class K>
struct FactorSystem {
  std::size_t group_order = 0, objects = 0;
  std::vector<Vec<K>> lam;  // [(s*|G|+t)*n + x]

  const Vec<K>& at(std::size_t s, std::size_t t, std::size_t x) const { return lam[(s * group_order + t) * objects + x]; }
  Vec<K>& at(std::size_t s, std::size_t t, std::size_t x) { return lam[(s * group_order + t) * objects + x]; }

  // Block-diagonal lam(s,t,-) on a sum: S^{st} -> (S^t)^s.
  Vec<K> on_sum(const Triple<K>& tr, const FiniteGroup& g, const GroupAction<K>& act, std::size_t s, std::size_t t, const Sum& xs) const {
    Sum src = act.sum(g.mul(s, t), xs), dst = act.sum(s, act.sum(t, xs));
    Layout l = hom_layout(tr.cat, src, dst);
    Vec<K> r(l.total);
    for (std::size_t i = 0; i < xs.size(); ++i) set_block(l, r, i, i, at(s, t, xs[i]));
    return r;
  }
};

// Identity factors; only meaningful when X^{st} = (X^t)^s for all X.
template <class K>
FactorSystem<K> trivial_factors(const Triple<K>& tr, const FiniteGroup& g, const GroupAction<K>& act) {
  FactorSystem<K> f{g.order(), tr.n(), {}};
  f.lam.resize(g.order() * g.order() * tr.n());
  for (std::size_t s = 0; s < g.order(); ++s)
    for (std::size_t t = 0; t < g.order(); ++t)
      for (std::size_t x = 0; x < tr.n(); ++x) {
        std::size_t a = act.obj(g.mul(s, t), x), b = act.obj(s, act.obj(t, x));
        f.at(s, t, x) = a == b ? tr.cat.id(a) : Vec<K>(tr.dim(a, b));
      }
  return f;
}

template <class K>
Report validate_factor_system(const Triple<K>& tr, const FiniteGroup& g, const GroupAction<K>& act, const FactorSystem<K>& lam) {
  Report r("factors");
  const FinCat<K>& c = tr.cat;
  const std::size_t n = tr.n(), o = g.order();
  const FieldSpec& f = tr.field();
  auto src = [&](std::size_t s, std::size_t t, std::size_t x) { return act.obj(g.mul(s, t), x); };
  auto dst = [&](std::size_t s, std::size_t t, std::size_t x) { return act.obj(s, act.obj(t, x)); };
  auto tag = [&](std::size_t s, std::size_t t, std::size_t x) { return "(" + g.name(s) + "," + g.name(t) + "," + c.objects[x] + ")"; };
  r.ensure("shape");
  if (lam.lam.size() != o * o * n || lam.group_order != o || lam.objects != n) {
    r.violate("shape", "factor table has wrong size");
    return r;
  }
  for (std::size_t s = 0; s < o; ++s)
    for (std::size_t t = 0; t < o; ++t)
      for (std::size_t x = 0; x < n; ++x)
        if (lam.at(s, t, x).size() != tr.dim(src(s, t, x), dst(s, t, x))) r.violate("shape", "lam" + tag(s, t, x) + " has wrong length");
  if (!r.passed()) return r;

  r.ensure("normalization");
  r.ensure("invertible");
  r.ensure("cocycle");
  r.ensure("naturality");
  r.ensure("differential");
  const std::size_t e = g.unit();
  for (std::size_t s = 0; s < o; ++s)
    for (std::size_t x = 0; x < n; ++x) {
      if (lam.at(s, e, x) != c.id(act.obj(s, x))) r.violate("normalization", "lam" + tag(s, e, x) + " != 1");
      if (lam.at(e, s, x) != c.id(act.obj(s, x))) r.violate("normalization", "lam" + tag(e, s, x) + " != 1");
    }
  for (std::size_t s = 0; s < o; ++s)
    for (std::size_t t = 0; t < o; ++t)
      for (std::size_t x = 0; x < n; ++x) {
        const std::size_t a = src(s, t, x), b = dst(s, t, x);
        if (!add_inverse(c, AddObject<K>::plain(c, {a}), AddObject<K>::plain(c, {b}), lam.at(s, t, x)))
          r.violate("invertible", "lam" + tag(s, t, x));
        if (!is_zero_vec(tr.d(a, b, lam.at(s, t, x)))) r.violate("differential", "d lam" + tag(s, t, x) + " != 0");
      }
  for (std::size_t p = 0; p < o; ++p)
    for (std::size_t s = 0; s < o; ++s)
      for (std::size_t t = 0; t < o; ++t)
        for (std::size_t x = 0; x < n; ++x) {
          const std::size_t xt = act.obj(t, x), xst = act.obj(g.mul(s, t), x);
          const std::size_t x_pst = act.obj(g.mul(p, g.mul(s, t)), x);
          const std::size_t mid_l = act.obj(p, xst);
          const std::size_t end = act.obj(p, act.obj(s, xt));
          const std::size_t mid_r = act.obj(g.mul(p, s), xt);
          Vec<K> lhs = c.compose(x_pst, mid_l, end, act.act_hom(tr, p, xst, act.obj(s, xt), lam.at(s, t, x)), lam.at(p, g.mul(s, t), x));
          Vec<K> rhs = c.compose(x_pst, mid_r, end, lam.at(p, s, xt), lam.at(g.mul(p, s), t, x));
          if (lhs != rhs) r.violate("cocycle", "(" + g.name(p) + "," + g.name(s) + "," + g.name(t) + ") at " + c.objects[x]);
        }
  // lam(Y) a^{st} = (a^t)^s lam(X), same for elements
  for (std::size_t s = 0; s < o; ++s)
    for (std::size_t t = 0; t < o; ++t) {
      const std::size_t st = g.mul(s, t);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          const std::size_t xa = src(s, t, x), ya = src(s, t, y), xb = dst(s, t, x), yb = dst(s, t, y);
          for (std::size_t i = 0; i < tr.dim(x, y); ++i) {
            Vec<K> a = unit_vec<K>(f, tr.dim(x, y), i);
            Vec<K> lhs = c.compose(xa, ya, yb, lam.at(s, t, y), act.act_hom(tr, st, x, y, a));
            Vec<K> att = act.act_hom(tr, s, act.obj(t, x), act.obj(t, y), act.act_hom(tr, t, x, y, a));
            Vec<K> rhs = c.compose(xa, xb, yb, att, lam.at(s, t, x));
            if (lhs != rhs) r.violate("naturality", "(" + g.name(s) + "," + g.name(t) + ") on " + detail::hom_label(c, x, y, i));
          }
          for (std::size_t i = 0; i < tr.bdim(x, y); ++i) {
            Vec<K> u = unit_vec<K>(f, tr.bdim(x, y), i);
            Vec<K> lhs = tr.act_left(xa, ya, yb, lam.at(s, t, y), act.act_bim(tr, st, x, y, u));
            Vec<K> utt = act.act_bim(tr, s, act.obj(t, x), act.obj(t, y), act.act_bim(tr, t, x, y, u));
            Vec<K> rhs = tr.act_right(xa, xb, yb, utt, lam.at(s, t, x));
            if (lhs != rhs) r.violate("naturality", "(" + g.name(s) + "," + g.name(t) + ") on " + tr.bim.basis[c.pair(x, y)][i]);
          }
        }
    }
  return r;
}

}  // namespace skewcat
