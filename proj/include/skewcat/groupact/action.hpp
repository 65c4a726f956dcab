#pragma once

// Group actions on triples: one bifunctor per group element, each
// permuting the base objects and acting by invertible matrices on hom
// spaces and bimodule spaces.

#include "skewcat/fincat/bifunctor.hpp"
#include "skewcat/groupact/group.hpp"

namespace skewcat {

template <class K>
struct GroupAction {
  std::vector<std::vector<std::size_t>> perm;  // [s][x] = x^s
  std::vector<std::vector<Mat<K>>> hom;        // [s][x*n+y]: A(x,y) -> A(x^s,y^s)
  std::vector<std::vector<Mat<K>>> bim;        // [s][x*n+y]: B(x,y) -> B(x^s,y^s)

  std::size_t obj(std::size_t s, std::size_t x) const { return perm[s][x]; }
  Sum sum(std::size_t s, const Sum& xs) const {
    Sum r;
    for (auto x : xs) r.push_back(perm[s][x]);
    return r;
  }

  Vec<K> act_hom(const Triple<K>& t, std::size_t s, std::size_t x, std::size_t y, const Vec<K>& a) const {
    return hom[s][t.cat.pair(x, y)].apply(a);
  }
  Vec<K> act_bim(const Triple<K>& t, std::size_t s, std::size_t x, std::size_t y, const Vec<K>& u) const {
    return bim[s][t.cat.pair(x, y)].apply(u);
  }

  // Blockwise on a morphism S -> T of add A; the result is S^s -> T^s.
  Vec<K> act_hom(const Triple<K>& t, std::size_t s, const Sum& xs, const Sum& ys, const Vec<K>& a) const {
    Layout l = hom_layout(t.cat, xs, ys), lr = hom_layout(t.cat, sum(s, xs), sum(s, ys));
    Vec<K> r(lr.total);
    for (std::size_t i = 0; i < ys.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j)
        if (l.len(i, j)) set_block(lr, r, i, j, act_hom(t, s, xs[j], ys[i], get_block(l, a, i, j)));
    return r;
  }
  Vec<K> act_bim(const Triple<K>& t, std::size_t s, const Sum& xs, const Sum& ys, const Vec<K>& u) const {
    Layout l = bim_layout(t, xs, ys), lr = bim_layout(t, sum(s, xs), sum(s, ys));
    Vec<K> r(lr.total);
    for (std::size_t i = 0; i < ys.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j)
        if (l.len(i, j)) set_block(lr, r, i, j, act_bim(t, s, xs[j], ys[i], get_block(l, u, i, j)));
    return r;
  }
  AddObject<K> act_object(const Triple<K>& t, std::size_t s, const AddObject<K>& x) const {
    return AddObject<K>{sum(s, x.summands), act_hom(t, s, x.summands, x.summands, x.idem)};
  }

  Bifunctor<K> as_bifunctor(const Triple<K>& t, std::size_t s) const {
    Bifunctor<K> f;
    for (std::size_t x = 0; x < t.n(); ++x) f.obj.push_back(AddObject<K>::plain(t.cat, Sum{perm[s][x]}));
    f.hom = hom[s];
    f.bim = bim[s];
    return f;
  }
};

template <class K>
GroupAction<K> trivial_action(const Triple<K>& t, const FiniteGroup& g) {
  GroupAction<K> a;
  Bifunctor<K> id = identity_bifunctor(t);
  std::vector<std::size_t> ident(t.n());
  std::iota(ident.begin(), ident.end(), 0);
  for (std::size_t s = 0; s < g.order(); ++s) {
    a.perm.push_back(ident);
    a.hom.push_back(id.hom);
    a.bim.push_back(id.bim);
  }
  return a;
}

// T_1 = id, every T_s a valid bifunctor that is bijective on objects, homs
// and elements.
template <class K>
Report validate_action(const Triple<K>& t, const FiniteGroup& g, const GroupAction<K>& act) {
  Report r("action");
  const std::size_t n = t.n();
  r.ensure("shape");
  if (act.perm.size() != g.order() || act.hom.size() != g.order() || act.bim.size() != g.order()) {
    r.violate("shape", "action must give one bifunctor per group element");
    return r;
  }
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (act.perm[s].size() != n || act.hom[s].size() != n * n || act.bim[s].size() != n * n) {
      r.violate("shape", "bifunctor for " + g.name(s) + " has wrong size");
      continue;
    }
    std::vector<bool> hit(n, false);
    for (auto x : act.perm[s])
      if (x < n) hit[x] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) r.violate("shape", "object map of " + g.name(s) + " is not a permutation");
  }
  if (!r.passed()) return r;
  r.ensure("unit acts trivially");
  r.ensure("bifunctor");
  r.ensure("invertible");
  const std::size_t e = g.unit();
  Bifunctor<K> id = identity_bifunctor(t);
  for (std::size_t x = 0; x < n; ++x)
    if (act.perm[e][x] != x) r.violate("unit acts trivially", "object " + t.cat.objects[x] + " moved");
  if (act.hom[e] != id.hom || act.bim[e] != id.bim) r.violate("unit acts trivially", "the unit acts by non-identity matrices");
  for (std::size_t s = 0; s < g.order(); ++s) {
    Report b = validate_bifunctor(act.as_bifunctor(t, s), t, t);
    for (const auto& c : b.checks())
      for (const auto& v : c.violations) r.violate("bifunctor", g.name(s) + ": " + c.name + " " + v);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t p = t.cat.pair(x, y);
        if (!is_invertible(act.hom[s][p]) || !is_invertible(act.bim[s][p]))
          r.violate("invertible", g.name(s) + " on (" + t.cat.objects[x] + "," + t.cat.objects[y] + ")");
      }
  }
  return r;
}

}  // namespace skewcat
