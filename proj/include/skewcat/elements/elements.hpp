#pragma once

// The category of elements El(T). An object is a Karoubi object X of add A
// with an element x in B(X,X) absorbed by its idempotent; a morphism
// a: x -> y is a morphism of add A with a.x = y.a + d(a).
//
// Over a crossed triple this file also provides the comparison functors
// between El(T)G and El(TG): phi (x -> x[1]), psi (xi -> xi~ on the sum of
// all translates), the two adjunction maps, and the pair (pi, iota)
// exhibiting xi as a summand of phi(psi(xi)) under a separability witness.

#include "skewcat/crossed/crossed.hpp"

#include <map>
#include <random>

namespace skewcat {

template <class K>
struct ElObject {
  AddObject<K> carrier;
  Vec<K> elem;  // in B(S,S), S = carrier.summands
};

template <class K>
struct ElMorphism {
  ElObject<K> src, dst;
  Vec<K> map;
};

// A central family: alpha[x] in A(x,x) for every base object.
template <class K>
struct CenterElement {
  std::vector<Vec<K>> alpha;
  friend bool operator==(const CenterElement& a, const CenterElement& b) { return a.alpha == b.alpha; }
};

template <class K>
K random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
  if constexpr (is_prime_field_v<K>) {
    return K(static_cast<std::int64_t>(rng() % f.p), f.p);
  } else {
    return from_int<K>(f, static_cast<std::int64_t>(rng() % 5) - 2);
  }
}

template <class K>
bool is_el_object(const Triple<K>& t, const ElObject<K>& x) {
  const Sum& s = x.carrier.summands;
  if (x.elem.size() != bim_layout(t, s, s).total) return false;
  const Vec<K>& e = x.carrier.idem;
  return add_right(t, s, s, s, add_left(t, s, s, s, e, x.elem), e) == x.elem;
}

// a.x - y.a - d(a) for a: X -> Y.
template <class K>
Vec<K> el_defect(const Triple<K>& t, const ElObject<K>& x, const ElObject<K>& y, const Vec<K>& a) {
  const Sum &s = x.carrier.summands, &u = y.carrier.summands;
  return add_left(t, s, s, u, a, x.elem) - add_right(t, s, u, u, y.elem, a) - add_diff(t, s, u, a);
}

template <class K>
bool is_el_morphism(const Triple<K>& t, const ElObject<K>& x, const ElObject<K>& y, const Vec<K>& a) {
  if (a.size() != hom_layout(t.cat, x.carrier.summands, y.carrier.summands).total) return false;
  return is_absorbed(t.cat, x.carrier, y.carrier, a) && is_zero_vec(el_defect(t, x, y, a));
}

// Basis of Hom_El(x,y), in reduced echelon form.
template <class K>
std::vector<Vec<K>> el_hom_basis(const Triple<K>& t, const ElObject<K>& x, const ElObject<K>& y) {
  auto hb = add_hom_basis(t.cat, x.carrier, y.carrier);
  if (hb.empty()) return {};
  const std::size_t n = hom_layout(t.cat, x.carrier.summands, y.carrier.summands).total;
  const std::size_t m = bim_layout(t, x.carrier.summands, y.carrier.summands).total;
  Mat<K> eq = matrix_of<K>(t.field(), hb.size(), m, [&](const Vec<K>& c) { return el_defect(t, x, y, combine(hb, c, n)); });
  std::vector<Vec<K>> sols;
  for (const auto& k : kernel_basis(eq, t.field())) sols.push_back(combine(hb, k, n));
  return Subspace<K>(n, sols).basis();
}

template <class K>
SearchResult<K> find_el_iso(const Triple<K>& t, const ElObject<K>& x, const ElObject<K>& y, const SearchOptions& opt) {
  const std::size_t n = hom_layout(t.cat, x.carrier.summands, y.carrier.summands).total;
  return search_subspace<K>(t.field(), el_hom_basis(t, x, y), n, {}, opt,
                            [&](const Vec<K>& a) { return add_inverse(t.cat, x.carrier, y.carrier, a).has_value(); });
}

// Deterministic sample of El objects on plain carriers of at most
// `max_summands` base objects. The first few are 0 and 1-like elements.
template <class K>
std::vector<ElObject<K>> generate_el_objects(const Triple<K>& t, std::size_t count, std::uint64_t seed, std::size_t max_summands = 2) {
  std::vector<ElObject<K>> out;
  if (t.n() == 0) return out;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    Sum s;
    const std::size_t len = 1 + rng() % max_summands;
    for (std::size_t i = 0; i < len; ++i) s.push_back(rng() % t.n());
    ElObject<K> x{AddObject<K>::plain(t.cat, s), Vec<K>(bim_layout(t, s, s).total)};
    if (k % 5 != 0)
      for (auto& c : x.elem) c = random_scalar<K>(t.field(), rng);
    out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Induced action on El(T)

template <class K>
ElObject<K> act_el(const Triple<K>& t, const GroupAction<K>& act, std::size_t s, const ElObject<K>& x) {
  const Sum& xs = x.carrier.summands;
  return ElObject<K>{act.act_object(t, s, x.carrier), act.act_bim(t, s, xs, xs, x.elem)};
}

// lam(s,u) on the carrier of x, absorbed: x^{su} -> (x^u)^s.
template <class K>
Vec<K> el_factor(const Triple<K>& t, const FiniteGroup& g, const GroupAction<K>& act, const FactorSystem<K>& lam, std::size_t s, std::size_t u,
                 const ElObject<K>& x) {
  AddObject<K> a = act.act_object(t, g.mul(s, u), x.carrier), b = act.act_object(t, s, act.act_object(t, u, x.carrier));
  return absorb(t.cat, a, b, lam.on_sum(t, g, act, s, u, x.carrier.summands));
}

// Validates the induced action on a finite set of El objects: every T_s
// sends El morphisms to El morphisms, and every lam_* is an invertible El
// morphism satisfying the cocycle identity and naturality on the fragment.
template <class K>
Report validate_induced_action(const Triple<K>& t, const FiniteGroup& g, const GroupAction<K>& act, const FactorSystem<K>& lam,
                               const std::vector<ElObject<K>>& objects) {
  Report r("induced action");
  r.ensure("objects");
  r.ensure("morphisms");
  r.ensure("factors are El morphisms");
  r.ensure("factors invertible");
  r.ensure("cocycle");
  r.ensure("naturality");
  const FinCat<K>& c = t.cat;
  const std::size_t o = g.order();
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const ElObject<K>& x = objects[i];
    const std::string xi = "x" + std::to_string(i);
    for (std::size_t s = 0; s < o; ++s) {
      ElObject<K> xs = act_el(t, act, s, x);
      if (!is_el_object(t, xs)) r.violate("objects", xi + "^" + g.name(s));
      for (std::size_t u = 0; u < o; ++u) {
        ElObject<K> xsu = act_el(t, act, g.mul(s, u), x), xus = act_el(t, act, s, act_el(t, act, u, x));
        Vec<K> l = el_factor(t, g, act, lam, s, u, x);
        const std::string tag = "(" + g.name(s) + "," + g.name(u) + "," + xi + ")";
        if (!is_el_morphism(t, xsu, xus, l)) r.violate("factors are El morphisms", tag);
        if (!add_inverse(c, xsu.carrier, xus.carrier, l)) r.violate("factors invertible", tag);
        for (std::size_t v = 0; v < o; ++v) {
          // T_v(lam(s,u,x)) lam(v,su,x) = lam(v,s,x^u) lam(vs,u,x)
          const std::size_t vs = g.mul(v, s), su = g.mul(s, u);
          const Sum& base = x.carrier.summands;
          Sum a = act.sum(g.mul(vs, u), base), b = act.sum(v, act.sum(su, base)), d = act.sum(v, act.sum(s, act.sum(u, base))),
              b2 = act.sum(vs, act.sum(u, base));
          Vec<K> lhs = add_compose(c, a, b, d, act.act_hom(t, v, act.sum(su, base), act.sum(s, act.sum(u, base)), l),
                                   el_factor(t, g, act, lam, v, su, x));
          Vec<K> rhs = add_compose(c, a, b2, d, el_factor(t, g, act, lam, v, s, act_el(t, act, u, x)), el_factor(t, g, act, lam, vs, u, x));
          if (lhs != rhs) r.violate("cocycle", "(" + g.name(v) + "," + g.name(s) + "," + g.name(u) + "," + xi + ")");
        }
      }
    }
    for (std::size_t j = 0; j < objects.size(); ++j) {
      const ElObject<K>& y = objects[j];
      const Sum &xs0 = x.carrier.summands, &ys0 = y.carrier.summands;
      for (const auto& a : el_hom_basis(t, x, y))
        for (std::size_t s = 0; s < o; ++s) {
          Vec<K> as = act.act_hom(t, s, xs0, ys0, a);
          if (!is_el_morphism(t, act_el(t, act, s, x), act_el(t, act, s, y), as))
            r.violate("morphisms", "T_" + g.name(s) + " on Hom(x" + std::to_string(i) + ",x" + std::to_string(j) + ")");
          for (std::size_t u = 0; u < o; ++u) {
            // (a^u)^s lam(s,u,x) = lam(s,u,y) a^{su}
            Sum xsu = act.sum(g.mul(s, u), xs0), yus = act.sum(s, act.sum(u, ys0)), xus = act.sum(s, act.sum(u, xs0)),
                ysu = act.sum(g.mul(s, u), ys0);
            Vec<K> aus = act.act_hom(t, s, act.sum(u, xs0), act.sum(u, ys0), act.act_hom(t, u, xs0, ys0, a));
            Vec<K> lhs = add_compose(c, xsu, xus, yus, aus, el_factor(t, g, act, lam, s, u, x));
            Vec<K> rhs = add_compose(c, xsu, ysu, yus, el_factor(t, g, act, lam, s, u, y), act.act_hom(t, g.mul(s, u), xs0, ys0, a));
            if (lhs != rhs) r.violate("naturality", "(" + g.name(s) + "," + g.name(u) + ") on Hom(x" + std::to_string(i) + ",x" + std::to_string(j) + ")");
          }
        }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Comparison functors over a crossed triple

namespace el_detail {

template <class K>
Vec<K> lambda_on(const CrossedTriple<K>& ct, std::size_t s, std::size_t u, const Sum& xs) {
  return ct.factors.on_sum(ct.base, ct.group, ct.action, s, u, xs);
}

// Inverse of lam(s,u) on a sum: (S^u)^s -> S^{su}, block diagonal.
template <class K>
Vec<K> lambda_inverse_on(const CrossedTriple<K>& ct, std::size_t s, std::size_t u, const Sum& xs) {
  const FinCat<K>& c = ct.base.cat;
  const auto& act = ct.action;
  Sum src = act.sum(s, act.sum(u, xs)), dst = act.sum(ct.group.mul(s, u), xs);
  Layout l = hom_layout(c, src, dst);
  Vec<K> r(l.total);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::size_t a = dst[i], b = src[i];
    auto inv = add_inverse(c, AddObject<K>::plain(c, {a}), AddObject<K>::plain(c, {b}), ct.factors.at(s, u, xs[i]));
    if (!inv) throw std::domain_error("factor system value is not invertible");
    set_block(l, r, i, i, *inv);
  }
  return r;
}

// S~ = S^{g_0} + S^{g_1} + ... in group order, with block offsets.
struct Translates {
  Sum total;
  std::vector<Sum> parts;
  std::vector<std::size_t> offset;
};

template <class K>
Translates translates(const CrossedTriple<K>& ct, const Sum& s) {
  Translates tr;
  for (std::size_t g = 0; g < ct.order(); ++g) {
    tr.offset.push_back(tr.total.size());
    tr.parts.push_back(ct.action.sum(g, s));
    tr.total = concat(tr.total, tr.parts.back());
  }
  return tr;
}

}  // namespace el_detail

// The carrier of an El(TG) object must have an idempotent e[1]; this
// returns the base Karoubi object (S, e).
template <class K>
AddObject<K> base_carrier(const CrossedTriple<K>& ct, const AddObject<K>& x) {
  const Sum& s = x.summands;
  for (std::size_t g = 0; g < ct.order(); ++g)
    if (g != ct.group.unit() && !is_zero_vec(ct.hom_component(s, s, g, x.idem)))
      throw std::invalid_argument("carrier idempotent has components off the unit of the group");
  return AddObject<K>{s, ct.hom_component(s, s, ct.group.unit(), x.idem)};
}

template <class K>
ElObject<K> phi_object(const CrossedTriple<K>& ct, const ElObject<K>& x) {
  const Sum& s = x.carrier.summands;
  return ElObject<K>{ct.embed_object(x.carrier), ct.embed_bim(s, s, x.elem)};
}

// A morphism of El(T)G from x to y is a family a_s: x^s -> y; its image is
// the sum of the a_s[s].
template <class K>
Vec<K> phi_morphism(const CrossedTriple<K>& ct, const ElObject<K>& x, const ElObject<K>& y, const std::vector<Vec<K>>& family) {
  const Sum &s = x.carrier.summands, &t = y.carrier.summands;
  Vec<K> r(hom_layout(ct.tg.cat, s, t).total);
  for (std::size_t g = 0; g < ct.order(); ++g) r = r + ct.tag_hom(s, t, g, family[g]);
  return r;
}

// Basis of Hom_{El(T)G}(x,y): one El(T)-basis per group element, as
// families with a single nonzero slot.
template <class K>
std::vector<std::vector<Vec<K>>> el_group_hom_basis(const CrossedTriple<K>& ct, const ElObject<K>& x, const ElObject<K>& y) {
  std::vector<std::vector<Vec<K>>> out;
  const Triple<K>& t = ct.base;
  const Sum& ys = y.carrier.summands;
  for (std::size_t g = 0; g < ct.order(); ++g) {
    ElObject<K> xg = act_el(t, ct.action, g, x);
    auto b = el_hom_basis(t, xg, y);
    for (auto& a : b) {
      std::vector<Vec<K>> fam;
      for (std::size_t h = 0; h < ct.order(); ++h) fam.push_back(Vec<K>(hom_layout(t.cat, ct.action.sum(h, x.carrier.summands), ys).total));
      fam[g] = std::move(a);
      out.push_back(std::move(fam));
    }
  }
  return out;
}

// Phi is fully faithful on (x,y): the images of a basis of
// Hom_{El(T)G}(x,y) are El(TG) morphisms, independent, spanning, and their
// components are the original coordinates.
template <class K>
Report check_phi_full_faithful(const CrossedTriple<K>& ct, const ElObject<K>& x, const ElObject<K>& y) {
  Report r("phi");
  r.ensure("images are morphisms");
  r.ensure("coordinates preserved");
  r.ensure("dimension");
  ElObject<K> px = phi_object(ct, x), py = phi_object(ct, y);
  const Sum &s = x.carrier.summands, &t = y.carrier.summands;
  auto src = el_group_hom_basis(ct, x, y);
  auto dst = el_hom_basis(ct.tg, px, py);
  std::vector<Vec<K>> images;
  for (const auto& fam : src) {
    Vec<K> m = phi_morphism(ct, x, y, fam);
    if (!is_el_morphism(ct.tg, px, py, m)) r.violate("images are morphisms", "image of a basis family");
    for (std::size_t g = 0; g < ct.order(); ++g)
      if (ct.hom_component(s, t, g, m) != fam[g]) r.violate("coordinates preserved", "component " + ct.group.name(g));
    images.push_back(std::move(m));
  }
  const std::size_t n = hom_layout(ct.tg.cat, s, t).total;
  Subspace<K> img(n, images), full(n, dst);
  Check& d = r.ensure("dimension");
  d.detail = std::to_string(src.size()) + " vs " + std::to_string(dst.size());
  if (img.dim() != src.size() || src.size() != dst.size() || !full.contains(img))
    r.violate("dimension", "El(T)G dim " + std::to_string(src.size()) + ", image rank " + std::to_string(img.dim()) + ", El(TG) dim " +
                               std::to_string(dst.size()));
  return r;
}

// psi(xi): carrier S~ with idempotent diag(e^g), element with (g,h) block
// x_{g^-1 h}^g . lam(g, g^-1 h) in B(S^h, S^g).
template <class K>
ElObject<K> psi_object(const CrossedTriple<K>& ct, const ElObject<K>& xi) {
  using namespace el_detail;
  const Triple<K>& t = ct.base;
  const auto& g = ct.group;
  const auto& act = ct.action;
  AddObject<K> x = base_carrier(ct, xi.carrier);
  const Sum& s = x.summands;
  Translates tr = translates(ct, s);
  ElObject<K> out;
  out.carrier.summands = tr.total;
  Layout lh = hom_layout(t.cat, tr.total, tr.total), lb = bim_layout(t, tr.total, tr.total);
  out.carrier.idem = Vec<K>(lh.total);
  out.elem = Vec<K>(lb.total);
  for (std::size_t a = 0; a < g.order(); ++a) {
    const Sum& sa = tr.parts[a];
    put_blocks(lh, out.carrier.idem, tr.offset[a], tr.offset[a], hom_layout(t.cat, sa, sa), act.act_hom(t, a, s, s, x.idem));
    for (std::size_t b = 0; b < g.order(); ++b) {
      const std::size_t rho = g.mul(g.inv(a), b);
      const Sum& srho = tr.parts[rho];
      Sum srho_a = act.sum(a, srho);
      Vec<K> xr = ct.bim_component(s, s, rho, xi.elem);  // B(S^rho, S)
      Vec<K> xra = act.act_bim(t, a, srho, s, xr);       // B((S^rho)^a, S^a)
      Vec<K> blk = add_right(t, tr.parts[b], srho_a, sa, xra, lambda_on(ct, a, rho, s));
      put_blocks(lb, out.elem, tr.offset[a], tr.offset[b], bim_layout(t, tr.parts[b], sa), blk);
    }
  }
  return out;
}

// psi on a morphism alpha: xi -> eta of El(TG): block (g,h) is
// a_{g^-1 h}^g . lam(g, g^-1 h).
template <class K>
Vec<K> psi_morphism(const CrossedTriple<K>& ct, const ElObject<K>& xi, const ElObject<K>& eta, const Vec<K>& alpha) {
  using namespace el_detail;
  const Triple<K>& t = ct.base;
  const auto& g = ct.group;
  const auto& act = ct.action;
  const Sum &s = xi.carrier.summands, &u = eta.carrier.summands;
  Translates ts = translates(ct, s), tu = translates(ct, u);
  Layout l = hom_layout(t.cat, ts.total, tu.total);
  Vec<K> out(l.total);
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const std::size_t rho = g.mul(g.inv(a), b);
      Vec<K> ar = ct.hom_component(s, u, rho, alpha);  // A(S^rho, U)
      Vec<K> ara = act.act_hom(t, a, ts.parts[rho], u, ar);
      Vec<K> blk = add_compose(t.cat, ts.parts[b], act.sum(a, ts.parts[rho]), tu.parts[a], ara, lambda_on(ct, a, rho, s));
      put_blocks(l, out, tu.offset[a], ts.offset[b], hom_layout(t.cat, ts.parts[b], tu.parts[a]), blk);
    }
  return out;
}

// alpha: phi(x) -> eta  |->  beta: x -> psi(eta), beta_g = a_{g^-1}^g . lam(g, g^-1).
template <class K>
Vec<K> adjoint_forward(const CrossedTriple<K>& ct, const ElObject<K>& x, const ElObject<K>& eta, const Vec<K>& alpha) {
  using namespace el_detail;
  const Triple<K>& t = ct.base;
  const auto& g = ct.group;
  const Sum &s = x.carrier.summands, &u = eta.carrier.summands;
  Translates tu = translates(ct, u);
  Layout l = hom_layout(t.cat, s, tu.total);
  Vec<K> out(l.total);
  for (std::size_t a = 0; a < g.order(); ++a) {
    const std::size_t ai = g.inv(a);
    Sum sai = ct.action.sum(ai, s);
    Vec<K> comp = ct.hom_component(s, u, ai, alpha);  // A(S^{a^-1}, U)
    Vec<K> ca = ct.action.act_hom(t, a, sai, u, comp);
    Vec<K> blk = add_compose(t.cat, s, ct.action.sum(a, sai), tu.parts[a], ca, lambda_on(ct, a, ai, s));
    put_blocks(l, out, tu.offset[a], 0, hom_layout(t.cat, s, tu.parts[a]), blk);
  }
  return out;
}

// beta: x -> psi(eta)  |->  alpha with a_g = lam(g, g^-1)(U)^-1 . beta_{g^-1}^g.
template <class K>
Vec<K> adjoint_backward(const CrossedTriple<K>& ct, const ElObject<K>& x, const ElObject<K>& eta, const Vec<K>& beta) {
  using namespace el_detail;
  const Triple<K>& t = ct.base;
  const auto& g = ct.group;
  const Sum &s = x.carrier.summands, &u = eta.carrier.summands;
  Translates tu = translates(ct, u);
  Layout l = hom_layout(t.cat, s, tu.total);
  Vec<K> out(hom_layout(ct.tg.cat, s, u).total);
  for (std::size_t a = 0; a < g.order(); ++a) {
    const std::size_t ai = g.inv(a);
    const Sum& uai = tu.parts[ai];
    Vec<K> b = take_blocks(l, beta, tu.offset[ai], 0, hom_layout(t.cat, s, uai));  // S -> U^{a^-1}
    Vec<K> ba = ct.action.act_hom(t, a, s, uai, b);                                  // S^a -> (U^{a^-1})^a
    Vec<K> comp = add_compose(t.cat, ct.action.sum(a, s), ct.action.sum(a, uai), u, lambda_inverse_on(ct, a, ai, u), ba);
    out = out + ct.tag_hom(s, u, a, comp);
  }
  return out;
}

// Both adjunction maps on full hom bases: each lands in the right hom
// space and the two are mutually inverse.
template <class K>
Report check_adjunction(const CrossedTriple<K>& ct, const ElObject<K>& x, const ElObject<K>& eta) {
  Report r("adjunction");
  r.ensure("forward lands in Hom(x, psi eta)");
  r.ensure("backward lands in Hom(phi x, eta)");
  r.ensure("backward o forward = 1");
  r.ensure("forward o backward = 1");
  Check& dim = r.ensure("dimension");
  ElObject<K> px = phi_object(ct, x), pe = psi_object(ct, eta);
  auto left = el_hom_basis(ct.tg, px, eta);
  auto right = el_hom_basis(ct.base, x, pe);
  dim.detail = std::to_string(left.size()) + " vs " + std::to_string(right.size());
  if (left.size() != right.size()) r.violate("dimension", "Hom(phi x, eta) has dim " + dim.detail.substr(0, dim.detail.find(' ')));
  for (std::size_t i = 0; i < left.size(); ++i) {
    Vec<K> b = adjoint_forward(ct, x, eta, left[i]);
    if (!is_el_morphism(ct.base, x, pe, b)) r.violate("forward lands in Hom(x, psi eta)", "basis vector " + std::to_string(i));
    if (adjoint_backward(ct, x, eta, b) != left[i]) r.violate("backward o forward = 1", "basis vector " + std::to_string(i));
  }
  for (std::size_t i = 0; i < right.size(); ++i) {
    Vec<K> a = adjoint_backward(ct, x, eta, right[i]);
    if (!is_el_morphism(ct.tg, px, eta, a)) r.violate("backward lands in Hom(phi x, eta)", "basis vector " + std::to_string(i));
    if (adjoint_forward(ct, x, eta, a) != right[i]) r.violate("forward o backward = 1", "basis vector " + std::to_string(i));
  }
  return r;
}

// alpha on a sum, block diagonal.
template <class K>
Vec<K> center_on_sum(const FinCat<K>& c, const CenterElement<K>& z, const Sum& s) {
  Layout l = hom_layout(c, s, s);
  Vec<K> r(l.total);
  for (std::size_t i = 0; i < s.size(); ++i) set_block(l, r, i, i, z.alpha[s[i]]);
  return r;
}

template <class K>
struct SummandWitness {
  ElObject<K> big;  // phi(psi(xi))
  Vec<K> pi;        // big -> xi
  Vec<K> iota;      // xi -> big
  Report report;
};

// For xi in El(TG) and a central alpha with tr alpha = 1: pi has
// g-component lam(g^-1, g)^-1 [g^-1], iota has g-component alpha_{X^g}[g].
// The report asserts both are El morphisms and pi o iota = 1.
template <class K>
SummandWitness<K> summand_witness(const CrossedTriple<K>& ct, const ElObject<K>& xi, const CenterElement<K>& alpha) {
  using namespace el_detail;
  const Triple<K>& t = ct.base;
  const auto& g = ct.group;
  AddObject<K> x = base_carrier(ct, xi.carrier);
  const Sum& s = x.summands;
  Translates tr = translates(ct, s);
  SummandWitness<K> w;
  w.big = phi_object(ct, psi_object(ct, xi));
  const FinCat<K>& tc = ct.tg.cat;
  Layout lp = hom_layout(tc, tr.total, s), li = hom_layout(tc, s, tr.total);
  Vec<K> pi(lp.total), iota(li.total);
  for (std::size_t a = 0; a < g.order(); ++a) {
    const std::size_t ai = g.inv(a);
    const Sum& sa = tr.parts[a];
    Vec<K> linv = lambda_inverse_on(ct, ai, a, s);  // (S^a)^{a^-1} -> S
    put_blocks(lp, pi, 0, tr.offset[a], hom_layout(tc, sa, s), ct.tag_hom(sa, s, ai, linv));
    Vec<K> al = add_compose(t.cat, sa, sa, sa, center_on_sum(t.cat, alpha, sa), ct.action.act_hom(t, a, s, s, x.idem));
    put_blocks(li, iota, tr.offset[a], 0, hom_layout(tc, s, sa), ct.tag_hom(s, sa, a, al));
  }
  w.pi = absorb(tc, w.big.carrier, xi.carrier, pi);
  w.iota = absorb(tc, xi.carrier, w.big.carrier, iota);
  w.report = Report("summand witness");
  w.report.ensure("pi is a morphism");
  w.report.ensure("iota is a morphism");
  w.report.ensure("pi o iota = 1");
  if (!is_el_morphism(ct.tg, w.big, xi, w.pi)) w.report.violate("pi is a morphism", "El equation fails");
  if (!is_el_morphism(ct.tg, xi, w.big, w.iota)) w.report.violate("iota is a morphism", "El equation fails");
  if (add_compose(tc, s, tr.total, s, w.pi, w.iota) != xi.carrier.idem) w.report.violate("pi o iota = 1", "composite differs from the identity");
  return w;
}

}  // namespace skewcat
