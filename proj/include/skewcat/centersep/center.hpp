#pragma once

// Center of a triple (families alpha_X commuting with every morphism and
// element, killed by d), the induced group action on it, the trace, the
// separability decision and the separability element in ZG (x)_Z ZG.

#include "skewcat/elements/elements.hpp"

namespace skewcat {

template <class K>
CenterElement<K> center_zero(const FinCat<K>& c) {
  CenterElement<K> z;
  for (std::size_t x = 0; x < c.n(); ++x) z.alpha.push_back(c.zero(x, x));
  return z;
}

template <class K>
CenterElement<K> center_one(const FinCat<K>& c) {
  CenterElement<K> z;
  for (std::size_t x = 0; x < c.n(); ++x) z.alpha.push_back(c.id(x));
  return z;
}

template <class K>
CenterElement<K> center_add(CenterElement<K> a, const CenterElement<K>& b) {
  for (std::size_t x = 0; x < a.alpha.size(); ++x) a.alpha[x] = a.alpha[x] + b.alpha[x];
  return a;
}

template <class K>
CenterElement<K> center_scale(const K& k, CenterElement<K> a) {
  for (auto& v : a.alpha) v = scaled(k, v);
  return a;
}

template <class K>
CenterElement<K> center_mul(const FinCat<K>& c, const CenterElement<K>& a, const CenterElement<K>& b) {
  CenterElement<K> r;
  for (std::size_t x = 0; x < c.n(); ++x) r.alpha.push_back(c.compose(x, x, x, a.alpha[x], b.alpha[x]));
  return r;
}

namespace center_detail {

template <class K>
std::vector<std::size_t> offsets(const FinCat<K>& c) {
  std::vector<std::size_t> off{0};
  for (std::size_t x = 0; x < c.n(); ++x) off.push_back(off.back() + c.dim(x, x));
  return off;
}

template <class K>
Vec<K> flatten(const CenterElement<K>& z) {
  Vec<K> v;
  for (const auto& a : z.alpha) v.insert(v.end(), a.begin(), a.end());
  return v;
}

template <class K>
CenterElement<K> unflatten(const FinCat<K>& c, const Vec<K>& v) {
  auto off = offsets(c);
  CenterElement<K> z;
  for (std::size_t x = 0; x < c.n(); ++x) z.alpha.emplace_back(v.begin() + off[x], v.begin() + off[x + 1]);
  return z;
}

// Stacked defining conditions, applied to a flattened family.
template <class K>
Vec<K> conditions(const Triple<K>& t, const CenterElement<K>& z) {
  const FinCat<K>& c = t.cat;
  const FieldSpec& f = t.field();
  Vec<K> out;
  auto push = [&](const Vec<K>& v) { out.insert(out.end(), v.begin(), v.end()); };
  for (std::size_t x = 0; x < c.n(); ++x)
    for (std::size_t y = 0; y < c.n(); ++y) {
      for (std::size_t i = 0; i < c.dim(x, y); ++i) {
        Vec<K> a = unit_vec<K>(f, c.dim(x, y), i);
        push(c.compose(x, y, y, z.alpha[y], a) - c.compose(x, x, y, a, z.alpha[x]));
      }
      for (std::size_t i = 0; i < t.bdim(x, y); ++i) {
        Vec<K> u = unit_vec<K>(f, t.bdim(x, y), i);
        push(t.act_left(x, y, y, z.alpha[y], u) - t.act_right(x, x, y, u, z.alpha[x]));
      }
    }
  for (std::size_t x = 0; x < c.n(); ++x) push(t.d(x, x, z.alpha[x]));
  return out;
}

}  // namespace center_detail

template <class K>
bool is_central(const Triple<K>& t, const CenterElement<K>& z) {
  return is_zero_vec(center_detail::conditions(t, z));
}

template <class K>
std::vector<CenterElement<K>> center_basis(const Triple<K>& t) {
  using namespace center_detail;
  const FinCat<K>& c = t.cat;
  const std::size_t n = offsets(c).back();
  if (n == 0) return {};
  const std::size_t m = conditions(t, center_zero(c)).size();
  Mat<K> eq = matrix_of<K>(t.field(), n, m, [&](const Vec<K>& v) { return conditions(t, unflatten(c, v)); });
  std::vector<CenterElement<K>> out;
  Subspace<K> sol(n, kernel_basis(eq, t.field()));
  for (const auto& v : sol.basis()) out.push_back(unflatten(c, v));
  return out;
}

// (alpha^s)_X = lam(s,s^-1,X)^-1 . T_s(alpha_{X^{s^-1}}) . lam(s,s^-1,X).
template <class K>
CenterElement<K> center_act(const Triple<K>& t, const FiniteGroup& g, const GroupAction<K>& act, const FactorSystem<K>& lam, std::size_t s,
                            const CenterElement<K>& z) {
  const FinCat<K>& c = t.cat;
  const std::size_t si = g.inv(s);
  CenterElement<K> r;
  for (std::size_t x = 0; x < c.n(); ++x) {
    const std::size_t xi = act.obj(si, x), xis = act.obj(s, xi);
    const Vec<K>& l = lam.at(s, si, x);  // x -> (x^{s^-1})^s
    auto linv = add_inverse(c, AddObject<K>::plain(c, {x}), AddObject<K>::plain(c, {xis}), l);
    if (!linv) throw std::domain_error("factor system value is not invertible");
    Vec<K> mid = act.act_hom(t, s, xi, xi, z.alpha[xi]);
    r.alpha.push_back(c.compose(x, xis, x, *linv, c.compose(x, xis, xis, mid, l)));
  }
  return r;
}

template <class K>
CenterElement<K> center_act(const CrossedTriple<K>& ct, std::size_t s, const CenterElement<K>& z) {
  return center_act(ct.base, ct.group, ct.action, ct.factors, s, z);
}

template <class K>
CenterElement<K> trace(const CrossedTriple<K>& ct, const CenterElement<K>& z) {
  CenterElement<K> r = center_zero(ct.base.cat);
  for (std::size_t s = 0; s < ct.order(); ++s) r = center_add(r, center_act(ct, s, z));
  return r;
}

// Sum of z^h over a subgroup.
template <class K>
CenterElement<K> trace_over(const CrossedTriple<K>& ct, const std::vector<std::size_t>& h, const CenterElement<K>& z) {
  CenterElement<K> r = center_zero(ct.base.cat);
  for (std::size_t s : h) r = center_add(r, center_act(ct, s, z));
  return r;
}

// Outputs central, unit acts trivially, (z^u)^s = z^{su}, trace invariant.
template <class K>
Report validate_center_action(const CrossedTriple<K>& ct) {
  Report r("center action");
  r.ensure("central");
  r.ensure("unit");
  r.ensure("composition");
  r.ensure("trace invariant");
  const auto& g = ct.group;
  auto basis = center_basis(ct.base);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& z = basis[i];
    const std::string zi = "z" + std::to_string(i);
    if (!(center_act(ct, g.unit(), z) == z)) r.violate("unit", zi);
    CenterElement<K> tz = trace(ct, z);
    for (std::size_t s = 0; s < g.order(); ++s) {
      CenterElement<K> zs = center_act(ct, s, z);
      if (!is_central(ct.base, zs)) r.violate("central", zi + "^" + g.name(s));
      if (!(center_act(ct, s, tz) == tz)) r.violate("trace invariant", "tr " + zi + " under " + g.name(s));
      for (std::size_t u = 0; u < g.order(); ++u)
        if (!(center_act(ct, s, center_act(ct, u, z)) == center_act(ct, g.mul(s, u), z)))
          r.violate("composition", "(" + g.name(s) + "," + g.name(u) + ") on " + zi);
    }
  }
  return r;
}

// Some central alpha with tr alpha = 1, as one linear system over the
// center basis.
template <class K>
std::optional<CenterElement<K>> is_separable(const CrossedTriple<K>& ct) {
  using namespace center_detail;
  const FinCat<K>& c = ct.base.cat;
  auto basis = center_basis(ct.base);
  Vec<K> one = flatten(center_one(c));
  if (basis.empty()) {
    if (one.empty()) return center_zero(c);
    return std::nullopt;
  }
  std::vector<Vec<K>> cols;
  for (const auto& z : basis) cols.push_back(flatten(trace(ct, z)));
  auto sol = solve_vec(Mat<K>::from_columns(one.size(), cols), one);
  if (!sol) return std::nullopt;
  CenterElement<K> a = center_zero(c);
  for (std::size_t i = 0; i < basis.size(); ++i) a = center_add(a, center_scale((*sol)[i], basis[i]));
  return a;
}

// Elements of ZG (x)_Z ZG in the normal form sum z(s,r) [s] (x) [r] with
// central coefficients on the left; the factor system of the center
// action is trivial.
template <class K>
struct SepTensor {
  std::size_t order = 0;
  std::vector<CenterElement<K>> coeff;  // [s*order + r]
  CenterElement<K>& at(std::size_t s, std::size_t r) { return coeff[s * order + r]; }
  const CenterElement<K>& at(std::size_t s, std::size_t r) const { return coeff[s * order + r]; }
  friend bool operator==(const SepTensor& a, const SepTensor& b) { return a.coeff == b.coeff; }
};

template <class K>
SepTensor<K> sep_zero(const CrossedTriple<K>& ct) {
  const std::size_t o = ct.order();
  return SepTensor<K>{o, std::vector<CenterElement<K>>(o * o, center_zero(ct.base.cat))};
}

// t = sum over s of alpha^s [s] (x) [s^-1].
template <class K>
SepTensor<K> separability_element(const CrossedTriple<K>& ct, const CenterElement<K>& alpha) {
  SepTensor<K> t = sep_zero(ct);
  for (std::size_t s = 0; s < ct.order(); ++s) t.at(s, ct.group.inv(s)) = center_act(ct, s, alpha);
  return t;
}

// b[u] . z[s] (x) [r] = b z^u [us] (x) [r].
template <class K>
SepTensor<K> sep_left(const CrossedTriple<K>& ct, const CenterElement<K>& b, std::size_t u, const SepTensor<K>& t) {
  SepTensor<K> r = sep_zero(ct);
  const FinCat<K>& c = ct.base.cat;
  for (std::size_t s = 0; s < t.order; ++s)
    for (std::size_t q = 0; q < t.order; ++q) {
      auto& dst = r.at(ct.group.mul(u, s), q);
      dst = center_add(dst, center_mul(c, b, center_act(ct, u, t.at(s, q))));
    }
  return r;
}

// z[s] (x) [r] . b[u] = z b^{sr} [s] (x) [ru].
template <class K>
SepTensor<K> sep_right(const CrossedTriple<K>& ct, const SepTensor<K>& t, const CenterElement<K>& b, std::size_t u) {
  SepTensor<K> r = sep_zero(ct);
  const FinCat<K>& c = ct.base.cat;
  for (std::size_t s = 0; s < t.order; ++s)
    for (std::size_t q = 0; q < t.order; ++q) {
      auto& dst = r.at(s, ct.group.mul(q, u));
      dst = center_add(dst, center_mul(c, t.at(s, q), center_act(ct, ct.group.mul(s, q), b)));
    }
  return r;
}

// Multiplication ZG (x) ZG -> ZG; the result is indexed by group element.
template <class K>
std::vector<CenterElement<K>> sep_multiply(const CrossedTriple<K>& ct, const SepTensor<K>& t) {
  std::vector<CenterElement<K>> r(t.order, center_zero(ct.base.cat));
  for (std::size_t s = 0; s < t.order; ++s)
    for (std::size_t q = 0; q < t.order; ++q) r[ct.group.mul(s, q)] = center_add(r[ct.group.mul(s, q)], t.at(s, q));
  return r;
}

template <class K>
Report check_separability_element(const CrossedTriple<K>& ct, const SepTensor<K>& t) {
  Report r("separability element");
  r.ensure("multiplication gives 1");
  r.ensure("commutes with ZG");
  auto m = sep_multiply(ct, t);
  for (std::size_t s = 0; s < ct.order(); ++s) {
    const CenterElement<K> want = s == ct.group.unit() ? center_one(ct.base.cat) : center_zero(ct.base.cat);
    if (!(m[s] == want)) r.violate("multiplication gives 1", "component " + ct.group.name(s));
  }
  auto basis = center_basis(ct.base);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t u = 0; u < ct.order(); ++u)
      if (!(sep_left(ct, basis[i], u, t) == sep_right(ct, t, basis[i], u)))
        r.violate("commutes with ZG", "z" + std::to_string(i) + "[" + ct.group.name(u) + "]");
  return r;
}

// Center of T fixed by G, as a basis.
template <class K>
std::vector<CenterElement<K>> center_invariants(const CrossedTriple<K>& ct) {
  using namespace center_detail;
  const FinCat<K>& c = ct.base.cat;
  auto basis = center_basis(ct.base);
  if (basis.empty()) return {};
  const std::size_t n = offsets(c).back();
  std::vector<Mat<K>> blocks;
  for (std::size_t s = 0; s < ct.order(); ++s)
    blocks.push_back(matrix_of<K>(ct.base.field(), basis.size(), n, [&](const Vec<K>& k) {
      CenterElement<K> z = center_zero(c);
      for (std::size_t i = 0; i < basis.size(); ++i) z = center_add(z, center_scale(k[i], basis[i]));
      return flatten(center_add(center_act(ct, s, z), center_scale(-one<K>(ct.base.field()), z)));
    }));
  std::vector<CenterElement<K>> out;
  for (const auto& k : kernel_basis(vstack(blocks, basis.size()), ct.base.field())) {
    CenterElement<K> z = center_zero(c);
    for (std::size_t i = 0; i < basis.size(); ++i) z = center_add(z, center_scale(k[i], basis[i]));
    out.push_back(z);
  }
  return out;
}

// z |-> z[1] as a central family of TG (possibly not central there).
template <class K>
CenterElement<K> embed_center(const CrossedTriple<K>& ct, const CenterElement<K>& z) {
  CenterElement<K> r;
  for (std::size_t x = 0; x < ct.base.n(); ++x) r.alpha.push_back(ct.embed_hom(x, x, z.alpha[x]));
  return r;
}

// Compares Z(TG) with Z(T)^G embedded by z -> z[1]. The literal claim is
// equality of the two subspaces; the check on the unit-component part of
// Z(TG) and the trace check are reported alongside.
template <class K>
Report check_center_of_crossed(const CrossedTriple<K>& ct) {
  using namespace center_detail;
  Report r("center of crossed triple");
  const FieldSpec& f = ct.base.field();
  auto ztg = center_basis(ct.tg);
  auto inv = center_invariants(ct);
  const std::size_t n = offsets(ct.tg.cat).back();
  std::vector<Vec<K>> a, b;
  for (const auto& z : ztg) a.push_back(flatten(z));
  for (const auto& z : inv) b.push_back(flatten(embed_center(ct, z)));
  Subspace<K> za(n, a), zb(n, b);
  Check& d = r.ensure("dimension");
  d.detail = "dim Z(TG) = " + std::to_string(za.dim()) + ", dim Z(T)^G = " + std::to_string(zb.dim());
  if (za.dim() != zb.dim()) r.violate("dimension", d.detail);
  r.ensure("invariants central in TG");
  if (!za.contains(zb)) r.violate("invariants central in TG", "some z[1] with z invariant is not central");
  r.ensure("center inside invariants");
  if (!zb.contains(za)) r.violate("center inside invariants", "Z(TG) has elements outside Z(T)^G[1]");

  // the unit-component part
  std::vector<Vec<K>> units;
  for (std::size_t x = 0; x < ct.base.n(); ++x)
    for (std::size_t i = 0; i < ct.base.dim(x, x); ++i) {
      CenterElement<K> z = center_zero(ct.base.cat);
      z.alpha[x] = unit_vec<K>(f, ct.base.dim(x, x), i);
      units.push_back(flatten(embed_center(ct, z)));
    }
  Subspace<K> part = za.intersect(Subspace<K>(n, units), f);
  Check& u = r.ensure("unit-component part equals invariants");
  u.detail = "dim " + std::to_string(part.dim());
  if (!(part == zb)) r.violate("unit-component part equals invariants", "Z(TG) meets A[1] in dim " + std::to_string(part.dim()));

  r.ensure("trace lands in Z(TG)");
  for (const auto& z : center_basis(ct.base)) {
    CenterElement<K> tz = embed_center(ct, trace(ct, z));
    if (!is_central(ct.tg, tz)) r.violate("trace lands in Z(TG)", "tr of a basis element");
  }
  return r;
}

// For each subgroup H with right coset representatives R, beta = sum over
// R of alpha^r has tr_H beta = 1.
template <class K>
Report check_subgroup_heredity(const CrossedTriple<K>& ct, const CenterElement<K>& alpha) {
  Report r("subgroup heredity");
  r.ensure("restricted trace is 1");
  const CenterElement<K> one = center_one(ct.base.cat);
  for (const auto& h : ct.group.small_subgroups()) {
    CenterElement<K> beta = center_zero(ct.base.cat);
    for (std::size_t rep : ct.group.right_coset_representatives(h)) beta = center_add(beta, center_act(ct, rep, alpha));
    if (!(trace_over(ct, h, beta) == one)) {
      std::string name;
      for (auto s : h) name += (name.empty() ? "" : ",") + ct.group.name(s);
      r.violate("restricted trace is 1", "H = {" + name + "}");
    }
  }
  return r;
}

}  // namespace skewcat
