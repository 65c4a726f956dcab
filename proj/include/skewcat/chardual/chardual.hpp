#pragma once

// Duality for abelian G: the character group acts on TG by scaling the
// s-component with chi(s), and the doubly crossed triple TG^ is
// equivalent to the idempotent completion of T through X -> (X, e_1).

#include "skewcat/centersep/center.hpp"
#include "skewcat/crossed/crossed.hpp"
#include "skewcat/elements/elements.hpp"
#include "skewcat/fincat/bifunctor.hpp"

#include <functional>

namespace skewcat {

template <class K>
struct CharacterGroup {
  FiniteGroup group;                 // of characters, pointwise product
  std::vector<std::vector<K>> values;  // [chi][s]
  K zeta;
  Report report{"characters"};

  std::size_t order() const { return values.size(); }
  const K& at(std::size_t chi, std::size_t s) const { return values[chi][s]; }
};

namespace chardual_detail {

template <class K>
std::uint64_t mult_order(const K& z, std::uint64_t bound) {
  K x = z;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (x.is_one()) return k;
    x = x * z;
  }
  return 0;
}

// A primitive n-th root of unity, the least one in F_p.
template <class K>
std::optional<K> find_root(const FieldSpec& f, std::size_t n) {
  if constexpr (is_prime_field_v<K>) {
    if ((f.p - 1) % n != 0) return std::nullopt;
    for (std::uint64_t a = 1; a < f.p; ++a) {
      K z = from_int<K>(f, static_cast<std::int64_t>(a));
      if (mult_order(z, n) == n) return z;
    }
    return std::nullopt;
  } else {
    if (n == 1) return from_int<K>(f, 1);
    if (n == 2) return from_int<K>(f, -1);
    return std::nullopt;
  }
}

inline std::vector<std::size_t> greedy_generators(const FiniteGroup& g) {
  std::vector<std::size_t> gens, h = g.generated({});
  for (std::size_t s = 0; s < g.order(); ++s)
    if (!std::binary_search(h.begin(), h.end(), s)) {
      gens.push_back(s);
      h = g.generated(gens);
    }
  return gens;
}

}  // namespace chardual_detail

// Every homomorphism G -> <zeta>, found by assigning powers of zeta to a
// generating set and keeping the consistent assignments.
template <class K>
CharacterGroup<K> character_group(const FiniteGroup& g, const FieldSpec& f, std::optional<K> zeta = std::nullopt) {
  using namespace chardual_detail;
  const std::size_t n = g.order();
  if (!g.is_abelian()) throw precondition_error("character_group: group is not abelian");
  if (zeta) {
    if (mult_order(*zeta, n) != n) throw precondition_error("character_group: zeta is not a primitive " + std::to_string(n) + "-th root of unity");
  } else {
    zeta = find_root<K>(f, n);
    if (!zeta) throw precondition_error("character_group: the field has no primitive " + std::to_string(n) + "-th root of unity");
  }
  std::vector<K> powers{from_int<K>(f, 1)};
  for (std::size_t k = 1; k < n; ++k) powers.push_back(powers.back() * *zeta);

  CharacterGroup<K> cg{FiniteGroup::trivial(), {}, *zeta, Report("characters")};
  const auto gens = greedy_generators(g);
  std::vector<std::size_t> ex(gens.size(), 0);
  const K zero = from_int<K>(f, 0);
  for (;;) {
    // extend along words in the generators
    std::vector<K> val(n, zero);
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> queue{g.unit()};
    val[g.unit()] = powers[0];
    seen[g.unit()] = true;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::size_t t = g.mul(queue[q], gens[i]);
        if (!seen[t]) {
          seen[t] = true;
          val[t] = val[queue[q]] * powers[ex[i]];
          queue.push_back(t);
        }
      }
    bool hom = true;
    for (std::size_t a = 0; a < n && hom; ++a)
      for (std::size_t b = 0; b < n && hom; ++b) hom = val[g.mul(a, b)] == val[a] * val[b];
    if (hom) cg.values.push_back(val);
    std::size_t i = 0;
    while (i < ex.size() && ++ex[i] == n) ex[i++] = 0;
    if (i == ex.size()) break;
  }
  const std::size_t m = cg.values.size();
  std::vector<std::string> names;
  std::vector<std::size_t> mult(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    names.push_back("chi" + std::to_string(a));
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<K> prod(n, zero);
      for (std::size_t s = 0; s < n; ++s) prod[s] = cg.values[a][s] * cg.values[b][s];
      mult[a * m + b] = static_cast<std::size_t>(std::find(cg.values.begin(), cg.values.end(), prod) - cg.values.begin());
    }
  }
  cg.group = FiniteGroup(names, mult);
  Report& r = cg.report;
  r.add("count", m == n ? Status::pass : Status::fail, std::to_string(m) + " characters");
  r.ensure("orthogonality");
  const K nk = from_int<K>(f, static_cast<std::int64_t>(n));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      K sum = zero;
      for (std::size_t s = 0; s < n; ++s) sum += cg.values[a][s] * cg.values[b][s].inverse();
      if (sum != (a == b ? nk : zero)) r.violate("orthogonality", "(" + names[a] + "," + names[b] + ")");
    }
  return cg;
}

// chi acts on TG by x[s] -> chi(s) x[s], fixing objects.
template <class K>
GroupAction<K> hat_action(const CrossedTriple<K>& ct, const CharacterGroup<K>& cg) {
  const Triple<K>& tg = ct.tg;
  const std::size_t n = tg.n();
  GroupAction<K> act = trivial_action(tg, cg.group);
  for (std::size_t chi = 0; chi < cg.order(); ++chi)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        act.hom[chi][tg.cat.pair(x, y)] = matrix_of<K>(tg.field(), tg.dim(x, y), tg.dim(x, y), [&](const Vec<K>& v) {
          Vec<K> out(v.size(), from_int<K>(tg.field(), 0));
          for (std::size_t s = 0; s < ct.order(); ++s) out = out + ct.tag_hom(x, y, s, scaled(cg.at(chi, s), ct.hom_component(x, y, s, v)));
          return out;
        });
        act.bim[chi][tg.cat.pair(x, y)] = matrix_of<K>(tg.field(), tg.bdim(x, y), tg.bdim(x, y), [&](const Vec<K>& v) {
          Vec<K> out(v.size(), from_int<K>(tg.field(), 0));
          for (std::size_t s = 0; s < ct.order(); ++s) out = out + ct.tag_bim(x, y, s, scaled(cg.at(chi, s), ct.bim_component(x, y, s, v)));
          return out;
        });
      }
  return act;
}

template <class K>
struct CharDouble {
  CharacterGroup<K> chars;
  CrossedTriple<K> dbl;                // over the base TG
  std::vector<std::vector<Vec<K>>> e;  // [x][s]: e_s in End(x) of the double
  Bifunctor<K> theta;                  // T -> TG^
  Report report{"character double"};
};

namespace chardual_detail {

// 1[s] as a morphism x -> x^s of TG, viewed in the double
template <class K>
Vec<K> conjugator(const CrossedTriple<K>& ct, const CrossedTriple<K>& dbl, std::size_t x, std::size_t s) {
  const std::size_t xs = ct.action.obj(s, x);
  return dbl.embed_hom(x, xs, ct.tag_hom(x, xs, s, ct.base.cat.id(xs)));
}

template <class K>
std::size_t corner_dim(const FinCat<K>& c, std::size_t x, const Vec<K>& e) {
  return add_hom_basis(c, AddObject<K>{Sum{x}, e}, AddObject<K>{Sum{x}, e}).size();
}

}  // namespace chardual_detail

struct CharDoubleOptions {
  EquivalenceOptions equivalence;
  std::size_t el_samples = 6;
  std::uint64_t seed = 0;
};

template <class K>
CharDouble<K> char_double(const CrossedTriple<K>& ct, std::optional<K> zeta = std::nullopt, const CharDoubleOptions& opt = {}) {
  using namespace chardual_detail;
  const FiniteGroup& g = ct.group;
  const Triple<K>& t = ct.base;
  const FieldSpec& f = t.field();
  const std::size_t n = g.order(), m = t.n();
  const K nk = from_int<K>(f, static_cast<std::int64_t>(n));
  if (nk.is_zero()) throw precondition_error("char_double: |G| is not invertible in the field");
  CharacterGroup<K> chars = character_group<K>(g, f, zeta);
  Report r("character double");
  r.merge(chars.report, "characters/");

  GroupAction<K> hat = hat_action(ct, chars);
  FactorSystem<K> triv = trivial_factors(ct.tg, chars.group, hat);
  r.merge(validate_action(ct.tg, chars.group, hat), "hat action/");
  r.merge(validate_factor_system(ct.tg, chars.group, hat, triv), "hat factors/");
  const CrossedTriple<K> dbl = build_crossed(ct.tg, chars.group, hat, triv);
  const FinCat<K>& dc = dbl.tg.cat;
  r.merge(check_associativity(dbl), "double/");
  r.add("hat action separable", is_separable(dbl) ? Status::pass : Status::fail);

  // dimension bookkeeping
  r.ensure("dimension bookkeeping");
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::size_t sum = 0;
      for (std::size_t s = 0; s < n; ++s) sum += t.dim(ct.action.obj(s, x), y);
      if (dc.dim(x, y) != n * sum || ct.tg.dim(x, y) != sum)
        r.violate("dimension bookkeeping", t.cat.objects[x] + "->" + t.cat.objects[y] + ": " + std::to_string(dc.dim(x, y)) + " vs " + std::to_string(n * sum));
    }
  for (std::size_t x = 0; x < m; ++x) {
    bool fixed = true;
    for (std::size_t s = 0; s < n; ++s) fixed = fixed && ct.action.obj(s, x) == x;
    if (fixed && dc.dim(x, x) != n * n * t.dim(x, x)) r.violate("dimension bookkeeping", t.cat.objects[x] + ": n^2 dim A(x,x) fails");
  }

  // e_s = (1/n) sum_chi chi(s) [chi]
  const K ninv = nk.inverse();
  std::vector<std::vector<Vec<K>>> e(m, std::vector<Vec<K>>(n));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t s = 0; s < n; ++s) {
      Vec<K> v(dc.dim(x, x), from_int<K>(f, 0));
      for (std::size_t chi = 0; chi < chars.order(); ++chi) axpy(v, ninv * chars.at(chi, s), dbl.tag_hom(x, x, chi, ct.tg.cat.id(x)));
      e[x][s] = v;
    }
  for (const char* c : {"idempotent", "orthogonal", "complete", "conjugacy", "conjugators invertible", "corners equal"}) r.ensure(c);
  for (std::size_t x = 0; x < m; ++x) {
    const std::string xn = t.cat.objects[x];
    Vec<K> total(dc.dim(x, x), from_int<K>(f, 0));
    for (std::size_t s = 0; s < n; ++s) {
      const Vec<K>& es = e[x][s];
      total = total + es;
      for (std::size_t u = 0; u < n; ++u) {
        Vec<K> p = dc.compose(x, x, x, es, e[x][u]);
        if (s == u && p != es) r.violate("idempotent", xn + " e_" + g.name(s));
        if (s != u && !is_zero_vec(p)) r.violate("orthogonal", xn + " (" + g.name(s) + "," + g.name(u) + ")");
      }
      // e_s(x^u) o 1[u] = 1[u] o e_{su}(x)
      for (std::size_t u = 0; u < n; ++u) {
        const std::size_t xu = ct.action.obj(u, x);
        Vec<K> c = conjugator(ct, dbl, x, u);
        if (dc.compose(x, xu, xu, e[xu][s], c) != dc.compose(x, x, xu, c, e[x][g.mul(s, u)]))
          r.violate("conjugacy", xn + " (" + g.name(s) + "," + g.name(u) + ")");
      }
      const std::size_t xs = ct.action.obj(s, x);
      if (!add_inverse(dc, AddObject<K>::plain(dc, {x}), AddObject<K>::plain(dc, {xs}), conjugator(ct, dbl, x, s)))
        r.violate("conjugators invertible", xn + " [" + g.name(s) + "]");
      if (corner_dim(dc, x, es) != corner_dim(dc, xs, e[xs][g.unit()])) r.violate("corners equal", xn + " e_" + g.name(s));
    }
    if (total != dc.id(x)) r.violate("complete", xn);
  }

  // Theta: a -> a[1][chi0] e_1, u -> u[1][chi0] e_1
  Bifunctor<K> th;
  const std::size_t e1 = g.unit();
  for (std::size_t x = 0; x < m; ++x) th.obj.push_back(AddObject<K>{Sum{x}, e[x][e1]});
  th.hom.resize(m * m);
  th.bim.resize(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      th.hom[t.cat.pair(x, y)] = matrix_of<K>(f, t.dim(x, y), dc.dim(x, y), [&](const Vec<K>& a) {
        return dc.compose(x, x, y, dbl.embed_hom(x, y, ct.embed_hom(x, y, a)), e[x][e1]);
      });
      th.bim[t.cat.pair(x, y)] = matrix_of<K>(f, t.bdim(x, y), dbl.tg.bdim(x, y), [&](const Vec<K>& u) {
        return dbl.tg.act_right(x, x, y, dbl.embed_bim(x, y, ct.embed_bim(x, y, u)), e[x][e1]);
      });
    }
  r.ensure("corner dimension");
  for (std::size_t x = 0; x < m; ++x)
    if (corner_dim(dc, x, e[x][e1]) != t.dim(x, x)) r.violate("corner dimension", t.cat.objects[x]);

  // x ~ sum_s Theta(x^s) through the blocks 1[s] e_s, ordered by object
  std::vector<std::vector<Vec<K>>> wit(m);
  for (std::size_t x = 0; x < m; ++x) {
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (std::size_t s = 0; s < n; ++s) order.push_back({ct.action.obj(s, x), s});
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Sum img;
    for (const auto& o : order) img.push_back(o.first);
    Layout l = hom_layout(dc, Sum{x}, img);
    Vec<K> w(l.total, from_int<K>(f, 0));
    for (std::size_t i = 0; i < n; ++i) {
      const auto [xs, s] = order[i];
      set_block(l, w, i, 0, dc.compose(x, x, xs, conjugator(ct, dbl, x, s), e[x][s]));
    }
    wit[x].push_back(w);
  }
  EquivalenceOptions eo = opt.equivalence;
  eo.max_multiplicity = std::max<std::size_t>(eo.max_multiplicity, n);
  r.merge(is_equivalence(th, t, dbl.tg, eo, wit), "theta/");

  // El(T) against El of the double, through Theta
  r.ensure("El hom dimensions preserved");
  r.ensure("El objects preserved");
  auto objs = generate_el_objects(t, opt.el_samples, opt.seed);
  auto image = [&](const ElObject<K>& xi) {
    const Sum& s = xi.carrier.summands;
    return ElObject<K>{AddObject<K>{s, map_hom(th, t, dbl.tg, s, s, xi.carrier.idem)}, map_bim(th, t, dbl.tg, s, s, xi.elem)};
  };
  for (std::size_t i = 0; i < objs.size(); ++i) {
    ElObject<K> xi = image(objs[i]);
    if (!is_el_object(dbl.tg, xi)) r.violate("El objects preserved", "sample " + std::to_string(i));
    for (std::size_t j = 0; j < objs.size(); ++j) {
      const std::size_t d0 = el_hom_basis(t, objs[i], objs[j]).size();
      const std::size_t d1 = el_hom_basis(dbl.tg, xi, image(objs[j])).size();
      if (d0 != d1) r.violate("El hom dimensions preserved", "(" + std::to_string(i) + "," + std::to_string(j) + "): " + std::to_string(d0) + " vs " + std::to_string(d1));
    }
  }
  return CharDouble<K>{std::move(chars), dbl, std::move(e), std::move(th), std::move(r)};
}

}  // namespace skewcat
