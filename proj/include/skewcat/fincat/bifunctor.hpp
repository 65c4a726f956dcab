#pragma once

// Bifunctors between triples. A base object of the source goes to a
// Karoubi object of the target; hom and bimodule maps land in the ambient
// block coordinates between the image sums.

#include "skewcat/core/report.hpp"
#include "skewcat/fincat/additive.hpp"
#include "skewcat/fincat/validate.hpp"

namespace skewcat {

template <class K>
struct Bifunctor {
  std::vector<AddObject<K>> obj;  // [x]
  std::vector<Mat<K>> hom;        // [x*n+y]
  std::vector<Mat<K>> bim;        // [x*n+y]

  // Image of a sum: concatenated summands, block-diagonal idempotent.
  template <class C>
  AddObject<K> map_sum(const C& dst_cat, const Sum& s) const {
    AddObject<K> r{{}, {}};
    r.idem = add_identity(dst_cat, Sum{});
    for (std::size_t x : s) r = add_object_sum(dst_cat, r, obj[x]);
    return r;
  }
};

template <class K>
Bifunctor<K> identity_bifunctor(const Triple<K>& t) {
  Bifunctor<K> f;
  const std::size_t m = t.n();
  for (std::size_t x = 0; x < m; ++x) f.obj.push_back(AddObject<K>::plain(t.cat, Sum{x}));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      f.hom.push_back(Mat<K>::identity(t.field(), t.dim(x, y)));
      f.bim.push_back(Mat<K>::identity(t.field(), t.bdim(x, y)));
    }
  return f;
}

namespace detail {

// Places per-block images into the layout of the image sums.
template <class K, class BlockMap, class LayoutFn>
Vec<K> map_blocks(const Sum& s, const Sum& t, const Layout& src, LayoutFn&& dst_layout_of, const std::vector<AddObject<K>>& obj,
                  const Vec<K>& v, BlockMap&& block_map) {
  // offsets of each image sum within the concatenation
  std::vector<std::size_t> so(s.size() + 1, 0), to(t.size() + 1, 0);
  Sum fs, ft;
  for (std::size_t j = 0; j < s.size(); ++j) {
    so[j + 1] = so[j] + obj[s[j]].summands.size();
    fs = concat(fs, obj[s[j]].summands);
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    to[i + 1] = to[i] + obj[t[i]].summands.size();
    ft = concat(ft, obj[t[i]].summands);
  }
  Layout big = dst_layout_of(fs, ft);
  Vec<K> r(big.total);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (src.len(i, j) == 0) continue;
      Vec<K> img = block_map(s[j], t[i], get_block(src, v, i, j));
      const Sum &a = obj[s[j]].summands, &b = obj[t[i]].summands;
      Layout small = dst_layout_of(a, b);
      for (std::size_t ii = 0; ii < b.size(); ++ii)
        for (std::size_t jj = 0; jj < a.size(); ++jj) set_block(big, r, to[i] + ii, so[j] + jj, get_block(small, img, ii, jj));
    }
  return r;
}

}  // namespace detail

// F0 on a morphism S -> T of add A.
template <class K>
Vec<K> map_hom(const Bifunctor<K>& f, const Triple<K>& src, const Triple<K>& dst, const Sum& s, const Sum& t, const Vec<K>& a) {
  return detail::map_blocks<K>(
      s, t, hom_layout(src.cat, s, t), [&](const Sum& x, const Sum& y) { return hom_layout(dst.cat, x, y); }, f.obj, a,
      [&](std::size_t x, std::size_t y, const Vec<K>& b) { return f.hom[src.cat.pair(x, y)].apply(b); });
}

// F1 on a bimodule element in B(S,T).
template <class K>
Vec<K> map_bim(const Bifunctor<K>& f, const Triple<K>& src, const Triple<K>& dst, const Sum& s, const Sum& t, const Vec<K>& u) {
  return detail::map_blocks<K>(
      s, t, bim_layout(src, s, t), [&](const Sum& x, const Sum& y) { return bim_layout(dst, x, y); }, f.obj, u,
      [&](std::size_t x, std::size_t y, const Vec<K>& b) { return f.bim[src.cat.pair(x, y)].apply(b); });
}

// Functoriality and compatibility with the bimodule structure and the
// differentiation, checked on all basis elements.
template <class K>
Report validate_bifunctor(const Bifunctor<K>& f, const Triple<K>& src, const Triple<K>& dst) {
  Report r("bifunctor");
  const std::size_t m = src.n();
  const FinCat<K>& sc = src.cat;
  const FinCat<K>& dc = dst.cat;
  const FieldSpec& fs = src.field();
  r.ensure("shape");
  if (f.obj.size() != m || f.hom.size() != m * m || f.bim.size() != m * m) {
    r.violate("shape", "bifunctor tables have wrong size");
    return r;
  }
  for (std::size_t x = 0; x < m; ++x) {
    const AddObject<K>& o = f.obj[x];
    for (std::size_t s : o.summands)
      if (s >= dst.n()) r.violate("shape", "object image of " + sc.objects[x] + " refers to an unknown object");
    if (!r.passed()) return r;
    if (o.idem.size() != hom_layout(dc, o.summands, o.summands).total || !is_idempotent(dc, o.summands, o.idem))
      r.violate("shape", "object image of " + sc.objects[x] + " is not an idempotent");
  }
  if (!r.passed()) return r;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const Mat<K>& h = f.hom[sc.pair(x, y)];
      const Mat<K>& b = f.bim[sc.pair(x, y)];
      if (h.cols() != src.dim(x, y) || h.rows() != hom_layout(dc, f.obj[x].summands, f.obj[y].summands).total)
        r.violate("shape", "hom map on (" + sc.objects[x] + "," + sc.objects[y] + ") has wrong shape");
      if (b.cols() != src.bdim(x, y) || b.rows() != bim_layout(dst, f.obj[x].summands, f.obj[y].summands).total)
        r.violate("shape", "element map on (" + sc.objects[x] + "," + sc.objects[y] + ") has wrong shape");
    }
  if (!r.passed()) return r;

  r.ensure("absorption");
  r.ensure("identity");
  r.ensure("composition");
  r.ensure("left action");
  r.ensure("right action");
  r.ensure("differentiation");
  auto so = [&](std::size_t x) { return f.obj[x].summands; };
  for (std::size_t x = 0; x < m; ++x) {
    Vec<K> img = f.hom[sc.pair(x, x)].apply(sc.id(x));
    if (img != f.obj[x].idem) r.violate("identity", "F(1_" + sc.objects[x] + ") is not the identity of the image");
  }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t i = 0; i < src.dim(x, y); ++i) {
        Vec<K> a = unit_vec<K>(fs, src.dim(x, y), i);
        Vec<K> fa = f.hom[sc.pair(x, y)].apply(a);
        if (!is_absorbed(dc, f.obj[x], f.obj[y], fa)) r.violate("absorption", "F(" + detail::hom_label(sc, x, y, i) + ")");
        Vec<K> lhs = map_bim(f, src, dst, Sum{x}, Sum{y}, src.d(x, y, a));
        Vec<K> rhs = add_diff(dst, so(x), so(y), fa);
        if (lhs != rhs) r.violate("differentiation", "F(d " + detail::hom_label(sc, x, y, i) + ") != d F(" + sc.basis[sc.pair(x, y)][i] + ")");
      }
      for (std::size_t i = 0; i < src.bdim(x, y); ++i) {
        Vec<K> fu = f.bim[sc.pair(x, y)].apply(unit_vec<K>(fs, src.bdim(x, y), i));
        Vec<K> ab = add_right(dst, so(x), so(x), so(y), add_left(dst, so(x), so(y), so(y), f.obj[y].idem, fu), f.obj[x].idem);
        if (ab != fu) r.violate("absorption", "F(" + src.bim.basis[sc.pair(x, y)][i] + ")");
      }
    }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z) {
        for (std::size_t j = 0; j < src.dim(y, z); ++j) {
          Vec<K> b = unit_vec<K>(fs, src.dim(y, z), j);
          Vec<K> fb = f.hom[sc.pair(y, z)].apply(b);
          for (std::size_t i = 0; i < src.dim(x, y); ++i) {
            Vec<K> a = unit_vec<K>(fs, src.dim(x, y), i);
            Vec<K> lhs = f.hom[sc.pair(x, z)].apply(sc.compose_basis(x, y, z, j, i));
            Vec<K> rhs = add_compose(dc, so(x), so(y), so(z), fb, f.hom[sc.pair(x, y)].apply(a));
            if (lhs != rhs) r.violate("composition", "(" + detail::hom_label(sc, y, z, j) + ", " + detail::hom_label(sc, x, y, i) + ")");
          }
          for (std::size_t i = 0; i < src.bdim(x, y); ++i) {
            Vec<K> u = unit_vec<K>(fs, src.bdim(x, y), i);
            Vec<K> lhs = f.bim[sc.pair(x, z)].apply(src.act_left(x, y, z, b, u));
            Vec<K> rhs = add_left(dst, so(x), so(y), so(z), fb, f.bim[sc.pair(x, y)].apply(u));
            if (lhs != rhs) r.violate("left action", "(" + detail::hom_label(sc, y, z, j) + ", " + src.bim.basis[sc.pair(x, y)][i] + ")");
          }
        }
        // u in B(y,z), a in A(x,y)
        for (std::size_t j = 0; j < src.bdim(y, z); ++j) {
          Vec<K> u = unit_vec<K>(fs, src.bdim(y, z), j);
          Vec<K> fu = f.bim[sc.pair(y, z)].apply(u);
          for (std::size_t i = 0; i < src.dim(x, y); ++i) {
            Vec<K> a = unit_vec<K>(fs, src.dim(x, y), i);
            Vec<K> lhs = f.bim[sc.pair(x, z)].apply(src.act_right(x, y, z, u, a));
            Vec<K> rhs = add_right(dst, so(x), so(y), so(z), fu, f.hom[sc.pair(x, y)].apply(a));
            if (lhs != rhs) r.violate("right action", "(" + src.bim.basis[sc.pair(y, z)][j] + ", " + detail::hom_label(sc, x, y, i) + ")");
          }
        }
      }
  return r;
}

struct EquivalenceOptions {
  SearchOptions search;
  std::size_t max_multiplicity = 4;  // largest source sum tried for density
};

// Equivalence criterion for a bifunctor: (1) every hom map is bijective
// onto the absorbed hom space, (2) every base object of the target is
// isomorphic, through an isomorphism killed by the differentiation, to the
// image of some sum of source objects, (3) every element map is bijective.
// Condition (2) only considers base objects of the target; sums of them
// follow from additivity.
template <class K>
Report is_equivalence(const Bifunctor<K>& f, const Triple<K>& src, const Triple<K>& dst, const EquivalenceOptions& opt = {},
                      const std::vector<std::vector<Vec<K>>>& witnesses = {}) {
  Report r("equivalence");
  Report v = validate_bifunctor(f, src, dst);
  if (!v.passed()) {
    r.merge(v, "bifunctor/");
    r.add("fully faithful", Status::skipped, "bifunctor invalid");
    r.add("dense", Status::skipped, "bifunctor invalid");
    r.add("elements bijective", Status::skipped, "bifunctor invalid");
    return r;
  }
  const FinCat<K>& sc = src.cat;
  const FinCat<K>& dc = dst.cat;
  const std::size_t m = src.n();
  auto pair_name = [&](std::size_t x, std::size_t y) { return "(" + sc.objects[x] + "," + sc.objects[y] + ")"; };
  r.ensure("fully faithful");
  r.ensure("elements bijective");
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const AddObject<K>&fx = f.obj[x], &fy = f.obj[y];
      const std::size_t hd = add_hom_basis(dc, fx, fy).size();
      const std::size_t hr = rank(f.hom[sc.pair(x, y)]);
      if (hr != src.dim(x, y) || hr != hd)
        r.violate("fully faithful", pair_name(x, y) + ": rank " + std::to_string(hr) + ", source dim " + std::to_string(src.dim(x, y)) +
                                        ", target dim " + std::to_string(hd));
      // absorbed element space e_y B e_x
      const std::size_t n = bim_layout(dst, fx.summands, fy.summands).total;
      Mat<K> proj = matrix_of<K>(dst.field(), n, n, [&](const Vec<K>& u) {
        return add_right(dst, fx.summands, fx.summands, fy.summands, add_left(dst, fx.summands, fy.summands, fy.summands, fy.idem, u), fx.idem);
      });
      const std::size_t bd = rank(proj);
      const std::size_t br = rank(f.bim[sc.pair(x, y)]);
      if (br != src.bdim(x, y) || br != bd)
        r.violate("elements bijective", pair_name(x, y) + ": rank " + std::to_string(br) + ", source dim " + std::to_string(src.bdim(x, y)) +
                                            ", target dim " + std::to_string(bd));
    }

  // density
  Check& dense = r.ensure("dense");
  bool inconclusive = false;
  for (std::size_t xp = 0; xp < dst.n(); ++xp) {
    AddObject<K> target = AddObject<K>::plain(dc, Sum{xp});
    const std::size_t end_dim = dst.dim(xp, xp);
    bool found = false, all_exhaustive = true;
    // multisets of source objects, by size
    std::vector<Sum> candidates;
    std::function<void(Sum&, std::size_t, std::size_t)> gen = [&](Sum& cur, std::size_t start, std::size_t left) {
      if (!cur.empty()) candidates.push_back(cur);
      if (left == 0) return;
      for (std::size_t o = start; o < m; ++o) {
        cur.push_back(o);
        gen(cur, o, left - 1);
        cur.pop_back();
      }
    };
    Sum cur;
    gen(cur, 0, opt.max_multiplicity);
    std::stable_sort(candidates.begin(), candidates.end(), [](const Sum& a, const Sum& b) { return a.size() < b.size(); });
    for (const Sum& s : candidates) {
      AddObject<K> img = f.map_sum(dc, s);
      if (add_hom_basis(dc, img, img).size() != add_hom_basis(dc, target, target).size()) continue;
      if (end_dim == 0 && img.is_zero()) {
        found = true;
        break;
      }
      // isomorphisms killed by d: search ker d within the absorbed hom space
      auto hb = add_hom_basis(dc, target, img);
      const std::size_t n = hom_layout(dc, target.summands, img.summands).total;
      std::vector<Vec<K>> sub;
      if (!hb.empty()) {
        Mat<K> dm = matrix_of<K>(dst.field(), hb.size(), bim_layout(dst, target.summands, img.summands).total, [&](const Vec<K>& c) {
          return add_diff(dst, target.summands, img.summands, combine(hb, c, n));
        });
        for (const auto& k : kernel_basis(dm, dst.field())) sub.push_back(combine(hb, k, n));
      }
      std::vector<Vec<K>> wit;
      if (xp < witnesses.size())
        for (const auto& w : witnesses[xp])
          if (w.size() == n) wit.push_back(w);
      auto res = search_subspace<K>(dst.field(), sub, n, wit, opt.search, [&](const Vec<K>& a) { return add_inverse(dc, target, img, a).has_value(); });
      if (res.outcome == SearchOutcome::found) {
        found = true;
        std::string desc;
        for (std::size_t o : s) desc += (desc.empty() ? "" : "+") + sc.objects[o];
        dense.detail += (dense.detail.empty() ? "" : "; ") + dc.objects[xp] + " ~ F(" + desc + ")";
        break;
      }
      if (res.outcome == SearchOutcome::inconclusive) all_exhaustive = false;
    }
    if (!found) {
      if (all_exhaustive) {
        r.violate("dense", dc.objects[xp] + ": no source sum of size <= " + std::to_string(opt.max_multiplicity) + " maps isomorphically onto it");
      } else {
        inconclusive = true;
        dense.detail += (dense.detail.empty() ? "" : "; ") + dc.objects[xp] + ": search not exhaustive";
      }
    }
  }
  if (inconclusive && dense.status == Status::pass) dense.status = Status::inconclusive;
  return r;
}

}  // namespace skewcat
