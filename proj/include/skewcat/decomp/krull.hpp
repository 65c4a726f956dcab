#pragma once

// Endomorphism algebras of Karoubi objects, Krull-Schmidt decomposition,
// the radical of a finite category, and almost split morphisms and
// sequences tested over a declared set of base objects.

#include "skewcat/decomp/algebra.hpp"
#include "skewcat/fincat/additive.hpp"

namespace skewcat {

// End(X) with product a.b = a o b. A nonzero seed replaces the canonical
// echelon basis by a scrambled one (permuted, unitriangular mixing).
template <class K>
EmbeddedAlgebra<K> endomorphism_algebra(const FinCat<K>& c, const AddObject<K>& x, std::uint64_t scramble = 0) {
  const Sum& s = x.summands;
  const std::size_t amb = hom_layout(c, s, s).total;
  std::vector<Vec<K>> b = add_hom_basis(c, x, x);
  if (scramble && b.size() > 1) {
    std::mt19937_64 rng(scramble);
    std::shuffle(b.begin(), b.end(), rng);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) axpy(b[i], decomp_detail::sample_scalar<K>(c.field, rng), b[j]);
  }
  return embed_algebra<K>(c.field, amb, std::move(b), [&](const Vec<K>& f, const Vec<K>& g) { return add_compose(c, s, s, s, f, g); },
                          x.idem);
}

struct CrossCheck {
  std::string name;
  Status status = Status::skipped;
  std::string detail;
  std::optional<std::size_t> predicted;
};

template <class K>
struct Summand {
  Vec<K> idempotent;  // endomorphism of the underlying sum
  std::size_t cls = 0;
  std::size_t rank = 0;  // dim eA
  bool primitive_proven = true;
};

template <class K>
struct DecompositionReport {
  std::size_t dim = 0, rad_dim = 0;
  std::vector<Summand<K>> summands;
  std::vector<std::size_t> multiplicities;  // per class
  std::size_t nu = 0;
  std::optional<std::size_t> nu_center;
  std::vector<CrossCheck> cross_checks;
  Report report{"decomposition"};
};

struct DecompositionOptions {
  SplitOptions split;
  SearchOptions search;
  bool uniqueness = true;
  bool iso_witnesses = true;
};

namespace decomp_detail {

template <class K>
bool same_block(const Algebra<K>& q, const Vec<K>& ei, const Vec<K>& ej) {
  for (std::size_t k = 0; k < q.dim; ++k)
    if (!is_zero_vec(q.mul(ej, q.mul(q.basis_vec(k), ei)))) return true;
  return false;
}

template <class K>
struct RawDecomposition {
  EmbeddedAlgebra<K> end;
  std::vector<Vec<K>> rad;
  Quotient<K> quot;
  PrimitiveIdempotents<K> prim;
  std::vector<Vec<K>> lifted;  // algebra coordinates
  std::vector<std::size_t> cls;
  std::size_t classes = 0;
};

template <class K>
RawDecomposition<K> decompose_raw(const FinCat<K>& c, const AddObject<K>& x, std::uint64_t scramble, const SplitOptions& so) {
  RawDecomposition<K> d{endomorphism_algebra(c, x, scramble), {}, {}, {}, {}, {}, 0};
  const Algebra<K>& a = d.end.alg;
  d.rad = radical(a);
  d.quot = quotient(a, d.rad);
  d.prim = primitive_idempotents(d.quot.alg, so);
  d.lifted = lift_idempotents(a, d.quot, d.prim.idems);
  d.cls.assign(d.prim.idems.size(), 0);
  std::vector<bool> done(d.prim.idems.size(), false);
  for (std::size_t i = 0; i < d.prim.idems.size(); ++i) {
    if (done[i]) continue;
    for (std::size_t j = i; j < d.prim.idems.size(); ++j)
      if (!done[j] && (j == i || same_block(d.quot.alg, d.prim.idems[i], d.prim.idems[j]))) {
        d.cls[j] = d.classes;
        done[j] = true;
      }
    ++d.classes;
  }
  return d;
}

}  // namespace decomp_detail

// Splits X along lifted primitive idempotents of End(X). Two summands are
// isomorphic iff their images in End(X)/rad satisfy e_j Q e_i != 0.
template <class K>
DecompositionReport<K> krull_schmidt(const FinCat<K>& c, const AddObject<K>& x, const DecompositionOptions& opt = {}) {
  using namespace decomp_detail;
  DecompositionReport<K> rep;
  Report& r = rep.report;
  if (x.is_zero()) {
    r.add("zero object", Status::pass, "no summands");
    return rep;
  }
  RawDecomposition<K> d = decompose_raw(c, x, 0, opt.split);
  const Algebra<K>& a = d.end.alg;
  rep.dim = a.dim;
  rep.rad_dim = d.rad.size();
  r.merge(verify_radical(a, d.rad), "radical/");
  r.merge(check_idempotent_family(a, d.lifted), "lifted/");
  r.ensure("lifted/congruent to seeds");
  for (std::size_t i = 0; i < d.lifted.size(); ++i)
    if (d.quot.project(d.lifted[i]) != d.prim.idems[i]) r.violate("lifted/congruent to seeds", "e" + std::to_string(i));
  r.ensure("primitive");
  std::size_t total = 0;
  for (std::size_t i = 0; i < d.lifted.size(); ++i) {
    Summand<K> s;
    s.idempotent = d.end.lift(d.lifted[i]);
    s.cls = d.cls[i];
    s.rank = rank(a.left_matrix(d.lifted[i]));
    s.primitive_proven = d.prim.proven[i];
    if (!s.primitive_proven) {
      Check& ch = r.ensure("primitive");
      ch.status = Status::inconclusive;
      ch.detail = "corner of summand " + std::to_string(i) + " not shown to be a division algebra";
    }
    total += s.rank;
    rep.summands.push_back(std::move(s));
  }
  r.ensure("ranks add up");
  if (total != a.dim) r.violate("ranks add up", std::to_string(total) + " vs " + std::to_string(a.dim));
  rep.multiplicities.assign(d.classes, 0);
  for (auto k : d.cls) ++rep.multiplicities[k];
  rep.nu = d.classes;

  // number of simple components of the centre of End/rad
  if constexpr (is_prime_field_v<K>) {
    auto z = center_of_algebra(d.quot.alg);
    EmbeddedAlgebra<K> za = subalgebra(d.quot.alg, z, d.quot.alg.unit);
    rep.nu_center = count_simple_components(za.alg);
    r.ensure("nu equals centre components");
    if (*rep.nu_center != rep.nu) r.violate("nu equals centre components", std::to_string(rep.nu) + " vs " + std::to_string(*rep.nu_center));
    if (za.alg.dim <= 6) {
      auto n = count_idempotents_exhaustive(za.alg);
      if (n) {
        r.ensure("centre idempotent count");
        if (*n != (std::uint64_t(1) << *rep.nu_center))
          r.violate("centre idempotent count", std::to_string(*n) + " idempotents for " + std::to_string(*rep.nu_center) + " components");
      }
    }
  } else {
    r.add("nu equals centre components", Status::skipped, "component count needs a prime field");
  }

  if (opt.iso_witnesses) {
    r.ensure("isomorphism witnesses");
    for (std::size_t i = 0; i < rep.summands.size(); ++i)
      for (std::size_t j = i + 1; j < rep.summands.size(); ++j) {
        if (rep.summands[i].cls != rep.summands[j].cls) continue;
        AddObject<K> xi{x.summands, rep.summands[i].idempotent}, xj{x.summands, rep.summands[j].idempotent};
        // e_j a e_i for a the lift of any element with nonzero image is a candidate
        auto res = find_add_iso(c, xi, xj, opt.search);
        if (res.outcome == SearchOutcome::none) r.violate("isomorphism witnesses", "summands " + std::to_string(i) + ", " + std::to_string(j));
        else if (res.outcome == SearchOutcome::inconclusive) {
          Check& ch = r.ensure("isomorphism witnesses");
          if (ch.status == Status::pass) ch.status = Status::inconclusive;
          ch.detail = "search budget exhausted";
        }
      }
  }

  if (opt.uniqueness) {
    r.ensure("unique up to isomorphism");
    RawDecomposition<K> d2 = decompose_raw(c, x, opt.split.seed + 0x51u, SplitOptions{opt.split.seed + 7, opt.split.samples});
    // idempotents of the second run in coordinates of the first
    std::vector<Vec<K>> img;
    for (const auto& e : d2.lifted) img.push_back(d.quot.project(d.end.coords(d2.end.lift(e))));
    std::vector<std::size_t> count1(d.classes, 0), count2(d.classes, 0);
    for (auto k : d.cls) ++count1[k];
    for (const auto& e : img) {
      std::size_t hit = d.classes;
      for (std::size_t i = 0; i < d.prim.idems.size() && hit == d.classes; ++i)
        if (same_block(d.quot.alg, d.prim.idems[i], e)) hit = d.cls[i];
      if (hit == d.classes) r.violate("unique up to isomorphism", "second run has a summand matching no class");
      else ++count2[hit];
    }
    if (count1 != count2) r.violate("unique up to isomorphism", "multiplicities differ between runs");
  }
  return rep;
}

// ---- radical of a category ---------------------------------------------

template <class K>
struct CategoryRadical {
  std::size_t n = 0;
  std::vector<Subspace<K>> rad;  // [x*n+y] inside A(x,y)
  Report report{"category radical"};

  const Subspace<K>& at(std::size_t x, std::size_t y) const { return rad[x * n + y]; }
};

namespace decomp_detail {

// Block (i,j) of every element of J, J an ideal of End(S).
template <class K>
Subspace<K> radical_block(const FinCat<K>& c, const Sum& s, const std::vector<Vec<K>>& j, std::size_t i, std::size_t jj) {
  Layout l = hom_layout(c, s, s);
  std::vector<Vec<K>> v;
  for (const auto& w : j) v.push_back(get_block(l, w, i, jj));
  return Subspace<K>(l.len(i, jj), v);
}

template <class K>
std::vector<Vec<K>> end_radical_ambient(const FinCat<K>& c, const Sum& s) {
  EmbeddedAlgebra<K> e = endomorphism_algebra(c, AddObject<K>::plain(c, s));
  std::vector<Vec<K>> out;
  for (const auto& v : radical(e.alg)) out.push_back(e.lift(v));
  return out;
}

}  // namespace decomp_detail

// rad(x,y) as the block of rad End(x + y); cross-checked against rad End(x)
// and the radical of End of the sum of all objects.
template <class K>
CategoryRadical<K> radical_category(const FinCat<K>& c) {
  using namespace decomp_detail;
  CategoryRadical<K> cr;
  const std::size_t n = c.n();
  cr.n = n;
  cr.rad.resize(n * n);
  std::vector<std::vector<Vec<K>>> single(n);
  for (std::size_t x = 0; x < n; ++x) {
    single[x] = end_radical_ambient(c, Sum{x});
    cr.rad[x * n + x] = Subspace<K>(c.dim(x, x), single[x]);
  }
  Report& r = cr.report;
  r.ensure("pairwise consistent");
  r.ensure("consistent with the sum of all objects");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      Sum s{x, y};
      auto j = end_radical_ambient(c, s);
      cr.rad[x * n + y] = radical_block(c, s, j, 1, 0);
      if (!(radical_block(c, s, j, 0, 0) == cr.at(x, x)) || !(radical_block(c, s, j, 1, 1) == cr.at(y, y)))
        r.violate("pairwise consistent", c.objects[x] + "," + c.objects[y]);
    }
  if (n > 0) {
    Sum all(n);
    std::iota(all.begin(), all.end(), 0);
    auto j = end_radical_ambient(c, all);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (!(radical_block(c, all, j, y, x) == cr.at(x, y))) r.violate("consistent with the sum of all objects", c.objects[x] + "->" + c.objects[y]);
  }
  return cr;
}

// rad(S,T) on sums, blockwise.
template <class K>
Subspace<K> radical_on_sums(const FinCat<K>& c, const CategoryRadical<K>& cr, const Sum& s, const Sum& t) {
  Layout l = hom_layout(c, s, t);
  std::vector<Vec<K>> v;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      for (const auto& b : cr.at(s[j], t[i]).basis()) {
        Vec<K> w(l.total);
        set_block(l, w, i, j, b);
        v.push_back(std::move(w));
      }
  return Subspace<K>(l.total, v);
}

// ---- almost split morphisms --------------------------------------------

namespace decomp_detail {

template <class K>
std::vector<Vec<K>> hom_basis(const FinCat<K>& c, const Sum& s, const Sum& t) {
  const std::size_t n = hom_layout(c, s, t).total;
  std::vector<Vec<K>> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vec<K>(c.field, n, i));
  return b;
}

// Image of Hom(P,Q) under an arbitrary linear map into a space of dimension m.
template <class K, class F>
Subspace<K> image_of(const FinCat<K>& c, const Sum& p, const Sum& q, std::size_t m, F&& map) {
  std::vector<Vec<K>> v;
  for (const auto& b : hom_basis(c, p, q)) v.push_back(map(b));
  return Subspace<K>(m, v);
}

template <class K, class F>
Mat<K> matrix_on_homs(const FinCat<K>& c, const Sum& p, const Sum& q, std::size_t m, F&& map) {
  return matrix_of<K>(c.field, hom_layout(c, p, q).total, m, map);
}

inline std::string sum_name(const std::vector<std::string>& objs, const Sum& s) {
  std::string r;
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "+" : "") + objs[s[i]];
  return s.empty() ? "0" : r;
}

}  // namespace decomp_detail

// b: Y -> X right almost split over the declared objects: b in rad, b not
// a split epimorphism, and b o A(Z,Y) = rad(Z,X) for every declared Z.
template <class K>
Report is_right_almost_split(const FinCat<K>& c, const CategoryRadical<K>& cr, const Sum& y, const Sum& x, const Vec<K>& b,
                             const std::vector<std::size_t>& declared) {
  using namespace decomp_detail;
  Report r("right almost split");
  r.add("declared objects", Status::pass, sum_name(c.objects, declared));
  r.ensure("in radical");
  if (!radical_on_sums(c, cr, y, x).contains(b)) r.violate("in radical", "map is not radical");
  r.ensure("not split epi");
  {
    const std::size_t n = hom_layout(c, x, y).total;
    Mat<K> m = matrix_of<K>(c.field, n, hom_layout(c, x, x).total, [&](const Vec<K>& s) { return add_compose(c, x, y, x, b, s); });
    if (solve_vec(m, add_identity(c, x))) r.violate("not split epi", "a section exists");
  }
  r.ensure("generates radical");
  for (std::size_t z : declared) {
    Sum zs{z};
    const std::size_t m = hom_layout(c, zs, x).total;
    Subspace<K> img = image_of(c, zs, y, m, [&](const Vec<K>& f) { return add_compose(c, zs, y, x, b, f); });
    if (!(img == radical_on_sums(c, cr, zs, x)))
      r.violate("generates radical", "at " + c.objects[z] + ": image dim " + std::to_string(img.dim()) + " vs radical dim " +
                                         std::to_string(radical_on_sums(c, cr, zs, x).dim()));
  }
  return r;
}

// a: X -> Y left almost split: a in rad, not a split monomorphism, and
// A(Y,Z) o a = rad(X,Z) for every declared Z.
template <class K>
Report is_left_almost_split(const FinCat<K>& c, const CategoryRadical<K>& cr, const Sum& x, const Sum& y, const Vec<K>& a,
                            const std::vector<std::size_t>& declared) {
  using namespace decomp_detail;
  Report r("left almost split");
  r.add("declared objects", Status::pass, sum_name(c.objects, declared));
  r.ensure("in radical");
  if (!radical_on_sums(c, cr, x, y).contains(a)) r.violate("in radical", "map is not radical");
  r.ensure("not split mono");
  {
    const std::size_t n = hom_layout(c, y, x).total;
    Mat<K> m = matrix_of<K>(c.field, n, hom_layout(c, x, x).total, [&](const Vec<K>& s) { return add_compose(c, x, y, x, s, a); });
    if (solve_vec(m, add_identity(c, x))) r.violate("not split mono", "a retraction exists");
  }
  r.ensure("generates radical");
  for (std::size_t z : declared) {
    Sum zs{z};
    const std::size_t m = hom_layout(c, x, zs).total;
    Subspace<K> img = image_of(c, y, zs, m, [&](const Vec<K>& f) { return add_compose(c, x, y, zs, f, a); });
    if (!(img == radical_on_sums(c, cr, x, zs)))
      r.violate("generates radical", "at " + c.objects[z] + ": image dim " + std::to_string(img.dim()) + " vs radical dim " +
                                         std::to_string(radical_on_sums(c, cr, x, zs).dim()));
  }
  return r;
}

// X -a-> Y -b-> X' almost split: a left and b right almost split, and
//   0 -> A(Z,X) -> A(Z,Y) -> A(Z,X')  and  0 -> A(X',Z) -> A(Y,Z) -> A(X,Z)
// exact for every declared Z.
template <class K>
Report is_almost_split_sequence(const FinCat<K>& c, const CategoryRadical<K>& cr, const Sum& x, const Sum& y, const Sum& x2, const Vec<K>& a,
                                const Vec<K>& b, const std::vector<std::size_t>& declared) {
  using namespace decomp_detail;
  Report r("almost split sequence");
  if (a.size() != hom_layout(c, x, y).total || b.size() != hom_layout(c, y, x2).total) {
    r.add("fragment", Status::inconclusive, "morphism coordinates do not match the declared objects");
    return r;
  }
  r.merge(is_left_almost_split(c, cr, x, y, a, declared), "left/");
  r.merge(is_right_almost_split(c, cr, y, x2, b, declared), "right/");
  r.ensure("composite zero");
  if (!is_zero_vec(add_compose(c, x, y, x2, b, a))) r.violate("composite zero", "b o a != 0");
  r.ensure("covariant exactness");
  r.ensure("contravariant exactness");
  for (std::size_t z : declared) {
    Sum zs{z};
    const std::string at = "at " + c.objects[z];
    {
      Mat<K> ma = matrix_on_homs(c, zs, x, hom_layout(c, zs, y).total, [&](const Vec<K>& f) { return add_compose(c, zs, x, y, a, f); });
      Mat<K> mb = matrix_on_homs(c, zs, y, hom_layout(c, zs, x2).total, [&](const Vec<K>& f) { return add_compose(c, zs, y, x2, b, f); });
      if (rank(ma) != ma.cols()) r.violate("covariant exactness", at + ": a o - not injective");
      Subspace<K> ker(ma.rows(), kernel_basis(mb, c.field)), im(ma.rows(), [&] {
        std::vector<Vec<K>> cols;
        for (std::size_t j = 0; j < ma.cols(); ++j) cols.push_back(ma.column(j));
        return cols;
      }());
      if (!(ker == im)) r.violate("covariant exactness", at + ": ker(b o -) != im(a o -)");
    }
    {
      Mat<K> mb = matrix_on_homs(c, x2, zs, hom_layout(c, y, zs).total, [&](const Vec<K>& f) { return add_compose(c, y, x2, zs, f, b); });
      Mat<K> ma = matrix_on_homs(c, y, zs, hom_layout(c, x, zs).total, [&](const Vec<K>& f) { return add_compose(c, x, y, zs, f, a); });
      if (rank(mb) != mb.cols()) r.violate("contravariant exactness", at + ": - o b not injective");
      Subspace<K> ker(mb.rows(), kernel_basis(ma, c.field)), im(mb.rows(), [&] {
        std::vector<Vec<K>> cols;
        for (std::size_t j = 0; j < mb.cols(); ++j) cols.push_back(mb.column(j));
        return cols;
      }());
      if (!(ker == im)) r.violate("contravariant exactness", at + ": ker(- o a) != im(- o b)");
    }
  }
  return r;
}

// Do the maps a_i: X -> Y_i generate rad(X, -) over the declared objects?
template <class K>
Report generates_radical_from(const FinCat<K>& c, const CategoryRadical<K>& cr, std::size_t x, const std::vector<std::size_t>& targets,
                              const std::vector<Vec<K>>& maps, const std::vector<std::size_t>& declared) {
  Report r("radical generators");
  r.ensure("in radical");
  r.ensure("generate");
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (!cr.at(x, targets[i]).contains(maps[i])) r.violate("in radical", "generator " + std::to_string(i));
  for (std::size_t z : declared) {
    std::vector<Vec<K>> img;
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t k = 0; k < c.dim(targets[i], z); ++k)
        img.push_back(c.compose(x, targets[i], z, unit_vec<K>(c.field, c.dim(targets[i], z), k), maps[i]));
    Subspace<K> s(c.dim(x, z), img);
    if (!(s == cr.at(x, z)))
      r.violate("generate", "at " + c.objects[z] + ": span dim " + std::to_string(s.dim()) + " vs radical dim " + std::to_string(cr.at(x, z).dim()));
  }
  return r;
}

}  // namespace skewcat
