#pragma once

// The double of a category: the bipartite bimodule over A x A with
// B((X,X'),(Y,Y')) = A(X,Y') and (a,a').x.(b,b') = a' o x o b, d = 0.
// Its category of elements is the category of morphisms of add A.

#include "skewcat/fincat/category.hpp"

namespace skewcat {

template <class K>
Triple<K> double_bimodule(const FinCat<K>& c) {
  Triple<K> t;
  t.cat = product_category(c, c);
  const std::size_t n = c.n(), m = t.cat.n();
  auto first = [n](std::size_t p) { return p / n; };
  auto second = [n](std::size_t p) { return p % n; };
  t.bim.basis.assign(m * m, {});
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) t.bim.basis[t.cat.pair(p, q)] = c.basis[c.pair(first(p), second(q))];
  t.allocate_bimodule();
  // (a,a'): q -> r acts on x in B(p,q) = A(p1,q2) through a' only.
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t r = 0; r < m; ++r) {
        auto& lt = t.left_tensor(p, q, r);
        const std::size_t skip = c.dim(first(q), first(r)), d2 = c.dim(second(q), second(r));
        const std::size_t dx = t.bdim(p, q), dr = t.bdim(p, r);
        for (std::size_t j = 0; j < d2; ++j)
          for (std::size_t i = 0; i < dx; ++i) {
            Vec<K> v = c.compose_basis(first(p), second(q), second(r), j, i);
            for (std::size_t k = 0; k < dr; ++k) lt[((skip + j) * dx + i) * dr + k] = v[k];
          }
      }
  // x in B(q,r) = A(q1,r2) times (b,b'): p -> q through b only.
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t r = 0; r < m; ++r) {
        auto& rt = t.right_tensor(p, q, r);
        const std::size_t dx = t.bdim(q, r), da = t.dim(p, q), d1 = c.dim(first(p), first(q)), dr = t.bdim(p, r);
        for (std::size_t j = 0; j < dx; ++j)
          for (std::size_t i = 0; i < d1; ++i) {
            Vec<K> v = c.compose_basis(first(p), first(q), second(r), j, i);
            for (std::size_t k = 0; k < dr; ++k) rt[(j * da + i) * dr + k] = v[k];
          }
      }
  return t;
}

}  // namespace skewcat
