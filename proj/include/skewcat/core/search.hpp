#pragma once

// Bounded search for a vector in a subspace satisfying a nonlinear
// predicate (invertibility, usually). Over F_p the subspace is enumerated
// in full when it has at most `exhaustive_limit` elements and sampled
// otherwise; over Q only the supplied witnesses are tried. Only an
// exhaustive miss is a definite "no".

#include "skewcat/exactla/matrix.hpp"

#include <cmath>
#include <optional>
#include <random>

namespace skewcat {

struct SearchOptions {
  std::uint64_t exhaustive_limit = 1000000;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
};

enum class SearchOutcome { found, none, inconclusive };

template <class K>
struct SearchResult {
  SearchOutcome outcome = SearchOutcome::none;
  Vec<K> value;
  std::uint64_t tried = 0;
  bool exhaustive = false;
};

template <class K>
Vec<K> combine(const std::vector<Vec<K>>& basis, const std::vector<K>& coeffs, std::size_t ambient) {
  Vec<K> v(ambient);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coeffs[i].is_zero()) axpy(v, coeffs[i], basis[i]);
  return v;
}

// Searches span(basis) (vectors of length `ambient`). Witnesses are tried
// first and must already lie in the subspace; the caller is responsible for
// that.
template <class K, class Pred>
SearchResult<K> search_subspace(const FieldSpec& f, const std::vector<Vec<K>>& basis, std::size_t ambient,
                                const std::vector<Vec<K>>& witnesses, const SearchOptions& opt, Pred&& pred) {
  SearchResult<K> res;
  for (const auto& w : witnesses) {
    ++res.tried;
    if (pred(w)) {
      res.outcome = SearchOutcome::found;
      res.value = w;
      return res;
    }
  }
  const std::size_t d = basis.size();
  if (d == 0) {
    ++res.tried;
    res.exhaustive = true;
    Vec<K> z(ambient);
    if (pred(z)) {
      res.outcome = SearchOutcome::found;
      res.value = std::move(z);
    }
    return res;
  }
  if constexpr (is_prime_field_v<K>) {
    const std::uint32_t p = f.p;
    const double log_size = d * std::log(static_cast<double>(p));
    if (log_size <= std::log(static_cast<double>(opt.exhaustive_limit)) + 1e-9) {
      res.exhaustive = true;
      std::vector<std::uint32_t> digits(d, 0);
      std::vector<K> coeffs(d, K(0, p));
      // mixed-radix counter; order is deterministic
      for (;;) {
        for (std::size_t i = 0; i < d; ++i) coeffs[i] = K(digits[i], p);
        Vec<K> v = combine(basis, coeffs, ambient);
        ++res.tried;
        if (pred(v)) {
          res.outcome = SearchOutcome::found;
          res.value = std::move(v);
          return res;
        }
        std::size_t pos = 0;
        while (pos < d && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == d) break;
      }
      res.outcome = SearchOutcome::none;
      return res;
    }
    std::mt19937_64 rng(opt.seed);
    std::vector<K> coeffs(d);
    for (std::uint64_t s = 0; s < opt.samples; ++s) {
      for (std::size_t i = 0; i < d; ++i) coeffs[i] = K(static_cast<std::int64_t>(rng() % p), p);
      Vec<K> v = combine(basis, coeffs, ambient);
      ++res.tried;
      if (pred(v)) {
        res.outcome = SearchOutcome::found;
        res.value = std::move(v);
        return res;
      }
    }
    res.outcome = SearchOutcome::inconclusive;
    return res;
  } else {
    // Over Q each basis vector is still worth a try.
    for (const auto& b : basis) {
      ++res.tried;
      if (pred(b)) {
        res.outcome = SearchOutcome::found;
        res.value = b;
        return res;
      }
    }
    res.outcome = SearchOutcome::inconclusive;
    return res;
  }
}

}  // namespace skewcat
