#pragma once

// Finite groups given by a multiplication table over element ids.

#include "skewcat/core/report.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewcat {

class FiniteGroup {
 public:
  FiniteGroup() = default;

  // mult[s*n+t] = index of st. Unit and inverses are derived; a table for
  // which they do not exist is stored as given, and validate_group reports it.
  FiniteGroup(std::vector<std::string> names, std::vector<std::size_t> mult) : names_(std::move(names)), mult_(std::move(mult)) {
    if (mult_.size() != names_.size() * names_.size()) throw std::invalid_argument("group table has wrong size");
    for (std::size_t v : mult_)
      if (v >= names_.size()) throw std::invalid_argument("group table entry out of range");
    derive();
  }

  static FiniteGroup trivial() { return FiniteGroup({"1"}, {0}); }

  // Z/n1 x ... x Z/nk with elements named by their coordinate tuples.
  static FiniteGroup abelian(const std::vector<std::size_t>& orders, const std::string& prefix = "") {
    std::size_t n = 1;
    for (auto o : orders) n *= o;
    std::vector<std::string> names(n);
    auto digits = [&](std::size_t v) {
      std::vector<std::size_t> d(orders.size());
      for (std::size_t i = orders.size(); i-- > 0;) {
        d[i] = v % orders[i];
        v /= orders[i];
      }
      return d;
    };
    auto index = [&](const std::vector<std::size_t>& d) {
      std::size_t v = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) v = v * orders[i] + d[i];
      return v;
    };
    for (std::size_t v = 0; v < n; ++v) {
      auto d = digits(v);
      std::string s = prefix;
      for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
      names[v] = orders.empty() ? "1" : s;
    }
    std::vector<std::size_t> mult(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto da = digits(a), db = digits(b);
        for (std::size_t i = 0; i < orders.size(); ++i) da[i] = (da[i] + db[i]) % orders[i];
        mult[a * n + b] = index(da);
      }
    return FiniteGroup(names, mult);
  }

  std::size_t order() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t s) const { return names_[s]; }
  std::size_t mul(std::size_t s, std::size_t t) const { return mult_[s * order() + t]; }
  std::size_t unit() const { return unit_.value(); }
  std::size_t inv(std::size_t s) const { return inv_.at(s).value(); }
  bool has_unit() const { return unit_.has_value(); }
  bool has_inverses() const {
    return unit_ && std::all_of(inv_.begin(), inv_.end(), [](const auto& v) { return v.has_value(); });
  }
  const std::vector<std::size_t>& table() const { return mult_; }

  std::optional<std::size_t> index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    return std::nullopt;
  }

  std::size_t element_order(std::size_t s) const {
    std::size_t k = 1, cur = s;
    while (cur != unit() && k <= order()) {
      cur = mul(cur, s);
      ++k;
    }
    return k;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  // Subgroup generated by a set, as a sorted index list.
  std::vector<std::size_t> generated(const std::vector<std::size_t>& gens) const {
    std::vector<bool> in(order(), false);
    std::vector<std::size_t> out{unit()};
    in[unit()] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t g : gens) {
        std::size_t h = mul(out[i], g);
        if (!in[h]) {
          in[h] = true;
          out.push_back(h);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_subgroup(const std::vector<std::size_t>& h) const {
    std::vector<bool> in(order(), false);
    for (auto x : h) in[x] = true;
    if (!in[unit()]) return false;
    for (auto a : h) {
      if (!in[inv(a)]) return false;
      for (auto b : h)
        if (!in[mul(a, b)]) return false;
    }
    return true;
  }

  bool is_cyclic_subgroup(const std::vector<std::size_t>& h) const {
    return std::any_of(h.begin(), h.end(), [&](std::size_t g) { return element_order(g) == h.size(); });
  }

  // Left cosets representatives of a subgroup, smallest index first.
  std::vector<std::size_t> coset_representatives(const std::vector<std::size_t>& h) const {
    std::vector<bool> seen(order(), false);
    std::vector<std::size_t> reps;
    for (std::size_t g = 0; g < order(); ++g) {
      if (seen[g]) continue;
      reps.push_back(g);
      for (auto x : h) seen[mul(g, x)] = true;
    }
    return reps;
  }

  // Right coset representatives: G is the disjoint union of the H r.
  std::vector<std::size_t> right_coset_representatives(const std::vector<std::size_t>& h) const {
    std::vector<bool> seen(order(), false);
    std::vector<std::size_t> reps;
    for (std::size_t g = 0; g < order(); ++g) {
      if (seen[g]) continue;
      reps.push_back(g);
      for (auto x : h) seen[mul(x, g)] = true;
    }
    return reps;
  }

  // Every subgroup, each generated by at most two elements; enough for
  // the small groups handled here (sorted, duplicates removed).
  std::vector<std::vector<std::size_t>> small_subgroups() const {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = a; b < order(); ++b) out.push_back(generated({a, b}));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  void derive() {
    const std::size_t n = order();
    unit_.reset();
    for (std::size_t e = 0; e < n && !unit_; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
      if (ok) unit_ = e;
    }
    inv_.assign(n, std::nullopt);
    if (!unit_) return;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (mul(x, y) == *unit_ && mul(y, x) == *unit_) {
          inv_[x] = y;
          break;
        }
  }

  std::vector<std::string> names_;
  std::vector<std::size_t> mult_;
  std::optional<std::size_t> unit_;
  std::vector<std::optional<std::size_t>> inv_;
};

inline Report validate_group(const FiniteGroup& g) {
  Report r("group");
  const std::size_t n = g.order();
  r.ensure("unit");
  r.ensure("inverses");
  r.ensure("associativity");
  if (n == 0) {
    r.violate("unit", "empty group");
    return r;
  }
  if (!g.has_unit()) {
    r.violate("unit", "no two-sided unit");
    return r;
  }
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) found = g.mul(x, y) == g.unit() && g.mul(y, x) == g.unit();
    if (!found) r.violate("inverses", g.name(x) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          r.violate("associativity", "(" + g.name(a) + "," + g.name(b) + "," + g.name(c) + ")");
  return r;
}

}  // namespace skewcat
