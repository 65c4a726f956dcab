#pragma once

// JSON instance files: field, category, bimodule, differentiation, group,
// action, factors and requests. Basis elements are referred to by id; a
// linear combination is an object {"id": "scalar", ...}. Anything not
// listed is zero. Scalars are strings ("2", "-1", "2/3").

#include "json.hpp"
#include "skewcat/elements/elements.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace skewcat {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

class schema_error : public std::runtime_error {
 public:
  schema_error(const std::string& where, const std::string& what) : std::runtime_error(where + ": " + what) {}
};

inline FieldSpec parse_field(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw schema_error("field", "expected an object with \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return FieldSpec::rational();
  if (kind != "prime") throw schema_error("field.kind", "expected \"prime\" or \"rational\", got \"" + kind + "\"");
  if (!j.contains("p") || !j.at("p").is_number_unsigned()) throw schema_error("field.p", "expected a positive integer");
  try {
    return FieldSpec::prime(j.at("p").get<std::uint64_t>());
  } catch (const field_error& e) {
    throw schema_error("field.p", e.what());
  }
}

inline json field_json(const FieldSpec& f) {
  if (f.is_prime()) return json{{"kind", "prime"}, {"p", f.p}};
  return json{{"kind", "rational"}};
}

template <class K>
struct Instance {
  std::string name;
  FieldSpec field;
  Triple<K> triple;
  bool has_group = false;
  FiniteGroup group;
  GroupAction<K> action;
  FactorSystem<K> factors;
  json requests = json::object();
};

namespace io_detail {

inline const json& need(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw schema_error(where, "missing \"" + key + "\"");
  return j.at(key);
}

inline std::string need_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw schema_error(where, "expected a string");
  return j.get<std::string>();
}

template <class K>
K parse_scalar(const FieldSpec& f, const json& j, const std::string& where) {
  std::string s;
  if (j.is_string()) {
    s = j.get<std::string>();
  } else if (j.is_number_integer()) {
    s = std::to_string(j.get<std::int64_t>());
  } else {
    throw schema_error(where, "expected a scalar string");
  }
  try {
    return scalar_traits<K>::parse(f, s);
  } catch (const field_error& e) {
    throw schema_error(where, e.what());
  }
}

// Where every basis id lives: (src, dst, index).
struct BasisIndex {
  struct Entry {
    std::size_t src, dst, index;
  };
  std::map<std::string, Entry> ids;

  template <class Names>
  static BasisIndex build(std::size_t n, const Names& basis, const std::string& kind) {
    BasisIndex b;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t i = 0; i < basis[x * n + y].size(); ++i) {
          const std::string& id = basis[x * n + y][i];
          if (!b.ids.emplace(id, Entry{x, y, i}).second) throw schema_error(kind, "duplicate basis id \"" + id + "\"");
        }
    return b;
  }
  const Entry& at(const std::string& id, const std::string& where) const {
    auto it = ids.find(id);
    if (it == ids.end()) throw schema_error(where, "unknown basis id \"" + id + "\"");
    return it->second;
  }
};

// Combination over the basis of one pair (src,dst); every id must live there.
template <class K>
Vec<K> parse_combo(const FieldSpec& f, const json& j, const BasisIndex& idx, std::size_t src, std::size_t dst, std::size_t dim,
                   const std::string& where) {
  if (!j.is_object()) throw schema_error(where, "expected a linear combination object");
  Vec<K> v(dim, from_int<K>(f, 0));
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& e = idx.at(it.key(), where);
    if (e.src != src || e.dst != dst) throw schema_error(where, "basis id \"" + it.key() + "\" lives in a different hom space");
    v[e.index] += parse_scalar<K>(f, it.value(), where + "." + it.key());
  }
  return v;
}

inline std::size_t object_index(const std::vector<std::string>& objects, const json& j, const std::string& where) {
  const std::string s = need_string(j, where);
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == s) return i;
  throw schema_error(where, "unknown object \"" + s + "\"");
}

template <class K>
void parse_category(const FieldSpec& f, const json& j, FinCat<K>& c, std::vector<std::optional<std::string>>& id_basis) {
  const std::string where = "category";
  const json& objs = need(j, "objects", where);
  if (!objs.is_array()) throw schema_error(where + ".objects", "expected an array");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    names.push_back(need_string(objs[i], where + ".objects[" + std::to_string(i) + "]"));
    for (std::size_t k = 0; k + 1 < names.size(); ++k)
      if (names[k] == names.back()) throw schema_error(where + ".objects", "duplicate object \"" + names.back() + "\"");
  }
  c = FinCat<K>(f, names);
  const std::size_t n = c.n();
  if (j.contains("morphisms")) {
    const json& ms = j.at("morphisms");
    if (!ms.is_array()) throw schema_error(where + ".morphisms", "expected an array");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const std::string w = where + ".morphisms[" + std::to_string(i) + "]";
      std::size_t s = object_index(names, need(ms[i], "src", w), w + ".src");
      std::size_t d = object_index(names, need(ms[i], "dst", w), w + ".dst");
      c.basis[c.pair(s, d)].push_back(need_string(need(ms[i], "id", w), w + ".id"));
    }
  }
  BasisIndex idx = BasisIndex::build(n, c.basis, where + ".morphisms");
  c.allocate();
  id_basis.assign(n, std::nullopt);
  const json& ids = need(j, "identities", where);
  if (!ids.is_object()) throw schema_error(where + ".identities", "expected an object");
  for (std::size_t x = 0; x < n; ++x) {
    const std::string w = where + ".identities." + names[x];
    if (!ids.contains(names[x])) throw schema_error(w, "missing identity");
    const json& v = ids.at(names[x]);
    if (v.is_string()) {
      const auto& e = idx.at(v.get<std::string>(), w);
      if (e.src != x || e.dst != x) throw schema_error(w, "identity must be an endomorphism");
      c.ids[x] = unit_vec<K>(f, c.dim(x, x), e.index);
      id_basis[x] = v.get<std::string>();
    } else {
      c.ids[x] = parse_combo<K>(f, v, idx, x, x, c.dim(x, x), w);
    }
  }
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>, bool> explicit_entries;
  if (j.contains("compose")) {
    const json& cs = j.at("compose");
    if (!cs.is_array()) throw schema_error(where + ".compose", "expected an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string w = where + ".compose[" + std::to_string(i) + "]";
      const auto& ef = idx.at(need_string(need(cs[i], "f", w), w + ".f"), w + ".f");
      const auto& eg = idx.at(need_string(need(cs[i], "g", w), w + ".g"), w + ".g");
      if (eg.dst != ef.src) throw schema_error(w, "f and g are not composable");
      Vec<K> v = parse_combo<K>(f, need(cs[i], "=", w), idx, eg.src, ef.dst, c.dim(eg.src, ef.dst), w + ".=");
      auto key = std::make_tuple(eg.src, eg.dst, ef.dst, ef.index, eg.index);
      if (explicit_entries.count(key)) throw schema_error(w, "duplicate composition entry");
      explicit_entries[key] = true;
      c.set_compose_basis(eg.src, eg.dst, ef.dst, ef.index, eg.index, v);
    }
  }
  // identities given by basis id compose trivially unless stated otherwise
  for (std::size_t x = 0; x < n; ++x) {
    if (!id_basis[x]) continue;
    const std::size_t e = idx.at(*id_basis[x], where).index;
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < c.dim(y, x); ++i)  // 1_x o a, a: y -> x
        if (!explicit_entries.count({y, x, x, e, i})) c.set_compose_basis(y, x, x, e, i, unit_vec<K>(f, c.dim(y, x), i));
      for (std::size_t i = 0; i < c.dim(x, y); ++i)  // a o 1_x, a: x -> y
        if (!explicit_entries.count({x, x, y, i, e})) c.set_compose_basis(x, x, y, i, e, unit_vec<K>(f, c.dim(x, y), i));
    }
  }
}

template <class K>
void parse_bimodule(const FieldSpec& f, const json& j, Triple<K>& t, const std::vector<std::optional<std::string>>& id_basis) {
  const std::string where = "bimodule";
  const FinCat<K>& c = t.cat;
  const std::size_t n = c.n();
  if (j.is_string()) {
    if (j.get<std::string>() != "regular") throw schema_error(where, "expected \"regular\" or an object");
    Triple<K> p = principal_triple(c);
    t.bim = p.bim;
    t.diff = p.diff;
    return;
  }
  t.bim.basis.assign(n * n, {});
  if (j.contains("elements")) {
    const json& es = j.at("elements");
    if (!es.is_array()) throw schema_error(where + ".elements", "expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string w = where + ".elements[" + std::to_string(i) + "]";
      std::size_t s = object_index(c.objects, need(es[i], "src", w), w + ".src");
      std::size_t d = object_index(c.objects, need(es[i], "dst", w), w + ".dst");
      t.bim.basis[c.pair(s, d)].push_back(need_string(need(es[i], "id", w), w + ".id"));
    }
  }
  BasisIndex hidx = BasisIndex::build(n, c.basis, "category.morphisms");
  BasisIndex bidx = BasisIndex::build(n, t.bim.basis, where + ".elements");
  t.allocate_bimodule();
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>, bool> given_l, given_r;
  if (j.contains("left")) {
    const json& ls = j.at("left");
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const std::string w = where + ".left[" + std::to_string(i) + "]";
      const auto& ea = hidx.at(need_string(need(ls[i], "a", w), w + ".a"), w + ".a");
      const auto& ex = bidx.at(need_string(need(ls[i], "x", w), w + ".x"), w + ".x");
      if (ex.dst != ea.src) throw schema_error(w, "a and x are not composable");
      Vec<K> v = parse_combo<K>(f, need(ls[i], "=", w), bidx, ex.src, ea.dst, t.bdim(ex.src, ea.dst), w + ".=");
      auto& lt = t.left_tensor(ex.src, ex.dst, ea.dst);
      const std::size_t dx = t.bdim(ex.src, ex.dst), dr = t.bdim(ex.src, ea.dst);
      std::copy(v.begin(), v.end(), lt.begin() + (ea.index * dx + ex.index) * dr);
      given_l[{ex.src, ex.dst, ea.dst, ea.index, ex.index}] = true;
    }
  }
  if (j.contains("right")) {
    const json& rs = j.at("right");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string w = where + ".right[" + std::to_string(i) + "]";
      const auto& ex = bidx.at(need_string(need(rs[i], "x", w), w + ".x"), w + ".x");
      const auto& ea = hidx.at(need_string(need(rs[i], "a", w), w + ".a"), w + ".a");
      if (ea.dst != ex.src) throw schema_error(w, "x and a are not composable");
      Vec<K> v = parse_combo<K>(f, need(rs[i], "=", w), bidx, ea.src, ex.dst, t.bdim(ea.src, ex.dst), w + ".=");
      auto& rt = t.right_tensor(ea.src, ex.src, ex.dst);
      const std::size_t da = t.dim(ea.src, ex.src), dr = t.bdim(ea.src, ex.dst);
      std::copy(v.begin(), v.end(), rt.begin() + (ex.index * da + ea.index) * dr);
      given_r[{ea.src, ex.src, ex.dst, ex.index, ea.index}] = true;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!id_basis[x]) continue;
    const std::size_t e = hidx.at(*id_basis[x], where).index;
    for (std::size_t y = 0; y < n; ++y) {
      // 1_x . u for u in B(y,x)
      const std::size_t dyx = t.bdim(y, x);
      for (std::size_t i = 0; i < dyx; ++i)
        if (!given_l.count({y, x, x, e, i})) {
          auto& lt = t.left_tensor(y, x, x);
          Vec<K> v = unit_vec<K>(f, dyx, i);
          std::copy(v.begin(), v.end(), lt.begin() + (e * dyx + i) * dyx);
        }
      // u . 1_x for u in B(x,y)
      const std::size_t dxy = t.bdim(x, y), dxx = t.dim(x, x);
      for (std::size_t i = 0; i < dxy; ++i)
        if (!given_r.count({x, x, y, i, e})) {
          auto& rt = t.right_tensor(x, x, y);
          Vec<K> v = unit_vec<K>(f, dxy, i);
          std::copy(v.begin(), v.end(), rt.begin() + (i * dxx + e) * dxy);
        }
    }
  }
}

template <class K>
void parse_differentiation(const FieldSpec& f, const json& j, Triple<K>& t) {
  const std::string where = "differentiation";
  if (!j.is_array()) throw schema_error(where, "expected an array");
  const std::size_t n = t.n();
  BasisIndex hidx = BasisIndex::build(n, t.cat.basis, "category.morphisms");
  BasisIndex bidx = BasisIndex::build(n, t.bim.basis, "bimodule.elements");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    const auto& ea = hidx.at(need_string(need(j[i], "a", w), w + ".a"), w + ".a");
    Vec<K> v = parse_combo<K>(f, need(j[i], "=", w), bidx, ea.src, ea.dst, t.bdim(ea.src, ea.dst), w + ".=");
    Mat<K>& d = t.diff[t.cat.pair(ea.src, ea.dst)];
    for (std::size_t r = 0; r < v.size(); ++r) d(r, ea.index) = v[r];
  }
}

inline FiniteGroup parse_group(const json& j) {
  const std::string where = "group";
  if (j.contains("abelian")) {
    std::vector<std::size_t> orders;
    for (const auto& o : j.at("abelian")) {
      if (!o.is_number_unsigned() || o.get<std::size_t>() == 0) throw schema_error(where + ".abelian", "expected positive integers");
      orders.push_back(o.get<std::size_t>());
    }
    FiniteGroup g = FiniteGroup::abelian(orders);
    if (j.contains("names")) {
      std::vector<std::string> names;
      for (const auto& s : j.at("names")) names.push_back(need_string(s, where + ".names"));
      if (names.size() != g.order()) throw schema_error(where + ".names", "expected " + std::to_string(g.order()) + " names");
      g = FiniteGroup(names, g.table());
    }
    return g;
  }
  const json& es = need(j, "elements", where);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < es.size(); ++i) names.push_back(need_string(es[i], where + ".elements[" + std::to_string(i) + "]"));
  const json& m = need(j, "mult", where);
  if (!m.is_array() || m.size() != names.size()) throw schema_error(where + ".mult", "expected a " + std::to_string(names.size()) + "x" + std::to_string(names.size()) + " table");
  std::vector<std::size_t> table;
  for (std::size_t a = 0; a < names.size(); ++a) {
    const std::string w = where + ".mult[" + std::to_string(a) + "]";
    if (!m[a].is_array() || m[a].size() != names.size()) throw schema_error(w, "expected a row of length " + std::to_string(names.size()));
    for (std::size_t b = 0; b < names.size(); ++b) table.push_back(object_index(names, m[a][b], w + "[" + std::to_string(b) + "]"));
  }
  return FiniteGroup(names, table);
}

// Each non-unit element lists its object map and images of basis elements.
// Omitted objects are fixed; an omitted basis element maps to itself,
// which requires its hom space to be fixed.
template <class K>
GroupAction<K> parse_action(const FieldSpec& f, const json& j, const Triple<K>& t, const FiniteGroup& g) {
  const std::string where = "action";
  GroupAction<K> act = trivial_action(t, g);
  if (j.is_null()) return act;
  if (!j.is_object()) throw schema_error(where, "expected an object keyed by group element");
  const std::size_t n = t.n();
  const FinCat<K>& c = t.cat;
  BasisIndex hidx = BasisIndex::build(n, c.basis, "category.morphisms");
  BasisIndex bidx = BasisIndex::build(n, t.bim.basis, "bimodule.elements");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string w = where + "." + it.key();
    auto s = g.index_of(it.key());
    if (!s) throw schema_error(w, "unknown group element \"" + it.key() + "\"");
    const json& spec = it.value();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    if (spec.contains("objects")) {
      for (auto o = spec.at("objects").begin(); o != spec.at("objects").end(); ++o) {
        std::size_t x = object_index(c.objects, json(o.key()), w + ".objects");
        perm[x] = object_index(c.objects, o.value(), w + ".objects." + o.key());
      }
    }
    act.perm[*s] = perm;
    auto fill = [&](const char* key, const BasisIndex& idx, auto dimfn, std::vector<Mat<K>>& mats, const std::vector<std::vector<std::string>>& basis) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) mats[c.pair(x, y)] = Mat<K>(dimfn(perm[x], perm[y]), dimfn(x, y));
      json images = spec.contains(key) ? spec.at(key) : json::object();
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t i = 0; i < basis[c.pair(x, y)].size(); ++i) {
            const std::string& id = basis[c.pair(x, y)][i];
            const std::string wi = w + "." + key + "." + id;
            Vec<K> v;
            if (images.contains(id)) {
              v = parse_combo<K>(f, images.at(id), idx, perm[x], perm[y], dimfn(perm[x], perm[y]), wi);
            } else {
              if (perm[x] != x || perm[y] != y) throw schema_error(wi, "missing image (its hom space is moved)");
              v = unit_vec<K>(f, dimfn(x, y), i);
            }
            Mat<K>& m = mats[c.pair(x, y)];
            for (std::size_t r = 0; r < v.size(); ++r) m(r, i) = v[r];
          }
      for (auto im = images.begin(); im != images.end(); ++im) idx.at(im.key(), w + "." + key);
    };
    fill("morphisms", hidx, [&](std::size_t x, std::size_t y) { return t.dim(x, y); }, act.hom[*s], c.basis);
    fill("elements", bidx, [&](std::size_t x, std::size_t y) { return t.bdim(x, y); }, act.bim[*s], t.bim.basis);
  }
  return act;
}

template <class K>
FactorSystem<K> parse_factors(const FieldSpec& f, const json& j, const Triple<K>& t, const FiniteGroup& g, const GroupAction<K>& act) {
  const std::string where = "factors";
  const std::size_t n = t.n();
  const FinCat<K>& c = t.cat;
  FactorSystem<K> lam{g.order(), n, {}};
  lam.lam.resize(g.order() * g.order() * n);
  std::vector<bool> set(lam.lam.size(), false);
  auto src = [&](std::size_t s, std::size_t u, std::size_t x) { return act.obj(g.mul(s, u), x); };
  auto dst = [&](std::size_t s, std::size_t u, std::size_t x) { return act.obj(s, act.obj(u, x)); };
  BasisIndex hidx = BasisIndex::build(n, c.basis, "category.morphisms");
  if (!j.is_null()) {
    if (!j.is_array()) throw schema_error(where, "expected an array");
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string w = where + "[" + std::to_string(i) + "]";
      auto s = g.index_of(need_string(need(j[i], "s", w), w + ".s"));
      auto u = g.index_of(need_string(need(j[i], "t", w), w + ".t"));
      if (!s) throw schema_error(w + ".s", "unknown group element \"" + j[i].at("s").get<std::string>() + "\"");
      if (!u) throw schema_error(w + ".t", "unknown group element \"" + j[i].at("t").get<std::string>() + "\"");
      if (j[i].contains("value")) {
        K v = parse_scalar<K>(f, j[i].at("value"), w + ".value");
        for (std::size_t x = 0; x < n; ++x) {
          if (src(*s, *u, x) != dst(*s, *u, x)) throw schema_error(w, "scalar shorthand needs X^{st} = (X^t)^s for every object");
          lam.at(*s, *u, x) = scaled(v, c.id(src(*s, *u, x)));
          set[(*s * g.order() + *u) * n + x] = true;
        }
      } else {
        std::size_t x = object_index(c.objects, need(j[i], "object", w), w + ".object");
        lam.at(*s, *u, x) = parse_combo<K>(f, need(j[i], "=", w), hidx, src(*s, *u, x), dst(*s, *u, x),
                                           t.dim(src(*s, *u, x), dst(*s, *u, x)), w + ".=");
        set[(*s * g.order() + *u) * n + x] = true;
      }
    }
  }
  for (std::size_t s = 0; s < g.order(); ++s)
    for (std::size_t u = 0; u < g.order(); ++u)
      for (std::size_t x = 0; x < n; ++x) {
        if (set[(s * g.order() + u) * n + x]) continue;
        if (src(s, u, x) != dst(s, u, x))
          throw schema_error(where, "no value for (" + g.name(s) + "," + g.name(u) + "," + c.objects[x] + ") and no identity default exists");
        lam.at(s, u, x) = c.id(src(s, u, x));
      }
  return lam;
}

}  // namespace io_detail

template <class K>
Instance<K> parse_instance(const json& j) {
  if (!j.is_object()) throw schema_error("instance", "expected a JSON object");
  Instance<K> in;
  in.name = j.contains("name") ? io_detail::need_string(j.at("name"), "name") : std::string("instance");
  in.field = parse_field(io_detail::need(j, "field", "instance"));
  if constexpr (is_prime_field_v<K>) {
    if (!in.field.is_prime()) throw schema_error("field", "expected a prime field");
  } else {
    if (in.field.is_prime()) throw schema_error("field", "expected the rationals");
  }
  std::vector<std::optional<std::string>> id_basis;
  io_detail::parse_category(in.field, io_detail::need(j, "category", "instance"), in.triple.cat, id_basis);
  io_detail::parse_bimodule(in.field, j.contains("bimodule") ? j.at("bimodule") : json("regular"), in.triple, id_basis);
  if (j.contains("differentiation")) io_detail::parse_differentiation(in.field, j.at("differentiation"), in.triple);
  if (j.contains("group")) {
    in.has_group = true;
    try {
      in.group = io_detail::parse_group(j.at("group"));
    } catch (const std::invalid_argument& e) {
      throw schema_error("group", e.what());
    }
    if (!in.group.has_inverses()) throw schema_error("group.mult", "table has no unit or lacks inverses");
    in.action = io_detail::parse_action(in.field, j.contains("action") ? j.at("action") : json(), in.triple, in.group);
    in.factors = io_detail::parse_factors(in.field, j.contains("factors") ? j.at("factors") : json(), in.triple, in.group, in.action);
  } else if (j.contains("action") || j.contains("factors")) {
    throw schema_error("instance", "action or factors given without a group");
  }
  if (j.contains("requests")) in.requests = j.at("requests");
  return in;
}

inline json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw schema_error(path, "cannot open file");
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw schema_error(path, std::string("invalid JSON: ") + e.what());
  }
}

template <class K>
Instance<K> load_instance(const std::string& path) {
  return parse_instance<K>(read_json_file(path));
}

// ---- writing ---------------------------------------------------------------

template <class K>
ojson combo_json(const Vec<K>& v, const std::vector<std::string>& basis) {
  ojson o = ojson::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) o[basis[i]] = to_string(v[i]);
  return o;
}

// A triple in the input schema (identities as coordinates, no autofill).
template <class K>
ojson triple_json(const Triple<K>& t, const std::string& name) {
  const FinCat<K>& c = t.cat;
  const std::size_t n = c.n();
  ojson j;
  j["name"] = name;
  j["field"] = field_json(c.field);
  ojson cat;
  cat["objects"] = c.objects;
  ojson ms = ojson::array(), ids = ojson::object(), comp = ojson::array();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& b : c.basis[c.pair(x, y)]) ms.push_back(ojson{{"id", b}, {"src", c.objects[x]}, {"dst", c.objects[y]}});
  for (std::size_t x = 0; x < n; ++x) ids[c.objects[x]] = combo_json(c.id(x), c.basis[c.pair(x, x)]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t jj = 0; jj < c.dim(y, z); ++jj)
          for (std::size_t ii = 0; ii < c.dim(x, y); ++ii) {
            Vec<K> v = c.compose_basis(x, y, z, jj, ii);
            if (is_zero_vec(v)) continue;
            comp.push_back(ojson{{"f", c.basis[c.pair(y, z)][jj]}, {"g", c.basis[c.pair(x, y)][ii]}, {"=", combo_json(v, c.basis[c.pair(x, z)])}});
          }
  cat["morphisms"] = ms;
  cat["identities"] = ids;
  cat["compose"] = comp;
  j["category"] = cat;
  ojson bim;
  ojson es = ojson::array(), left = ojson::array(), right = ojson::array();
  const FieldSpec& f = c.field;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& b : t.bim.basis[c.pair(x, y)]) es.push_back(ojson{{"id", b}, {"src", c.objects[x]}, {"dst", c.objects[y]}});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t jj = 0; jj < t.dim(y, z); ++jj)
          for (std::size_t ii = 0; ii < t.bdim(x, y); ++ii) {
            Vec<K> v = t.act_left(x, y, z, unit_vec<K>(f, t.dim(y, z), jj), unit_vec<K>(f, t.bdim(x, y), ii));
            if (!is_zero_vec(v))
              left.push_back(ojson{{"a", c.basis[c.pair(y, z)][jj]}, {"x", t.bim.basis[c.pair(x, y)][ii]}, {"=", combo_json(v, t.bim.basis[c.pair(x, z)])}});
          }
        for (std::size_t jj = 0; jj < t.bdim(y, z); ++jj)
          for (std::size_t ii = 0; ii < t.dim(x, y); ++ii) {
            Vec<K> v = t.act_right(x, y, z, unit_vec<K>(f, t.bdim(y, z), jj), unit_vec<K>(f, t.dim(x, y), ii));
            if (!is_zero_vec(v))
              right.push_back(ojson{{"x", t.bim.basis[c.pair(y, z)][jj]}, {"a", c.basis[c.pair(x, y)][ii]}, {"=", combo_json(v, t.bim.basis[c.pair(x, z)])}});
          }
      }
  bim["elements"] = es;
  bim["left"] = left;
  bim["right"] = right;
  j["bimodule"] = bim;
  ojson d = ojson::array();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t i = 0; i < t.dim(x, y); ++i) {
        Vec<K> v = t.d(x, y, unit_vec<K>(f, t.dim(x, y), i));
        if (!is_zero_vec(v)) d.push_back(ojson{{"a", c.basis[c.pair(x, y)][i]}, {"=", combo_json(v, t.bim.basis[c.pair(x, y)])}});
      }
  j["differentiation"] = d;
  return j;
}

// ---- objects of add A and El(T) in requests --------------------------------


namespace io_detail {

inline Sum parse_sum(const std::vector<std::string>& objects, const json& j, const std::string& where) {
  if (!j.is_array()) throw schema_error(where, "expected an array of objects");
  Sum s;
  for (std::size_t i = 0; i < j.size(); ++i) s.push_back(object_index(objects, j[i], where + "[" + std::to_string(i) + "]"));
  return s;
}

// Block matrix: rows index the target summands, columns the source ones.
template <class K>
Vec<K> parse_blocks(const FieldSpec& f, const json& j, const BasisIndex& idx, const Sum& s, const Sum& t, const Layout& l, const std::string& where) {
  if (!j.is_array() || j.size() != t.size()) throw schema_error(where, "expected " + std::to_string(t.size()) + " block rows");
  Vec<K> v(l.total, from_int<K>(f, 0));
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != s.size())
      throw schema_error(where + "[" + std::to_string(i) + "]", "expected " + std::to_string(s.size()) + " blocks");
    for (std::size_t k = 0; k < s.size(); ++k) {
      const std::string w = where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      Vec<K> b = parse_combo<K>(f, j[i][k], idx, s[k], t[i], l.len(i, k), w);
      set_block(l, v, i, k, b);
    }
  }
  return v;
}

}  // namespace io_detail

template <class K>
Vec<K> parse_add_hom(const Triple<K>& t, const json& j, const Sum& s, const Sum& u, const std::string& where) {
  auto idx = io_detail::BasisIndex::build(t.n(), t.cat.basis, "category.morphisms");
  return io_detail::parse_blocks<K>(t.field(), j, idx, s, u, hom_layout(t.cat, s, u), where);
}

template <class K>
Vec<K> parse_add_bim(const Triple<K>& t, const json& j, const Sum& s, const Sum& u, const std::string& where) {
  auto idx = io_detail::BasisIndex::build(t.n(), t.bim.basis, "bimodule.elements");
  return io_detail::parse_blocks<K>(t.field(), j, idx, s, u, bim_layout(t, s, u), where);
}

template <class K>
AddObject<K> parse_add_object(const Triple<K>& t, const json& j, const std::string& where) {
  Sum s = io_detail::parse_sum(t.cat.objects, io_detail::need(j, "carrier", where), where + ".carrier");
  AddObject<K> o = AddObject<K>::plain(t.cat, s);
  if (j.contains("idem")) {
    o.idem = parse_add_hom(t, j.at("idem"), s, s, where + ".idem");
    if (!is_idempotent(t.cat, s, o.idem)) throw schema_error(where + ".idem", "not an idempotent");
  }
  return o;
}

// {"src": X, "dst": Y, "=": combo}; src may be supplied by the caller.
template <class K>
struct PairHom {
  std::size_t src, dst;
  Vec<K> map;
};

template <class K>
PairHom<K> parse_pair_hom(const Triple<K>& t, const json& j, const std::string& where, std::optional<std::size_t> src = std::nullopt) {
  const std::size_t x = src ? *src : io_detail::object_index(t.cat.objects, io_detail::need(j, "src", where), where + ".src");
  const std::size_t y = io_detail::object_index(t.cat.objects, io_detail::need(j, "dst", where), where + ".dst");
  auto idx = io_detail::BasisIndex::build(t.n(), t.cat.basis, "category.morphisms");
  return PairHom<K>{x, y, io_detail::parse_combo<K>(t.field(), io_detail::need(j, "=", where), idx, x, y, t.cat.dim(x, y), where + ".=")};
}

template <class K>
ElObject<K> parse_el_object(const Triple<K>& t, const json& j, const std::string& where) {
  ElObject<K> x{parse_add_object(t, j, where), {}};
  const Sum& s = x.carrier.summands;
  x.elem = j.contains("elem") ? parse_add_bim(t, j.at("elem"), s, s, where + ".elem") : Vec<K>(bim_layout(t, s, s).total, from_int<K>(t.field(), 0));
  return x;
}

template <class K>
ojson blocks_json(const Vec<K>& v, const Sum& s, const Sum& u, const Layout& l, const std::vector<std::vector<std::string>>& basis, std::size_t n) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < u.size(); ++i) {
    ojson row = ojson::array();
    for (std::size_t k = 0; k < s.size(); ++k) row.push_back(combo_json(get_block(l, v, i, k), basis[s[k] * n + u[i]]));
    rows.push_back(row);
  }
  return rows;
}

template <class K>
ojson add_hom_json(const Triple<K>& t, const Sum& s, const Sum& u, const Vec<K>& v) {
  return blocks_json(v, s, u, hom_layout(t.cat, s, u), t.cat.basis, t.n());
}

template <class K>
ojson add_bim_json(const Triple<K>& t, const Sum& s, const Sum& u, const Vec<K>& v) {
  return blocks_json(v, s, u, bim_layout(t, s, u), t.bim.basis, t.n());
}

template <class K>
ojson el_object_json(const Triple<K>& t, const ElObject<K>& x) {
  ojson j;
  const Sum& s = x.carrier.summands;
  ojson car = ojson::array();
  for (auto o : s) car.push_back(t.cat.objects[o]);
  j["carrier"] = car;
  j["idem"] = add_hom_json(t, s, s, x.carrier.idem);
  j["elem"] = add_bim_json(t, s, s, x.elem);
  return j;
}

}  // namespace skewcat
