#pragma once

// Command layer behind the skewcat executable: each command turns a parsed
// instance into a Report plus witnesses, serialized with a fixed key order.
// Exit codes: 0 everything passed or was skipped, 1 some check failed or
// stayed inconclusive, 2 input error, 3 precondition unmet.

#include "skewcat/chardual/chardual.hpp"
#include "skewcat/decomp/nu.hpp"
#include "skewcat/io/instance.hpp"

#include <chrono>
#include <cstdio>

namespace skewcat::cli {

struct CommandOptions {
  std::optional<std::string> zeta;
  std::uint64_t search_budget = 1000000;
  std::uint64_t seed = 0;
  std::size_t samples = 4;
  bool timings = false;
};

struct CommandResult {
  ojson report;
  int exit_code = 0;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "crossed", "el-hom",  "psi", "adjoint-check", "summand-check", "center",
                                              "separable", "radical", "decompose", "nu", "char-double", "ar-check", "verify-all"};
  return names;
}

inline std::string fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline ojson check_json(const Check& c) {
  ojson j;
  j["name"] = c.name;
  j["status"] = status_name(c.status);
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.violation_count) {
    j["violation_count"] = c.violation_count;
    j["violations"] = c.violations;
  }
  return j;
}

inline ojson checks_json(const Report& r) {
  ojson a = ojson::array();
  for (const auto& c : r.checks()) a.push_back(check_json(c));
  return a;
}

struct Section {
  Report report;
  ojson witnesses = ojson::object();
  std::optional<std::string> unmet;  // precondition that failed
};

namespace detail {

template <class K>
ojson center_json(const Triple<K>& t, const CenterElement<K>& z) {
  ojson j = ojson::object();
  for (std::size_t x = 0; x < t.n(); ++x) j[t.cat.objects[x]] = combo_json(z.alpha[x], t.cat.basis[t.cat.pair(x, x)]);
  return j;
}

inline std::string sum_label(const std::vector<std::string>& objs, const Sum& s) {
  std::string r;
  for (auto x : s) r += (r.empty() ? "" : "+") + objs[x];
  return r.empty() ? "0" : r;
}

}  // namespace detail

template <class K>
class Session {
 public:
  Session(const Instance<K>& in, const CommandOptions& opt) : in_(in), opt_(opt) {}

  Section run(const std::string& cmd) {
    try {
      if (cmd == "validate") return validate();
      if (cmd == "crossed") return crossed();
      if (cmd == "el-hom") return el_hom();
      if (cmd == "psi") return psi();
      if (cmd == "adjoint-check") return adjoint_check();
      if (cmd == "summand-check") return summand_check();
      if (cmd == "center") return center();
      if (cmd == "separable") return separable();
      if (cmd == "radical") return radical_cmd();
      if (cmd == "decompose") return decompose();
      if (cmd == "nu") return nu_cmd();
      if (cmd == "char-double") return char_double_cmd();
      if (cmd == "ar-check") return ar_check();
    } catch (const precondition_error& e) {
      return unmet(e.what());
    }
    throw std::invalid_argument("unknown command " + cmd);
  }

 private:
  const Instance<K>& in_;
  const CommandOptions& opt_;
  std::optional<CrossedTriple<K>> ct_;

  const Triple<K>& t() const { return in_.triple; }
  const CrossedTriple<K>& ct() {
    if (!in_.has_group) throw precondition_error("instance has no group");
    if (!ct_) ct_ = build_crossed(in_.triple, in_.group, in_.action, in_.factors);
    return *ct_;
  }
  static Section unmet(const std::string& why) {
    Section s;
    s.unmet = why;
    s.report.add("precondition", Status::skipped, why);
    return s;
  }
  SearchOptions search() const {
    SearchOptions s;
    s.exhaustive_limit = opt_.search_budget;
    s.seed = opt_.seed;
    return s;
  }
  DecompositionOptions decomposition() const {
    DecompositionOptions d;
    d.search = search();
    d.split.seed = opt_.seed;
    return d;
  }
  std::vector<ElObject<K>> el_objects(const Triple<K>& tr, const char* key, std::uint64_t salt) const {
    std::vector<ElObject<K>> out;
    if (in_.requests.contains(key)) {
      const json& a = in_.requests.at(key);
      for (std::size_t i = 0; i < a.size(); ++i) out.push_back(parse_el_object(tr, a[i], std::string("requests.") + key + "[" + std::to_string(i) + "]"));
      return out;
    }
    return generate_el_objects(tr, opt_.samples, opt_.seed + salt);
  }
  std::vector<ElObject<K>> el_base() const { return el_objects(t(), "el_objects", 0); }
  std::vector<ElObject<K>> el_crossed() { return el_objects(ct().tg, "el_crossed_objects", 1); }
  std::vector<std::size_t> all_objects() const {
    std::vector<std::size_t> v(t().n());
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  Section validate() {
    Section s;
    Report& r = s.report;
    r.merge(validate_triple(t()), "triple/");
    s.witnesses["objects"] = t().n();
    if (!in_.has_group) return s;
    s.witnesses["group_order"] = in_.group.order();
    r.merge(validate_group(in_.group), "group/");
    r.merge(validate_action(t(), in_.group, in_.action), "action/");
    r.merge(validate_factor_system(t(), in_.group, in_.action, in_.factors), "factors/");
    if (!r.passed()) {
      r.add("crossed", Status::skipped, "structure invalid");
      return s;
    }
    r.merge(check_associativity(ct()), "crossed/");
    r.merge(validate_center_action(ct()), "center action/");
    r.merge(validate_induced_action(t(), in_.group, in_.action, in_.factors, el_base()), "induced action/");
    return s;
  }

  Section crossed() {
    Section s;
    const CrossedTriple<K>& c = ct();
    s.report.merge(check_associativity(c), "associativity/");
    s.report.merge(validate_triple(c.tg), "triple/");
    ojson j = triple_json(c.tg, in_.name + "G");
    Instance<K> back = parse_instance<K>(json::parse(j.dump()));
    bool same = back.triple.n() == c.tg.n() && validate_triple(back.triple).passed();
    for (std::size_t x = 0; same && x < c.tg.n(); ++x)
      for (std::size_t y = 0; same && y < c.tg.n(); ++y) same = back.triple.dim(x, y) == c.tg.dim(x, y) && back.triple.bdim(x, y) == c.tg.bdim(x, y);
    s.report.add("round trip", same ? Status::pass : Status::fail);
    s.witnesses["triple"] = std::move(j);
    return s;
  }

  Section el_hom() {
    Section s;
    auto xs = el_base();
    ojson dims = ojson::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ojson row = ojson::array();
      for (std::size_t j = 0; j < xs.size(); ++j) {
        auto b = el_hom_basis(t(), xs[i], xs[j]);
        row.push_back(b.size());
        Check& c = s.report.ensure("basis (" + std::to_string(i) + "," + std::to_string(j) + ")");
        c.detail = "dim " + std::to_string(b.size());
        for (const auto& v : b)
          if (!is_el_morphism(t(), xs[i], xs[j], v)) s.report.violate(c.name, "basis vector is not an El morphism");
      }
      dims.push_back(row);
    }
    s.witnesses["objects"] = ojson::array();
    for (const auto& x : xs) s.witnesses["objects"].push_back(el_object_json(t(), x));
    s.witnesses["dims"] = dims;
    if (in_.has_group)
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < xs.size(); ++j)
          s.report.merge(check_phi_full_faithful(ct(), xs[i], xs[j]), "phi (" + std::to_string(i) + "," + std::to_string(j) + ")/");
    return s;
  }

  Section psi() {
    Section s;
    const auto& c = ct();
    auto xs = el_crossed();
    s.witnesses["psi"] = ojson::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ElObject<K> p = psi_object(c, xs[i]);
      s.report.add("psi " + std::to_string(i) + " is an El object", is_el_object(t(), p) ? Status::pass : Status::fail);
      s.witnesses["psi"].push_back(ojson{{"source", el_object_json(c.tg, xs[i])}, {"image", el_object_json(t(), p)}});
    }
    return s;
  }

  Section adjoint_check() {
    Section s;
    const auto& c = ct();
    auto xs = el_base();
    auto es = el_crossed();
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < es.size(); ++j) s.report.merge(check_adjunction(c, xs[i], es[j]), "(" + std::to_string(i) + "," + std::to_string(j) + ")/");
    return s;
  }

  Section summand_check() {
    const auto& c = ct();
    auto alpha = is_separable(c);
    if (!alpha) return unmet("not separable");
    Section s;
    s.witnesses["alpha"] = detail::center_json(t(), *alpha);
    s.witnesses["summands"] = ojson::array();
    auto xs = el_crossed();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto w = summand_witness(c, xs[i], *alpha);
      s.report.merge(w.report, "xi " + std::to_string(i) + "/");
      const Sum& big = w.big.carrier.summands;
      const Sum& small = xs[i].carrier.summands;
      s.witnesses["summands"].push_back(ojson{{"pi", add_hom_json(c.tg, big, small, w.pi)}, {"iota", add_hom_json(c.tg, small, big, w.iota)}});
    }
    return s;
  }

  Section center() {
    Section s;
    auto zb = center_basis(t());
    s.report.ensure("basis central");
    s.witnesses["basis"] = ojson::array();
    for (const auto& z : zb) {
      if (!is_central(t(), z)) s.report.violate("basis central", "basis element fails the conditions");
      s.witnesses["basis"].push_back(detail::center_json(t(), z));
    }
    s.report.ensure("basis central").detail = "dim Z(T) = " + std::to_string(zb.size());
    if (!in_.has_group) return s;
    s.report.merge(validate_center_action(ct()), "action/");
    s.report.merge(check_center_of_crossed(ct()), "crossed/");
    s.witnesses["invariants"] = ojson::array();
    for (const auto& z : center_invariants(ct())) s.witnesses["invariants"].push_back(detail::center_json(t(), z));
    return s;
  }

  Section separable() {
    const auto& c = ct();
    auto alpha = is_separable(c);
    if (!alpha) return unmet("not separable: 1 is not a trace of a central element");
    Section s;
    s.report.add("separable", Status::pass);
    s.witnesses["alpha"] = detail::center_json(t(), *alpha);
    s.report.add("trace is 1", trace(c, *alpha) == center_one(t().cat) ? Status::pass : Status::fail);
    s.report.merge(check_separability_element(c, separability_element(c, *alpha)), "separability element/");
    s.report.merge(check_subgroup_heredity(c, *alpha), "heredity/");
    return s;
  }

  Section radical_cmd() {
    Section s;
    CategoryRadical<K> cr = radical_category(t().cat);
    s.report.merge(cr.report, "base/");
    ojson dims = ojson::object();
    for (std::size_t x = 0; x < t().n(); ++x)
      for (std::size_t y = 0; y < t().n(); ++y) dims[t().cat.objects[x] + "->" + t().cat.objects[y]] = cr.at(x, y).dim();
    s.witnesses["dims"] = dims;
    if (in_.has_group) s.report.merge(check_radical_of_crossed(ct()), "crossed/");
    return s;
  }

  ojson decomposition_json(const Triple<K>& tr, const AddObject<K>& x, const DecompositionReport<K>& d) const {
    ojson j;
    j["object"] = detail::sum_label(tr.cat.objects, x.summands);
    j["dim"] = d.dim;
    j["rad_dim"] = d.rad_dim;
    j["nu"] = d.nu;
    j["multiplicities"] = d.multiplicities;
    j["summands"] = ojson::array();
    for (const auto& sm : d.summands)
      j["summands"].push_back(ojson{{"class", sm.cls}, {"rank", sm.rank}, {"idempotent", add_hom_json(tr, x.summands, x.summands, sm.idempotent)}});
    return j;
  }

  std::vector<AddObject<K>> decompose_targets() const {
    std::vector<AddObject<K>> xs;
    if (in_.requests.contains("decompose")) {
      const json& a = in_.requests.at("decompose");
      for (std::size_t i = 0; i < a.size(); ++i) xs.push_back(parse_add_object(t(), a[i], "requests.decompose[" + std::to_string(i) + "]"));
    } else {
      xs.push_back(AddObject<K>::plain(t().cat, all_objects()));
    }
    return xs;
  }

  Section decompose() {
    Section s;
    s.witnesses["base"] = ojson::array();
    auto xs = decompose_targets();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto d = krull_schmidt(t().cat, xs[i], decomposition());
      s.report.merge(d.report, "base " + std::to_string(i) + "/");
      s.witnesses["base"].push_back(decomposition_json(t(), xs[i], d));
    }
    if (!in_.has_group) return s;
    s.witnesses["crossed"] = ojson::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      AddObject<K> e = ct().embed_object(xs[i]);
      auto d = krull_schmidt(ct().tg.cat, e, decomposition());
      s.report.merge(d.report, "crossed " + std::to_string(i) + "/");
      s.witnesses["crossed"].push_back(decomposition_json(ct().tg, e, d));
    }
    return s;
  }

  Section nu_cmd() {
    const auto& c = ct();
    if constexpr (!is_prime_field_v<K>) {
      return unmet("nu needs a prime field");
    } else {
      Section s;
      s.witnesses["objects"] = ojson::array();
      std::vector<AddObject<K>> xs;
      if (in_.requests.contains("nu")) {
        const json& a = in_.requests.at("nu");
        for (std::size_t i = 0; i < a.size(); ++i) xs.push_back(parse_add_object(t(), a[i], "requests.nu[" + std::to_string(i) + "]"));
      } else {
        for (std::size_t x = 0; x < t().n(); ++x) xs.push_back(AddObject<K>::plain(t().cat, {x}));
      }
      for (const auto& x : xs) {
        const std::string label = detail::sum_label(t().cat.objects, x.summands);
        auto res = nu(c, x, decomposition());
        s.report.merge(res.report, label + "/");
        s.report.merge(check_stabilizer_reduction(c, x, decomposition()), label + "/stabilizer reduction/");
        ojson w;
        w["object"] = label;
        w["nu"] = res.main.nu;
        ojson h = ojson::array();
        for (auto g : res.stab.h) h.push_back(c.group.name(g));
        w["H"] = h;
        if (res.chain) {
          ojson h0 = ojson::array(), n = ojson::array();
          for (auto i : res.chain->h0) h0.push_back(c.group.name(res.chain->h[i]));
          for (auto i : res.chain->n_sub) n.push_back(c.group.name(res.chain->h[i]));
          w["H0"] = h0;
          w["N"] = n;
          w["residue_degree"] = res.chain->d.alg.dim;
        }
        ojson cc = ojson::array();
        for (const auto& k : res.main.cross_checks) {
          ojson kj{{"name", k.name}, {"status", status_name(k.status)}, {"detail", k.detail}};
          if (k.predicted) kj["predicted"] = *k.predicted;
          cc.push_back(kj);
        }
        w["cross_checks"] = cc;
        s.witnesses["objects"].push_back(w);
      }
      return s;
    }
  }

  Section char_double_cmd() {
    const auto& c = ct();
    std::optional<K> z;
    if (opt_.zeta) z = io_detail::parse_scalar<K>(t().field(), json(*opt_.zeta), "--zeta");
    auto cd = char_double<K>(c, z, CharDoubleOptions{EquivalenceOptions{search(), 4}, opt_.samples, opt_.seed});
    Section s;
    s.report = cd.report;
    ojson w;
    w["zeta"] = to_string(cd.chars.zeta);
    ojson chars = ojson::array();
    for (std::size_t chi = 0; chi < cd.chars.order(); ++chi) {
      ojson row = ojson::object();
      for (std::size_t g = 0; g < c.order(); ++g) row[c.group.name(g)] = to_string(cd.chars.at(chi, g));
      chars.push_back(ojson{{"name", cd.chars.group.name(chi)}, {"values", row}});
    }
    w["characters"] = chars;
    ojson idem = ojson::object();
    for (std::size_t x = 0; x < t().n(); ++x) {
      ojson per = ojson::object();
      for (std::size_t g = 0; g < c.order(); ++g) per[c.group.name(g)] = combo_json(cd.e[x][g], cd.dbl.tg.cat.basis[cd.dbl.tg.cat.pair(x, x)]);
      idem[t().cat.objects[x]] = per;
    }
    w["idempotents"] = idem;
    s.witnesses = std::move(w);
    return s;
  }

  Section ar_check() {
    Section s;
    const json none = json::array();
    const json& seqs = in_.requests.contains("almost_split") ? in_.requests.at("almost_split") : none;
    const json& gens = in_.requests.contains("generators") ? in_.requests.at("generators") : none;
    if (seqs.empty() && gens.empty()) {
      s.report.add("requests", Status::skipped, "no almost split or generator requests");
      return s;
    }
    CategoryRadical<K> cr = radical_category(t().cat);
    s.witnesses["details"] = ojson::array();
    // a request expected to fail contributes only its expectation check
    auto record = [&](const std::string& label, const Report& r, bool expect_pass) {
      if (expect_pass) {
        s.report.merge(r, label + "/");
      } else {
        s.report.add(label + " fails as expected", r.any(Status::fail) ? Status::pass : Status::fail);
        s.witnesses["details"].push_back(ojson{{"request", label}, {"checks", checks_json(r)}});
      }
    };
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      const json& q = seqs[i];
      const std::string where = "requests.almost_split[" + std::to_string(i) + "]";
      auto a = parse_pair_hom(t(), io_detail::need(q, "maps", where).at(0), where + ".maps[0]");
      auto b = parse_pair_hom(t(), q.at("maps").at(1), where + ".maps[1]");
      std::vector<std::size_t> decl = q.contains("objects") ? io_detail::parse_sum(t().cat.objects, q.at("objects"), where + ".objects") : all_objects();
      const bool expect_pass = q.value("expect", std::string("pass")) != "fail";
      const std::string label = "sequence " + std::to_string(i);
      record(label, is_almost_split_sequence(t().cat, cr, {a.src}, {a.dst}, {b.dst}, a.map, b.map, decl), expect_pass);
      if (in_.has_group) record(label + " transfer", check_almost_split_transfer(ct(), {a.src}, {a.dst}, {b.dst}, a.map, b.map), expect_pass);
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const json& q = gens[i];
      const std::string where = "requests.generators[" + std::to_string(i) + "]";
      const std::size_t x = io_detail::object_index(t().cat.objects, io_detail::need(q, "object", where), where + ".object");
      std::vector<std::size_t> targets;
      std::vector<Vec<K>> maps;
      const json& ms = io_detail::need(q, "maps", where);
      for (std::size_t k = 0; k < ms.size(); ++k) {
        auto h = parse_pair_hom(t(), ms[k], where + ".maps[" + std::to_string(k) + "]", x);
        targets.push_back(h.dst);
        maps.push_back(h.map);
      }
      const bool expect_pass = q.value("expect", std::string("pass")) != "fail";
      const std::string label = "generators " + std::to_string(i);
      record(label, generates_radical_from(t().cat, cr, x, targets, maps, all_objects()), expect_pass);
      if (in_.has_group) record(label + " crossed", check_radical_generators(ct(), x, targets, maps), expect_pass);
    }
    return s;
  }
};

inline int exit_code_of(const Report& r) { return r.any(Status::fail) || r.any(Status::inconclusive) ? 1 : 0; }

template <class K>
CommandResult run_typed(const std::string& cmd, const Instance<K>& in, const std::string& digest, const CommandOptions& opt) {
  Session<K> session(in, opt);
  ojson out;
  out["command"] = cmd;
  out["instance"] = in.name;
  out["digest"] = digest;
  ojson timings = ojson::object();
  auto timed = [&](const std::string& c) {
    auto t0 = std::chrono::steady_clock::now();
    Section s = session.run(c);
    timings[c] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return s;
  };
  CommandResult res;
  if (cmd == "verify-all") {
    Report all("verify-all");
    ojson sections = ojson::object();
    for (const auto& c : command_names()) {
      if (c == "verify-all") continue;
      Section s = timed(c);
      if (s.unmet) {
        all.add(c, Status::skipped, *s.unmet);
        sections[c] = "skipped";
      } else {
        all.merge(s.report, c + "/");
        sections[c] = status_name(s.report.overall());
      }
    }
    out["status"] = status_name(all.overall());
    out["sections"] = sections;
    out["checks"] = checks_json(all);
    res.exit_code = exit_code_of(all);
  } else {
    Section s = timed(cmd);
    out["status"] = s.unmet ? "skipped" : status_name(s.report.overall());
    out["checks"] = checks_json(s.report);
    out["witnesses"] = s.witnesses;
    res.exit_code = s.unmet ? 3 : exit_code_of(s.report);
  }
  if (opt.timings) out["timings_ms"] = timings;
  out["exit_code"] = res.exit_code;
  res.report = std::move(out);
  return res;
}

inline CommandResult error_result(const std::string& cmd, const std::string& what, int code) {
  ojson out;
  out["command"] = cmd;
  out["status"] = "error";
  out["error"] = what;
  out["exit_code"] = code;
  return CommandResult{out, code};
}

inline CommandResult run_command(const std::string& cmd, const json& instance, const CommandOptions& opt = {}) {
  if (std::find(command_names().begin(), command_names().end(), cmd) == command_names().end())
    return error_result(cmd, "unknown command", 2);
  const std::string digest = fnv1a(instance.dump());
  try {
    FieldSpec f = parse_field(io_detail::need(instance, "field", "instance"));
    if (f.is_prime()) return run_typed<Fp>(cmd, parse_instance<Fp>(instance), digest, opt);
    return run_typed<Rational>(cmd, parse_instance<Rational>(instance), digest, opt);
  } catch (const schema_error& e) {
    return error_result(cmd, e.what(), 2);
  } catch (const json::exception& e) {
    return error_result(cmd, std::string("malformed input: ") + e.what(), 2);
  } catch (const precondition_error& e) {
    return error_result(cmd, e.what(), 3);
  } catch (const std::exception& e) {
    return error_result(cmd, e.what(), 1);
  }
}

}  // namespace skewcat::cli
