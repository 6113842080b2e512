#include "wavesym/json_io.hpp"

namespace wavesym {

namespace {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ProvenZero: return "ProvenZero";
    case Verdict::LikelyZero: return "LikelyZero";
    case Verdict::NonZero: return "NonZero";
  }
  return "?";
}

json gen_json(const GenCombo& c) {
  static const char* names[] = {"Pt", "Dt", "Du", "D", "Z"};
  json a = json::array();
  for (const auto& t : c) a.push_back({{"coef", t.coef}, {"gen", names[static_cast<int>(t.kind)]}, {"param", t.param}});
  return a;
}

json chart_json(const Chart& c) {
  json j = json::object();
  for (const auto& [s, sg] : c.signs) j["signs"][s] = sg;
  for (const auto& [s, iv] : c.ranges) j["ranges"][s] = {iv.lo.get_str(), iv.hi.get_str()};
  return j;
}

}  // namespace

json to_json(const ZeroResult& z) {
  json j{{"verdict", verdict_name(z.verdict)}, {"samples", z.samples}, {"exact", z.exact()}};
  if (z.verdict == Verdict::NonZero) {
    json w = json::object();
    for (const auto& [k, v] : z.witness) w[k] = v.get_str();
    j["witness"] = {{"point", w}, {"value", z.witness_value}};
  }
  return j;
}

json to_json(const VectorField& q) {
  json j = json::object();
  for (std::size_t i = 0; i < q.size(); ++i) j[q.coords()[i]] = render(q[i]);
  return j;
}

json to_json(const ClassMember& th) { return {{"f", render(th.f)}, {"g", render(th.g)}}; }

json to_json(const PointMap& m) {
  json j{{"coords", m.coords}, {"map", json::array()}};
  for (const auto& e : m.fwd) j["map"].push_back(render(e));
  if (m.has_inverse()) {
    j["inverse"] = json::array();
    for (const auto& e : m.inv) j["inverse"].push_back(render(e));
  }
  return j;
}

json to_json(const SymmetryVerdict& v) {
  json j{{"symmetric", v.symmetric}, {"mode", v.exact() ? "exact" : "float"}, {"residuals", json::array()}};
  for (const auto& r : v.residuals) j["residuals"].push_back(to_json(r));
  j["direct"] = to_json(v.direct);
  return j;
}

json to_json(const ConditionReport& r) {
  json j{{"ok", r.ok}, {"mode", r.exact() ? "exact" : "float"}, {"items", json::array()}};
  for (const auto& it : r.items) {
    json i = to_json(it.result);
    i["name"] = it.name;
    j["items"].push_back(i);
  }
  return j;
}

json to_json(const AlgebraInvariants& inv) {
  return {{"dim", inv.dim},
          {"derived_dim", inv.derived_dim},
          {"center_dim", inv.center_dim},
          {"killing_signature", {inv.killing.pos, inv.killing.zero, inv.killing.neg}}};
}

json to_json(const CheckRecord& r) {
  json j{{"id", r.id}, {"citation", r.citation}, {"verdict", r.pass ? "PASS" : "FAIL"}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  j["mode"] = r.exact ? "exact" : "float";
  j["millis"] = r.millis;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

json to_json(const CatalogSummary& s) {
  json j{{"cases", s.cases}, {"family_instances", s.family_instances}, {"arrows", s.arrows},
         {"all_pass", s.all_pass()}, {"headline", s.headline()}, {"checks", json::array()}};
  for (const auto& r : s.records) j["checks"].push_back(to_json(r));
  return j;
}

json to_json(const Catalog& cat) {
  json j{{"cases", json::array()}, {"families", json::array()}, {"additional_equivalences", json::array()},
         {"subalgebras", json::array()}};
  for (const auto& c : cat.cases) {
    json b = json::array();
    for (const auto& f : c.basis) b.push_back({{"t", f.tau}, {"x", f.xi}, {"u", f.eta}});
    json in = json::array();
    for (const auto& i : c.instances) in.push_back({{"label", i.label}, {"binding", i.bind}, {"chart", chart_json(i.chart)}});
    json e{{"id", c.id}, {"citation", c.citation}, {"f", c.f}, {"g", c.g}, {"slots", c.slot_args},
           {"extension_basis", b}, {"constraints", c.constraints}, {"metadata", c.metadata},
           {"instances", in}, {"regularity", c.regular ? "regular" : "singular"}};
    if (c.regular) {
      json s = json::array();
      for (const auto& g : c.subalgebra) s.push_back(gen_json(g));
      e["subalgebra"] = s;
    } else if (c.witness >= 0) {
      e["witness_index"] = c.witness;
    }
    if (!c.closure_slice.empty()) e["closure_slice_size"] = c.closure_slice.size();
    e["probe"] = c.probe_degree >= 0 ? json{{"degree", c.probe_degree}, {"extra_basis", c.probe_extra}}
                                     : json{{"skipped", c.probe_note}};
    j["cases"].push_back(e);
  }
  for (const auto& f : cat.families) {
    json in = json::array();
    for (const auto& i : f.instances)
      in.push_back({{"label", i.label}, {"binding", i.bind}, {"source_chart", chart_json(i.source_chart)},
                    {"target_chart", chart_json(i.target_chart)}, {"mode", i.float_mode ? "float" : "exact"}});
    json e{{"id", f.id}, {"citation", f.citation}, {"source", {{"f", f.f}, {"g", f.g}}},
           {"target", {{"f", f.tf}, {"g", f.tg}}}, {"slots", f.slot_args}, {"map", f.map}, {"inverse", f.inv},
           {"domain", f.domain}, {"instances", in}};
    if (f.printed) e["printed_map"] = {{"map", *f.printed}, {"note", f.printed_note}};
    j["families"].push_back(e);
  }
  for (const auto& a : cat.arrows) {
    j["additional_equivalences"].push_back({{"id", a.id}, {"citation", a.citation}, {"family", a.family},
                                            {"source", a.source_case}, {"target", a.target_case},
                                            {"source_bindings", a.source_binds}, {"relabel", a.relabel},
                                            {"flip_u_argument", a.flip_u_argument}});
  }
  for (const auto& s : cat.subalgebras) {
    json g = json::array();
    for (const auto& c : s.gens) g.push_back(gen_json(c));
    j["subalgebras"].push_back({{"id", s.id}, {"citation", s.citation}, {"generators", g}, {"samples", s.samples},
                                {"case", s.case_id}, {"case_binding", s.case_bind},
                                {"negative_control", !s.expect_appropriate}});
  }
  return j;
}

}  // namespace wavesym
