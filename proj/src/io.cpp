#include "serre/io.hpp"

#include <stdexcept>

namespace serre {

namespace {

Vec3 vec3(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a triple, got " + j.dump());
  return {j[0].get<Int>(), j[1].get<Int>(), j[2].get<Int>()};
}

json vec3_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

}  // namespace

void to_json(json& j, const Perm& s) { j = json::array({s.img[0], s.img[1], s.img[2]}); }

void from_json(const json& j, Perm& s) {
  if (j.is_string()) {
    s = perm_from_cycle(j.get<std::string>());
    return;
  }
  s = perm_from_images(j.get<std::vector<int>>());
}

void to_json(json& j, const AffElem1& x) { j = {{"w", x.w}, {"nu", vec3_json(x.nu)}}; }

void from_json(const json& j, AffElem1& x) {
  x.w = j.at("w").get<Perm>();
  x.nu = vec3(j.at("nu"));
}

void to_json(json& j, const AffElem& x) { j = {{"f", x.f()}, {"components", x.comps}}; }

void from_json(const json& j, AffElem& x) {
  x.comps = j.at("components").get<std::vector<AffElem1>>();
  if (j.contains("f") && j.at("f").get<std::size_t>() != x.comps.size())
    throw std::invalid_argument("AffElem: f does not match the number of components");
}

void to_json(json& j, const SerreWeightNF& w) {
  json base = json::array();
  for (const auto& b : w.base) base.push_back(vec3_json(b));
  j = {{"base", base}, {"twist", w.twist}, {"p", w.p}, {"f", w.f()}};
}

void from_json(const json& j, SerreWeightNF& w) {
  w.base.clear();
  for (const auto& b : j.at("base")) w.base.push_back(vec3(b));
  w.twist = j.at("twist").get<Int>();
  w.p = j.at("p").get<Int>();
  if (j.contains("f") && j.at("f").get<std::size_t>() != w.base.size())
    throw std::invalid_argument("SerreWeightNF: f does not match base");
}

void to_json(json& j, const LW& w) { j = json::array({w.m1, w.m2}); }

void from_json(const json& j, LW& w) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [m1, m2], got " + j.dump());
  w = {j[0].get<Int>(), j[1].get<Int>()};
}

void to_json(json& j, const GraphVertex& v) { j = {{"omega", v.omega}, {"a", v.a}}; }

void from_json(const json& j, GraphVertex& v) {
  v.omega = j.at("omega").get<std::vector<LW>>();
  v.a = j.at("a").get<std::vector<int>>();
  if (v.omega.size() != v.a.size()) throw std::invalid_argument("GraphVertex: omega and a differ in length");
}

void to_json(json& j, const SigmaPair& s) { j = json::array({s.omega.m1, s.omega.m2, s.a}); }

void from_json(const json& j, SigmaPair& s) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected [m1, m2, a], got " + j.dump());
  s = {{j[0].get<Int>(), j[1].get<Int>()}, j[2].get<int>()};
}

void to_json(json& j, const TameType& t) {
  json mu = json::array();
  for (const auto& m : t.mu) mu.push_back(vec3_json(m));
  j = {{"s", t.s}, {"mu", mu}};
}

void from_json(const json& j, TameType& t) {
  t.s = j.at("s").get<std::vector<Perm>>();
  t.mu.clear();
  for (const auto& m : j.at("mu")) t.mu.push_back(vec3(m));
  if (t.s.size() != t.mu.size()) throw std::invalid_argument("TameType: s and mu differ in length");
}

void to_json(json& j, const LabeledWeight& w) {
  j = {{"labels", w.labels}, {"vertex", w.vertex}, {"weight", w.weight}, {"defect", defect(w.labels)}};
}

void to_json(json& j, const MonoMat& m) {
  json coef = json::array();
  for (const auto& c : m.coef) coef.push_back(to_string(c));
  j = {{"w", m.w}, {"exponents", vec3_json(m.exps)}, {"coefficients", coef}};
}

void to_json(json& j, const WeylConstituent& c) {
  j = {{"vertex", c.vertex}, {"weight", c.weight}, {"grade", c.grade}, {"letters", c.letters}};
}

json predicted_json(const PredictedGraph& g) {
  json vs = json::array();
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    json v = g.vertices[k];
    v["layer"] = g.dist[k];
    vs.push_back(std::move(v));
  }
  json es = json::array();
  for (const auto& e : g.edges) es.push_back(json::array({e.from, e.to}));
  return {{"status", "predicted"}, {"cosocle", g.cosocle}, {"vertices", vs}, {"edges", es}};
}

}  // namespace serre

namespace serre::ideal {

namespace {

nlohmann::json checks_json(const std::vector<GeneratorCheck>& cs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : cs) {
    nlohmann::json e = {{"generator", c.generator}, {"member", c.member}};
    if (!c.member) e["remainder"] = c.remainder;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

void to_json(nlohmann::json& j, const EqualityReport& r) {
  j = {{"equal", r.equal},
       {"left_in_right", checks_json(r.left_in_right)},
       {"right_in_left", checks_json(r.right_in_left)}};
}

std::string rule_name(VariantRule r) {
  switch (r) {
    case VariantRule::All:
      return "all";
    case VariantRule::Any:
      return "any";
    case VariantRule::Primary:
      return "primary";
  }
  return "?";
}

void to_json(nlohmann::json& j, const LemmaResult& r) {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : r.variants)
    vs.push_back({{"name", v.name}, {"claim", v.claim}, {"holds", v.holds}, {"report", v.report}});
  j = {{"lemma", r.name},
       {"cell", r.cell},
       {"params", {{"a", r.params.a}, {"b", r.params.b}, {"c", r.params.c}, {"p", r.params.p}}},
       {"rule", rule_name(r.rule)},
       {"holds", r.holds},
       {"certified", r.certified},
       {"variants", vs}};
}

}  // namespace serre::ideal
