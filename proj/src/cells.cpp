#include "serre/cells.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <stdexcept>

namespace serre::ideal {

const Ideal& Cell::component(const std::string& n) const {
  auto it = components.find(n);
  if (it == components.end()) throw std::invalid_argument("cell " + name + " has no component " + n);
  return it->second;
}

Ideal Cell::lift(const Ideal& J) const { return ideal_sum(J, relations); }

Ideal Cell::parse(const std::vector<std::string>& gens) const {
  std::vector<Poly> ps;
  for (const auto& g : gens) ps.push_back(ring->parse(g));
  return Ideal(ring, std::move(ps));
}

Ideal Cell::intersect_ideals(const std::vector<Ideal>& ideals) const {
  if (ideals.empty()) throw std::invalid_argument("Cell::intersect: no ideals");
  Ideal acc = lift(ideals.front());
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = ideal_intersect(acc, lift(ideals[i]));
  return acc;
}

Ideal Cell::intersect(const std::vector<std::string>& names) const {
  std::vector<Ideal> ideals;
  for (const auto& n : names) ideals.push_back(component(n));
  return intersect_ideals(ideals);
}

Ideal Cell::sum(const Ideal& I, const Ideal& J) const { return ideal_sum(I, J); }

EqualityReport Cell::equal(const Ideal& I, const Ideal& J) const { return compare_ideals(lift(I), lift(J)); }

namespace {

struct Coeffs {
  std::uint32_t p;
  std::string operator()(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    return "(" + std::to_string(r < 0 ? r + p : r) + ")";
  }
  std::string frac(std::int64_t n, std::int64_t d) const { return "(" + (*this)(n) + "/" + (*this)(d) + ")"; }
};

void check_generic(const CellParams& q) {
  const std::int64_t p = q.p;
  for (std::int64_t d : {q.a - q.b, q.b - q.c, q.a - q.c})
    for (std::int64_t s : {-1, 0, 1})
      if ((d + s) % p == 0) throw std::domain_error("preset_cell: parameters (a,b,c) are not generic");
}

void add(Cell& cell, const std::string& n, const std::vector<std::string>& gens) {
  cell.components.emplace(n, cell.parse(gens));
  cell.order.push_back(n);
}

Cell make_cell(const std::string& name, const CellParams& q, std::vector<std::string> vars) {
  auto ring = std::make_shared<Ring>(q.p, std::move(vars));
  return Cell{name, q, ring, Ideal(ring, {}), {}, {}};
}

Cell id_cell(const CellParams& q) {
  Coeffs k{q.p};
  const auto [a, b, c] = std::tuple{q.a, q.b, q.c};
  Cell cell = make_cell("id", q, {"c11", "c12", "c13", "c21", "c22", "c23", "c31", "c32", "c33"});
  cell.relations = cell.parse({
      // Height: 2x2 minors of the constant term.
      "c11*c22", "c11*c23", "c12*c23 - c13*c22", "c11*c33", "c12*c33", "c22*c33",
      // Determinant, coefficients of v and v^2.
      "c11*c22 - c11*c23*c32 + c11*c33 - c12*c21*c33 + c12*c23*c31 - c13*c22*c31 + c22*c33",
      "c11 - c12*c21 + c13*c21*c32 - c13*c31 + c22 - c23*c32 + c33",
      // Monodromy.
      k(-1 - a + c) + "*c33 + " + k(-1 - a + b) + "*c22 - " + k(-1 - a + c) + "*c23*c32",
      k(-1 - b + c) + "*c33 + " + k(a - b) + "*c11 - " + k(a - b) + "*c13*c31",
      k(b - c) + "*c22 + " + k(a - c) + "*c11 - " + k(b - c) + "*c12*c21",
      "c23*c31", "c11*c32 - c12*c31",
  });
  add(cell, "L1", {"c11", "c22", "c33", "c13", "c23", "c12"});
  add(cell, "L2", {"c11", "c22", "c33", "c21", "c31", "c23"});
  add(cell, "L3", {"c11", "c22", "c33", "c12", "c31", "c32"});
  add(cell, "W1", {"c22", "c33", "c23", "c12 - c13*c32"});
  add(cell, "W2", {"c33", "c11", "c31", "c23 - c21*c13"});
  add(cell, "W3", {"c11", "c22", "c12", "c31 - c32*c21"});
  return cell;
}

Cell alpha_cell(const CellParams& q) {
  Coeffs k{q.p};
  const auto [a, b, c] = std::tuple{q.a, q.b, q.c};
  Cell cell = make_cell("alpha", q, {"c11", "c12", "c13", "c22", "cp22", "c23", "c31", "c32"});
  cell.ring->define("ct32", cell.ring->parse("c32 - cp22*c31"));
  cell.relations = cell.parse({
      "c31*c22", "c11*c23", "c11*c22",
      "c11*cp22 + c13*ct32 - c12",
      k(-1 - a + c) + "*c23*ct32 - " + k(-1 - a + b) + "*c22",
      k(a - b) + "*c11*cp22 + " + k(c - b) + "*c13*ct32",
      k.frac(1 + a - c, a - b) + "*c23*c31 + cp22*(c11 - c13*c31)",
  });
  add(cell, "Uob", {"c11", "c13", "c31"});
  add(cell, "L2", {"c11", "c31", "ct32"});
  add(cell, "Lob", {"c23", "cp22", "ct32"});
  add(cell, "L1", {"c11", "c13", "c23"});
  add(cell, "U1", {"c11 - c13*c31", "c23", k(a - b) + "*c31*cp22 + " + k(c - b) + "*ct32"});
  add(cell, "U2", {"c11", "ct32", k(a - b) + "*c13*cp22 + " + k(-1 - a + c) + "*c23"});
  add(cell, "U2printed", {"c11", "ct32", k(a - b) + "*c31*cp22 + " + k(-1 - a + c) + "*c23"});
  return cell;
}

Cell alphabeta_cell(const CellParams& q) {
  Coeffs k{q.p};
  const auto [a, b, c] = std::tuple{q.a, q.b, q.c};
  Cell cell = make_cell("alphabeta", q, {"c12", "c13", "c22", "c23", "cp23", "c31", "cp33"});
  cell.relations = cell.parse({
      "c22*c31", "c12*c23 - c22*c13",
      "c13 - cp33*c12",
      "c12*(" + k(b - c) + "*cp33 + " + k(a - b) + "*c31*cp23)",
      k(-1 - a + c) + "*c23 - " + k(-1 - a + b) + "*c22*cp33",
  });
  add(cell, "U1", {"c12", "c31"});
  add(cell, "L2", {"c31", "cp33"});
  add(cell, "L1", {"c12", "c22"});
  add(cell, "U2", {"c22", "cp33"});
  return cell;
}

}  // namespace

Cell preset_cell(const std::string& name, const CellParams& params) {
  check_generic(params);
  if (name == "id") return id_cell(params);
  if (name == "alpha") return alpha_cell(params);
  if (name == "alphabeta") return alphabeta_cell(params);
  throw std::invalid_argument("preset_cell: unknown cell '" + name + "'");
}

namespace {

VariantResult variant(const Cell& cell, std::string name, std::string claim, const Ideal& lhs, const Ideal& rhs) {
  EqualityReport r = cell.equal(lhs, rhs);
  return {std::move(name), std::move(claim), r.equal, std::move(r)};
}

struct LemmaDef {
  std::string cell;
  VariantRule rule;
  std::function<std::vector<VariantResult>(const Cell&)> run;
};

std::vector<VariantResult> lem_ideal(const Cell& X) {
  Ideal w1_l2 = X.intersect({"W1", "L2"});
  Ideal rhs = X.component("W1");
  return {
      variant(X, "proof", "(W1 cap L2) + (W1 cap L3) = W1", X.sum(w1_l2, X.intersect({"W1", "L3"})), rhs),
      variant(X, "statement", "(W1 cap L2) + (W2 cap L3) = W1", X.sum(w1_l2, X.intersect({"W2", "L3"})), rhs),
  };
}

std::vector<VariantResult> lem_ideal_0(const Cell& X) {
  return {variant(X, "main", "W1 cap L2 cap L3 = (c22, c33)", X.intersect({"W1", "L2", "L3"}), X.parse({"c22", "c33"}))};
}

std::vector<VariantResult> lem_ideal_1_id(const Cell& X) {
  Ideal lhs = X.sum(X.intersect({"W1", "W2", "L3"}), X.intersect({"W1", "W3", "L2"}));
  return {variant(X, "main", "(W1 cap W2 cap L3) + (W1 cap W3 cap L2) = W1 cap L2 cap L3", lhs,
                  X.intersect({"W1", "L2", "L3"}))};
}

std::vector<VariantResult> aux_ideal_0(const Cell& X) {
  Coeffs k{X.params.p};
  const std::string kappa = k.frac(X.params.a - X.params.c, X.params.b - X.params.c);
  const std::vector<std::string> fixed{"c22", "c33", "c11 - c13*c31"};
  auto with_fixed = [&](std::vector<std::string> g) {
    g.insert(g.end(), fixed.begin(), fixed.end());
    return X.parse(g);
  };
  Ideal presentation = with_fixed({"c31*c23", "c23*c32", "c12*c23", "c31*(c12 - c13*c32)",
                                   "c13*(" + kappa + "*c31 - c21*c32)", "c21*(c12 - c13*c32)"});
  // U = c23, V = kappa c31 - c21 c32, W = c12 - c13 c32, X = c13, Y = c32, Z = c21.
  const std::string U = "c23", V = "(" + kappa + "*c31 - c21*c32)", W = "(c12 - c13*c32)", Xv = "c13", Y = "c32",
                    Z = "c21";
  Ideal monomial = with_fixed({U + "*" + V, U + "*" + W, U + "*" + Y, V + "*" + W, V + "*" + Xv, W + "*" + Z});
  // The change of variables is plain substitution, so compare without adding relations.
  EqualityReport sub = compare_ideals(presentation, monomial);
  return {
      variant(X, "presentation", "R + (c22, c33) = (c31c23, c23c32, c12c23, c31(c12-c13c32), c13(k c31-c21c32), "
                                 "c21(c12-c13c32), c22, c33, c11-c13c31)",
              X.parse({"c22", "c33"}), presentation),
      {"monomial", "the presentation is (UV, UW, UY, VW, VX, WZ) under the substitution", sub.equal, sub},
  };
}

std::vector<VariantResult> lem_alpha_1(const Cell& X) {
  Ideal I0 = X.intersect({"L1", "U1", "L2"});
  return {
      variant(X, "statement", "L1 cap U1 cap L2 = (c11 - c13c31, c23c32, c23ct32)", I0,
              X.parse({"c11 - c13*c31", "c23*c32", "c23*ct32"})),
      variant(X, "proof", "L1 cap U1 cap L2 = (c11 - c13c31, c23c31, c23ct32)", I0,
              X.parse({"c11 - c13*c31", "c23*c31", "c23*ct32"})),
  };
}

std::vector<VariantResult> lem_alpha_2(const Cell& X) {
  return {variant(X, "main", "Uob cap L1 cap L2 = (c11, c13c31)", X.intersect({"Uob", "L1", "L2"}),
                  X.parse({"c11", "c13*c31"}))};
}

std::vector<VariantResult> aux_alpha(const Cell& X) {
  Coeffs k{X.params.p};
  const auto [a, b, c] = std::tuple{X.params.a, X.params.b, X.params.c};
  const std::string Y = "(c31*cp22 - " + k.frac(b - c, a - b) + "*ct32)";
  const std::string kappa = k.frac(1 + a - c, a - b);
  const std::string k22 = k.frac(-1 - a + c, -1 - a + b);
  std::vector<std::string> p1{"c11 - c13*c31", "c12 - c13*c31*cp22 - c13*ct32", "c22"};
  std::vector<std::string> m1 = p1;
  for (const auto& g : {"c13*" + Y, std::string("c23*c31"), std::string("c23*ct32")}) p1.push_back(g);
  // X = c13, Y as above, Z = c23, W = c31.
  for (const auto& g : {"c13*" + Y, Y + "*c23", std::string("c31*c23")}) m1.push_back(g);
  std::vector<std::string> p2{"c11",       "c12 - c13*ct32", "c22 - " + k22 + "*c23*ct32",
                              "c13*c31",   "c13*ct32",       "c31*(" + kappa + "*c23 - c13*cp22)"};
  EqualityReport sub = compare_ideals(X.parse(p1), X.parse(m1));
  return {
      variant(X, "item1", "R + (c11-c13c31, c23c31, c23ct32) has the reduced presentation",
              X.parse({"c11 - c13*c31", "c23*c31", "c23*ct32"}), X.parse(p1)),
      {"item1-monomial", "the item-1 presentation is (XY, YZ, WZ) under the substitution", sub.equal, sub},
      variant(X, "item2", "R + (c11, c13c31) has the reduced presentation", X.parse({"c11", "c13*c31"}),
              X.parse(p2)),
  };
}

std::vector<VariantResult> lem_alpha_1a(const Cell& X) {
  Ideal I0 = X.intersect({"L1", "U1", "L2"});
  std::vector<VariantResult> out;
  for (const std::string u2 : {"U2", "U2printed"}) {
    Ideal lhs = X.sum(X.intersect_ideals({I0, X.component("Uob")}),
                      X.intersect_ideals({I0, X.component(u2), X.component("Lob")}));
    out.push_back(variant(X, u2, "(I0 cap Uob) + (I0 cap " + u2 + " cap Lob) = I0", lhs, I0));
  }
  return out;
}

std::vector<VariantResult> lem_alpha_1b(const Cell& X) {
  Ideal K = X.intersect({"Uob", "L1", "L2"});
  std::vector<VariantResult> out;
  for (const std::string u2 : {"U2", "U2printed"}) {
    Ideal lhs = X.sum(X.intersect_ideals({K, X.component("U1")}),
                      X.intersect_ideals({K, X.component(u2)}));
    out.push_back(variant(X, u2, "(K cap U1) + (K cap " + u2 + ") = K, K = Uob cap L1 cap L2", lhs, K));
  }
  return out;
}

const std::map<std::string, LemmaDef>& lemmas() {
  static const std::map<std::string, LemmaDef> table{
      {"lem:ideal", {"id", VariantRule::Any, lem_ideal}},
      {"lem:ideal:0", {"id", VariantRule::All, lem_ideal_0}},
      {"lem:ideal:0:aux", {"id", VariantRule::All, aux_ideal_0}},
      {"lem:ideal:1:id", {"id", VariantRule::All, lem_ideal_1_id}},
      {"lem:ideal:0:alpha-1", {"alpha", VariantRule::Any, lem_alpha_1}},
      {"lem:ideal:0:alpha-2", {"alpha", VariantRule::All, lem_alpha_2}},
      {"lem:ideal:0:alpha:aux", {"alpha", VariantRule::All, aux_alpha}},
      {"lem:ideal:1:alpha-a", {"alpha", VariantRule::Primary, lem_alpha_1a}},
      {"lem:ideal:1:alpha-b", {"alpha", VariantRule::Primary, lem_alpha_1b}},
  };
  return table;
}

}  // namespace

std::vector<std::string> lemma_names() {
  std::vector<std::string> out;
  for (const auto& [n, _] : lemmas()) out.push_back(n);
  return out;
}

LemmaResult verify_lemma(const std::string& name, const CellParams& params) {
  auto it = lemmas().find(name);
  if (it == lemmas().end()) throw std::invalid_argument("verify_lemma: unknown lemma '" + name + "'");
  const LemmaDef& def = it->second;
  Cell cell = preset_cell(def.cell, params);
  LemmaResult r{name, def.cell, params, def.rule, false, "", def.run(cell)};
  for (const auto& v : r.variants)
    if (v.holds && r.certified.empty()) r.certified = v.name;
  switch (def.rule) {
    case VariantRule::All:
      r.holds = std::all_of(r.variants.begin(), r.variants.end(), [](const auto& v) { return v.holds; });
      break;
    case VariantRule::Any:
      r.holds = !r.certified.empty();
      break;
    case VariantRule::Primary:
      r.holds = r.variants.front().holds;
      break;
  }
  return r;
}

}  // namespace serre::ideal
