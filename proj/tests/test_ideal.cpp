#include <doctest.h>

#include <algorithm>
#include <memory>
#include <set>

#include "serre/cells.hpp"
#include "serre/check/generators.hpp"
#include "serre/ideal.hpp"

using namespace serre::ideal;
using Rng = serre::gen::Rng;

namespace {

std::shared_ptr<Ring> ring(std::vector<std::string> vars, std::uint32_t p = 101) {
  return std::make_shared<Ring>(p, std::move(vars));
}

Ideal ideal(const std::shared_ptr<Ring>& R, const std::vector<std::string>& gens) {
  std::vector<Poly> ps;
  for (const auto& g : gens) ps.push_back(R->parse(g));
  return Ideal(R, ps);
}

Poly random_poly(Rng& rng, const Ring& R, int terms, int max_deg) {
  Poly f = R.constant(0);
  for (int k = 0; k < terms; ++k) {
    Poly t = R.constant(serre::gen::uniform(rng, 1, R.p() - 1));
    int d = static_cast<int>(serre::gen::uniform(rng, 0, max_deg));
    for (int e = 0; e < d; ++e) t = R.mul(t, R.var(serre::gen::uniform(rng, 0, R.nvars() - 1)));
    f = R.add(f, t);
  }
  return f;
}

// Monomial ideals as minimal sets of exponent vectors.
using Exps = std::vector<int>;
using MonoIdeal = std::set<Exps>;

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MonoIdeal minimal(const std::vector<Exps>& gens) {
  MonoIdeal out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && divides(gens[j], gens[i]) && (gens[j] != gens[i] || j < i)) redundant = true;
    if (!redundant) out.insert(gens[i]);
  }
  return out;
}

MonoIdeal mono_sum(const MonoIdeal& a, const MonoIdeal& b) {
  std::vector<Exps> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return minimal(all);
}

MonoIdeal mono_intersect(const MonoIdeal& a, const MonoIdeal& b) {
  std::vector<Exps> all;
  for (const auto& x : a)
    for (const auto& y : b) {
      Exps l(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) l[i] = std::max(x[i], y[i]);
      all.push_back(l);
    }
  return minimal(all);
}

Ideal to_ideal(const std::shared_ptr<Ring>& R, const MonoIdeal& m) {
  std::vector<Poly> ps;
  for (const auto& e : m) {
    Poly t = R->constant(1);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t = R->mul(t, R->var(i));
    ps.push_back(t);
  }
  return Ideal(R, ps);
}

MonoIdeal random_mono(Rng& rng, std::size_t nvars) {
  std::vector<Exps> gens;
  const int n = static_cast<int>(serre::gen::uniform(rng, 1, 4));
  for (int k = 0; k < n; ++k) {
    Exps e(nvars, 0);
    const int d = static_cast<int>(serre::gen::uniform(rng, 1, 3));
    for (int j = 0; j < d; ++j) ++e[serre::gen::uniform(rng, 0, nvars - 1)];
    gens.push_back(e);
  }
  return minimal(gens);
}

}  // namespace

TEST_CASE("parsing and printing") {
  auto R = ring({"x", "y", "z"});
  Poly f = R->parse("(x + 2*y)^2 - 4*y^2");
  CHECK(R->to_string(f) == R->to_string(R->parse("x^2 + 4*x*y")));
  CHECK(R->sub(R->parse("x/2 + x/2"), R->parse("x")).is_zero());
  Rng rng(61);
  for (int k = 0; k < 200; ++k) {
    Poly g = random_poly(rng, *R, 5, 4);
    CHECK(R->parse(R->to_string(g)).terms.size() == g.terms.size());
    CHECK(R->sub(R->parse(R->to_string(g)), g).is_zero());
  }
  CHECK_THROWS(R->parse("w"));
  CHECK_THROWS(R->parse("x/y"));
  CHECK_THROWS(Ring(100, {"x"}));
}

TEST_CASE("Groebner basics") {
  auto R = ring({"x", "y", "z"});
  auto G = groebner(*R, {R->parse("x")});
  REQUIRE(G.size() == 1);
  CHECK(R->to_string(G[0]) == "x");
  auto H = groebner(*R, {R->parse("x*y"), R->parse("x*z")});
  CHECK(H.size() == 2);
  CHECK(is_groebner(*R, H));
  Ideal I = ideal(R, {"x^2 - y", "x^3"});
  CHECK(I.contains(R->parse("y^3")));
  CHECK(I.contains(R->parse("x*y")));
  CHECK_FALSE(I.contains(R->parse("y")));
}

TEST_CASE("Buchberger postcondition and normal forms") {
  Rng rng(62);
  for (int k = 0; k < 60; ++k) {
    auto R = ring({"x", "y", "z", "w"}, 31);
    std::vector<Poly> gens;
    const int n = static_cast<int>(serre::gen::uniform(rng, 1, 3));
    for (int j = 0; j < n; ++j) gens.push_back(random_poly(rng, *R, 3, 2));
    Ideal I(R, gens);
    const auto& G = I.basis();
    CHECK(is_groebner(*R, G));
    for (std::size_t a = 0; a < G.size(); ++a)
      for (std::size_t b = a + 1; b < G.size(); ++b) CHECK(normal_form(*R, s_polynomial(*R, G[a], G[b]), G).is_zero());
    for (int t = 0; t < 10; ++t) {
      Poly f = random_poly(rng, *R, 4, 3);
      Poly nf = I.reduce(f);
      CHECK(R->sub(I.reduce(nf), nf).is_zero());
      CHECK(I.contains(R->sub(f, nf)));
      // combinations of generators are members
      Poly g = R->constant(0);
      for (const auto& x : gens) g = R->add(g, R->mul(random_poly(rng, *R, 2, 2), x));
      CHECK(I.contains(g));
    }
  }
}

TEST_CASE("sum and intersection examples") {
  auto R = ring({"x", "y", "z"});
  Ideal xy = ideal(R, {"x"}), y = ideal(R, {"y"});
  CHECK(ideal_eq(ideal_intersect(xy, y), ideal(R, {"x*y"})));
  CHECK(ideal_eq(ideal_intersect(ideal(R, {"x", "y"}), ideal(R, {"x", "z"})), ideal(R, {"x", "y*z"})));
  CHECK(ideal_eq(ideal_sum(xy, ideal(R, {"0"})), xy));
  CHECK_FALSE(ideal_eq(xy, y));
  auto S = ring({"x", "y", "z"});
  CHECK_THROWS(ideal_sum(xy, ideal(S, {"x"})));
  auto rep = compare_ideals(xy, ideal(R, {"x", "y"}));
  CHECK_FALSE(rep.equal);
  CHECK(rep.left_in_right.size() == 1);
  CHECK(rep.left_in_right[0].member);
  CHECK_FALSE(rep.right_in_left[1].member);
}

TEST_CASE("monomial ideals against exact lcm arithmetic") {
  Rng rng(63);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = serre::gen::uniform(rng, 2, 4);
    std::vector<std::string> vars{"x", "y", "z", "w"};
    vars.resize(n);
    auto R = ring(vars, 7);
    MonoIdeal a = random_mono(rng, n), b = random_mono(rng, n), c = random_mono(rng, n);
    Ideal A = to_ideal(R, a), B = to_ideal(R, b), C = to_ideal(R, c);
    CHECK(ideal_eq(ideal_intersect(A, B), to_ideal(R, mono_intersect(a, b))));
    CHECK(ideal_eq(ideal_sum(A, B), to_ideal(R, mono_sum(a, b))));
    // modular law: with B contained in A, A cap (B + C) = B + (A cap C)
    Ideal AB = ideal_sum(A, B);
    CHECK(ideal_eq(ideal_intersect(AB, ideal_sum(B, C)), ideal_sum(B, ideal_intersect(AB, C))));
    // distributivity holds for monomial ideals
    CHECK(ideal_eq(ideal_intersect(A, ideal_sum(B, C)), ideal_sum(ideal_intersect(A, B), ideal_intersect(A, C))));
  }
}

TEST_CASE("equality is an equivalence") {
  Rng rng(64);
  auto R = ring({"x", "y", "z"}, 13);
  for (int k = 0; k < 40; ++k) {
    std::vector<Poly> g{random_poly(rng, *R, 3, 2), random_poly(rng, *R, 3, 2)};
    Ideal I(R, g);
    // the same ideal under another generating set
    Ideal J(R, {R->add(g[0], R->mul(random_poly(rng, *R, 2, 1), g[1])), g[1]});
    Ideal K(R, I.basis());
    CHECK(ideal_eq(I, I));
    CHECK(ideal_eq(I, J) == ideal_eq(J, I));
    CHECK(ideal_eq(I, J));
    CHECK(ideal_eq(J, K));
    CHECK(ideal_eq(I, K));
  }
}

TEST_CASE("cells") {
  Cell id = preset_cell("id");
  CHECK(id.component("W1").contains(id.ring->parse("c33")));
  CHECK(id.order.size() == 6);
  Cell ab = preset_cell("alphabeta");
  CHECK(ideal_eq(ab.component("U1"), ab.parse({"c12", "c31"})));
  Cell al = preset_cell("alpha");
  CHECK(al.order.size() >= 4);
  CHECK_THROWS_AS(preset_cell("id", CellParams{5, 5, 0, 101}), std::domain_error);
  CHECK_THROWS(preset_cell("beta"));
}

TEST_CASE("ideal lemmas") {
  for (const CellParams& pr : {CellParams{70, 35, 0, 101}, CellParams{55, 20, 3, 101}}) {
    for (const auto& name : lemma_names()) CHECK_MESSAGE(verify_lemma(name, pr).holds, name);
    auto r = verify_lemma("lem:ideal", pr);
    CHECK(r.certified == "proof");
    for (const auto& v : r.variants) {
      if (v.name != "statement") continue;
      CHECK_FALSE(v.holds);
      bool witness = false;
      for (const auto& g : v.report.left_in_right) witness = witness || !g.member;
      for (const auto& g : v.report.right_in_left) witness = witness || !g.member;
      CHECK(witness);
    }
  }
  // W1 cap L2 cap L3 = (c22, c33) in the quotient
  Cell id = preset_cell("id");
  CHECK(id.equal(id.intersect({"W1", "L2", "L3"}), id.parse({"c22", "c33"})).equal);
  CHECK_THROWS(verify_lemma("no such lemma"));
}
