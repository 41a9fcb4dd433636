#include <doctest.h>

#include <optional>

#include "serre/check/generators.hpp"
#include "serre/frobenius.hpp"

using namespace serre;

namespace {

// Dense exponent grid: entry (row, col) or nothing.
using Grid = std::array<std::array<std::optional<Int>, 3>, 3>;

Grid grid(const MonoMat& m) {
  Grid g{};
  for (int col = 0; col < 3; ++col) g[m.w(col + 1) - 1][col] = m.exps[col];
  return g;
}

Grid product(const Grid& a, const Grid& b) {
  Grid c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (a[i][k] && b[k][j]) c[i][j] = *a[i][k] + *b[k][j];
  return c;
}

MonoMat random_mat(gen::Rng& rng) {
  MonoMat m;
  m.w = gen::perm(rng);
  m.exps = {gen::uniform(rng, -9, 9), gen::uniform(rng, -9, 9), gen::uniform(rng, -9, 9)};
  return m;
}

}  // namespace

TEST_CASE("monomial matrix products") {
  gen::Rng rng(51);
  for (int k = 0; k < 1000; ++k) {
    MonoMat a = random_mat(rng), b = random_mat(rng);
    CHECK(grid(a * b) == product(grid(a), grid(b)));
    AffElem1 x = gen::aff1(rng, 4);
    CHECK(to_aff(from_aff(x)) == x);
    CHECK(to_aff(a * b) == compose(to_aff(a), to_aff(b)));
  }
  MonoMat u;
  u.coef[0].units["u"] = 1;
  MonoMat uu = u * u;
  CHECK(uu.coef[0].units.at("u") == 2);
}

TEST_CASE("Frobenius twist and composition") {
  MonoMat a, b;
  a.exps = {1, 2, 3};
  b.exps = {4, 5, 6};
  CHECK(frobenius_twist(a, 7, 2).exps == Vec3{49, 98, 147});
  // f = 2: B(1) frob(B(0)) with B(0) = b, B(1) = a
  MonoMat c = compose_phi_f({b, a}, 7);
  CHECK(c.exps == Vec3{1 + 7 * 4, 2 + 7 * 5, 3 + 7 * 6});
  CHECK(compose_phi_f({a}, 7) == a);
  gen::Rng rng(52);
  for (int k = 0; k < 200; ++k) {
    std::vector<MonoMat> ms{random_mat(rng), random_mat(rng), random_mat(rng)};
    MonoMat r = compose_phi_f(ms, 5);
    CHECK(r.w == compose(compose(ms[2].w, ms[1].w), ms[0].w));
  }
}

TEST_CASE("phi matrices of a shape") {
  gen::Rng rng(53);
  const Int p = 101;
  for (int k = 0; k < 50; ++k) {
    TypeData td = gen::deep_type_data(rng, 1, p, 5);
    auto id = phi_matrices({AffElem1{}}, td);
    auto tr = phi_matrices({translation(kEta)}, td);
    REQUIRE(id.size() == 1);
    // the translation only shifts exponents
    CHECK(tr[0].w == id[0].w);
    Vec3 diff = tr[0].exps - id[0].exps;
    Vec3 sorted = diff;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == Vec3{-1, 0, 1});
    // exponent multiset is that of mu
    Vec3 e = id[0].exps, m = td.mu[0];
    std::sort(e.begin(), e.end());
    std::sort(m.begin(), m.end());
    CHECK(e == m);
  }
}

TEST_CASE("inertial types from phi^f") {
  const Int p = 11;
  MonoMat m;
  m.exps = {5, 3, 1};
  TameType t = inertial_type_of(m, p, 1);
  CHECK(type_equivalent(t, TameType{{Perm{}}, {{5, 3, 1}}}, p));
  MonoMat n;
  n.w = Perm{{2, 1, 3}};
  n.exps = {5, 3, 1};
  CHECK(order(inertial_type_of(n, p, 1).s[0]) == 2);
  // digits: mu = lambda_0 + p lambda_1
  MonoMat two;
  two.exps = {3 + 4 * p, 2 + 2 * p, 1};
  TameType t2 = inertial_type_of(two, p, 2);
  CHECK(type_equivalent(t2, TameType{{Perm{}, Perm{}}, {{3, 2, 1}, {4, 2, 0}}}, p));
}

TEST_CASE("type equivalence") {
  gen::Rng rng(54);
  const Int p = 31;
  for (int k = 0; k < 200; ++k) {
    const std::size_t f = gen::uniform(rng, 1, 3);
    TameType t = gen::deep_type(rng, f, p, 2);
    std::vector<Perm> s = gen::perms(rng, f);
    CHECK(type_equivalent(t, twist_type(t, s), p));
    CHECK(type_invariant(t, p) == type_invariant(twist_type(t, s), p));
  }
  TameType a{{Perm{}}, {{5, 3, 1}}}, b{{Perm{}}, {{6, 3, 1}}};
  CHECK_FALSE(type_equivalent(a, b, p));
}
