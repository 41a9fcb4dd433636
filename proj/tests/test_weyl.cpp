#include <doctest.h>

#include <deque>
#include <map>
#include <optional>
#include <set>

#include "serre/check/generators.hpp"
#include "serre/check/oracles.hpp"
#include "serre/weyl.hpp"

using namespace serre;

namespace {

// 3x3 monomial matrices over Z[v, 1/v]: entry (row, col) = v^exp or absent.
using Mat = std::array<std::array<std::optional<Int>, 3>, 3>;

Mat matrix(const AffElem1& x) {
  Mat m{};
  // permutation matrix (k,m)-entry delta_{k,s(m)} times diag(v^nu)
  for (int col = 0; col < 3; ++col) m[x.w(col + 1) - 1][col] = x.nu[col];
  return m;
}

Mat multiply(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (a[i][k] && b[k][j]) {
          REQUIRE_FALSE(c[i][j].has_value());  // stays monomial
          c[i][j] = *a[i][k] + *b[k][j];
        }
  return c;
}

// Deodhar's lifting property, recursing on a left descent of y.
bool lifting_leq(const AffElem1& x, const AffElem1& y, Base base) {
  if (length(y, base) == 0) return x == y;
  for (char c : {'a', 'b', 'g'}) {
    AffElem1 s = generator(c, base);
    AffElem1 sy = compose(s, y);
    if (length(sy, base) >= length(y, base)) continue;
    AffElem1 sx = compose(s, x);
    if (length(sx, base) < length(x, base)) return lifting_leq(sx, sy, base);
    return lifting_leq(x, sy, base);
  }
  FAIL("no left descent");
  return false;
}

// Cayley-graph distances in W_a from the identity, by left multiplication.
std::map<AffElem1, int> word_ball(Base base, int radius) {
  std::map<AffElem1, int> dist{{AffElem1{}, 0}};
  std::deque<AffElem1> q{AffElem1{}};
  while (!q.empty()) {
    AffElem1 x = q.front();
    q.pop_front();
    if (dist[x] == radius) continue;
    for (char c : {'a', 'b', 'g'}) {
      AffElem1 y = compose(generator(c, base), x);
      if (dist.emplace(y, dist[x] + 1).second) q.push_back(y);
    }
  }
  return dist;
}

std::vector<AffElem1> length_zero(Base base) {
  std::vector<AffElem1> out;
  for (const Perm& w : all_perms())
    for (Int a = -1; a <= 1; ++a)
      for (Int b = -1; b <= 1; ++b)
        for (Int c = -1; c <= 1; ++c)
          if (length(AffElem1{w, {a, b, c}}, base) == 0) out.push_back({w, {a, b, c}});
  return out;
}

}  // namespace

TEST_CASE("composition agrees with monomial matrix multiplication") {
  gen::Rng rng(1);
  for (int k = 0; k < 2000; ++k) {
    AffElem1 x = gen::aff1(rng, 4), y = gen::aff1(rng, 4);
    CHECK(matrix(compose(x, y)) == multiply(matrix(x), matrix(y)));
  }
  const AffElem1 g{Perm{{3, 2, 1}}, {-1, 0, 1}};
  CHECK(compose(g, g) == AffElem1{});
  CHECK(matrix(compose(g, g)) == multiply(matrix(g), matrix(g)));
}

TEST_CASE("group axioms and action") {
  gen::Rng rng(2);
  for (int k = 0; k < 500; ++k) {
    const std::size_t f = gen::uniform(rng, 1, 3);
    AffElem x = gen::aff(rng, f, 3), y = gen::aff(rng, f, 3), z = gen::aff(rng, f, 3);
    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
    CHECK(compose(x, identity_elem(f)) == x);
    CHECK(compose(x, inverse(x)) == identity_elem(f));
    FWeight mu;
    for (std::size_t j = 0; j < f; ++j) mu.push_back({gen::uniform(rng, -50, 50), gen::uniform(rng, -50, 50), gen::uniform(rng, -50, 50)});
    CHECK(dot(compose(x, y), mu, 31) == dot(x, dot(y, mu, 31), 31));
    CHECK(pi_inverse(pi(x)) == x);
    CHECK(pi(compose(x, y)) == compose(pi(x), pi(y)));
  }
  CHECK_THROWS_AS(compose(identity_elem(1), identity_elem(2)), std::invalid_argument);
}

TEST_CASE("dot action examples") {
  CHECK(dot(AffElem1{}, {5, 3, 1}, 31) == Vec3{5, 3, 1});
  CHECK(dot(AffElem1{Perm{{3, 2, 1}}, {-1, 0, 1}}, {15, 8, 0}, 31) == Vec3{29, 8, -14});
  CHECK(dot(translation({1, 0, -1}), {15, 8, 0}, 31) == Vec3{46, 8, -31});
}

TEST_CASE("length matches word distances") {
  for (Base base : {Base::plus, Base::minus}) {
    auto ball = word_ball(base, 5);
    auto omegas = length_zero(base);
    CHECK(omegas.size() >= 3);
    for (const auto& [x, d] : ball) {
      CHECK(length(x, base) == d);
      for (const auto& o : omegas) CHECK(length(compose(x, o), base) == d);
    }
  }
  CHECK(length(translation({1, 0, -1})) == 4);
  CHECK(length(word_element("aba", Base::plus)) == 3);
  CHECK(length(AffElem1{}) == 0);
}

TEST_CASE("length is subadditive") {
  gen::Rng rng(3);
  for (int k = 0; k < 1000; ++k) {
    AffElem1 x = gen::aff1(rng, 3), y = gen::aff1(rng, 3);
    CHECK(length(compose(x, y)) <= length(x) + length(y));
  }
}

TEST_CASE("reduced words evaluate back") {
  gen::Rng rng(4);
  for (Base base : {Base::plus, Base::minus})
    for (int k = 0; k < 300; ++k) {
      AffElem1 x = gen::aff1(rng, 3);
      ReducedWord r = reduced_word(x, base);
      CHECK(static_cast<int>(r.word.size()) == length(x, base));
      CHECK(compose(word_element(r.word, base), r.omega) == x);
      CHECK(length(r.omega, base) == 0);
    }
}

TEST_CASE("Bruhat order agrees with the lifting property") {
  for (Base base : {Base::plus, Base::minus}) {
    std::vector<AffElem1> elems;
    for (const auto& [x, d] : word_ball(base, 4)) elems.push_back(x);
    for (const auto& x : elems)
      for (const auto& y : elems) {
        bool leq = bruhat_leq(x, y, base);
        CHECK(leq == lifting_leq(x, y, base));
        if (leq) CHECK(length(x, base) <= length(y, base));
        if (leq && bruhat_leq(y, x, base)) CHECK(x == y);
      }
  }
  const AffElem1 ab = word_element("ab", Base::plus), aba = word_element("aba", Base::plus);
  CHECK(bruhat_leq(ab, aba));
  CHECK_FALSE(bruhat_leq(translation({1, 0, -1}), aba));
  CHECK_THROWS_AS(bruhat_leq(AffElem1{}, translation({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("admissible sets") {
  for (Base base : {Base::plus, Base::minus})
    for (const Vec3& lam : {Vec3{1, 0, -1}, Vec3{2, 1, 0}, Vec3{1, 0, 0}, Vec3{2, 0, 0}}) {
      auto adm = admissible_set(lam, base);
      CHECK(std::set<AffElem1>(adm.begin(), adm.end()) == oracle::admissible_by_subwords(lam, base));
      for (const auto& x : adm) CHECK(is_admissible(x, lam, base));
    }
  auto plus = admissible_set(kEta, Base::plus);
  CHECK(plus.size() == 25);
  std::map<int, int> profile;
  for (const auto& x : plus) ++profile[length(x)];
  CHECK(profile == std::map<int, int>{{0, 1}, {1, 3}, {2, 6}, {3, 9}, {4, 6}});
  CHECK(is_admissible(translation(kEta), kEta, Base::plus));
  CHECK(is_admissible(AffElem1{}, kEta, Base::plus));
  CHECK_FALSE(is_admissible(translation({2, 0, -2}), kEta, Base::plus));
  CHECK_THROWS_AS(admissible_set({0, 1, 0}, Base::plus), std::invalid_argument);
}

TEST_CASE("adjoint") {
  const AffElem1 gamma{Perm{{3, 2, 1}}, {1, 0, -1}};
  CHECK(star(gamma) == compose(translation({1, 0, -1}), finite(Perm{{3, 2, 1}})));
  CHECK(star(gamma) == generator('g', Base::plus));
  CHECK(star(AffElem1{}) == AffElem1{});
  gen::Rng rng(5);
  for (int k = 0; k < 500; ++k) {
    const std::size_t f = gen::uniform(rng, 1, 4);
    AffElem x = gen::aff(rng, f, 3), y = gen::aff(rng, f, 3);
    CHECK(star(compose(x, y)) == compose(star(y), star(x)));
    CHECK(star(star(x)) == x);
    CHECK(pi(star(x)) == star(pi_inverse(x)));
  }
  std::set<AffElem1> image;
  for (const auto& x : admissible_set({2, 1, 0}, Base::minus)) image.insert(star(x));
  auto plus = admissible_set({2, 1, 0}, Base::plus);
  CHECK(image == std::set<AffElem1>(plus.begin(), plus.end()));
}

TEST_CASE("parsing and printing") {
  CHECK(parse_aff1("Id") == AffElem1{});
  CHECK(parse_aff1("gaba") == translation({1, 0, -1}));
  CHECK(parse_aff1("(13)t(1,0,-1)") == AffElem1{Perm{{3, 2, 1}}, {1, 0, -1}});
  gen::Rng rng(6);
  for (int k = 0; k < 200; ++k) {
    AffElem1 x = gen::aff1(rng, 5);
    CHECK(parse_aff1(to_string(x)) == x);
  }
  for (const Perm& s : all_perms()) CHECK(perm_from_cycle(cycle_name(s)) == s);
  CHECK_THROWS(parse_aff1("xyz"));
}
