#include <doctest.h>

#include <set>

#include "serre/check/generators.hpp"
#include "serre/check/oracles.hpp"
#include "serre/extgraph.hpp"

using namespace serre;

namespace {

GraphVertex v1(Int m1, Int m2, int a) { return {{LW{m1, m2}}, {a}}; }

}  // namespace

TEST_CASE("lattice coordinates") {
  CHECK(to_z3({1, 1}) == Vec3{2, 1, 0});
  CHECK(from_z3({2, 1, 0}) == LW{1, 1});
  CHECK(sec({2, 3}) == Vec3{2, 0, -3});
  CHECK(lr_class({1, 0}) == 1);
  CHECK(lr_class({0, 1}) == 2);
  CHECK(can({1, -2}) == Vec3{0, -1, 1});
  CHECK_THROWS(can({1, 0}));
  gen::Rng rng(21);
  for (int k = 0; k < 300; ++k) {
    LW w{gen::uniform(rng, -9, 9), gen::uniform(rng, -9, 9)};
    CHECK(from_z3(to_z3(w)) == w);
    CHECK(from_z3(to_z3(w) + gen::uniform(rng, -4, 4) * kOne) == w);
    AffElem1 x = gen::aff1(rng, 3), y = gen::aff1(rng, 3);
    CHECK(act(compose(x, y), w) == act(x, act(y, w)));
  }
}

TEST_CASE("translation examples around mu + eta") {
  const Int p = 31;
  const FWeight c{Vec3{15, 8, 0} + kEta};
  CHECK(trns(c, v1(0, 0, 0), p) == serre_nf({{15, 8, 0}}, p));
  auto s1 = trns(c, v1(1, 1, 0), p);
  CHECK(s1.base == FWeight{{17, 9, 0}});
  CHECK(s1.twist == 29);
  auto s2 = trns(c, v1(0, 0, 1), p);
  CHECK(s2.base == FWeight{{43, 22, 0}});
  CHECK(s2.twist == 16);
  CHECK(trns_inverse(c, s1, p) == v1(1, 1, 0));
  CHECK(trns_inverse(c, s2, p) == v1(0, 0, 1));
  CHECK(trns_inverse(c, serre_nf({{15, 8, 0}}, p), p) == v1(0, 0, 0));
  CHECK_THROWS_AS(trns(c, v1(40, 0, 0), p), std::domain_error);
  // (16,8,0) has another central character
  CHECK_THROWS_AS(trns_inverse(c, serre_nf({{16, 8, 0}}, p), p), std::domain_error);
}

TEST_CASE("direct and scanning inverses agree") {
  gen::Rng rng(22);
  const Int p = 23;
  for (int k = 0; k < 60; ++k) {
    const std::size_t f = 1 + k % 2;
    FWeight mu = gen::deep_type(rng, f, p, 2).mu;
    GraphVertex v = gen::vertex_in_region(rng, mu, p);
    SerreWeightNF w = trns(mu, v, p);
    CHECK(trns_inverse(mu, w, p) == v);
    CHECK(trns_inverse_scan(mu, w, p) == v);
  }
}

TEST_CASE("adjacency") {
  CHECK(adjacent(v1(0, 0, 1), v1(0, 0, 0)));
  CHECK(adjacent(v1(1, 1, 0), v1(1, 0, 1)));
  CHECK_FALSE(adjacent(v1(1, 0, 0), v1(0, 1, 0)));
  CHECK_FALSE(adjacent(v1(0, 0, 0), v1(0, 0, 0)));
  gen::Rng rng(23);
  for (int k = 0; k < 500; ++k) {
    const std::size_t f = gen::uniform(rng, 1, 3);
    GraphVertex v;
    for (std::size_t j = 0; j < f; ++j) {
      v.omega.push_back({gen::uniform(rng, -5, 5), gen::uniform(rng, -5, 5)});
      v.a.push_back(static_cast<int>(gen::uniform(rng, 0, 1)));
    }
    auto ns = neighbors(v);
    CHECK(ns.size() == 7 * f);
    CHECK(std::set<GraphVertex>(ns.begin(), ns.end()).size() == ns.size());
    for (const auto& u : ns) {
      CHECK(oracle::adjacent_by_rule(v, u));
      CHECK(adjacent(u, v));
    }
    // every rule-adjacent vertex in a box is listed
    std::size_t found = 0;
    for (std::size_t j = 0; j < f; ++j)
      for (Int d1 = -2; d1 <= 2; ++d1)
        for (Int d2 = -2; d2 <= 2; ++d2) {
          GraphVertex u = v;
          u.omega[j].m1 += d1;
          u.omega[j].m2 += d2;
          u.a[j] ^= 1;
          found += oracle::adjacent_by_rule(v, u);
        }
    CHECK(found == ns.size());
  }
}

TEST_CASE("distances agree with whole-tuple search") {
  CHECK(distance(v1(0, 0, 0), v1(0, 0, 0)) == 0);
  CHECK(distance(v1(0, 0, 0), v1(0, 0, 1)) == 1);
  CHECK(distance(v1(0, 0, 0), v1(1, 1, 0)) == 2);
  gen::Rng rng(24);
  const Int p = 101;
  for (int k = 0; k < 150; ++k) {
    const std::size_t f = 1 + k % 2;
    FWeight mu = gen::deep_type(rng, f, p, static_cast<Int>(3 * f + 3)).mu;
    GraphVertex a = gen::vertex_in_region(rng, mu, p), b = a;
    // a nearby target keeps the search small
    for (int s = 0; s < 4; ++s) {
      auto ns = neighbors(b, mu, p);
      b = ns[gen::uniform(rng, 0, ns.size() - 1)];
    }
    auto bfs = oracle::product_bfs(a, {b}, mu, p, 10);
    REQUIRE(bfs.count(b));
    CHECK(distance(a, b, Region{mu, p}) == bfs.at(b));
    CHECK(distance(a, b) == oracle::product_bfs(a, {b}, std::nullopt, p, 10).at(b));
  }
}

TEST_CASE("bipartite") {
  gen::Rng rng(25);
  for (int k = 0; k < 200; ++k) {
    GraphVertex a{{LW{gen::uniform(rng, -6, 6), gen::uniform(rng, -6, 6)}}, {static_cast<int>(gen::uniform(rng, 0, 1))}};
    GraphVertex b{{LW{gen::uniform(rng, -6, 6), gen::uniform(rng, -6, 6)}}, {static_cast<int>(gen::uniform(rng, 0, 1))}};
    int d = distance(a, b);
    CHECK((d - (a.a[0] ^ b.a[0])) % 2 == 0);
    for (const auto& u : neighbors(b)) CHECK(std::abs(distance(a, u) - d) == 1);
  }
}

TEST_CASE("Sigma sets and defect") {
  CHECK(sigma0().size() == 9);
  CHECK(sigma0_obvious().size() == 6);
  CHECK(sigma0_inner().size() == 3);
  std::set<SigmaPair> all(sigma0().begin(), sigma0().end()), parts(sigma0_obvious().begin(), sigma0_obvious().end());
  parts.insert(sigma0_inner().begin(), sigma0_inner().end());
  CHECK(all == parts);
  CHECK(r_flip({{1, 0}, 1}) == SigmaPair{{1, 0}, 0});
  for (const auto& s : sigma0()) CHECK(r_flip(r_flip(s)) == s);
  CHECK(is_inner({{0, 0}, 0}));
  CHECK(defect({{{0, 0}, 0}}) == 1);
  CHECK(defect({{{0, 0}, 1}, {{1, 0}, 0}, {{0, 1}, 1}}) == 1);
  std::vector<SigmaPair> obv(sigma0_obvious().begin(), sigma0_obvious().begin() + 3);
  CHECK(defect(obv) == 0);
  CHECK(sigma_product(2).size() == 81);
}

TEST_CASE("central character is preserved") {
  gen::Rng rng(26);
  const Int p = 41;
  for (int k = 0; k < 300; ++k) {
    const std::size_t f = gen::uniform(rng, 1, 3);
    FWeight mu = gen::deep_type(rng, f, p, 2).mu;
    GraphVertex v = gen::vertex_in_region(rng, mu, p);
    CHECK(central_class(trns(mu, v, p)) == central_class(mu - eta(f), p));
  }
}

TEST_CASE("dot export") {
  std::vector<GraphVertex> vs{v1(0, 0, 0), v1(0, 0, 1), v1(1, 1, 0)};
  std::string dot = to_dot(vs);
  CHECK(dot.find("(0,0;1)") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);
}
