#include <doctest.h>

#include <map>
#include <set>

#include "serre/check/generators.hpp"
#include "serre/check/oracles.hpp"
#include "serre/lattices.hpp"

using namespace serre;

TEST_CASE("layers partition the JH set") {
  gen::Rng rng(41);
  const Int p = 101;
  for (int k = 0; k < 20; ++k) {
    const std::size_t f = 1 + k % 2;
    TameType t = gen::deep_type(rng, f, p, static_cast<Int>(3 * f + 1));
    auto ws = jh(t, p);
    const auto& sigma = ws[gen::uniform(rng, 0, ws.size() - 1)];
    auto layers = predicted_layers(t, sigma.weight, p);
    std::set<SerreWeightNF> seen;
    std::size_t total = 0;
    for (const auto& layer : layers) {
      total += layer.size();
      for (const auto& w : layer) seen.insert(w.weight);
    }
    CHECK(total == ws.size());
    CHECK(seen.size() == ws.size());
    CHECK(layers.front().size() == 1);
    CHECK(layers.front().front().weight == sigma.weight);
    CHECK(static_cast<int>(layers.size()) == static_cast<int>(3 * f) - defect(sigma.labels) + 1);
  }
}

TEST_CASE("duality between a defect-0 weight and its farthest weight") {
  gen::Rng rng(42);
  const Int p = 101;
  for (int k = 0; k < 10; ++k) {
    const std::size_t f = 1 + k % 2;
    TameType t = gen::deep_type(rng, f, p, static_cast<Int>(3 * f + 1));
    auto ws = jh(t, p);
    for (const auto& sigma : ws) {
      if (defect(sigma.labels) != 0) continue;
      PredictedGraph g = predicted_graph(t, sigma.weight, p);
      std::size_t far = 0;
      for (std::size_t j = 0; j < g.dist.size(); ++j)
        if (g.dist[j] == static_cast<int>(3 * f)) far = j;
      PredictedGraph h = predicted_graph(t, ws[far].weight, p);
      std::set<std::pair<std::size_t, std::size_t>> forward, backward;
      for (const auto& e : g.edges) forward.insert({e.to, e.from});
      for (const auto& e : h.edges) backward.insert({e.from, e.to});
      CHECK(forward == backward);
      break;
    }
  }
}

TEST_CASE("submodules match exhaustive closed subsets") {
  gen::Rng rng(43);
  const Int p = 101;
  for (int k = 0; k < 10; ++k) {
    TameType t = gen::deep_type(rng, 1, p, 4);
    auto ws = jh(t, p);
    for (const auto& sigma : ws) {
      PredictedGraph g = predicted_graph(t, sigma.weight, p);
      auto sub = submodules(g);
      CHECK(sub.count == oracle::closed_subsets(g.vertices.size(), g.edges));
      for (const auto& s : sub.sets) {
        std::set<std::size_t> in(s.begin(), s.end());
        for (const auto& e : g.edges)
          if (in.count(e.from)) CHECK(in.count(e.to));
      }
    }
  }
  // a chain 0 -> 1 -> 2 has the four closed sets {}, {2}, {1,2}, {0,1,2}
  CHECK(submodules(3, {{0, 1}, {1, 2}}).count == 4);
  CHECK_THROWS(submodules(100, {}, 81));
}

TEST_CASE("saturation matrix") {
  gen::Rng rng(44);
  TameType t = gen::deep_type(rng, 1, 101, 4);
  auto sat = saturation_predictions(t, 101);
  auto ws = jh(t, 101);
  REQUIRE(sat.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(sat[i][i] == 0);
    for (std::size_t j = 0; j < 9; ++j) {
      CHECK(sat[i][j] == sat[j][i]);
      if (adjacent(ws[i].vertex, ws[j].vertex)) CHECK(sat[i][j] == 1);
    }
    CHECK(*std::max_element(sat[i].begin(), sat[i].end()) == 3 - defect(ws[i].labels));
  }
}

TEST_CASE("Weyl module constituents") {
  CHECK(lambda_eta().size() == 13);
  const auto hull = lambda_eta();
  CHECK(std::set<LW>(hull.begin(), hull.end()) == oracle::hull_of_eta_orbit());
  auto pairs = lambda_eta_pairs();
  CHECK(pairs.size() == 20);
  std::map<char, int> letters;
  for (const auto& s : pairs) ++letters[weyl_letter(s)];
  CHECK(letters == std::map<char, int>{{'A', 1}, {'B', 1}, {'C', 3}, {'D', 3}, {'E', 3}, {'F', 3}, {'G', 6}});

  gen::Rng rng(45);
  const Int p = 101;
  for (int k = 0; k < 10; ++k) {
    FWeight mu{gen::upper_alcove(rng, p, 2)};
    auto cs = weyl_jh(mu, p);
    CHECK(cs.size() == 20);
    std::map<int, int> grades;
    for (const auto& c : cs) {
      ++grades[c.grade];
      if (c.letters == "B") {
        CHECK(c.grade == 0);
        CHECK(c.weight == serre_nf(mu, p));
      }
    }
    CHECK(grades == std::map<int, int>{{0, 1}, {1, 7}, {2, 6}, {3, 6}});
  }
  CHECK_THROWS(weyl_jh({{60, 31, 2}}, p));
}
