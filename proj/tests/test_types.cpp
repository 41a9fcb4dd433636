#include <doctest.h>

#include <set>

#include "serre/check/generators.hpp"
#include "serre/check/oracles.hpp"
#include "serre/types.hpp"

using namespace serre;

namespace {

std::set<SerreWeightNF> weights(const std::vector<LabeledWeight>& ws) {
  std::set<SerreWeightNF> out;
  for (const auto& w : ws) out.insert(w.weight);
  return out;
}

}  // namespace

TEST_CASE("JH sets") {
  gen::Rng rng(31);
  const Int p = 53;
  for (int k = 0; k < 40; ++k) {
    const std::size_t f = 1 + k % 2;
    TameType t = gen::deep_type(rng, f, p, 4);
    auto ws = jh(t, p);
    CHECK(weights(ws).size() == (f == 1 ? 9u : 81u));
    // every constituent shares the central character of the type
    for (const auto& w : ws) CHECK(central_class(w.weight) == central_class(t.mu - eta(f), p));
    // R_{w~}(mu) only depends on w~ through w and w~(0)
    AffElem x = gen::aff(rng, f, 1, true);
    TameType a = affine_type(x, t.mu);
    CHECK(a.mu == t.mu + at_zero(x));
  }
  CHECK_THROWS(jh(TameType{{Perm{}}, {{1, 1, 1}}}, p));
}

TEST_CASE("obvious weights sit inside W?") {
  gen::Rng rng(32);
  const Int p = 67;
  for (int k = 0; k < 30; ++k) {
    const std::size_t f = 1 + k % 3;
    FWeight lam;
    for (std::size_t j = 0; j < f; ++j) lam.push_back(gen::lower_alcove(rng, p, 5) + kEta + kOne);
    for (int niveau = 1; niveau <= 3; ++niveau) {
      RhoData rho = RhoData::from_niveau(niveau, lam);
      auto wq = weights(w_question(rho, p));
      auto ob = obvious_weights(rho, p);
      std::set<SerreWeightNF> obs(ob.begin(), ob.end());
      CHECK(wq.size() == static_cast<std::size_t>(ipow(9, f)));
      CHECK(obs.size() == static_cast<std::size_t>(ipow(6, f)));
      CHECK(std::includes(wq.begin(), wq.end(), obs.begin(), obs.end()));
    }
  }
}

TEST_CASE("intersections vanish outside the admissible set") {
  gen::Rng rng(33);
  const Int p = 101;
  auto adm = oracle::admissible_by_subwords(kEta, Base::plus);
  int tested = 0;
  while (tested < 40) {
    AffElem1 x = gen::aff1(rng, 2, true);
    auto got = intersect_types(gen::deep_type(rng, 1, p, 10), AffElem{{x}}, p).front();
    CHECK(got.empty() != (adm.count(x) > 0));
    ++tested;
  }
  // Sigma for w~ = Id is the whole obvious part of the intersection
  TameType t{{Perm{}}, {{60, 31, 2}}};
  auto id = intersect_types(t, AffElem{{AffElem1{}}}, p).front();
  CHECK(id.size() == 6);
}

TEST_CASE("shape weights count") {
  gen::Rng rng(34);
  const Int p = 101;
  for (const auto& x : admissible_set(kEta, Base::minus)) {
    TypeData td = gen::deep_type_data(rng, 1, p, 6);
    auto ws = weights(shape_weights({x}, td, p));
    int l = length(x, Base::minus);
    if (l >= 2) CHECK(ws.size() == static_cast<std::size_t>(1 << (4 - l)));
    CHECK(!ws.empty());
    // shape weights are predicted weights of the matching rho
    auto wq = weights(w_question(shape_rho({x}, td), p));
    CHECK(std::includes(wq.begin(), wq.end(), ws.begin(), ws.end()));
  }
}

TEST_CASE("orientation") {
  gen::Rng rng(35);
  for (int k = 0; k < 100; ++k) {
    const std::size_t f = gen::uniform(rng, 1, 3);
    TypeData td = gen::deep_type_data(rng, f, 101, 3);
    Orientation o = orient(td);
    for (std::size_t j = 0; j < f; ++j) {
      const Vec3& m = o.s_star_mu[j];
      CHECK(m[0] > m[1]);
      CHECK(m[1] > m[2]);
    }
  }
  CHECK_THROWS(orient(TypeData{Perm{}, {{5, 5, 1}}}));
}

TEST_CASE("elimination") {
  gen::Rng rng(36);
  const Int p = 101;
  int done = 0;
  for (int k = 0; k < 200 && done < 20; ++k) {
    FWeight lam{gen::lower_alcove(rng, p, 12) + kEta + kOne};
    RhoData rho = RhoData::from_niveau(static_cast<int>(gen::uniform(rng, 1, 3)), lam);
    auto wq = weights(w_question(rho, p));
    // candidates: constituents of a nearby type that fall outside W?
    for (const auto& w : jh(TameType{{gen::perm(rng)}, {lam[0] + Vec3{1, 0, -1}}}, p)) {
      if (wq.count(w.weight)) continue;
      Elimination e = eliminate(w.weight, rho, p);
      auto js = weights(jh(e.type, p));
      CHECK(js.count(w.weight) == 1);
      for (const auto& x : wq) CHECK(js.count(x) == 0);
      ++done;
      break;
    }
  }
  CHECK(done > 0);
  FWeight lam{{60, 31, 2}};
  RhoData rho = RhoData::from_niveau(1, lam);
  auto wq = w_question(rho, p);
  CHECK_THROWS(eliminate(wq.front().weight, rho, p));
}
