#include <doctest.h>

#include "serre/check/generators.hpp"
#include "serre/weights.hpp"

using namespace serre;

namespace {

// Largest n with p m + n < pairing < p (m + 1) - n, scanning n upwards.
Int depth_by_scan(const FWeight& lam, Int p) {
  Int n = -1;
  while (true) {
    for (const auto& l : lam)
      for (Int b : {l[0] - l[1] + 1, l[1] - l[2] + 1, l[0] - l[2] + 2}) {
        Int m = b >= 0 ? b / p : -((-b + p - 1) / p);
        if (!(p * m + n + 1 < b && b < p * (m + 1) - n - 1)) return n;
      }
    ++n;
  }
}

}  // namespace

TEST_CASE("alcoves") {
  CHECK(alcove_of({{15, 8, 0}}, 31).letters() == "A");
  CHECK(alcove_of({{29, 8, -14}}, 31).letters() == "B");
  CHECK(alcove_of({{15, 8, 0}}, 31).restricted());
  CHECK_THROWS_AS(alcove_of({{30, 0, -1}}, 31), WallError);
  try {
    alcove_of({{30, 0, -1}}, 31);
  } catch (const WallError& e) {
    CHECK(e.root == "alpha1");
    CHECK(e.n == 1);
  }
}

TEST_CASE("depth") {
  // pairings with eta are 8, 9, 17
  CHECK(depth({{15, 8, 0}}, 31) == 7);
  CHECK(depth_by_scan({{15, 8, 0}}, 31) == 7);
  CHECK_THROWS(depth({{30, 0, -1}}, 31));
  gen::Rng rng(11);
  for (int k = 0; k < 2000; ++k) {
    const Int p = 31;
    FWeight lam{{gen::uniform(rng, -60, 60), gen::uniform(rng, -60, 60), gen::uniform(rng, -60, 60)}};
    if (!is_regular(lam, p)) continue;
    Int d = depth(lam, p);
    CHECK(d == depth_by_scan(lam, p));
    AffElem1 x = gen::aff1(rng, 2, true);
    CHECK(depth({dot(x, lam[0], p)}, p) == d);
  }
}

TEST_CASE("normal forms") {
  const Int p = 31;
  auto a = serre_nf({{5, 3, 0}}, p);
  CHECK(a.base == FWeight{{5, 3, 0}});
  CHECK(a.twist == 0);
  auto b = serre_nf({{6, 4, 1}}, p);
  CHECK(b.base == FWeight{{5, 3, 0}});
  CHECK(b.twist == 1);
  auto c = serre_nf({Vec3{5, 3, 0} + (p - 1) * kOne}, p);
  // twists live in Z/(p^f - 1)
  CHECK(c == a);
  CHECK(c != b);
  CHECK_THROWS(serre_nf({{40, 3, 0}}, p));

  gen::Rng rng(12);
  for (int k = 0; k < 2000; ++k) {
    const std::size_t f = gen::uniform(rng, 1, 3);
    FWeight lam;
    for (std::size_t j = 0; j < f; ++j) {
      Int z = gen::uniform(rng, -40, 40);
      lam.push_back({z + gen::uniform(rng, 0, 15), z + gen::uniform(rng, 0, 15), z});
      lam.back()[0] = std::max(lam.back()[0], lam.back()[1]);
    }
    // lam + (p c_j - c_{j-1}) (1,1,1)
    FWeight moved = lam;
    std::vector<Int> cs;
    for (std::size_t j = 0; j < f; ++j) cs.push_back(gen::uniform(rng, -5, 5));
    for (std::size_t j = 0; j < f; ++j) moved[j] = moved[j] + (p * cs[j] - cs[(j + f - 1) % f]) * kOne;
    auto n1 = serre_nf(lam, p);
    CHECK(n1 == serre_nf(moved, p));
    CHECK(serre_nf(representative(n1), p) == n1);
    CHECK(central_class(n1) == central_class(lam, p));
    for (std::size_t j = 0; j < f; ++j) CHECK(n1.base[j][2] == 0);
    CHECK(n1.twist >= 0);
    CHECK(n1.twist < ipow(p, f) - 1);
  }
}

TEST_CASE("central class") {
  const Int p = 7;
  CHECK(central_class({{0, 0, 0}}, p) == 0);
  gen::Rng rng(13);
  for (int k = 0; k < 500; ++k) {
    const std::size_t f = gen::uniform(rng, 1, 3);
    FWeight lam, nu;
    for (std::size_t j = 0; j < f; ++j) {
      lam.push_back({gen::uniform(rng, -20, 20), gen::uniform(rng, -20, 20), gen::uniform(rng, -20, 20)});
      nu.push_back({gen::uniform(rng, -5, 5), gen::uniform(rng, -5, 5), gen::uniform(rng, -5, 5)});
    }
    const Int m = ipow(p, f) - 1;
    FWeight permuted;
    for (const auto& l : lam) permuted.push_back(act(gen::perm(rng), l));
    CHECK(central_class(permuted, p) == central_class(lam, p));
    FWeight shifted = lam;
    for (std::size_t j = 0; j < f; ++j) shifted[j] = shifted[j] + p * nu[j];
    shifted = shifted - pi(nu);
    CHECK(central_class(shifted, p) == central_class(lam, p));
    CHECK(central_class(lam + nu, p) == mod(central_class(lam, p) + central_class(nu, p), m));
    CHECK(central_class(pi(lam), p) == mod(p * central_class(lam, p), m));
  }
}
