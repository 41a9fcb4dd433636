#include "serre/check/generators.hpp"

#include <stdexcept>

namespace serre::gen {

Int uniform(Rng& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

Perm perm(Rng& rng) { return all_perms()[uniform(rng, 0, 5)]; }

std::vector<Perm> perms(Rng& rng, std::size_t f) {
  std::vector<Perm> out;
  for (std::size_t j = 0; j < f; ++j) out.push_back(perm(rng));
  return out;
}

namespace {

// b = pairings with eta added: b1, b2 and b1 + b2.
Vec3 from_pairings(Int b1, Int b2, Int z) { return {z + b1 + b2 - 2, z + b2 - 1, z}; }

}  // namespace

Vec3 lower_alcove(Rng& rng, Int p, Int n) {
  if (p <= 3 * n + 3) throw std::invalid_argument("lower_alcove: p too small for the requested depth");
  while (true) {
    Int b1 = uniform(rng, n + 1, p - n - 1), b2 = uniform(rng, n + 1, p - n - 1);
    if (b1 + b2 < p - n) return from_pairings(b1, b2, uniform(rng, -p, p));
  }
}

Vec3 upper_alcove(Rng& rng, Int p, Int n) {
  if (p <= 3 * n + 3) throw std::invalid_argument("upper_alcove: p too small for the requested depth");
  while (true) {
    Int b1 = uniform(rng, n + 1, p - n - 1), b2 = uniform(rng, n + 1, p - n - 1);
    if (b1 + b2 > p + n) return from_pairings(b1, b2, uniform(rng, -p, p));
  }
}

TameType deep_type(Rng& rng, std::size_t f, Int p, Int n) {
  TameType t{perms(rng, f), {}};
  for (std::size_t j = 0; j < f; ++j) t.mu.push_back(lower_alcove(rng, p, n) + kEta);
  return t;
}

TypeData deep_type_data(Rng& rng, std::size_t f, Int p, Int n) {
  TypeData t{perm(rng), {}};
  for (std::size_t j = 0; j < f; ++j) t.mu.push_back(act(perm(rng), lower_alcove(rng, p, n) + kEta));
  return t;
}

GraphVertex vertex_in_region(Rng& rng, const FWeight& center, Int p) {
  GraphVertex v;
  for (const auto& c : center) {
    while (true) {
      LW w{uniform(rng, -p, p), uniform(rng, -p, p)};
      if (in_region(c, w, p)) {
        v.omega.push_back(w);
        break;
      }
    }
    v.a.push_back(static_cast<int>(uniform(rng, 0, 1)));
  }
  return v;
}

AffElem1 aff1(Rng& rng, Int bound, bool in_wa) {
  while (true) {
    AffElem1 x{perm(rng), {uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound)}};
    if (!in_wa || x.nu[0] + x.nu[1] + x.nu[2] == 0) return x;
  }
}

AffElem aff(Rng& rng, std::size_t f, Int bound, bool in_wa) {
  AffElem x;
  for (std::size_t j = 0; j < f; ++j) x.comps.push_back(aff1(rng, bound, in_wa));
  return x;
}

}  // namespace serre::gen
