#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "serre/weyl.hpp"

namespace serre {

// Thrown when a weight lies on a wall <lambda+eta, alpha^vee> = n p.
struct WallError : std::domain_error {
  WallError(const std::string& root, Int n, std::size_t embedding);
  std::string root;
  Int n;
  std::size_t embedding;
};

// Pairings <lambda+eta, alpha^vee> for alpha1, alpha2, alpha0 = alpha1 + alpha2.
std::array<Int, 3> pairings(const Vec3& lam);

struct AlcoveDescriptor {
  // n[j] = (n_alpha1, n_alpha2, n_alpha0) with n p < pairing < (n+1) p
  std::vector<std::array<Int, 3>> n;

  bool restricted() const;
  // Per embedding "A" (lower restricted), "B" (upper restricted) or "?".
  std::string letters() const;
};

AlcoveDescriptor alcove_of(const FWeight& lam, Int p);
bool is_regular(const FWeight& lam, Int p);
bool is_restricted(const FWeight& lam, Int p);
// Largest n with p m + n < pairing < p (m+1) - n for every root and embedding.
Int depth(const FWeight& lam, Int p);

// Serre weight modulo (p - pi) X^0: base has third coordinate 0, twist in [0, p^f - 1).
struct SerreWeightNF {
  FWeight base;
  Int twist = 0;
  Int p = 0;

  std::size_t f() const { return base.size(); }
  auto operator<=>(const SerreWeightNF&) const = default;
};

SerreWeightNF serre_nf(const FWeight& lam, Int p);
// A restricted representative (the twist is placed in embedding 0).
FWeight representative(const SerreWeightNF& nf);
std::string to_string(const SerreWeightNF& nf);

Int ipow(Int base, unsigned e);
Int mod(Int a, Int m);
Int central_class(const FWeight& lam, Int p);
Int central_class(const SerreWeightNF& nf);

}  // namespace serre
