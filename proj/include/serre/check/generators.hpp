#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "serre/extgraph.hpp"
#include "serre/types.hpp"
#include "serre/weyl.hpp"

// Random inputs for property checks. All draws go through one seeded engine.
namespace serre::gen {

using Rng = std::mt19937_64;

Int uniform(Rng& rng, Int lo, Int hi);  // inclusive
Perm perm(Rng& rng);
std::vector<Perm> perms(Rng& rng, std::size_t f);

// lambda with n < <lambda + eta, alpha^vee> < p - n for every positive root.
Vec3 lower_alcove(Rng& rng, Int p, Int n);
// lambda n-deep in the upper restricted alcove B.
Vec3 upper_alcove(Rng& rng, Int p, Int n);

// R_s(mu) with mu - eta n-deep in the lowest alcove.
TameType deep_type(Rng& rng, std::size_t f, Int p, Int n);
// tau(s_tau, mu) with s*(mu) - eta n-deep in the lowest alcove.
TypeData deep_type_data(Rng& rng, std::size_t f, Int p, Int n);

GraphVertex vertex_in_region(Rng& rng, const FWeight& center, Int p);
// w t_nu with |nu_i| <= bound; in_wa restricts to sum(nu) = 0.
AffElem1 aff1(Rng& rng, Int bound, bool in_wa = false);
AffElem aff(Rng& rng, std::size_t f, Int bound, bool in_wa = false);

}  // namespace serre::gen
