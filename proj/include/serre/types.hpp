#pragma once

#include <set>
#include <string>
#include <vector>

#include "serre/extgraph.hpp"
#include "serre/weights.hpp"
#include "serre/weyl.hpp"

namespace serre {

// Deligne-Lusztig type R_s(mu).
struct TameType {
  std::vector<Perm> s;
  FWeight mu;

  std::size_t f() const { return s.size(); }
  auto operator<=>(const TameType&) const = default;
};

// R_{w~}(mu) := R_w(mu + w~(0)).
TameType affine_type(const AffElem& w, const FWeight& mu);
std::string to_string(const TameType& t);

// A Jordan-Hoelder constituent with its coordinates: `labels` in Sigma, `vertex`
// relative to the center used for Trns.
struct LabeledWeight {
  std::vector<SigmaPair> labels;
  GraphVertex vertex;
  SerreWeightNF weight;
};

// Genericity report; only depth < 0 is a hard error.
struct DepthCheck {
  Int depth;
  bool ok(Int required) const { return depth >= required; }
};
DepthCheck check_center(const FWeight& center, Int p);

// JH(R_s(lambda)) = F(Trns_lambda(s(Sigma))).
std::vector<LabeledWeight> jh(const TameType& t, Int p);

// Restriction of rhobar to inertia, V = R_s(lambda); the weights use center lambda - 1.
struct RhoData {
  TameType v;

  // Niveau patterns R_1, R_(12), R_(123) with exponent triple lambda in every embedding.
  static RhoData from_niveau(int niveau, const FWeight& lambda);
};

// W?(rhobar) = F(Trns_{lambda-1}(s r(Sigma))).
std::vector<LabeledWeight> w_question(const RhoData& rho, Int p);
// The 6^f obvious weights, from the W~_1^{+,der} description.
std::vector<SerreWeightNF> obvious_weights(const RhoData& rho, Int p);

// Per-embedding Sigma_{w~_j}: JH(R_s(mu)) intersected with W? of R_{s w}(mu + 1 + s w~(0)).
std::vector<std::set<SigmaPair>> intersect_types(const TameType& t1, const AffElem& w, Int p);

// Orientation data of a type tau(s_tau, mu), which is isomorphic to R_{(s_tau,1,...,1)}(mu).
struct TypeData {
  Perm s_tau;
  FWeight mu;
};

struct Orientation {
  std::vector<Perm> s;          // s_j sorts mu_{f-1-j} strictly decreasing
  std::vector<Perm> s_tau_mu;   // s_{tau,mu,j}
  std::vector<Perm> s_star;     // s*_{tau,mu,j} = s_{tau,mu,f-1-j}^{-1}
  FWeight s_star_mu;            // s*(mu)_j = s_{f-1-j}^{-1}(mu_j)
};

Orientation orient(const TypeData& t);
TameType type_of(const TypeData& t);  // R_{(s_tau,1,...,1)}(mu)
TameType reflected_type(const TypeData& t);  // R_{s*_{tau,mu}}(s*(mu))

// W?(rhobar, tau) for a shape in Adm^-(eta)^f.
std::vector<LabeledWeight> shape_weights(const std::vector<AffElem1>& shape, const TypeData& t, Int p);
// The W? set matched with a shape: V = R_{s* w~*}(s*(mu) + 1).
RhoData shape_rho(const std::vector<AffElem1>& shape, const TypeData& t);

struct Elimination {
  TameType type;
  AffElem witness;        // w~ in W_a; empty when the central characters differ
  std::size_t embedding;  // embedding where the witness leaves Adm+(eta)
  bool central_mismatch;
};

// A type containing sw whose JH set misses W?(rho). Requires sw not in W?(rho).
Elimination eliminate(const SerreWeightNF& sw, const RhoData& rho, Int p);

}  // namespace serre
