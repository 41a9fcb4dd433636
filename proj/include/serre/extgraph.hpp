#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "serre/weights.hpp"
#include "serre/weyl.hpp"

namespace serre {

// m1 omega1 + m2 omega2 in the weight lattice Lambda_W of SL3.
struct LW {
  Int m1 = 0;
  Int m2 = 0;

  auto operator<=>(const LW&) const = default;
};

LW operator+(const LW& a, const LW& b);
LW operator-(const LW& a, const LW& b);
LW operator-(const LW& a);

Vec3 to_z3(const LW& w);   // (m1+m2, m2, 0)
LW from_z3(const Vec3& v);  // (x-y, y-z)
int lr_class(const LW& w);  // (m1 - m2) mod 3
Vec3 sec(const LW& w);      // (m1, 0, -m2)
// Embedding of the root lattice into {sum = 0}; requires lr_class(nu) == 0.
Vec3 can(const LW& nu);
// (w t_nu) acting on Lambda_W by omega -> w(omega + nu).
LW act(const AffElem1& x, const LW& w);
LW act(const Perm& s, const LW& w);

struct GraphVertex {
  std::vector<LW> omega;
  std::vector<int> a;  // 0 = lower alcove A, 1 = upper alcove B

  std::size_t f() const { return omega.size(); }
  auto operator<=>(const GraphVertex&) const = default;
};

std::string to_string(const GraphVertex& v);  // "(m1,m2;a)|(m1,m2;a)..."

// Row of the normal-form table: (class of omega_{i+1}, a_{i+1}) -> (w_i, omega0_{i+1}).
struct PPRow {
  int cls;
  int a;
  Perm w;
  LW omega0;
  AffElem1 element;  // w t_{-sec(omega0)}, mapping the base alcove to alcove a
};

const std::array<PPRow, 6>& table_pp();
const PPRow& pp_lookup(int cls, int a);

// omega in Lambda_W^mu: omega + mu - eta lies in the lowest restricted alcove.
bool in_region(const FWeight& mu, const std::vector<LW>& omega, Int p);
bool in_region(const Vec3& mu, const LW& omega, Int p);

// Unnormalized representative Trns'_mu(omega, a).
FWeight trns_weight(const FWeight& mu, const GraphVertex& v, Int p);
SerreWeightNF trns(const FWeight& mu, const GraphVertex& v, Int p);
// Direct solve over the 6^f choices of table rows.
GraphVertex trns_inverse(const FWeight& mu, const SerreWeightNF& sw, Int p);
// Exhaustive scan over Lambda_W^mu x {0,1}^f; slow, meant for cross-checks.
GraphVertex trns_inverse_scan(const FWeight& mu, const SerreWeightNF& sw, Int p);

bool adjacent(const GraphVertex& v1, const GraphVertex& v2);
const std::array<LW, 7>& adjacency_steps();
// All neighbours in the unrestricted graph (7 f of them).
std::vector<GraphVertex> neighbors(const GraphVertex& v);
// Neighbours inside Lambda_W^mu x {0,1}^f.
std::vector<GraphVertex> neighbors(const GraphVertex& v, const FWeight& mu, Int p);

// Search region for distances; no center means the whole lattice.
struct Region {
  std::optional<FWeight> center;
  Int p = 0;
};

// Shortest path length. The graph is the Cartesian product of the per-embedding
// graphs (and so is the region), so this is a sum of per-embedding BFS distances.
int distance(const GraphVertex& v1, const GraphVertex& v2, const Region& region = {});
int embedding_distance(const LW& w1, int a1, const LW& w2, int a2, const std::optional<Vec3>& center, Int p);

struct SigmaPair {
  LW omega;
  int a = 0;

  auto operator<=>(const SigmaPair&) const = default;
};

std::string to_string(const SigmaPair& s);
const std::vector<SigmaPair>& sigma0();
const std::vector<SigmaPair>& sigma0_obvious();
const std::vector<SigmaPair>& sigma0_inner();
bool is_inner(const SigmaPair& s);
SigmaPair r_flip(const SigmaPair& s);
std::vector<std::vector<SigmaPair>> sigma_product(std::size_t f);
GraphVertex to_vertex(const std::vector<SigmaPair>& labels);
std::vector<SigmaPair> to_labels(const GraphVertex& v);
int defect(const std::vector<SigmaPair>& labels);

struct DotEdge {
  std::size_t from;
  std::size_t to;
};
// Induced subgraph in DOT; edges default to all adjacent pairs.
std::string to_dot(const std::vector<GraphVertex>& vertices, const std::vector<DotEdge>* edges = nullptr,
                   const std::vector<int>* ranks = nullptr);

}  // namespace serre
