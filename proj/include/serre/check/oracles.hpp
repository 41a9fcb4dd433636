#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "serre/extgraph.hpp"
#include "serre/weyl.hpp"

// Slow reference implementations, written from the definitions and kept apart
// from the library code paths they are compared against.
namespace serre::oracle {

// Adm(lambda) by the subword property: for each t_{s(lambda)} find a reduced word by
// greedy left descent and collect all subword products times the length-zero part.
std::set<AffElem1> admissible_by_subwords(const Vec3& lambda, Base base);

// Lattice points of the convex hull of the W-orbit of eta, in (m1, m2) coordinates.
std::set<LW> hull_of_eta_orbit();
// Pairs (omega, a) over the hull with a = 0 forced on the orbit of eta itself.
std::set<SigmaPair> hull_pairs();

// Adjacency read directly off the definition: one embedding changes, its bit flips,
// and omega moves by 0, +-(omega1 - omega2), +-omega1 or +-omega2.
bool adjacent_by_rule(const GraphVertex& x, const GraphVertex& y);

// Breadth-first search over whole f-tuples (no per-embedding decomposition). With a
// center the search stays inside Lambda_W^center x {0,1}^f. Stops once every target
// is reached or the radius is exhausted.
std::map<GraphVertex, int> product_bfs(const GraphVertex& source, const std::set<GraphVertex>& targets,
                                       const std::optional<FWeight>& center, Int p, int radius);

// Subsets of {0..n-1} closed under out-edges, by trying all 2^n of them.
std::uint64_t closed_subsets(std::size_t n, const std::vector<DotEdge>& edges);

}  // namespace serre::oracle
