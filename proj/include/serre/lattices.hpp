#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "serre/types.hpp"

namespace serre {

// Everything here is a prediction read off the extension graph, not a computed module structure.

struct PredictedGraph {
  std::vector<LabeledWeight> vertices;  // jh(t)
  std::size_t cosocle = 0;              // index of sigma
  std::vector<int> dist;                // distance from sigma
  std::vector<DotEdge> edges;           // k1 -> k2: adjacent and dist(k1) <= dist(k2)
};

std::vector<std::vector<LabeledWeight>> predicted_layers(const TameType& t, const SerreWeightNF& sigma, Int p);
PredictedGraph predicted_graph(const TameType& t, const SerreWeightNF& sigma, Int p);
std::string to_dot(const PredictedGraph& g);

struct SubmoduleEnumeration {
  std::uint64_t count = 0;
  std::vector<std::vector<std::size_t>> sets;  // filled only up to `keep`
};

// Subsets closed under out-edges. Throws when the graph exceeds `bound` vertices.
SubmoduleEnumeration submodules(const PredictedGraph& g, std::size_t bound = 81, std::size_t keep = 4096);
SubmoduleEnumeration submodules(std::size_t n, const std::vector<DotEdge>& edges, std::size_t bound = 81,
                                std::size_t keep = 4096);

// d_sat(sigma, kappa) := graph distance, over jh(t) in jh order.
std::vector<std::vector<int>> saturation_predictions(const TameType& t, Int p);

// Lambda_eta (13 elements) and the 20 pairs of Lambda_{<=(eta,0)} for one embedding.
std::vector<LW> lambda_eta();
std::vector<SigmaPair> lambda_eta_pairs();
// Letter of a pair in the Weyl module picture: A..G.
char weyl_letter(const SigmaPair& v);

struct WeylConstituent {
  std::vector<SigmaPair> vertex;
  SerreWeightNF weight;
  int grade;
  std::string letters;
};

// mu^op = w0 t_{-eta} . mu
FWeight weyl_op(const FWeight& mu, Int p);
// Constituents of the Weyl module of mu (upper alcove in every embedding), graded by distance to (0,1).
std::vector<WeylConstituent> weyl_jh(const FWeight& mu, Int p);

}  // namespace serre
