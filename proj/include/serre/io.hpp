#pragma once

#include <json.hpp>

#include "serre/cells.hpp"
#include "serre/extgraph.hpp"
#include "serre/frobenius.hpp"
#include "serre/lattices.hpp"
#include "serre/types.hpp"
#include "serre/weights.hpp"
#include "serre/weyl.hpp"

namespace serre {

using json = nlohmann::json;

// Schemas:
//   Perm          [s(1), s(2), s(3)]
//   AffElem1      {"w": Perm, "nu": [a, b, c]}
//   AffElem       {"f": f, "components": [AffElem1, ...]}
//   SerreWeightNF {"base": [[x, y, 0], ...], "twist": m, "p": p, "f": f}
//   GraphVertex   {"omega": [[m1, m2], ...], "a": [0|1, ...]}
//   SigmaPair     [m1, m2, a]
//   TameType      {"s": [Perm, ...], "mu": [[x, y, z], ...]}
void to_json(json& j, const Perm& s);
void from_json(const json& j, Perm& s);
void to_json(json& j, const AffElem1& x);
void from_json(const json& j, AffElem1& x);
void to_json(json& j, const AffElem& x);
void from_json(const json& j, AffElem& x);
void to_json(json& j, const SerreWeightNF& w);
void from_json(const json& j, SerreWeightNF& w);
void to_json(json& j, const LW& w);
void from_json(const json& j, LW& w);
void to_json(json& j, const GraphVertex& v);
void from_json(const json& j, GraphVertex& v);
void to_json(json& j, const SigmaPair& s);
void from_json(const json& j, SigmaPair& s);
void to_json(json& j, const TameType& t);
void from_json(const json& j, TameType& t);
void to_json(json& j, const LabeledWeight& w);
void to_json(json& j, const MonoMat& m);
void to_json(json& j, const WeylConstituent& c);

// Predictions carry "status": "predicted" plus per-vertex "layer" and "defect".
json predicted_json(const PredictedGraph& g);

}  // namespace serre

namespace serre::ideal {

void to_json(nlohmann::json& j, const EqualityReport& r);
void to_json(nlohmann::json& j, const LemmaResult& r);
std::string rule_name(VariantRule r);

}  // namespace serre::ideal
