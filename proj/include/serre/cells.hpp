#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "serre/ideal.hpp"

namespace serre::ideal {

struct CellParams {
  std::int64_t a = 70, b = 35, c = 0;
  std::uint32_t p = 101;
};

// Presentation of a deformation-ring cell with unit entries set to 1.
struct Cell {
  std::string name;
  CellParams params;
  std::shared_ptr<Ring> ring;
  Ideal relations;
  std::map<std::string, Ideal> components;
  std::vector<std::string> order;  // component names in table order

  const Ideal& component(const std::string& n) const;
  // J + relations, i.e. the image of J in the quotient ring.
  Ideal lift(const Ideal& J) const;
  Ideal parse(const std::vector<std::string>& gens) const;
  // Intersection in the quotient ring.
  Ideal intersect(const std::vector<std::string>& names) const;
  Ideal intersect_ideals(const std::vector<Ideal>& ideals) const;
  Ideal sum(const Ideal& I, const Ideal& J) const;
  EqualityReport equal(const Ideal& I, const Ideal& J) const;
};

// name in {"id", "alpha", "alphabeta"}. Throws on parameters violating genericity.
Cell preset_cell(const std::string& name, const CellParams& params = {});

struct VariantResult {
  std::string name;
  std::string claim;
  bool holds;
  EqualityReport report;
};

enum class VariantRule { All, Any, Primary };

struct LemmaResult {
  std::string name;
  std::string cell;
  CellParams params;
  VariantRule rule;
  bool holds;
  std::string certified;  // first variant that holds, empty if none
  std::vector<VariantResult> variants;
};

std::vector<std::string> lemma_names();
LemmaResult verify_lemma(const std::string& name, const CellParams& params = {});

}  // namespace serre::ideal
