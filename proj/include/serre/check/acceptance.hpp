#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

// The acceptance suite: golden-table reproduction plus randomized property runs.
namespace serre::check {

struct Config {
  std::uint64_t seed = 20240611;
};

struct Result {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit = 0;           // wall-clock budget in seconds, part of the pass condition
  std::vector<std::string> notes;  // failures first, then summary lines
};

std::vector<int> criterion_ids();
std::string criterion_title(int id);
Result run(int id, const Config& config = {});
std::vector<Result> run_all(const Config& config = {});

std::string format_line(const Result& r);
nlohmann::json to_json(const Result& r);

// Cardinalities of Adm(lambda) from the subword enumeration, in the layout of data/adm_counts.json.
nlohmann::json record_adm_counts();

}  // namespace serre::check
