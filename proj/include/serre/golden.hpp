#pragma once

#include <string>
#include <string_view>
#include <vector>

// Reference tables from data/, compiled into the library.
namespace serre::golden {

// Raw JSON of data/<name>.json. Throws std::out_of_range for unknown names.
std::string_view text(std::string_view name);
std::vector<std::string> names();

}  // namespace serre::golden
