#pragma once

#include <string>
#include <utility>
#include <vector>

namespace iwahori {

// Result of one theorem check. Witnesses carry the exhibited elements;
// diff lists the offending elements when the check fails (normally empty).
struct Report {
  std::string theorem;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool pass = false;
  std::vector<std::string> witnesses;
  std::vector<std::string> diff;
};

// Canonical JSON rendering: fixed key order, no whitespace variation, so
// identical reports serialize byte-identically.
std::string report_to_json(const Report& r);

}  // namespace iwahori
