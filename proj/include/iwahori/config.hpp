#pragma once

#include "iwahori/frobenius.hpp"

#include <memory>
#include <string>
#include <vector>

namespace iwahori {

// A parsed and validated job description. Owns the algebraic context so
// commands can run against it directly.
//
// JSON layout:
//   {
//     "datum": {"type": "A2", "lattice": "simply_connected" | "adjoint"
//               | "intermediate", "basis": [[..], ..]},   // basis: rows,
//                                                         // intermediate only
//     "twist": {"sigma0": [2, 1],            // images of finite nodes, 1-based
//               "tau": {"lambda": [..], "w": [..]}},  // w: finite letters,
//                                                     // 1-based
//     "mu": [1, 0],
//     "j": [0, 1],          // 1..rank = finite nodes; -c = affine node of
//                           // component c (so 0 for the first component)
//     "length_bound": 6,
//     "format": "json" | "csv" | "dot"
//   }
// Everything except "datum" is optional. Validation failures throw
// std::invalid_argument whose message starts with the offending field path.
struct JobConfig {
  std::shared_ptr<RootDatum> datum;
  std::shared_ptr<AffineWeyl> aw;
  std::shared_ptr<FrobeniusTwist> twist;
  IntVec mu;
  std::vector<int> j;  // internal S~ indices, sorted
  int length_bound = 4;
  std::string format = "json";
  bool format_explicit = false;
};

JobConfig parse_config(const std::string& json_text);

}  // namespace iwahori
