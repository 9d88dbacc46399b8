#pragma once

#include <string>

namespace fixtures {

inline const std::string kSixEdge =
    "0 1 0.3\n"
    "1 2 0.4\n"
    "1 3 0.6\n"
    "2 4 0.6\n"
    "3 4 0.4\n"
    "4 5 0.5\n";

// Complete graph on `n` vertices with constant probability.
inline std::string complete(int n, const std::string& p) {
  std::string out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      out += std::to_string(u) + " " + std::to_string(v) + " " + p + "\n";
  return out;
}

}  // namespace fixtures
