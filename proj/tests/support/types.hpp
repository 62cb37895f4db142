#pragma once

#include <string>
#include <vector>

namespace testtypes {

/// Every irreducible type of rank <= max_rank, exceptional ones included.
inline std::vector<std::string> up_to_rank(int max_rank) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 2; n <= max_rank; ++n) out.push_back("B" + std::to_string(n));
  for (int n = 2; n <= max_rank; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 4; n <= max_rank; ++n) out.push_back("D" + std::to_string(n));
  for (int n = 6; n <= std::min(max_rank, 8); ++n) out.push_back("E" + std::to_string(n));
  if (max_rank >= 4) out.push_back("F4");
  if (max_rank >= 2) out.push_back("G2");
  return out;
}

/// up_to_rank(max_rank) plus E6, E7, E8, F4, G2.
inline std::vector<std::string> with_exceptional(int max_rank) {
  auto out = up_to_rank(max_rank);
  for (const char* e : {"E6", "E7", "E8", "F4", "G2"}) {
    bool present = false;
    for (const auto& t : out) present = present || t == e;
    if (!present) out.push_back(e);
  }
  return out;
}

}  // namespace testtypes
