// Test-only oracles, deliberately independent of the library's computation
// paths: binomials come from the Pascal recurrence instead of the
// multiplicative formula, parities from explicit mod-2 rows.
#pragma once

#include "jpst/exactnum.hpp"

#include <vector>

namespace jpst::testing {

inline std::vector<std::vector<Integer>> pascal_rows(int max) {
  std::vector<std::vector<Integer>> t(max + 1);
  for (int a = 0; a <= max; ++a) {
    t[a].resize(a + 1);
    t[a][0] = t[a][a] = 1;
    for (int b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t;
}

inline Integer pascal_binom(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  static const auto rows = pascal_rows(256);
  return rows[a][b];
}

inline bool pascal_binom_odd(int a, int b) { return pascal_binom(a, b) % 2 != 0; }

}  // namespace jpst::testing
