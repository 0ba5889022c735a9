#pragma once

// The concordance grid: p in {3, 5, 11, 13, 19, 29}, q <= 10^4, m from the
// residue class's lower bound up to v2(q - 1).

#include <cstdint>
#include <vector>

#include "diagcount/closed_form.hpp"
#include "diagcount/errors.hpp"

namespace grid {

struct FieldCase {
  std::uint64_t p;
  unsigned s;
  unsigned m;
  std::uint64_t q;
};

inline std::vector<FieldCase> cases(std::uint64_t q_max = 10000) {
  std::vector<FieldCase> out;
  for (std::uint64_t p : {3ULL, 5ULL, 11ULL, 13ULL, 19ULL, 29ULL}) {
    const unsigned lower = p % 8 == 3 ? 3 : 2;
    std::uint64_t q = p;
    for (unsigned s = 1; q <= q_max; ++s, q *= p) {
      const unsigned v2 = diagcount::nu2(q - 1);
      for (unsigned m = lower; m <= v2; ++m) {
        try {
          diagcount::classify(p, s, m, 1);
          out.push_back({p, s, m, q});
        } catch (const diagcount::Error&) {
        }
      }
    }
  }
  return out;
}

}  // namespace grid
