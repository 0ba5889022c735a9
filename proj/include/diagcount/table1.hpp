#pragma once

// Published reference counts for x_1^(2^m) + ... + x_n^(2^m) = 0 over F_{p^s}.

#include <array>
#include <cstdint>

namespace diagcount {

struct GoldenRow {
  std::uint64_t p;
  unsigned s;
  unsigned m;
  unsigned n;
  const char* N;  // decimal
};

inline constexpr std::array<GoldenRow, 18> kTable1 = {{
    {3, 4, 3, 3, "7041"},
    {3, 4, 3, 4, "1130241"},
    {3, 4, 3, 5, "41304321"},
    {3, 4, 4, 3, "20481"},
    {3, 4, 4, 4, "81921"},
    {3, 4, 4, 5, "126033921"},
    {3, 8, 3, 3, "30805761"},
    {3, 8, 4, 3, "42298881"},
    {3, 8, 5, 3, "167936001"},
    {5, 2, 2, 5, "498625"},
    {5, 2, 3, 4, "12289"},
    {5, 2, 3, 5, "129025"},
    {5, 4, 2, 3, "416833"},
    {5, 4, 2, 4, "250892929"},
    {5, 4, 3, 3, "94849"},
    {5, 4, 3, 4, "304182529"},
    {5, 4, 4, 3, "319489"},
    {5, 4, 4, 4, "369328129"},
}};

}  // namespace diagcount
