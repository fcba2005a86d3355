#include "soncoup/labels.hpp"

#include <algorithm>
#include <cstdlib>

namespace soncoup {

bool selection_ok(const Triad& t) {
  if (t.l1 < 0 || t.l2 < 0 || t.l3 < 0) return false;
  if (t.perimeter() % 2 != 0) return false;
  return std::abs(t.l1 - t.l2) <= t.l3 && t.l3 <= t.l1 + t.l2;
}

std::array<Triad, 4> CouplingLabels::triads() const {
  return {Triad{l[0], l[1], l[2]}, Triad{l[0], l[4], l[5]}, Triad{l[3], l[1], l[5]}, Triad{l[2], l[3], l[4]}};
}

bool CouplingLabels::admissible() const {
  const auto ts = triads();
  return std::all_of(ts.begin(), ts.end(), [](const Triad& t) { return selection_ok(t); });
}

std::string CouplingLabels::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 6; ++i) s += (i == 3 ? "|" : (i ? "," : "")) + std::to_string(l[i]);
  return s + ")";
}

} // namespace soncoup
