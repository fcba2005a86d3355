#pragma once

#include <array>
#include <compare>
#include <string>

namespace soncoup {

struct Triad {
  int l1 = 0, l2 = 0, l3 = 0;

  int perimeter() const { return l1 + l2 + l3; }
  friend bool operator==(const Triad&, const Triad&) = default;
};

/// Perimeter even and |l1 - l2| <= l3 <= l1 + l2 (labels non-negative).
bool selection_ok(const Triad& t);

/// The six labels of I_n(l1,l2,l3|l4,l5,l6), stored as l[0..5].
struct CouplingLabels {
  std::array<int, 6> l{};

  /// (l1,l2,l3), (l1,l5,l6), (l4,l2,l6), (l3,l4,l5).
  std::array<Triad, 4> triads() const;
  bool admissible() const;
  std::string to_string() const;

  friend bool operator==(const CouplingLabels&, const CouplingLabels&) = default;
  friend auto operator<=>(const CouplingLabels&, const CouplingLabels&) = default;
};

} // namespace soncoup
