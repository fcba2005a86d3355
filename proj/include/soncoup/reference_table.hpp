#pragma once

// Published closed forms of I_n and c^(alpha) for every orbit with labels up
// to 4 whose integral does not vanish, kept as the printed strings.

#include <span>
#include <string_view>

#include "soncoup/labels.hpp"

namespace soncoup {

struct ReferenceRow {
  CouplingLabels labels;
  std::string_view i_alpha;
  std::string_view c_alpha;
};

std::span<const ReferenceRow> reference_rows();

} // namespace soncoup
