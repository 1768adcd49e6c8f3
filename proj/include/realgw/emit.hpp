#pragma once

#include <string>
#include <vector>

#include "realgw/archive.hpp"
#include "realgw/insertions.hpp"

namespace realgw {

/// Deterministic table serializations: identical stores give identical bytes.
/// CSV is UTF-8 with a header row; rationals print as `p/q` or a bare
/// integer.
std::string complex_table_csv(const ComplexStore& store);
std::string real_table_csv(const RealStore& store);
std::string bounds_table_csv(const std::vector<BoundsRow>& rows);
std::string bounds_table_json(const std::vector<BoundsRow>& rows);

}  // namespace realgw
