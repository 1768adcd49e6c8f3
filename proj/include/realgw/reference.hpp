#pragma once

#include <cstdint>
#include <vector>

#include "realgw/insertions.hpp"

namespace realgw {

/// One reference row of the embedded d <= 3 reference corpus.
struct ReferenceRow {
  int degree = 0;
  int lines = 0;
  int points = 0;
  Rational averaged;
  std::vector<Rational> expansion;
  Rational min_abs;
  Rational complex_count;
  /// 0: plain row. 1: the suspected-typo row under its corrected label
  /// (d=3, a=1, b=2). 2: the same row under the label the source prints
  /// (d=3, a=2, b=0); informational only, never compared as a failure.
  int label_flag = 0;
};

/// The embedded reference corpus; checksum-verified on first access.
const std::vector<ReferenceRow>& reference_table();

std::uint64_t reference_checksum();

struct ReferenceDiff {
  bool ok = true;
  std::vector<std::string> mismatches;
  std::vector<std::string> informational;
};

/// Compares engine rows against the reference corpus, restricted to
/// reference degrees <= max_degree (the corpus stops at 3). The typo row is
/// compared under its corrected label; the printed label is reported
/// informationally.
ReferenceDiff compare_to_reference(const std::vector<BoundsRow>& rows, int max_degree = 3);

}  // namespace realgw
