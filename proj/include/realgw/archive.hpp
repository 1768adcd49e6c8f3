#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "realgw/complex_gw.hpp"
#include "realgw/real_wdvv.hpp"

namespace realgw {

struct ArchiveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// On-disk cache of solved stores: plain versioned JSON with every value as
/// an exact decimal string, so runs are diffable and citable. Round-trips
/// losslessly; the provenance stamp is derived from the payload, so repeated
/// runs over the same inputs serialize to identical bytes.
struct InvariantArchive {
  static constexpr int kFormatVersion = 1;

  int format_version = kFormatVersion;
  std::string target_id;
  int seed_sign = 1;
  int complex_degree = 0;
  int real_degree = 0;
  std::vector<std::tuple<int, int, int, Rational>> complex_entries;       // (d, a, b, value)
  std::vector<std::tuple<int, int, int, int, Rational>> real_entries;     // (d, a, b, k, value)
  std::string generated_at;  // content-derived provenance stamp, preserved across reloads

  static InvariantArchive from_stores(const TargetModel& model, const ComplexStore& cstore,
                                      const RealStore& rstore);

  std::string to_json() const;
  static InvariantArchive parse(const std::string& text);

  ComplexStore restore_complex() const;
  RealStore restore_real() const;

  void save(const std::string& path) const;
  static InvariantArchive load(const std::string& path);
};

}  // namespace realgw
