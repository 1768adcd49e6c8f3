#include <doctest.h>

#include "realgw/archive.hpp"
#include "realgw/reference.hpp"

using namespace realgw;

namespace {

struct Solved {
  ComplexStore cplx;
  RealStore real;
};

const Solved& solved2() {
  static const Solved s = [] {
    ComplexStore c = solve_complex(p3_target(), 2);
    RealStore r = solve_real(p3_target(), c, 2, +1);
    return Solved{std::move(c), std::move(r)};
  }();
  return s;
}

}  // namespace

TEST_CASE("archive round-trips stores losslessly") {
  const auto& s = solved2();
  const auto archive = InvariantArchive::from_stores(p3_target(), s.cplx, s.real);
  const std::string json = archive.to_json();
  const auto reloaded = InvariantArchive::parse(json);

  const ComplexStore c2 = reloaded.restore_complex();
  const RealStore r2 = reloaded.restore_real();
  CHECK(c2.solved_up_to() == s.cplx.solved_up_to());
  CHECK(r2.solved_up_to() == s.real.solved_up_to());
  CHECK(r2.seed_sign() == s.real.seed_sign());
  CHECK(c2.entries() == s.cplx.entries());
  CHECK(r2.entries() == s.real.entries());

  // re-serialization is byte-identical, including the provenance stamp
  CHECK(reloaded.to_json() == json);

  // two independent solves over the same inputs give identical bytes
  ComplexStore c3 = solve_complex(p3_target(), 2);
  RealStore r3 = solve_real(p3_target(), c3, 2, +1);
  CHECK(InvariantArchive::from_stores(p3_target(), c3, r3).to_json() == json);
}

TEST_CASE("archive rejects malformed input") {
  CHECK_THROWS_AS(InvariantArchive::parse("not json"), ArchiveError);
  CHECK_THROWS_AS(InvariantArchive::parse("{}"), ArchiveError);

  const auto& s = solved2();
  auto archive = InvariantArchive::from_stores(p3_target(), s.cplx, s.real);
  // mismatched k on a real entry
  auto broken = archive;
  std::get<3>(broken.real_entries.front()) += 1;
  CHECK_THROWS_AS(broken.restore_real(), ArchiveError);
  // nonzero value on a parity-vanishing key
  auto broken2 = archive;
  for (auto& [d, a, b, k, v] : broken2.real_entries)
    if ((d + a) % 2 == 0) {
      v = Rational(7);
      break;
    }
  CHECK_THROWS_AS(broken2.restore_real(), ArchiveError);
  // complex entry off the dimension gate
  auto broken3 = archive;
  std::get<1>(broken3.complex_entries.front()) += 1;
  CHECK_THROWS_AS(broken3.restore_complex(), ArchiveError);
}

TEST_CASE("reference corpus loads, is checksummed, and has the relabeled pair") {
  const auto& rows = reference_table();
  CHECK(rows.size() == 30);
  int corrected = 0, printed = 0;
  for (const auto& row : rows) {
    if (row.label_flag == 1) ++corrected;
    if (row.label_flag == 2) ++printed;
    if (row.label_flag != 2)
      CHECK(row.expansion.size() == static_cast<std::size_t>(row.lines) + 1);
  }
  CHECK(corrected == 1);
  CHECK(printed == 1);
  CHECK(reference_checksum() != 0);
}
