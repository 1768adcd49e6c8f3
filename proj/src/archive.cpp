#include "realgw/archive.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace realgw {

namespace {

// Provenance marker derived from the payload itself rather than the wall
// clock: identical stores must serialize to identical bytes.
std::string content_stamp(const InvariantArchive& a) {
  std::ostringstream os;
  os << a.target_id << "|" << a.seed_sign << "|" << a.complex_degree << "|" << a.real_degree;
  for (const auto& [d, x, y, v] : a.complex_entries)
    os << "|" << d << "," << x << "," << y << "," << v.to_string();
  for (const auto& [d, x, y, k, v] : a.real_entries)
    os << "|" << d << "," << x << "," << y << "," << k << "," << v.to_string();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : os.str()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "content:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

InvariantArchive InvariantArchive::from_stores(const TargetModel& model,
                                               const ComplexStore& cstore,
                                               const RealStore& rstore) {
  InvariantArchive a;
  a.target_id = model.id();
  a.seed_sign = rstore.seed_sign();
  a.complex_degree = cstore.solved_up_to();
  a.real_degree = rstore.solved_up_to();
  for (const auto& [key, value] : cstore.entries())
    a.complex_entries.emplace_back(key.degree, key.lines, key.points, value);
  for (const auto& [key, value] : rstore.entries())
    a.real_entries.emplace_back(key.degree, key.lines, key.points, key.real_points(), value);
  a.generated_at = content_stamp(a);
  return a;
}

std::string InvariantArchive::to_json() const {
  nlohmann::ordered_json j;
  j["format_version"] = format_version;
  j["target"] = target_id;
  j["seed"] = seed_sign;
  j["complex_degree"] = complex_degree;
  j["real_degree"] = real_degree;
  j["generated_at"] = generated_at;
  auto& cplx = j["complex"] = nlohmann::ordered_json::array();
  for (const auto& [d, a, b, v] : complex_entries)
    cplx.push_back({d, a, b, v.to_string()});
  auto& real = j["real"] = nlohmann::ordered_json::array();
  for (const auto& [d, a, b, k, v] : real_entries)
    real.push_back({d, a, b, k, v.to_string()});
  return j.dump(2) + "\n";
}

InvariantArchive InvariantArchive::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArchiveError(std::string("archive: malformed JSON: ") + e.what());
  }
  InvariantArchive a;
  try {
    a.format_version = j.at("format_version").get<int>();
    if (a.format_version != kFormatVersion)
      throw ArchiveError("archive: unsupported format version " +
                         std::to_string(a.format_version));
    a.target_id = j.at("target").get<std::string>();
    a.seed_sign = j.at("seed").get<int>();
    a.complex_degree = j.at("complex_degree").get<int>();
    a.real_degree = j.at("real_degree").get<int>();
    a.generated_at = j.at("generated_at").get<std::string>();
    for (const auto& row : j.at("complex")) {
      a.complex_entries.emplace_back(row.at(0).get<int>(), row.at(1).get<int>(),
                                     row.at(2).get<int>(),
                                     Rational::from_string(row.at(3).get<std::string>()));
    }
    for (const auto& row : j.at("real")) {
      a.real_entries.emplace_back(row.at(0).get<int>(), row.at(1).get<int>(),
                                  row.at(2).get<int>(), row.at(3).get<int>(),
                                  Rational::from_string(row.at(4).get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ArchiveError(std::string("archive: missing or mistyped field: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ArchiveError(std::string("archive: bad rational literal: ") + e.what());
  }
  return a;
}

ComplexStore InvariantArchive::restore_complex() const {
  ComplexStore store;
  for (const auto& [d, a, b, v] : complex_entries) {
    if (a + 2 * b != 4 * d) throw ArchiveError("archive: complex entry off the dimension gate");
    store.set(ComplexKey{d, a, b}, v);
  }
  store.seal(complex_degree);
  return store;
}

RealStore InvariantArchive::restore_real() const {
  RealStore store(seed_sign);
  for (const auto& [d, a, b, k, v] : real_entries) {
    const RealKey key{d, a, b};
    if (k != key.real_points()) throw ArchiveError("archive: real entry with mismatched k");
    if ((d + a) % 2 == 0 && !v.is_zero())
      throw ArchiveError("archive: nonzero value on a parity-vanishing key");
    store.set(key, v);
  }
  store.seal(real_degree);
  return store;
}

void InvariantArchive::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArchiveError("archive: cannot open '" + path + "' for writing");
  out << to_json();
  if (!out) throw ArchiveError("archive: write failure on '" + path + "'");
}

InvariantArchive InvariantArchive::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArchiveError("archive: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace realgw
