#include "realgw/emit.hpp"

#include <sstream>

#include <json.hpp>

namespace realgw {

std::string complex_table_csv(const ComplexStore& store) {
  std::ostringstream os;
  os << "d,a,b,value\n";
  for (const auto& [key, value] : store.entries())
    os << key.degree << "," << key.lines << "," << key.points << "," << value.to_string() << "\n";
  return os.str();
}

std::string real_table_csv(const RealStore& store) {
  std::ostringstream os;
  os << "d,a,b,k,value\n";
  for (const auto& [key, value] : store.entries())
    os << key.degree << "," << key.lines << "," << key.points << "," << key.real_points() << ","
       << value.to_string() << "\n";
  return os.str();
}

namespace {

std::string expansion_cell(const std::vector<Rational>& expansion) {
  std::ostringstream os;
  for (std::size_t i = 0; i < expansion.size(); ++i)
    os << (i ? "," : "") << expansion[i].to_string();
  return os.str();
}

}  // namespace

std::string bounds_table_csv(const std::vector<BoundsRow>& rows) {
  std::ostringstream os;
  os << "d,a,b,averaged,expansion,min,cgw,extrapolated\n";
  for (const auto& row : rows) {
    os << row.degree << "," << row.lines << "," << row.points << "," << row.averaged.to_string()
       << ",\"" << expansion_cell(row.expansion) << "\"," << row.min_abs.to_string() << ","
       << row.complex_count.to_string() << "," << (row.extrapolated ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string bounds_table_json(const std::vector<BoundsRow>& rows) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["d"] = row.degree;
    r["a"] = row.lines;
    r["b"] = row.points;
    r["averaged"] = row.averaged.to_string();
    auto& e = r["expansion"] = nlohmann::ordered_json::array();
    for (const auto& v : row.expansion) e.push_back(v.to_string());
    r["min"] = row.min_abs.to_string();
    r["cgw"] = row.complex_count.to_string();
    r["extrapolated"] = row.extrapolated;
    j.push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

}  // namespace realgw
