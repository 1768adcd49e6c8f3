#include "realgw/target.hpp"

#include <stdexcept>

namespace realgw {

const std::vector<int>& TargetModel::half_degrees() const {
  if (half_degree_cache_.empty()) {
    half_degree_cache_.reserve(static_cast<std::size_t>(basis_size()));
    for (int j = 0; j < basis_size(); ++j) half_degree_cache_.push_back(half_degree(j));
  }
  return half_degree_cache_;
}

namespace {

class P3Target final : public TargetModel {
 public:
  std::string id() const override { return "p3"; }
  int basis_size() const override { return 4; }

  int half_degree(int j) const override {
    check(j);
    return j;  // generators 1, h, h^2, h^3
  }

  int phi_sign(int j) const override {
    check(j);
    return (j % 2 == 0) ? 1 : -1;  // tau_3^* h = -h
  }

  std::string basis_label(int j) const override {
    check(j);
    static const char* kLabels[4] = {"1", "h", "h^2", "h^3"};
    return kLabels[j];
  }

  Rational pairing(int i, int j) const override {
    check(i);
    check(j);
    return Rational(i + j == 3 ? 1 : 0);
  }

  Rational pairing_inverse(int i, int j) const override { return pairing(i, j); }

  Rational triple_intersection(int i, int j, int k) const override {
    check(i);
    check(j);
    check(k);
    return Rational(i + j + k == 3 ? 1 : 0);
  }

  int ell_omega(DegreeClass b) const override { return 4 * b.value; }  // c_1 = 4h

  DegreeClass doubling(DegreeClass b_prime) const override {
    return DegreeClass{2 * b_prime.value};  // tau_3* l = -l
  }

  bool z2_trivial(DegreeClass b) const override {
    // The boundary of a relative class doubling to d*l is d times the
    // generator of H_1(RP^3; Z_2).
    return b.value % 2 == 0;
  }

 private:
  static void check(int j) {
    if (j < 0 || j >= 4) throw std::out_of_range("P3Target: basis index out of range");
  }
};

}  // namespace

const TargetModel& p3_target() {
  static const P3Target instance;
  return instance;
}

}  // namespace realgw
