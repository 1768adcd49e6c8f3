#pragma once

#include <string>
#include <vector>

#include "realgw/rational.hpp"

namespace realgw {

/// Degree of a curve class: the coefficient of the line class for P^3.
/// (A general target would carry a lattice vector here.)
struct DegreeClass {
  int value = 0;
  friend bool operator==(DegreeClass, DegreeClass) = default;
};

/// Cohomology and homology data of a real symplectic sixfold entering both
/// sides of the WDVV relations: the basis of H^0 + H^2_- + H^4_+ + H^6 with
/// half-degrees |mu*_j|, the phi-action signs, the Poincare pairing and its
/// inverse, the c_1 pairing ell_omega, the doubling map on curve classes, and
/// the Z_2-triviality predicate for boundary classes.
class TargetModel {
 public:
  virtual ~TargetModel() = default;

  virtual std::string id() const = 0;
  virtual int basis_size() const = 0;
  virtual int half_degree(int j) const = 0;
  virtual int phi_sign(int j) const = 0;
  virtual std::string basis_label(int j) const = 0;

  virtual Rational pairing(int i, int j) const = 0;          // g_ij
  virtual Rational pairing_inverse(int i, int j) const = 0;  // g^{ij}

  /// <mu_i mu_j mu_k, [X]>: the classical triple intersection number, i.e.
  /// the degree-0 three-point invariant.
  virtual Rational triple_intersection(int i, int j, int k) const = 0;

  virtual int ell_omega(DegreeClass b) const = 0;
  virtual DegreeClass doubling(DegreeClass b_prime) const = 0;
  virtual bool z2_trivial(DegreeClass b) const = 0;

  /// Half-degrees of the whole basis, for MultiIndex::weighted_total.
  const std::vector<int>& half_degrees() const;

 protected:
  mutable std::vector<int> half_degree_cache_;
};

/// The shipped instance: (P^3, omega_3, tau_3) with real locus RP^3 and the
/// hyperplane-reflection averager. Basis (1, h, h^2, h^3).
const TargetModel& p3_target();

}  // namespace realgw
