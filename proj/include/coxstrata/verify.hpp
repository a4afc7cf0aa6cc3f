#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxstrata/coxeter.hpp"
#include "coxstrata/poly.hpp"

namespace coxstrata {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<std::string> details;  // failures first, then notes
  double seconds = 0;

  /// "[id] name: PASS" or "... FAIL".
  std::string line() const;
};

/// Runs acceptance criterion 1..10.
CheckResult run_criterion(int id);

/// Criteria of a suite: dihedral, hecke, b3, h3, h4, cross-sections, all.
std::vector<int> suite_criteria(std::string_view suite);
const std::vector<std::string>& suite_names();

/// e_{y,w} for all y by inverting the regular representation of T_{w^-1}
/// at |w|+1 rational values of u and interpolating. Independent of the
/// recurrence; intended for small groups.
std::vector<PolyU> regular_rep_e_vector(const CoxGroup& g, Element w);

}  // namespace coxstrata
