#pragma once

// Closed-form formulas against the generic oracle path for one triple.

#include <g2abc/closed_form.hpp>

#include <string>
#include <vector>

namespace g2abc {

struct Deviation {
  std::string name;
  double value = 0.0;  ///< max-abs deviation
  bool pass = true;    ///< value <= tol
  bool flagged = false;  ///< printed discrepancy, reported but not counted
};

/// Printed and oracle value of one flagged coefficient.
struct DualValue {
  std::string quantity;
  std::string coefficient;
  double printed = 0.0;
  double oracle = 0.0;
};

struct CrossValidation {
  FamilyKind family = FamilyKind::General;
  RicciBlockOrder ricci_order = RicciBlockOrder::ByGenerator;
  std::vector<Deviation> deviations;
  std::vector<DualValue> dual;
  bool pass = true;  ///< every unflagged deviation passes

  const Deviation* find(std::string_view name) const;
};

CrossValidation cross_validate(const TripleABC& t, double tol = kDefaultTolerance);

}  // namespace g2abc
