#pragma once

#include <iosfwd>
#include <string>

#include "tdc/families.hpp"

namespace tdc {

/// Which case of a piecewise formula produced the value.
enum class FormulaBranch {
  PathOneModThree,   // n = 1 (mod 3): 2*ceil(n/3) - 1
  PathOtherwise,     // 2*ceil(n/3)
  CycleFour,         // n = 4: 2
  CycleResidueEven,  // n mod 6 in {0,1,2,4}: 4*floor(n/6) + r
  CycleResidueOdd,   // n mod 6 in {3,5}: 4*floor(n/6) + r - 1
  CoronaPath,        // n + 1
  CoronaCycle,       // n + 1
  GadgetOneModThree, // 2*ceil(n/3) + 1
  GadgetOtherwise,   // 2*ceil(n/3) + 2
};

std::string branch_name(FormulaBranch b);

struct FormulaResult {
  FamilySpec family;
  int value = 0;
  FormulaBranch branch = FormulaBranch::PathOtherwise;
};

enum class CoronaBase { Path, Cycle };

// Exact integer arithmetic throughout; each throws InvalidParameter below the
// family minimum.

FormulaResult chi_dt_path(int n);   // n >= 2
FormulaResult chi_dt_cycle(int n);  // n >= 3
FormulaResult chi_dt_corona(CoronaBase base, int n); // path n >= 2, cycle n >= 3
FormulaResult chi_dt_gadget(int n); // n >= 2

/// Dispatches on the family; throws InvalidParameter for families without a formula.
FormulaResult chi_dt_formula(const FamilySpec &spec);

/// CSV "family,n,branch,value" rows for n in [from, to], header first.
void write_formula_table(std::ostream &out, FamilyKind kind, int from, int to);

} // namespace tdc
