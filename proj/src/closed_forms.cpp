#include "tdc/closed_forms.hpp"

#include <ostream>

#include "tdc/error.hpp"

namespace tdc {
namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void require_min(int n, int minimum, const char *what) {
  if (n < minimum)
    throw InvalidParameter(std::string(what) + " formula needs n >= " + std::to_string(minimum));
}

} // namespace

std::string branch_name(FormulaBranch b) {
  switch (b) {
  case FormulaBranch::PathOneModThree:
    return "path-1mod3";
  case FormulaBranch::PathOtherwise:
    return "path-otherwise";
  case FormulaBranch::CycleFour:
    return "cycle-n4";
  case FormulaBranch::CycleResidueEven:
    return "cycle-r0124";
  case FormulaBranch::CycleResidueOdd:
    return "cycle-r35";
  case FormulaBranch::CoronaPath:
    return "corona-path";
  case FormulaBranch::CoronaCycle:
    return "corona-cycle";
  case FormulaBranch::GadgetOneModThree:
    return "gadget-1mod3";
  case FormulaBranch::GadgetOtherwise:
    return "gadget-otherwise";
  }
  return "unknown";
}

FormulaResult chi_dt_path(int n) {
  require_min(n, 2, "path");
  FormulaResult r{{FamilyKind::Path, {n}}, 2 * ceil_div(n, 3), FormulaBranch::PathOtherwise};
  if (n % 3 == 1) {
    r.value -= 1;
    r.branch = FormulaBranch::PathOneModThree;
  }
  return r;
}

FormulaResult chi_dt_cycle(int n) {
  require_min(n, 3, "cycle");
  FormulaResult r{{FamilyKind::Cycle, {n}}, 0, FormulaBranch::CycleFour};
  if (n == 4) {
    r.value = 2;
    return r;
  }
  const int residue = n % 6;
  r.value = 4 * (n / 6) + residue;
  r.branch = FormulaBranch::CycleResidueEven;
  if (residue == 3 || residue == 5) {
    r.value -= 1;
    r.branch = FormulaBranch::CycleResidueOdd;
  }
  return r;
}

FormulaResult chi_dt_corona(CoronaBase base, int n) {
  if (base == CoronaBase::Path) {
    require_min(n, 2, "corona-path");
    return {{FamilyKind::CoronaPathK1, {n}}, n + 1, FormulaBranch::CoronaPath};
  }
  require_min(n, 3, "corona-cycle");
  return {{FamilyKind::CoronaCycleK1, {n}}, n + 1, FormulaBranch::CoronaCycle};
}

FormulaResult chi_dt_gadget(int n) {
  require_min(n, 2, "gadget");
  const FormulaResult path = chi_dt_path(n);
  return {{FamilyKind::ApexCorona, {n}},
          path.value + 2,
          path.branch == FormulaBranch::PathOneModThree ? FormulaBranch::GadgetOneModThree
                                                        : FormulaBranch::GadgetOtherwise};
}

FormulaResult chi_dt_formula(const FamilySpec &spec) {
  if (spec.params.size() != 1)
    throw InvalidParameter("no closed form for " + to_string(spec));
  const int n = spec.params[0];
  switch (spec.kind) {
  case FamilyKind::Path:
    return chi_dt_path(n);
  case FamilyKind::Cycle:
    return chi_dt_cycle(n);
  case FamilyKind::CoronaPathK1:
    return chi_dt_corona(CoronaBase::Path, n);
  case FamilyKind::CoronaCycleK1:
    return chi_dt_corona(CoronaBase::Cycle, n);
  case FamilyKind::ApexCorona:
    return chi_dt_gadget(n);
  default:
    throw InvalidParameter("no closed form for " + to_string(spec));
  }
}

void write_formula_table(std::ostream &out, FamilyKind kind, int from, int to) {
  out << "family,n,branch,value\n";
  for (int n = from; n <= to; ++n) {
    const FormulaResult r = chi_dt_formula({kind, {n}});
    out << family_name(kind) << ',' << n << ',' << branch_name(r.branch) << ',' << r.value
        << '\n';
  }
}

} // namespace tdc
