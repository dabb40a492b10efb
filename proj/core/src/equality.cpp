#include "dt4/equality.hpp"

namespace dt4 {

bool rf_equal(const RationalFn& a, const RationalFn& b) { return a.equals(b); }

bool rf_equal(const BracketProduct& a, const BracketProduct& b) {
  return kfrac_from_bracket_product(a).equals(kfrac_from_bracket_product(b));
}

bool rf_equal(const KFrac& a, const KFrac& b) { return a.equals(b); }
bool rf_equal(const CohomFrac& a, const CohomFrac& b) { return a.equals(b); }

}  // namespace dt4
