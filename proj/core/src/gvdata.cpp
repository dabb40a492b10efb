#include "dt4/formulas.hpp"

namespace dt4 {

// Stable-pair values for the icosahedral group, over the rank-2 torus
// (t, t4) with t^3 t4 = 1. Pure data: no localization runs for non-abelian
// groups, so these only feed reports and tests.
const A5Table& a5_gv_table() {
  static const A5Table table{
      {{"3b1+5b2+4b3+3b4", "[y]/[t4]"},
       {"2b1+4b2+4b3+2b4", "[t][y]/([t^2][t4])"},
       {"2b1+4b2+3b3+2b4", "[t^2][y]/([t][t4])"},
       {"b1+2b2+2b3+b4", "[t^2]^2[y]/([t]^2[t4])"}},
      "assumes Ext^1(O_C, O_C) has no torus-fixed part for the CM curve of each class"};
  return table;
}

}  // namespace dt4
