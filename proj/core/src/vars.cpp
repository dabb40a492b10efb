#include "dt4/vars.hpp"

#include <sstream>

namespace dt4 {

std::string VarTable::mono_str(const Mono& m) const {
  // presentation: re-introduce the eliminated variable when all relation
  // variables carry negative exponents, so (t1 t2 t3)^{-1} prints as t4
  Mono disp = m;
  if (reduced_var_ >= 0 && m.e[static_cast<std::size_t>(reduced_var_)] == 0) {
    int32_t k = INT32_MAX;  // largest unit power of the eliminated variable
    for (std::size_t i = 0; i < relation_.size(); ++i) {
      if (relation_.e[i] == 0) continue;
      k = std::min(k, disp.e[i] / relation_.e[i]);
    }
    if (k > 0 && k != INT32_MAX) {
      for (std::size_t i = 0; i < relation_.size(); ++i) disp.e[i] -= k * relation_.e[i];
      disp.e[static_cast<std::size_t>(reduced_var_)] = 4 * k;
    }
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < disp.size(); ++i) {
    if (disp.e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << names_[i];
    if (disp.e[i] != 4) {
      os << "^";
      if (disp.e[i] % 4 == 0)
        os << disp.e[i] / 4;
      else
        os << "(" << disp.e[i] << "/4)";
    }
  }
  if (first) os << "1";
  return os.str();
}

VarTablePtr cy_table(std::vector<std::string> series_vars, bool reduce_t4) {
  auto t = std::make_shared<VarTable>(std::vector<std::string>{"t1", "t2", "t3", "t4", "y"},
                                      std::move(series_vars));
  Mono img(t->size());
  img.e[0] = img.e[1] = img.e[2] = -4;
  t->set_relation("t4", img, /*apply=*/reduce_t4);
  return t;
}

VarTablePtr cohom_table(std::vector<std::string> series_vars) {
  return VarTable::make({"l1", "l2", "l3", "m"}, std::move(series_vars));
}

}  // namespace dt4
