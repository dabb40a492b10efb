#include "dt4/series.hpp"

namespace dt4 {

std::vector<SExp> exponents_up_to(std::size_t n, int D) {
  std::vector<SExp> out;
  SExp cur(n, 0);
  // lexicographic enumeration of all vectors with total degree <= D
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(rec, 0, D);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dt4
