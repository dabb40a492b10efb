#include <numeric>

#include "dt4/formulas.hpp"

namespace dt4 {

Rational age_of(const GroupElementSpec& g) {
  if (g.order < 1) fail(errc::bad_input, "element order must be positive");
  long sum = 0;
  for (int a : g.powers) {
    if (a < 0 || a >= g.order) fail(errc::bad_input, "exponents must satisfy 0 <= a_i < r");
    sum += a;
  }
  if (sum % g.order != 0) fail(errc::not_su4, "sum of exponents not divisible by the order");
  return rat(sum, g.order);
}

AgeReport age_report(const GroupAction& g) {
  AgeReport rep;
  long lcm = 1;
  for (int r : g.orders()) lcm = std::lcm(lcm, static_cast<long>(r));
  int n = g.num_chars();  // |G| = prod of orders
  for (int idx = 0; idx < n; ++idx) {
    std::vector<int> tuple = g.char_tuple(idx);
    // phase of the element on coordinate i, in units of 1/lcm
    Rational a(0);
    for (int i = 0; i < 4; ++i) {
      long phase = 0;
      for (std::size_t gen = 0; gen < g.orders().size(); ++gen)
        phase += static_cast<long>(tuple[gen]) *
                 g.weights()[gen][static_cast<std::size_t>(i)] * (lcm / g.orders()[gen]);
      phase %= lcm;
      if (phase < 0) phase += lcm;
      a += rat(phase, lcm);
    }
    AgeElement el{tuple, a};
    if (a >= 2 && !rep.witness) {
      rep.age_at_most_one = false;
      rep.witness = el;
    }
    rep.elements.push_back(std::move(el));
  }
  return rep;
}

}  // namespace dt4
