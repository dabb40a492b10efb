#include "dt4/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace dt4 {

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p(a.nvars_);
  if (a.terms_.empty() || b.terms_.empty()) return p;
  // iterate the smaller factor outside
  const LaurentPoly& s = a.terms_.size() <= b.terms_.size() ? a : b;
  const LaurentPoly& l = a.terms_.size() <= b.terms_.size() ? b : a;
  for (auto& [ms, cs] : s.terms_)
    for (auto& [ml, cl] : l.terms_) {
      Rational c = cs * cl;
      p.add_term(ms * ml, c);
    }
  return p;
}

Rational LaurentPoly::rational_content() const {
  if (terms_.empty()) return Rational(1);
  mpz_class num_gcd(0), den_lcm(1);
  for (auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

Mono LaurentPoly::mono_content() const {
  if (terms_.empty()) return Mono(nvars_);
  Mono m = terms_.begin()->first;
  for (auto& [k, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m.e[i] = std::min(m.e[i], k.e[i]);
  return m;
}

std::string LaurentPoly::str(const VarTable& vt) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    Rational cc = c;
    if (!first) os << (sgn(cc) >= 0 ? " + " : " - ");
    else if (sgn(cc) < 0) os << "-";
    first = false;
    Rational a = abs(cc);
    if (a != 1 || m.trivial()) os << a.get_str() << (m.trivial() ? "" : "*");
    if (!m.trivial()) os << vt.mono_str(m);
  }
  return os.str();
}

Mono substitute(const Mono& m, const std::vector<std::optional<Mono>>& images,
                const VarTable& target) {
  std::vector<int64_t> acc(target.size(), 0);
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m.e[v] == 0) continue;
    if (v < images.size() && images[v]) {
      const Mono& img = *images[v];
      for (std::size_t k = 0; k < img.size(); ++k)
        acc[k] += static_cast<int64_t>(m.e[v]) * img.e[k];
    } else {
      if (m.size() != target.size())
        fail(errc::bad_input, "substitution across tables must map every variable");
      acc[v] += static_cast<int64_t>(m.e[v]) * 4;
    }
  }
  Mono r(target.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] % 4 != 0) fail(errc::lattice_violation, "substitution leaves the 1/4 lattice");
    int64_t q = acc[k] / 4;
    if (q < INT32_MIN || q > INT32_MAX) fail(errc::bad_input, "exponent overflow in substitution");
    r.e[k] = static_cast<int32_t>(q);
  }
  return target.reduce(r);
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<std::optional<Mono>>& images,
                       const VarTable& target) {
  LaurentPoly out(target.size());
  for (auto& [m, c] : p.terms()) out.add_term(substitute(m, images, target), c);
  return out;
}

}  // namespace dt4
