#include "dt4/bracket.hpp"

#include <sstream>

namespace dt4 {

LaurentPoly bracket(const Mono& m) {
  LaurentPoly p(m.size());
  if (m.trivial()) return p;  // x^{1/2} - x^{-1/2} at x = 1
  Mono h = m.half();
  p.add_term(h, 1);
  p.add_term(h.inverse(), -1);
  return p;
}

void BracketProduct::mul_bracket(Mono m, int k) {
  if (zero_ || k == 0) return;
  if (m.trivial()) {
    if (k > 0) {
      zero_ = true;
      return;
    }
    fail(errc::trivial_weight_in_denominator, "[1] in a denominator");
  }
  // orient the argument: first nonzero exponent positive
  for (int32_t e : m.e) {
    if (e == 0) continue;
    if (e < 0) {
      m = m.inverse();
      if (k % 2 != 0) sign_ = -sign_;
    }
    break;
  }
  auto [it, fresh] = brackets_.emplace(m, k);
  if (!fresh) {
    it->second += k;
    if (it->second == 0) brackets_.erase(it);
  }
}

BracketProduct& BracketProduct::operator*=(const BracketProduct& o) {
  if (zero_) return *this;
  if (o.zero_) {
    zero_ = true;
    return *this;
  }
  sign_ *= o.sign_;
  prefactor_ = prefactor_ * o.prefactor_;
  for (auto& [m, k] : o.brackets_) mul_bracket(m, k);
  return *this;
}

BracketProduct BracketProduct::inverse() const {
  if (zero_) fail(errc::bad_input, "inverse of the zero bracket product");
  BracketProduct r(nvars_);
  r.sign_ = sign_;
  r.prefactor_ = prefactor_.inverse();
  for (auto& [m, k] : brackets_) r.brackets_.emplace(m, -k);
  return r;
}

BracketProduct BracketProduct::psi(int32_t n) const {
  BracketProduct r(nvars_);
  r.sign_ = sign_;
  r.zero_ = zero_;
  r.prefactor_ = prefactor_.pow_scaled(n);
  for (auto& [m, k] : brackets_) r.mul_bracket(m.pow_scaled(n), k);
  return r;
}

BracketProduct BracketProduct::substituted(const std::vector<std::optional<Mono>>& images,
                                           const VarTable& target) const {
  BracketProduct r(target.size());
  r.sign_ = sign_;
  r.zero_ = zero_;
  r.prefactor_ = substitute(prefactor_, images, target);
  for (auto& [m, k] : brackets_) r.mul_bracket(substitute(m, images, target), k);
  return r;
}

int BracketProduct::num_count() const {
  int n = 0;
  for (auto& [m, k] : brackets_)
    if (k > 0) n += k;
  return n;
}

int BracketProduct::den_count() const {
  int n = 0;
  for (auto& [m, k] : brackets_)
    if (k < 0) n -= k;
  return n;
}

std::string BracketProduct::str(const VarTable& vt) const {
  if (zero_) return "0";
  std::ostringstream os;
  os << (sign_ < 0 ? "-" : "");
  bool wrote = false;
  if (!prefactor_.trivial()) {
    os << vt.mono_str(prefactor_);
    wrote = true;
  }
  for (auto& [m, k] : brackets_) {
    if (k < 0) continue;
    if (wrote) os << "*";
    wrote = true;
    os << "[" << vt.mono_str(m) << "]";
    if (k != 1) os << "^" << k;
  }
  if (!wrote) os << "1";
  if (den_count() > 0) {
    os << " / (";
    bool first = true;
    for (auto& [m, k] : brackets_) {
      if (k > 0) continue;
      if (!first) os << "*";
      first = false;
      os << "[" << vt.mono_str(m) << "]";
      if (k != -1) os << "^" << -k;
    }
    os << ")";
  }
  return os.str();
}

BracketProduct bracket_class(const KClass& v) {
  BracketProduct b(v.nvars());
  for (auto& [m, c] : v.terms()) {
    if (c > INT32_MAX || c < INT32_MIN) fail(errc::bad_input, "bracket multiplicity overflow");
    b.mul_bracket(m, static_cast<int>(c));
    if (b.is_zero()) return b;
  }
  return b;
}

}  // namespace dt4
