#pragma once

#include "dt4/laurent.hpp"

namespace dt4 {

// Fraction of Laurent polynomials. No polynomial gcd is attempted: the
// denominator is normalized by stripping its monomial and rational content
// (absorbed into the numerator) and fixing the sign of its leading term.
// Equality is decided by cross multiplication.
class RationalFn {
 public:
  RationalFn() = default;
  explicit RationalFn(std::size_t nvars)
      : num_(LaurentPoly::zero(nvars)), den_(LaurentPoly::constant(nvars, 1)) {}
  RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  static RationalFn constant(std::size_t nvars, const Rational& c) {
    return RationalFn(LaurentPoly::constant(nvars, c), LaurentPoly::constant(nvars, 1));
  }
  static RationalFn from_poly(LaurentPoly p) {
    std::size_t n = p.nvars();
    return RationalFn(std::move(p), LaurentPoly::constant(n, 1));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.num_.is_zero()) fail(errc::bad_input, "division by the zero rational function");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFn operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
  }

  // a/b = c/d iff ad - cb = 0, independent of representatives
  bool equals(const RationalFn& o) const { return (num_ * o.den_ - o.num_ * den_).is_zero(); }

  RationalFn psi(int32_t n) const { return RationalFn(num_.psi(n), den_.psi(n)); }

  std::string str(const VarTable& vt) const {
    if (den_.is_constant() && den_.constant_coeff() == 1) return num_.str(vt);
    return "(" + num_.str(vt) + ") / (" + den_.str(vt) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) fail(errc::bad_input, "zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentPoly::constant(den_.nvars(), 1);
      return;
    }
    Mono mc = den_.mono_content();
    Rational rc = den_.rational_content();
    if (sgn(den_.terms().begin()->second) < 0) rc = -rc;
    Rational inv = 1 / rc;
    num_ = num_.times_mono(mc.inverse(), inv);
    den_ = den_.times_mono(mc.inverse(), inv);
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace dt4
