#pragma once

#include <map>

#include "dt4/bracket.hpp"
#include "dt4/rationalfn.hpp"

namespace dt4 {

// Factor domains for Frac. A factor key is an int32 vector (reusing Mono as
// the container); the two domains differ in how a key materializes to a
// Laurent polynomial.

// [m] = m^{1/2} - m^{-1/2}, key = exponent vector of m in quarter units
struct BracketFactorOps {
  static LaurentPoly poly(const Mono& key) { return bracket(key); }
  static constexpr errc den_error = errc::trivial_weight_in_denominator;
  static constexpr const char* kind = "bracket";
};

// linear form c1*x1 + ... + cn*xn, key entries are the integer coefficients
struct LinearFactorOps {
  static LaurentPoly poly(const Mono& key) {
    LaurentPoly p(key.size());
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key.e[i] == 0) continue;
      Mono v(key.size());
      v.e[i] = 4;
      p.add_term(v, Rational(key.e[i]));
    }
    return p;
  }
  static constexpr errc den_error = errc::zero_linear_form;
  static constexpr const char* kind = "linear";
};

// Fraction kept in factored form:
//   c * pref * num * prod_{k>0} F(key)^k / prod_{k<0} F(key)^{-k}
// Sums expand only the factors the two operands do not share, which keeps
// denominators structural across the big accumulations.
template <class F>
class Frac {
 public:
  Frac() = default;
  explicit Frac(std::size_t nvars)
      : c_(0), pref_(nvars), num_(LaurentPoly::constant(nvars, 1)), nvars_(nvars) {}

  static Frac zero(std::size_t nvars) { return Frac(nvars); }
  static Frac constant(std::size_t nvars, const Rational& r) {
    Frac f(nvars);
    f.c_ = r;
    return f;
  }
  static Frac one(std::size_t nvars) { return constant(nvars, 1); }
  static Frac from_poly(LaurentPoly p) {
    Frac f(p.nvars());
    f.c_ = 1;
    f.num_ = std::move(p);
    f.strip_content();
    return f;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return sgn(c_) == 0; }
  const Rational& scalar() const { return c_; }
  const Mono& prefactor() const { return pref_; }
  const LaurentPoly& num_poly() const { return num_; }
  const std::map<Mono, int>& factor_map() const { return factors_; }

  // multiplies by F(key)^k, canonicalizing the key orientation
  void mul_factor(Mono key, int k) {
    if (k == 0 || is_zero()) return;
    if (key.trivial()) {
      if (k > 0) {
        *this = zero(nvars_);
        return;
      }
      fail(F::den_error, "trivial factor in a denominator");
    }
    for (int32_t e : key.e) {
      if (e == 0) continue;
      if (e < 0) {
        key = key.inverse();
        if (k % 2 != 0) c_ = -c_;
      }
      break;
    }
    auto [it, fresh] = factors_.emplace(key, k);
    if (!fresh) {
      it->second += k;
      if (it->second == 0) factors_.erase(it);
    }
  }

  void mul_scalar(const Rational& r) {
    c_ *= r;
    if (is_zero()) *this = zero(nvars_);
  }
  void mul_mono(const Mono& m) {
    if (!is_zero()) pref_ = pref_ * m;
  }

  friend Frac operator*(const Frac& a, const Frac& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.nvars_);
    Frac r = a;
    r.c_ *= b.c_;
    r.pref_ = r.pref_ * b.pref_;
    r.num_ = r.num_ * b.num_;
    for (auto& [k, m] : b.factors_) r.mul_factor(k, m);
    r.strip_content();
    return r;
  }

  friend Frac operator+(const Frac& a, const Frac& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Frac r(a.nvars_);
    // shared part: componentwise minimum, so both residuals are polynomial
    std::map<Mono, int> shared;
    for (auto& [k, ma] : a.factors_) {
      auto it = b.factors_.find(k);
      int mb = it == b.factors_.end() ? 0 : it->second;
      int s = std::min(ma, mb);
      if (s != 0) shared.emplace(k, s);
    }
    for (auto& [k, mb] : b.factors_) {
      if (a.factors_.count(k)) continue;
      int s = std::min(0, mb);
      if (s != 0) shared.emplace(k, s);
    }
    LaurentPoly pa = a.residual_poly(shared);
    LaurentPoly pb = b.residual_poly(shared);
    pa += pb;
    if (pa.is_zero()) return zero(a.nvars_);
    r.c_ = 1;
    r.num_ = std::move(pa);
    r.factors_ = std::move(shared);
    r.strip_content();
    return r;
  }
  friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
  Frac operator-() const {
    Frac r = *this;
    r.c_ = -r.c_;
    return r;
  }
  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  Frac& operator*=(const Frac& o) { return *this = *this * o; }

  bool equals(const Frac& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    // cancel shared factors, then cross multiply the rest
    std::map<Mono, int> da, db;  // extra factors to put on the *other* side
    auto collect = [&](const std::map<Mono, int>& fa, const std::map<Mono, int>& fb) {
      std::map<Mono, int> d;
      for (auto& [k, m] : fa) {
        auto it = fb.find(k);
        int diff = m - (it == fb.end() ? 0 : it->second);
        if (diff != 0) d.emplace(k, diff);
      }
      for (auto& [k, m] : fb)
        if (!fa.count(k)) d.emplace(k, -m);
      return d;
    };
    std::map<Mono, int> diff = collect(factors_, o.factors_);
    LaurentPoly lhs = num_.times_mono(pref_, c_);
    LaurentPoly rhs = o.num_.times_mono(o.pref_, o.c_);
    for (auto& [k, m] : diff) {
      LaurentPoly f = F::poly(k);
      for (int i = 0; i < std::abs(m); ++i) {
        if (m > 0)
          lhs = lhs * f;
        else
          rhs = rhs * f;
      }
    }
    return (lhs - rhs).is_zero();
  }

  RationalFn to_rational_fn() const {
    LaurentPoly n = LaurentPoly::constant(nvars_, 1);
    LaurentPoly d = LaurentPoly::constant(nvars_, 1);
    if (is_zero()) return RationalFn(LaurentPoly::zero(nvars_), d);
    n = num_.times_mono(pref_, c_);
    for (auto& [k, m] : factors_) {
      LaurentPoly f = F::poly(k);
      for (int i = 0; i < std::abs(m); ++i) {
        if (m > 0)
          n = n * f;
        else
          d = d * f;
      }
    }
    return RationalFn(std::move(n), std::move(d));
  }

  Frac psi(int32_t n) const {
    Frac r(nvars_);
    r.c_ = c_;
    r.pref_ = pref_.pow_scaled(n);
    r.num_ = num_.psi(n);
    for (auto& [k, m] : factors_) r.factors_.emplace(k.pow_scaled(n), m);
    return r;
  }

  Frac substituted(const std::vector<std::optional<Mono>>& images, const VarTable& target) const
    requires std::is_same_v<F, BracketFactorOps>
  {
    Frac r(target.size());
    if (is_zero()) return r;
    r.c_ = c_;
    r.pref_ = substitute(pref_, images, target);
    r.num_ = substitute(num_, images, target);
    for (auto& [k, m] : factors_) {
      r.mul_factor(substitute(k, images, target), m);
      if (r.is_zero()) return r;
    }
    r.strip_content();
    return r;
  }

  void divide_exact(long n) {
    if (n == 0) fail(errc::bad_input, "division by zero");
    c_ /= n;
  }

  // only fully factored values (numerator polynomial 1) are invertible here
  Frac inverse() const {
    if (is_zero()) fail(errc::bad_input, "inverse of zero");
    if (!num_.is_constant() || num_.constant_coeff() != 1)
      fail(errc::bad_input, "inverse of a non-factored fraction");
    Frac r(nvars_);
    r.c_ = 1 / c_;
    r.pref_ = pref_.inverse();
    for (auto& [k, m] : factors_) r.factors_.emplace(k, -m);
    return r;
  }

 private:
  LaurentPoly residual_poly(const std::map<Mono, int>& shared) const {
    LaurentPoly p = num_.times_mono(pref_, c_);
    auto mul_pow = [&](const Mono& k, int extra) {
      if (extra < 0) fail(errc::bad_input, "internal: non-polynomial residual");
      if (extra == 0) return;
      LaurentPoly f = F::poly(k);
      for (int i = 0; i < extra; ++i) p = p * f;
    };
    for (auto& [k, m] : factors_) {
      auto it = shared.find(k);
      mul_pow(k, m - (it == shared.end() ? 0 : it->second));
    }
    for (auto& [k, s] : shared)
      if (!factors_.count(k)) mul_pow(k, -s);
    return p;
  }

  void strip_content() {
    if (num_.is_zero()) {
      *this = zero(nvars_);
      return;
    }
    Rational rc = num_.rational_content();
    if (sgn(num_.terms().begin()->second) < 0) rc = -rc;
    Mono mc = num_.mono_content();
    c_ *= rc;
    pref_ = pref_ * mc;
    Rational inv = 1 / rc;
    num_ = num_.times_mono(mc.inverse(), inv);
  }

  Rational c_ = 0;
  Mono pref_;
  LaurentPoly num_;
  std::map<Mono, int> factors_;
  std::size_t nvars_ = 0;
};

using KFrac = Frac<BracketFactorOps>;
using CohomFrac = Frac<LinearFactorOps>;

inline KFrac kfrac_from_bracket_product(const BracketProduct& b) {
  KFrac f(b.nvars());
  if (b.is_zero()) return f;
  f = KFrac::constant(b.nvars(), b.sign());
  f.mul_mono(b.prefactor());
  for (auto& [m, k] : b.factors()) f.mul_factor(m, k);
  return f;
}

}  // namespace dt4
