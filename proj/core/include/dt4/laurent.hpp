#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dt4/rational.hpp"
#include "dt4/vars.hpp"

namespace dt4 {

// Sparse Laurent polynomial with exact rational coefficients. Terms are kept
// in a sorted map so the representation is canonical; zero coefficients are
// never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Mono, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly zero(std::size_t nvars) { return LaurentPoly(nvars); }
  static LaurentPoly constant(std::size_t nvars, const Rational& c) {
    LaurentPoly p(nvars);
    p.add_term(Mono(nvars), c);
    return p;
  }
  static LaurentPoly monomial(const Mono& m, const Rational& c = 1) {
    LaurentPoly p(m.size());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.trivial());
  }
  Rational constant_coeff() const {
    auto it = terms_.find(Mono(nvars_));
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Mono& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const {
    LaurentPoly p(nvars_);
    for (auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }
  LaurentPoly times_mono(const Mono& m, const Rational& c = 1) const {
    LaurentPoly p(nvars_);
    if (sgn(c) == 0) return p;
    for (auto& [k, v] : terms_) {
      Rational w = v * c;
      p.terms_.emplace(k * m, std::move(w));
    }
    return p;
  }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  // exponent scaling psi_n (plethysm on the coefficient ring)
  LaurentPoly psi(int32_t n) const {
    LaurentPoly p(nvars_);
    for (auto& [m, c] : terms_) p.terms_.emplace(m.pow_scaled(n), c);
    return p;
  }

  // gcd of coefficients (positive) and componentwise minimum of exponents;
  // both trivial on the zero polynomial
  Rational rational_content() const;
  Mono mono_content() const;

  // sum of coefficients (evaluation at every variable = 1)
  Rational eval_at_one() const {
    Rational s(0);
    for (auto& [m, c] : terms_) s += c;
    return s;
  }

  std::string str(const VarTable& vt) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

// homomorphic substitution: images[i] (if set) replaces variable i; the
// result is reduced with respect to the target table relation
LaurentPoly substitute(const LaurentPoly& p, const std::vector<std::optional<Mono>>& images,
                       const VarTable& target);
Mono substitute(const Mono& m, const std::vector<std::optional<Mono>>& images,
                const VarTable& target);

}  // namespace dt4
