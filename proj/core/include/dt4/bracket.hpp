#pragma once

#include <map>
#include <vector>

#include "dt4/kclass.hpp"
#include "dt4/laurent.hpp"

namespace dt4 {

// [m] = m^{1/2} - m^{-1/2} as a Laurent polynomial on the half lattice of m
LaurentPoly bracket(const Mono& m);

// Sign times a monomial prefactor times a product of bracket factors
// [m]^{k}, k positive in the numerator and negative in the denominator.
// Bracket arguments are canonicalized against a fixed total order on
// monomials via [m^{-1}] = -[m], so equal values get equal representations.
// A trivial argument in the numerator collapses the value to zero; a trivial
// argument in the denominator is rejected.
class BracketProduct {
 public:
  BracketProduct() : BracketProduct(0) {}
  explicit BracketProduct(std::size_t nvars) : nvars_(nvars), prefactor_(nvars) {}
  static BracketProduct one(std::size_t nvars) { return BracketProduct(nvars); }
  static BracketProduct zero_value(std::size_t nvars) {
    BracketProduct b(nvars);
    b.zero_ = true;
    return b;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return zero_; }
  int sign() const { return sign_; }
  const Mono& prefactor() const { return prefactor_; }
  const std::map<Mono, int>& factors() const { return brackets_; }

  void negate() { sign_ = -sign_; }
  void set_sign(int s) { sign_ = s; }

  void mul_mono(const Mono& m) {
    if (!zero_) prefactor_ = prefactor_ * m;
  }

  // multiplies by [m]^k, canonicalizing the argument
  void mul_bracket(Mono m, int k = 1);

  BracketProduct& operator*=(const BracketProduct& o);
  friend BracketProduct operator*(BracketProduct a, const BracketProduct& b) { return a *= b; }

  BracketProduct inverse() const;

  // plethysm: scales the prefactor and every bracket argument
  BracketProduct psi(int32_t n) const;

  BracketProduct substituted(const std::vector<std::optional<Mono>>& images,
                             const VarTable& target) const;

  int num_count() const;  // numerator factors counted with multiplicity
  int den_count() const;

  std::string str(const VarTable& vt) const;

  bool operator==(const BracketProduct&) const = default;

 private:
  std::size_t nvars_;
  int sign_ = 1;
  bool zero_ = false;
  Mono prefactor_;
  std::map<Mono, int> brackets_;
};

// [V] = prod_m [m]^{c_m} for V = sum c_m m. A positive trivial coefficient
// gives the zero value; a negative one is a non-movable class and rejected.
BracketProduct bracket_class(const KClass& v);

}  // namespace dt4
