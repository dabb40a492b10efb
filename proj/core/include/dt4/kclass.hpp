#pragma once

#include <cstdint>
#include <map>

#include "dt4/vars.hpp"

namespace dt4 {

// Virtual torus representation: integer-coefficient combination of integral
// monomials in t1..t3 (t4 reduced away) and y. All monomials are kept
// reduced, so the bar involution is plain exponent negation.
class KClass {
 public:
  using Terms = std::map<Mono, int64_t>;

  KClass() = default;
  explicit KClass(std::size_t nvars) : nvars_(nvars) {}
  static KClass one(std::size_t nvars) {
    KClass k(nvars);
    k.add(Mono(nvars), 1);
    return k;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Mono& m, int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  int64_t coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }
  int64_t trivial_coeff() const { return coeff(Mono(nvars_)); }

  // virtual rank: evaluation at every variable = 1
  int64_t rank() const {
    int64_t r = 0;
    for (auto& [m, c] : terms_) r += c;
    return r;
  }

  KClass& operator+=(const KClass& o) {
    for (auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  KClass& operator-=(const KClass& o) {
    for (auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  KClass operator-() const {
    KClass k(nvars_);
    for (auto& [m, c] : terms_) k.terms_.emplace(m, -c);
    return k;
  }
  friend KClass operator*(const KClass& a, const KClass& b) {
    KClass k(a.nvars_);
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) k.add(ma * mb, ca * cb);
    return k;
  }
  KClass times_mono(const Mono& m) const {
    KClass k(nvars_);
    for (auto& [t, c] : terms_) k.terms_.emplace(t * m, c);
    return k;
  }

  // dual representation t_i -> 1/t_i, y -> 1/y
  KClass bar() const {
    KClass k(nvars_);
    for (auto& [m, c] : terms_) k.terms_.emplace(m.inverse(), c);
    return k;
  }

  bool operator==(const KClass&) const = default;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace dt4
