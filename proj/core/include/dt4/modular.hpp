#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dt4/frac.hpp"
#include "dt4/laurent.hpp"

namespace dt4 {

// default primes for randomized identity testing, both > 2^61
inline constexpr uint64_t kPrimes[2] = {2305843009213693951ull,   // 2^61 - 1
                                        4611686018427387847ull};  // 2^62 - 57

// arithmetic in F_p, p < 2^62
struct Zp {
  uint64_t v = 0;
  uint64_t p = 0;

  static Zp make(uint64_t value, uint64_t prime) { return {value % prime, prime}; }
  bool is_zero() const { return v == 0; }

  friend Zp operator+(Zp a, Zp b) {
    uint64_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return {s, a.p};
  }
  friend Zp operator-(Zp a, Zp b) {
    uint64_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
    return {s, a.p};
  }
  friend Zp operator*(Zp a, Zp b) {
    return {static_cast<uint64_t>((static_cast<unsigned __int128>(a.v) * b.v) % a.p), a.p};
  }
  Zp operator-() const { return {v == 0 ? 0 : p - v, p}; }
  Zp pow(int64_t e) const;
  Zp inv() const;
  bool operator==(const Zp&) const = default;
};

Zp to_zp(const Rational& q, uint64_t p);

// One evaluation point: an independent nonzero residue is drawn for the
// quarter-root of every free variable, so quarter exponents become integer
// powers. A table relation determines the eliminated variable's root from
// the others, which makes unreduced representatives evaluate consistently.
class EvalPoint {
 public:
  EvalPoint(const VarTable& vt, uint64_t prime, std::mt19937_64& rng);

  uint64_t prime() const { return p_; }

  Zp mono(const Mono& m) const;             // product of root^e over quarter exponents
  Zp mono_half(const Mono& m) const;        // m^{1/2}; exponents must be even
  Zp bracket_value(const Mono& m) const;    // m^{1/2} - m^{-1/2}
  Zp poly(const LaurentPoly& q) const;
  Zp rational_fn(const RationalFn& f) const;  // throws evaluation_singular on zero denominator
  Zp bracket_product(const BracketProduct& b) const;

  template <class F>
  Zp frac(const Frac<F>& f) const {
    Zp r = to_zp(f.scalar(), p_);
    if (f.is_zero()) return r;
    r = r * mono(f.prefactor()) * poly(f.num_poly());
    for (auto& [k, m] : f.factor_map()) {
      LaurentPoly fp = F::poly(k);
      Zp v = poly(fp);
      if (m < 0) {
        if (v.is_zero()) fail(errc::evaluation_singular, "denominator factor vanishes at the point");
        v = v.inv();
      }
      for (int i = 0; i < std::abs(m); ++i) r = r * v;
    }
    return r;
  }

 private:
  uint64_t p_;
  std::vector<Zp> root_;
};

}  // namespace dt4
