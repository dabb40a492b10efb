#include "dt4/modular.hpp"

namespace dt4 {

Zp Zp::pow(int64_t e) const {
  if (e < 0) return inv().pow(-e);
  Zp r{1 % p, p}, b = *this;
  uint64_t k = static_cast<uint64_t>(e);
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

Zp Zp::inv() const {
  if (v == 0) fail(errc::evaluation_singular, "inverse of zero residue");
  return pow(static_cast<int64_t>(p - 2));
}

Zp to_zp(const Rational& q, uint64_t p) {
  mpz_class pz(static_cast<unsigned long>(p));  // fits: p < 2^62 < ulong max on LP64
  mpz_class nr = q.get_num() % pz;
  if (nr < 0) nr += pz;
  mpz_class dr = q.get_den() % pz;
  Zp num{nr.get_ui(), p}, den{dr.get_ui(), p};
  if (den.is_zero()) fail(errc::evaluation_singular, "coefficient denominator divisible by the prime");
  return num * den.inv();
}

EvalPoint::EvalPoint(const VarTable& vt, uint64_t prime, std::mt19937_64& rng) : p_(prime) {
  std::uniform_int_distribution<uint64_t> dist(1, prime - 1);
  root_.resize(vt.size(), Zp{0, prime});
  for (std::size_t i = 0; i < vt.size(); ++i) root_[i] = Zp{dist(rng), prime};
  if (vt.has_relation()) {
    // quarter-root of the eliminated variable follows from the relation image
    std::size_t r = static_cast<std::size_t>(vt.reduced_var());
    const Mono& img = vt.relation_image();
    Zp v{1, prime};
    for (std::size_t i = 0; i < img.size(); ++i)
      if (img.e[i] != 0) v = v * root_[i].pow(img.e[i] / 4);
    root_[r] = v;
  }
}

Zp EvalPoint::mono(const Mono& m) const {
  Zp r{1, p_};
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.e[i] != 0) r = r * root_[i].pow(m.e[i]);
  return r;
}

Zp EvalPoint::mono_half(const Mono& m) const {
  Zp r{1, p_};
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (m.e[i] % 2 != 0) fail(errc::lattice_violation, "half power off the 1/4 lattice");
    r = r * root_[i].pow(m.e[i] / 2);
  }
  return r;
}

Zp EvalPoint::bracket_value(const Mono& m) const {
  Zp h = mono_half(m);
  return h - h.inv();
}

Zp EvalPoint::poly(const LaurentPoly& q) const {
  Zp r{0, p_};
  for (auto& [m, c] : q.terms()) r = r + to_zp(c, p_) * mono(m);
  return r;
}

Zp EvalPoint::rational_fn(const RationalFn& f) const {
  Zp d = poly(f.den());
  if (d.is_zero()) fail(errc::evaluation_singular, "denominator vanishes at the point");
  return poly(f.num()) * d.inv();
}

Zp EvalPoint::bracket_product(const BracketProduct& b) const {
  if (b.is_zero()) return Zp{0, p_};
  Zp r{b.sign() > 0 ? 1u : p_ - 1, p_};
  r = r * mono(b.prefactor());
  for (auto& [m, k] : b.factors()) {
    Zp v = bracket_value(m);
    if (k < 0) {
      if (v.is_zero()) fail(errc::evaluation_singular, "bracket denominator vanishes at the point");
      v = v.inv();
    }
    for (int i = 0; i < std::abs(k); ++i) r = r * v;
  }
  return r;
}

}  // namespace dt4
