#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "dt4/equality.hpp"
#include "dt4/frac.hpp"

namespace dt4 {

using SExp = std::vector<int32_t>;  // series exponent vector, one entry per series variable

inline int64_t total_degree(const SExp& e) {
  int64_t d = 0;
  for (int32_t x : e) d += x;
  return d;
}
inline bool all_nonneg(const SExp& e) {
  return std::all_of(e.begin(), e.end(), [](int32_t x) { return x >= 0; });
}

// all exponent vectors of length n with total degree <= D, lexicographically
std::vector<SExp> exponents_up_to(std::size_t n, int D);

// Multivariate power series truncated by total degree in the series
// variables. Intermediate terms may carry negative exponents (inverse
// colour monomials); finalize() asserts those have cancelled.
template <class C>
class Series {
 public:
  Series(VarTablePtr vt, int order, C zero)
      : vt_(std::move(vt)), order_(order), zero_(std::move(zero)) {}

  const VarTablePtr& table() const { return vt_; }
  int order() const { return order_; }
  std::size_t series_vars() const { return vt_->series_count(); }
  const std::map<SExp, C>& terms() const { return terms_; }
  const C& zero_coeff() const { return zero_; }

  C coeff(const SExp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_ : it->second;
  }

  void add_term(const SExp& e, const C& c) {
    if (c.is_zero()) return;
    if (total_degree(e) > order_) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Series& operator+=(const Series& o) {
    check_compatible(o);
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  Series operator-() const {
    Series r(vt_, order_, zero_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Series operator-(Series a, const Series& b) { return a += -b; }

  friend Series operator*(const Series& a, const Series& b) {
    a.check_compatible(b);
    Series r(a.vt_, a.order_, a.zero_);
    for (auto& [ea, ca] : a.terms_) {
      if (!all_nonneg(ea)) fail(errc::bad_input, "product of a series with negative exponents");
      for (auto& [eb, cb] : b.terms_) {
        if (total_degree(ea) + total_degree(eb) > a.order_) continue;
        SExp e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  bool is_zero() const { return terms_.empty(); }

  // asserts that every retained exponent vector is componentwise >= 0
  const Series& finalize() const {
    for (auto& [e, c] : terms_)
      if (!all_nonneg(e))
        fail(errc::bad_input, "series kept a negative exponent after finalization");
    return *this;
  }

  template <class Fn>
  Series<C> map_coeffs(Fn&& fn) const {
    Series<C> r(vt_, order_, zero_);
    for (auto& [e, c] : terms_) {
      C v = fn(c);
      if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
    }
    return r;
  }

 private:
  void check_compatible(const Series& o) const {
    if (order_ != o.order_) fail(errc::order_mismatch, "combining series of different orders");
    if (vt_ != o.vt_ && vt_->series_count() != o.vt_->series_count())
      fail(errc::order_mismatch, "combining series over different variable tables");
  }

  VarTablePtr vt_;
  int order_;
  C zero_;
  std::map<SExp, C> terms_;
};

// ---------------------------------------------------------------------------
// coefficient contexts: how series coefficients are built from bracket data

// exact coefficients, factored fractions over bracket factors
struct ExactCtx {
  using C = KFrac;
  VarTablePtr vt;

  C zero() const { return C::zero(vt->size()); }
  C one() const { return C::one(vt->size()); }
  C rational(const Rational& r) const { return C::constant(vt->size(), r); }
  // sign * mono * prod [arg]^k, all arguments free of series variables
  C make(int sign, const Mono& mono, const std::map<Mono, int>& brackets) const {
    C f = C::constant(vt->size(), sign);
    f.mul_mono(mono);
    for (auto& [m, k] : brackets) f.mul_factor(m, k);
    return f;
  }
  C from_bp(const BracketProduct& b) const { return kfrac_from_bracket_product(b); }
  void div(C& c, long n) const { c.divide_exact(n); }
};

// coefficients evaluated at one modular point
struct PointCtx {
  using C = Zp;
  VarTablePtr vt;
  const EvalPoint* pt;

  C zero() const { return Zp{0, pt->prime()}; }
  C one() const { return Zp{1, pt->prime()}; }
  C rational(const Rational& r) const { return to_zp(r, pt->prime()); }
  C make(int sign, const Mono& mono, const std::map<Mono, int>& brackets) const {
    Zp v{sign > 0 ? 1u : pt->prime() - 1, pt->prime()};
    v = v * pt->mono(mono);
    for (auto& [m, k] : brackets) {
      Zp b = pt->bracket_value(m);
      if (k < 0) {
        if (b.is_zero()) fail(errc::evaluation_singular, "bracket vanishes at the point");
        b = b.inv();
      }
      for (int i = 0; i < std::abs(k); ++i) v = v * b;
    }
    return v;
  }
  C from_bp(const BracketProduct& b) const { return pt->bracket_product(b); }
  void div(C& c, long n) const {
    Zp d{static_cast<uint64_t>(n % static_cast<int64_t>(pt->prime())), pt->prime()};
    c = c * d.inv();
  }
};

// ---------------------------------------------------------------------------
// q_expand: series expansion of a bracket product in the series variables.
//
// Bracket arguments carrying series variables are oriented toward positive
// series degree, [m] = -m^{-1/2}(1-m) or m^{1/2}(1-m^{-1}); denominator
// factors become geometric series, numerator factors finite products. The
// monomial collected from the orientation step may shift total degree down,
// so the expansion runs with the matching headroom before truncation at D.

template <class Ctx>
Series<typename Ctx::C> q_expand(const BracketProduct& bp, int D, const Ctx& ctx) {
  using C = typename Ctx::C;
  const VarTable& vt = *ctx.vt;
  Series<C> out(ctx.vt, D, ctx.zero());
  if (bp.is_zero()) return out;

  int sign = bp.sign();
  Mono fixed = bp.prefactor();
  std::map<Mono, int> coeff_brackets;
  struct GeomFactor {
    Mono u;  // positive series degree
    int k;   // (1-u)^k, k may be negative
  };
  std::vector<GeomFactor> geom;

  for (auto& [m, k] : bp.factors()) {
    int64_t sd = vt.series_degree_quarters(m);
    if (sd == 0) {
      if (!vt.coeff_only(m))
        fail(errc::non_expandable, "bracket argument of series degree zero: " + vt.mono_str(m));
      coeff_brackets.emplace(m, k);
      continue;
    }
    Mono u = sd > 0 ? m : m.inverse();
    // [m] = -u^{-1/2}(1-u) at u=m, +u^{-1/2}(1-u) at u=m^{-1}
    if (sd > 0 && k % 2 != 0) sign = -sign;
    fixed = fixed * u.half().inverse().pow_scaled(k);
    for (std::size_t i = vt.coeff_count(); i < u.size(); ++i)
      if (u.e[i] % 4 != 0) fail(errc::non_expandable, "fractional series exponent in expansion");
    geom.push_back({std::move(u), k});
  }

  // series part of the fixed monomial must be integral
  SExp shift(vt.series_count(), 0);
  Mono fixed_coeff = fixed;
  for (std::size_t i = vt.coeff_count(); i < fixed.size(); ++i) {
    if (fixed.e[i] % 4 != 0)
      fail(errc::non_expandable, "expansion does not yield integral series exponents");
    shift[i - vt.coeff_count()] = fixed.e[i] / 4;
    fixed_coeff.e[i] = 0;
  }
  int64_t shift_deg = total_degree(shift);
  if (shift_deg > D) return out;
  int Dloc = static_cast<int>(D - shift_deg);

  // expand prod (1-u)^k to local order Dloc; coefficients carry the
  // y-content of u powers
  struct Term {
    SExp e;
    Mono ymono;  // coefficient-variable content
    Rational c;
  };
  std::vector<Term> acc{{SExp(vt.series_count(), 0), Mono(vt.size()), Rational(1)}};
  for (auto& g : geom) {
    SExp ue(vt.series_count(), 0);
    Mono uy = g.u;
    for (std::size_t i = vt.coeff_count(); i < g.u.size(); ++i) {
      ue[i - vt.coeff_count()] = g.u.e[i] / 4;
      uy.e[i] = 0;
    }
    int64_t ud = total_degree(ue);
    // coefficients of (1-u)^k in powers u^j
    std::vector<Rational> binom;
    int jmax = ud > 0 ? static_cast<int>(Dloc / ud) + 1 : Dloc;
    if (g.k >= 0) jmax = std::min<int>(jmax, g.k);
    Rational b(1);
    for (int j = 0; j <= jmax; ++j) {
      binom.push_back(b);
      if (g.k >= 0)
        b = b * Rational(-(g.k - j)) / Rational(j + 1);  // C(k,j)(-1)^j
      else
        b = b * Rational(-g.k + j) / Rational(j + 1);  // C(j+|k|-1, |k|-1)
    }
    std::vector<Term> next;
    for (auto& t : acc)
      for (int j = 0; j < static_cast<int>(binom.size()); ++j) {
        if (sgn(binom[static_cast<std::size_t>(j)]) == 0) continue;
        if (total_degree(t.e) + j * ud > Dloc) break;
        Term nt;
        nt.e = t.e;
        for (std::size_t i = 0; i < nt.e.size(); ++i) nt.e[i] += j * ue[i];
        nt.ymono = t.ymono * uy.pow_scaled(j);
        nt.c = t.c * binom[static_cast<std::size_t>(j)];
        next.push_back(std::move(nt));
      }
    acc = std::move(next);
  }

  for (auto& t : acc) {
    SExp e = t.e;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += shift[i];
    C v = ctx.make(sign, fixed_coeff * t.ymono, coeff_brackets);
    C vr = ctx.rational(t.c);
    out.add_term(e, v * vr);
  }
  return out;
}

// ---------------------------------------------------------------------------
// exponentials

// ordinary exponential of a series with zero constant term
template <class C, class Ctx>
Series<C> exp_series(const Series<C>& g, const Ctx& ctx) {
  SExp zero_e(g.series_vars(), 0);
  if (!g.coeff(zero_e).is_zero())
    fail(errc::nonzero_constant_term, "exponential of a series with constant term");
  Series<C> r(g.table(), g.order(), g.zero_coeff());
  r.add_term(zero_e, ctx.one());
  Series<C> pw = r;
  for (int k = 1; k <= g.order(); ++k) {
    pw = pw * g;
    if (pw.is_zero()) break;
    Series<C> scaled = pw.map_coeffs([&](const C& c) {
      C v = c;
      ctx.div(v, k);
      return v;
    });
    pw = std::move(scaled);
    r += pw;
  }
  return r;
}

// y |-> m in every coefficient (the dimensional-reduction substitution)
inline Series<KFrac> specialize_y(const Series<KFrac>& s, const Mono& image) {
  const VarTable& vt = *s.table();
  std::vector<std::optional<Mono>> images(vt.size());
  images[static_cast<std::size_t>(vt.index_of("y"))] = image;
  return s.map_coeffs([&](const KFrac& c) { return c.substituted(images, vt); });
}

// coefficient context for series with CohomFrac coefficients
struct CohomCtx {
  using C = CohomFrac;
  VarTablePtr vt;
  C zero() const { return C::zero(vt->size()); }
  C one() const { return C::one(vt->size()); }
  C rational(const Rational& r) const { return C::constant(vt->size(), r); }
  void div(C& c, long n) const { c.divide_exact(n); }
};

namespace detail {
template <class C, class Ctx, class Psi>
Series<C> plethystic_exp_impl(const Series<C>& f, const Ctx& ctx, Psi&& psi_coeff) {
  SExp zero_e(f.series_vars(), 0);
  if (!f.coeff(zero_e).is_zero())
    fail(errc::nonzero_constant_term, "plethystic exponential of a series with constant term");
  Series<C> g(f.table(), f.order(), f.zero_coeff());
  for (int n = 1; n <= f.order(); ++n) {
    for (auto& [e, c] : f.terms()) {
      if (total_degree(e) * n > f.order()) continue;
      SExp en(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) en[i] = e[i] * n;
      C v = psi_coeff(c, n);
      ctx.div(v, n);
      g.add_term(en, v);
    }
  }
  return exp_series(g, ctx);
}
}  // namespace detail

// Exp with psi_n scaling every exponent: series variables and the
// coefficient-variable exponents inside num and den monomials.
template <class C, class Ctx>
Series<C> plethystic_exp(const Series<C>& f, const Ctx& ctx) {
  return detail::plethystic_exp_impl(f, ctx, [](const C& c, int n) { return c.psi(n); });
}

// Exp with psi_n scaling series exponents only; coefficients pass through.
// This is the exponential behind MacMahon-type products M(Q,q)^E whose
// exponents E are fixed rational functions.
template <class C, class Ctx>
Series<C> plethystic_exp_series_only(const Series<C>& f, const Ctx& ctx) {
  return detail::plethystic_exp_impl(f, ctx, [](const C& c, int) { return c; });
}

// Formal sum of bracket products, the argument of a plethystic exponential.
struct ExpArgument {
  VarTablePtr vt;
  std::vector<BracketProduct> summands;

  void add(BracketProduct b) { summands.push_back(std::move(b)); }
};

template <class Ctx>
Series<typename Ctx::C> expand_argument(const ExpArgument& arg, int D, const Ctx& ctx) {
  Series<typename Ctx::C> s(ctx.vt, D, ctx.zero());
  for (auto& b : arg.summands) s += q_expand(b, D, ctx);
  return s;
}

// Exp(arg) truncated at D: psi_n acts exactly on the bracket data, then each
// transformed argument is expanded in the requested coefficient context.
template <class Ctx>
Series<typename Ctx::C> plethystic_exp_argument(const ExpArgument& arg, int D, const Ctx& ctx) {
  using C = typename Ctx::C;
  Series<C> g(ctx.vt, D, ctx.zero());
  SExp zero_e(ctx.vt->series_count(), 0);
  for (int n = 1; n <= D; ++n) {
    Series<C> gn(ctx.vt, D, ctx.zero());
    for (auto& b : arg.summands) gn += q_expand(b.psi(n), D, ctx);
    if (!gn.coeff(zero_e).is_zero())
      fail(errc::nonzero_constant_term, "plethystic exponential of an argument with constant term");
    gn = gn.map_coeffs([&](const C& c) {
      C v = c;
      ctx.div(v, n);
      return v;
    });
    g += gn;
  }
  g.finalize();
  return exp_series(g, ctx);
}

}  // namespace dt4
