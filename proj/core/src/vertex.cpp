#include "dt4/vertex.hpp"

#include "dt4/parallel.hpp"

namespace dt4 {

namespace {

Mono box_mono(const Box& b, const VarTable& vt) {
  Mono m(vt.size());
  for (int i = 0; i < 4; ++i) m.e[static_cast<std::size_t>(i)] = 4 * b[static_cast<std::size_t>(i)];
  return vt.reduce(m);
}

std::array<int64_t, 4> texp(const Mono& m) {
  return {m.e[0] / 4, m.e[1] / 4, m.e[2] / 4, m.e[3] / 4};
}

}  // namespace

KClass character(const SolidPartition& pi, const VarTable& vt) {
  KClass z(vt.size());
  for (const Box& b : pi.boxes()) z.add(box_mono(b, vt), 1);
  return z;
}

KClass p_bar_123(const VarTable& vt) {
  KClass p = KClass::one(vt.size());
  for (const char* nm : {"t1", "t2", "t3"}) {
    KClass f = KClass::one(vt.size());
    f.add(vt.var(nm, -1), -1);
    p = p * f;
  }
  return p;
}

KClass t_vir(const SolidPartition& pi, const VarTable& vt) {
  KClass z = character(pi, vt);
  Mono inv1234 = vt.mono({{"t1", -1}, {"t2", -1}, {"t3", -1}, {"t4", -1}});
  KClass p = KClass::one(vt.size());  // P_1234 = prod (1 - t_i)
  for (const char* nm : {"t1", "t2", "t3", "t4"}) {
    KClass g(vt.size());
    g.add(Mono(vt.size()), 1);
    g.add(vt.var(nm), -1);
    p = p * g;
  }
  KClass zbar = z.bar();
  return z + zbar.times_mono(inv1234) - (p * z * zbar).times_mono(inv1234);
}

KClass vertex_class(const SolidPartition& pi, const VarTable& vt, Twist twist) {
  KClass z = character(pi, vt);
  KClass zbar = z.bar();
  KClass v = z - p_bar_123(vt) * z * zbar;
  if (twist == Twist::nekrasov) v -= zbar.times_mono(vt.var("y"));
  return v;
}

KClass g_fixed_part(const KClass& v, const GroupAction& g, const VarTable&) {
  if (g.is_trivial()) return v;
  KClass out(v.nvars());
  for (auto& [m, c] : v.terms())
    if (g.color_of_texp(texp(m)) == 0) out.add(m, c);
  return out;
}

SignRule SignRule::parse(const std::string& s) {
  SignRule r;
  if (s.empty() || s == "default" || s == "spec") return r;
  r.diag = false;
  r.base = Base::none;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t plus = s.find('+', pos);
    std::string tok = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    if (tok == "size")
      r.base = Base::size;
    else if (tok == "r0")
      r.base = Base::r0;
    else if (tok == "diag")
      r.diag = true;
    else if (tok == "none")
      ;
    else
      fail(errc::bad_input, "unknown sign rule token: " + tok);
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return r;
}

std::string SignRule::str() const {
  if (base == Base::group_default && diag) return "default";
  std::string s;
  if (base == Base::size) s = "size";
  if (base == Base::r0) s = "r0";
  if (base == Base::group_default) s = "default-base";
  if (diag) s += s.empty() ? "diag" : "+diag";
  if (s.empty()) s = "none";
  return s;
}

int SignRule::exponent(const SolidPartition& pi, const GroupAction& g) const {
  int e = 0;
  switch (base) {
    case Base::group_default:
      if (g.is_trivial())
        e = static_cast<int>(pi.size());
      else
        e = color_counts(pi, g)[0];
      break;
    case Base::size:
      e = static_cast<int>(pi.size());
      break;
    case Base::r0:
      e = color_counts(pi, g)[0];
      break;
    case Base::none:
      break;
  }
  if (diag) e += pi.diagonal_pairs();
  return e;
}

Contribution contribution(const SolidPartition& pi, const GroupAction& g, const VarTable& vt,
                          const SignRule& rule) {
  Contribution c;
  c.vclass = g_fixed_part(vertex_class(pi, vt, Twist::nekrasov), g, vt);
  if (c.vclass.trivial_coeff() > 0)
    fail(errc::trivial_weight_in_denominator,
         "non-movable class: trivial weight with positive coefficient in vtilde");
  c.value = bracket_class(-c.vclass);
  c.sign = rule.exponent(pi, g) % 2 == 0 ? 1 : -1;
  c.profile = g.is_trivial() ? ColorProfile{static_cast<int32_t>(pi.size())} : color_counts(pi, g);
  c.source = pi.str();
  return c;
}

template <class Ctx>
Series<typename Ctx::C> dt_partition_function(const GroupAction& g, int D, const Ctx& ctx,
                                              const SignRule& rule, int workers,
                                              const std::string& cache_dir) {
  using C = typename Ctx::C;
  if (D < 0) fail(errc::bad_input, "negative truncation order");
  Series<C> s(ctx.vt, D, ctx.zero());
  // coefficients merge over a balanced tree: summands of one profile share
  // most bracket factors, so paired merges keep the common denominators flat
  std::map<SExp, std::vector<C>> buckets;
  for (int n = 0; n <= D; ++n) {
    std::vector<SolidPartition> ps = enumerate_solid_partitions(n, cache_dir);
    std::vector<std::pair<SExp, C>> items = parallel_map_indexed<std::pair<SExp, C>>(
        ps.size(), workers, [&](std::size_t i) -> std::pair<SExp, C> {
          try {
            Contribution c = contribution(ps[i], g, *ctx.vt, rule);
            SExp e(c.profile.begin(), c.profile.end());
            return {std::move(e), contribution_value(c, ctx)};
          } catch (error& err) {
            err.set_context(ps[i].str());
            throw;
          }
        });
    for (auto& [e, v] : items) buckets[e].push_back(std::move(v));
  }
  for (auto& [e, vs] : buckets) {
    while (vs.size() > 1) {
      std::vector<C> next;
      for (std::size_t i = 0; i + 1 < vs.size(); i += 2) next.push_back(vs[i] + vs[i + 1]);
      if (vs.size() % 2 != 0) next.push_back(std::move(vs.back()));
      vs = std::move(next);
    }
    s.add_term(e, vs[0]);
  }
  s.finalize();
  return s;
}

template Series<KFrac> dt_partition_function<ExactCtx>(const GroupAction&, int, const ExactCtx&,
                                                       const SignRule&, int, const std::string&);
template Series<Zp> dt_partition_function<PointCtx>(const GroupAction&, int, const PointCtx&,
                                                    const SignRule&, int, const std::string&);

// ---------------------------------------------------------------------------

namespace {

// linear-form key (l1,l2,l3,m) of a K-theoretic weight t^mu y^e
Mono linear_key(const Mono& arg, const VarTable& vt, const VarTable& cohom_vt) {
  Mono k(cohom_vt.size());
  for (std::size_t i = 0; i < arg.size(); ++i) {
    if (arg.e[i] == 0) continue;
    if (arg.e[i] % 4 != 0) fail(errc::bad_input, "fractional weight in cohomological map");
    int32_t c = arg.e[i] / 4;
    const std::string& nm = vt.name(i);
    if (nm == "t1") {
      k.e[0] += c;
    } else if (nm == "t2") {
      k.e[1] += c;
    } else if (nm == "t3") {
      k.e[2] += c;
    } else if (nm == "t4") {  // lambda4 = -l1 - l2 - l3
      k.e[0] -= c;
      k.e[1] -= c;
      k.e[2] -= c;
    } else if (nm == "y") {
      k.e[3] += c;
    } else {
      fail(errc::bad_input, "series variable in a cohomological weight: " + vt.mono_str(arg));
    }
  }
  return k;
}

}  // namespace

CohomFrac cohomological_map(const Contribution& c, const VarTable& vt,
                            const VarTablePtr& cohom_vt) {
  if (c.value.is_zero()) return CohomFrac::zero(cohom_vt->size());
  if (c.value.num_count() != c.value.den_count())
    fail(errc::rank_mismatch, "bracket product is not rank 0");
  // the monomial prefactor tends to 1 in the b -> 0 limit
  CohomFrac f = CohomFrac::constant(cohom_vt->size(), c.sign * c.value.sign());
  for (auto& [m, k] : c.value.factors()) f.mul_factor(linear_key(m, vt, *cohom_vt), k);
  return f;
}

BSeries1 b_series_order1(const Contribution& c, const VarTable& vt, const VarTablePtr& cohom_vt) {
  std::size_t n = cohom_vt->size();
  if (c.value.is_zero()) return {CohomFrac::zero(n), CohomFrac::zero(n)};
  // value = (sign) e^{bP} prod (2 sinh(b L_i / 2))^{k_i}
  //       = b^{sum k_i} (a0 + a1 b + O(b^2)); sinh contributes no odd term,
  //       so a1 comes entirely from the prefactor exponential
  CohomFrac a0 = CohomFrac::constant(n, c.sign * c.value.sign());
  CohomFrac a1 = CohomFrac::zero(n);
  int64_t bpow = 0;
  for (auto& [m, k] : c.value.factors()) {
    bpow += k;
    CohomFrac f = CohomFrac::one(n);
    f.mul_factor(linear_key(m, vt, *cohom_vt), 1);
    if (k < 0) f = f.inverse();
    for (int i = 0; i < std::abs(k); ++i) {
      // multiply (a0 + a1 b) by (f + 0 b)
      a0 = a0 * f;
      a1 = a1 * f;
    }
  }
  if (bpow != 0) fail(errc::rank_mismatch, "bracket product has residual b power");
  if (!c.value.prefactor().trivial()) {
    CohomFrac p = CohomFrac::from_poly(
        LinearFactorOps::poly(linear_key(c.value.prefactor(), vt, *cohom_vt)));
    // (a0 + a1 b)(1 + P b) = a0 + (a1 + a0 P) b
    a1 = a1 + a0 * p;
  }
  return {a0, a1};
}

int64_t m_degree(const CohomFrac& f, const VarTable& cohom_vt) {
  if (f.is_zero()) fail(errc::bad_input, "m-degree of zero");
  int m_idx = cohom_vt.index_of("m");
  auto poly_deg = [&](const LaurentPoly& p) {
    int64_t d = INT64_MIN;
    for (auto& [mo, co] : p.terms()) d = std::max<int64_t>(d, mo.e[static_cast<std::size_t>(m_idx)] / 4);
    return d;
  };
  int64_t d = f.prefactor().e[static_cast<std::size_t>(m_idx)] / 4 + poly_deg(f.num_poly());
  for (auto& [k, mult] : f.factor_map())
    if (k.e[static_cast<std::size_t>(m_idx)] != 0) d += mult;
  return d;
}

CohomFrac m_leading(const CohomFrac& f, const VarTablePtr& cohom_vt) {
  if (f.is_zero()) return f;
  std::size_t m_idx = static_cast<std::size_t>(cohom_vt->index_of("m"));
  CohomFrac r = CohomFrac::constant(cohom_vt->size(), f.scalar());
  Mono pref = f.prefactor();
  pref.e[m_idx] = 0;
  r.mul_mono(pref);
  // numerator polynomial: keep the terms of maximal m-exponent, strip m
  {
    const LaurentPoly& p = f.num_poly();
    int32_t dmax = INT32_MIN;
    for (auto& [mo, co] : p.terms()) dmax = std::max(dmax, mo.e[m_idx]);
    LaurentPoly lead(p.nvars());
    for (auto& [mo, co] : p.terms()) {
      if (mo.e[m_idx] != dmax) continue;
      Mono m2 = mo;
      m2.e[m_idx] = 0;
      lead.add_term(m2, co);
    }
    r = r * CohomFrac::from_poly(lead);
  }
  for (auto& [k, mult] : f.factor_map()) {
    if (k.e[m_idx] != 0) {
      // leading term of (alpha m + <lambda,.>)^mult is (alpha m)^mult
      Rational alpha(k.e[m_idx]);
      for (int i = 0; i < std::abs(mult); ++i)
        r.mul_scalar(mult > 0 ? alpha : 1 / alpha);
    } else {
      r.mul_factor(k, mult);
    }
  }
  return r;
}

CohomFrac insertion_free_contribution(const SolidPartition& pi, const GroupAction& g,
                                      const VarTable& vt, const VarTablePtr& cohom_vt,
                                      const SignRule& rule) {
  KClass v = g_fixed_part(vertex_class(pi, vt, Twist::none), g, vt);
  int64_t c1 = v.trivial_coeff();
  if (c1 > 0)
    fail(errc::zero_linear_form, "trivial weight with positive coefficient in v");
  if (c1 < 0) return CohomFrac::zero(cohom_vt->size());
  int sign = rule.exponent(pi, g) % 2 == 0 ? 1 : -1;
  CohomFrac f = CohomFrac::constant(cohom_vt->size(), sign);
  for (auto& [m, c] : v.terms()) {
    if (c > INT32_MAX || c < INT32_MIN) fail(errc::bad_input, "weight multiplicity overflow");
    f.mul_factor(linear_key(m, vt, *cohom_vt), -static_cast<int>(c));
  }
  return f;
}

std::optional<Contribution> dimensional_reduce(const Contribution& c, const VarTable& vt) {
  int y_idx = vt.index_of("y");
  Mono t4 = vt.var("t4");
  KClass red(c.vclass.nvars());
  for (auto& [m, co] : c.vclass.terms()) {
    Mono m2 = m;
    int32_t ey = m2.e[static_cast<std::size_t>(y_idx)];
    m2.e[static_cast<std::size_t>(y_idx)] = 0;
    if (ey != 0) m2 = m2 * t4.pow_scaled(ey / 4);
    red.add(m2, co);
  }
  int64_t c1 = red.trivial_coeff();
  if (c1 < 0) return std::nullopt;  // a [1] factor lands in the numerator of [-v]
  if (c1 > 0)
    fail(errc::pole_at_reduction, "trivial weight with positive coefficient after y=t4");
  Contribution r;
  r.vclass = red;
  r.value = bracket_class(-red);
  r.profile = c.profile;
  r.source = c.source;
  // 3-fold sign: 4-fold sign composed with (-1)^{|pi|_{R0}}
  r.sign = c.profile.empty() || c.profile[0] % 2 == 0 ? c.sign : -c.sign;
  return r;
}

}  // namespace dt4
