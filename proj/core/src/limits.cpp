#include <chrono>
#include <sstream>

#include "dt4/formulas.hpp"

namespace dt4 {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::string exp_label(const SExp& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

// linear factor over (l1,l2,l3,m)
Mono lin(const VarTablePtr& cvt, int a1, int a2, int a3, int am) {
  Mono k(cvt->size());
  k.e[0] = a1;
  k.e[1] = a2;
  k.e[2] = a3;
  k.e[3] = am;
  return k;
}

CohomFrac with_m(const VarTablePtr& cvt, CohomFrac f) {
  Mono m(cvt->size());
  m.e[static_cast<std::size_t>(cvt->index_of("m"))] = 4;
  f.mul_mono(m);
  return f;
}

// -(l1+l2)/(l3 l4) and the second zr Macmahon exponent block
CohomFrac zr_e_col(const VarTablePtr& cvt) {
  CohomFrac f = CohomFrac::constant(cvt->size(), -1);
  f.mul_factor(lin(cvt, 1, 1, 0, 0), 1);
  f.mul_factor(lin(cvt, 0, 0, 1, 0), -1);
  f.mul_factor(lin(cvt, -1, -1, -1, 0), -1);  // l4
  return f;
}

CohomFrac zr_e0(const VarTablePtr& cvt, int r) {
  CohomFrac a = zr_e_col(cvt);
  a.mul_scalar(r);
  CohomFrac b = CohomFrac::constant(cvt->size(), rat(-1, r));
  b.mul_factor(lin(cvt, 1, 1, 0, 0), 1);
  b.mul_factor(lin(cvt, 1, 1, 1, 0), 1);
  b.mul_factor(lin(cvt, 1, 0, 0, 0), -1);
  b.mul_factor(lin(cvt, 0, 1, 0, 0), -1);
  b.mul_factor(lin(cvt, -1, -1, -1, 0), -1);
  return a + b;
}

// -1/l4
CohomFrac z22_g(const VarTablePtr& cvt) {
  CohomFrac f = CohomFrac::constant(cvt->size(), -1);
  f.mul_factor(lin(cvt, -1, -1, -1, 0), -1);
  return f;
}

// -1 + l1/l2 + l2/l1 + l1/l3 + l3/l1 + l2/l3 + l3/l2
CohomFrac z22_a0(const VarTablePtr& cvt) {
  CohomFrac s = CohomFrac::constant(cvt->size(), -1);
  int idx[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto& p : idx) {
    auto term = [&](int up, int dn) {
      CohomFrac f = CohomFrac::one(cvt->size());
      Mono u(cvt->size()), d(cvt->size());
      u.e[static_cast<std::size_t>(up)] = 1;
      d.e[static_cast<std::size_t>(dn)] = 1;
      f.mul_factor(u, 1);
      f.mul_factor(d, -1);
      return f;
    };
    s = s + term(p[0], p[1]) + term(p[1], p[0]);
  }
  return s;
}

struct MacmahonTerm {
  SExp shift;       // exponent of Q relative to q_(G)^n (entries may be negative)
  CohomFrac expo;   // MacMahon exponent E in M(Q, q_(G))^E
};

// exponent data of the cohomological closed form; insertion-free drops m
std::vector<MacmahonTerm> macmahon_terms(const GroupAction& g, const VarTablePtr& cvt,
                                         std::size_t nq, bool with_insertion) {
  std::vector<MacmahonTerm> terms;
  auto wrap = [&](CohomFrac f) { return with_insertion ? with_m(cvt, std::move(f)) : f; };
  const std::string& spec = g.spec();
  if (g.is_trivial() || spec.rfind("zr:", 0) == 0) {
    int r = g.is_trivial() ? 1 : g.orders()[0];
    terms.push_back({SExp(nq, 0), wrap(zr_e0(cvt, r))});
    for (int i = 1; i < r; ++i)
      for (int j = i; j < r; ++j) {
        SExp s(nq, 0);
        for (int k = i; k <= j; ++k) s[static_cast<std::size_t>(k)] = 1;
        CohomFrac e = wrap(zr_e_col(cvt));
        terms.push_back({s, e});
        SExp sneg(nq, 0);
        for (int k = i; k <= j; ++k) sneg[static_cast<std::size_t>(k)] = -1;
        terms.push_back({sneg, std::move(e)});
      }
    return terms;
  }
  if (spec == "z2z2") {
    CohomFrac G = z22_g(cvt);
    int i10 = g.char_index_by_name("10");
    int i01 = g.char_index_by_name("01");
    int i11 = g.char_index_by_name("11");
    terms.push_back({SExp(nq, 0), wrap(z22_a0(cvt) * G)});
    auto push_pair = [&](std::initializer_list<int> idxs, CohomFrac e) {
      SExp s(nq, 0), sneg(nq, 0);
      for (int i : idxs) {
        s[static_cast<std::size_t>(i)] = 1;
        sneg[static_cast<std::size_t>(i)] = -1;
      }
      CohomFrac full = wrap(e * G);
      terms.push_back({s, full});
      terms.push_back({sneg, std::move(full)});
    };
    push_pair({i10}, CohomFrac::one(cvt->size()));
    push_pair({i01}, CohomFrac::one(cvt->size()));
    push_pair({i11}, CohomFrac::one(cvt->size()));
    push_pair({i10, i01, i11}, CohomFrac::one(cvt->size()));
    auto half_ratio = [&](int a1, int a2, int a3, int dn) {
      CohomFrac f = CohomFrac::constant(cvt->size(), rat(1, 2));
      f.mul_factor(lin(cvt, a1, a2, a3, 0), 1);
      Mono d(cvt->size());
      d.e[static_cast<std::size_t>(dn)] = 1;
      f.mul_factor(d, -1);
      return f;
    };
    push_pair({i01, i10}, half_ratio(1, 1, -1, 2));
    push_pair({i10, i11}, half_ratio(1, -1, 1, 1));
    push_pair({i01, i11}, half_ratio(-1, 1, 1, 0));
    return terms;
  }
  fail(errc::unsupported_group, "no cohomological closed form for " + spec);
}

}  // namespace

Report limits_suite(const GroupAction& g, const VerifyOptions& opt) {
  Report rep;
  rep.name = "limits:" + g.spec();
  Engine eng(g);
  const VarTablePtr& vt = eng.vt;
  ExactCtx ctx{vt};
  int D = opt.order;
  std::size_t nq = vt->series_count();
  std::vector<SExp> exps = exponents_up_to(nq, D);
  auto cmp_k = [&](const KFrac& a, const KFrac& b) {
    return opt.exact ? a.equals(b) : modular_equal(*vt, a, b, opt.modular);
  };

  struct Fp {
    SolidPartition pi;
    Contribution c;
    bool flat;
    SExp e;
  };
  std::vector<Fp> fps;
  for (int n = 0; n <= D; ++n)
    for (auto& pi : enumerate_solid_partitions(n, opt.cache_dir)) {
      Fp fp;
      fp.pi = pi;
      fp.c = contribution(pi, g, *vt, opt.rule);
      fp.flat = true;
      for (const Box& b : pi.boxes())
        if (b[3] > 0) fp.flat = false;
      fp.e.assign(fp.c.profile.begin(), fp.c.profile.end());
      fps.push_back(std::move(fp));
    }

  // (a) dimensional reduction: y = t4 per contribution
  {
    Timer t;
    Series<KFrac> reduced(vt, D, ctx.zero());
    bool pattern_ok = true;
    for (auto& fp : fps) {
      std::optional<Contribution> r;
      try {
        r = dimensional_reduce(fp.c, *vt);
      } catch (const error& e) {
        if (e.code() != errc::pole_at_reduction) throw;
        pattern_ok = false;
        rep.note("pole at reduction for " + fp.pi.str());
        continue;
      }
      if (r.has_value() != fp.flat) {
        pattern_ok = false;
        rep.note(std::string(fp.flat ? "flat" : "non-flat") + " partition " + fp.pi.str() +
                 (r ? " survived" : " vanished") + " under y=t4");
      }
      if (r) reduced.add_term(fp.e, contribution_value(*r, ctx));
    }
    rep.add("dimred vanishing pattern", pattern_ok, t.ms());

    // compare S(-q0, q1, ...) against Exp of the 3-fold argument
    Series<KFrac> closed = plethystic_exp_argument(three_d_argument(g, vt), D, ctx);
    for (auto& e : exps) {
      Timer tc;
      KFrac lhs = reduced.coeff(e);
      if (e[0] % 2 != 0) lhs = -lhs;
      bool ok = cmp_k(lhs, closed.coeff(e));
      rep.add("dimred " + exp_label(e), ok, tc.ms());
    }
  }

  // (b) cohomological limit vs MacMahon products
  VarTablePtr cvt = cohom_table(g.series_var_names());
  CohomCtx cctx{cvt};
  auto cmp_c = [&](const CohomFrac& a, const CohomFrac& b) {
    return opt.exact ? a.equals(b) : modular_equal(*cvt, a, b, opt.modular);
  };
  {
    Series<CohomFrac> coh(cvt, D, cctx.zero());
    for (auto& fp : fps) coh.add_term(fp.e, cohomological_map(fp.c, *vt, cvt));

    Series<CohomFrac> f(cvt, D, cctx.zero());
    for (auto& term : macmahon_terms(g, cvt, nq, /*with_insertion=*/true)) {
      // E * Q q^n contributions of E*Q*q/(1-q)^2 with q = q_(G)
      for (int n = 1; n <= D; ++n) {
        SExp e(nq, 0);
        for (std::size_t i = 0; i < nq; ++i) e[i] = n + term.shift[i];
        CohomFrac c = term.expo;
        c.mul_scalar(n);
        f.add_term(e, c);
      }
    }
    Series<CohomFrac> closed = plethystic_exp_series_only(f.finalize(), cctx);
    for (auto& e : exps) {
      Timer tc;
      bool ok = cmp_c(coh.coeff(e), closed.coeff(e));
      rep.add("cohom " + exp_label(e), ok, tc.ms());
    }
  }

  // (c) insertion-free limit vs finite exponentials
  {
    Series<CohomFrac> free_sum(cvt, D, cctx.zero());
    for (auto& fp : fps)
      free_sum.add_term(fp.e, insertion_free_contribution(fp.pi, g, *vt, cvt, opt.rule));

    Series<CohomFrac> garg(cvt, D, cctx.zero());
    for (auto& term : macmahon_terms(g, cvt, nq, /*with_insertion=*/false)) {
      SExp e(nq, 0);
      for (std::size_t i = 0; i < nq; ++i) e[i] = 1 + term.shift[i];
      garg.add_term(e, term.expo);
    }
    Series<CohomFrac> closed = exp_series(garg.finalize(), cctx);
    for (auto& e : exps) {
      Timer tc;
      bool ok = cmp_c(free_sum.coeff(e), closed.coeff(e));
      rep.add("free " + exp_label(e), ok, tc.ms());
    }
  }

  return rep;
}

}  // namespace dt4
