#include "dt4/formulas.hpp"

#include <chrono>
#include <sstream>

#include "dt4/parallel.hpp"

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

Mono y_half(const VarTable& vt) { return vt.var("y").half(); }

// product of all series variables (q_{(r)} resp. q_{(2,2)})
Mono series_product(const VarTable& vt) {
  Mono m(vt.size());
  for (std::size_t i = vt.coeff_count(); i < vt.size(); ++i) m.e[i] = 4;
  return m;
}

Mono series_var(const VarTable& vt, int idx, int pow = 1) {
  Mono m(vt.size());
  m.e[vt.coeff_count() + static_cast<std::size_t>(idx)] = 4 * pow;
  return m;
}

// q_i ... q_j (orbifold character indices)
Mono series_range(const VarTable& vt, int i, int j) {
  Mono m(vt.size());
  for (int k = i; k <= j; ++k) m.e[vt.coeff_count() + static_cast<std::size_t>(k)] = 4;
  return m;
}

void mul_q_bracket_pair(BracketProduct& b, const Mono& q, const VarTable& vt) {
  Mono yh = y_half(vt);
  b.mul_bracket(yh * q, -1);
  b.mul_bracket(yh * q.inverse(), -1);
}

}  // namespace

BracketProduct nekrasov_F(const Chart& chart, const Mono& q, const VarTable& vt) {
  const auto& [a, b, c, d] = chart;
  if (!(a * b * c * d).trivial())
    fail(errc::chart_not_calabi_yau, "chart weights do not multiply to 1");
  BracketProduct f(vt.size());
  f.mul_bracket(a * b, 1);
  f.mul_bracket(b * c, 1);
  f.mul_bracket(a * c, 1);
  f.mul_bracket(a, -1);
  f.mul_bracket(b, -1);
  f.mul_bracket(c, -1);
  f.mul_bracket(d, -1);
  f.mul_bracket(vt.var("y"), 1);
  mul_q_bracket_pair(f, q, vt);
  return f;
}

std::vector<Chart> resolution_charts(const GroupAction& g, const VarTable& vt) {
  std::vector<Chart> charts;
  const std::string& spec = g.spec();
  if (g.is_trivial() || spec == "zr:1") {
    charts.push_back({vt.var("t1"), vt.var("t2"), vt.var("t3"), vt.var("t4")});
    return charts;
  }
  if (spec.rfind("zr:", 0) == 0) {
    int r = g.orders()[0];
    for (int k = 0; k < r; ++k) {
      Chart ch{vt.mono({{"t1", r - k}, {"t2", -k}}), vt.mono({{"t2", k + 1}, {"t1", -(r - k - 1)}}),
               vt.var("t3"), vt.var("t4")};
      charts.push_back(ch);
    }
    return charts;
  }
  if (spec == "z2z2") {
    charts.push_back({vt.mono({{"t1", 2}}), vt.mono({{"t2", 2}}),
                      vt.mono({{"t3", 1}, {"t1", -1}, {"t2", -1}}), vt.var("t4")});
    charts.push_back({vt.mono({{"t1", 2}}), vt.mono({{"t2", 1}, {"t1", -1}, {"t3", -1}}),
                      vt.mono({{"t3", 2}}), vt.var("t4")});
    charts.push_back({vt.mono({{"t1", 1}, {"t2", -1}, {"t3", -1}}), vt.mono({{"t2", 2}}),
                      vt.mono({{"t3", 2}}), vt.var("t4")});
    charts.push_back({vt.mono({{"t2", 1}, {"t3", 1}, {"t1", -1}}),
                      vt.mono({{"t1", 1}, {"t3", 1}, {"t2", -1}}),
                      vt.mono({{"t1", 1}, {"t2", 1}, {"t3", -1}}), vt.var("t4")});
    return charts;
  }
  fail(errc::unsupported_group, "no closed-formula charts for " + spec);
}

ExpArgument build_orbifold_argument(const GroupAction& g, const VarTablePtr& vt) {
  ExpArgument arg{vt, {}};
  Mono qG = series_product(*vt);
  for (const Chart& ch : resolution_charts(g, *vt)) arg.add(nekrasov_F(ch, qG, *vt));

  const std::string& spec = g.spec();
  if (spec.rfind("zr:", 0) == 0 && g.orders()[0] >= 2) {
    int r = g.orders()[0];
    for (int i = 1; i < r; ++i)
      for (int j = i; j < r; ++j) {
        for (int s : {1, -1}) {
          BracketProduct b(vt->size());
          b.mul_mono(s > 0 ? series_range(*vt, i, j) : series_range(*vt, i, j).inverse());
          b.mul_bracket(vt->mono({{"t1", 1}, {"t2", 1}}), 1);
          b.mul_bracket(vt->var("y"), 1);
          b.mul_bracket(vt->var("t3"), -1);
          b.mul_bracket(vt->var("t4"), -1);
          mul_q_bracket_pair(b, qG, *vt);
          arg.add(std::move(b));
        }
      }
  } else if (spec == "z2z2") {
    int i10 = g.char_index_by_name("10");
    int i01 = g.char_index_by_name("01");
    int i11 = g.char_index_by_name("11");
    auto colour_term = [&](const Mono& qmono, const Mono* num_arg, const Mono* den_arg) {
      BracketProduct b(vt->size());
      b.mul_mono(qmono);
      if (num_arg) b.mul_bracket(*num_arg, 1);
      if (den_arg) b.mul_bracket(*den_arg, -1);
      b.mul_bracket(vt->var("y"), 1);
      b.mul_bracket(vt->var("t4"), -1);
      mul_q_bracket_pair(b, qG, *vt);
      arg.add(std::move(b));
    };
    struct Pair {
      Mono num, den, q;
    };
    std::vector<Pair> pairs{
        {vt->mono({{"t1", 1}, {"t2", 1}, {"t3", -1}}), vt->mono({{"t3", 2}}),
         series_var(*vt, i10) * series_var(*vt, i01)},
        {vt->mono({{"t1", 1}, {"t2", -1}, {"t3", 1}}), vt->mono({{"t2", 2}}),
         series_var(*vt, i10) * series_var(*vt, i11)},
        {vt->mono({{"t1", -1}, {"t2", 1}, {"t3", 1}}), vt->mono({{"t1", 2}}),
         series_var(*vt, i01) * series_var(*vt, i11)}};
    for (auto& p : pairs) {
      colour_term(p.q, &p.num, &p.den);
      colour_term(p.q.inverse(), &p.num, &p.den);
    }
    std::vector<Mono> units{series_var(*vt, i10), series_var(*vt, i01), series_var(*vt, i11),
                            series_var(*vt, i10) * series_var(*vt, i01) * series_var(*vt, i11)};
    for (auto& u : units) {
      colour_term(u, nullptr, nullptr);
      colour_term(u.inverse(), nullptr, nullptr);
    }
  } else if (!(g.is_trivial() || spec == "zr:1")) {
    fail(errc::unsupported_group, "no closed formula for " + spec);
  }
  return arg;
}

ExpArgument three_d_argument(const GroupAction& g, const VarTablePtr& vt) {
  ExpArgument arg = build_orbifold_argument(g, vt);
  std::vector<std::optional<Mono>> images(vt->size());
  images[static_cast<std::size_t>(vt->index_of("y"))] = vt->var("t4");
  ExpArgument out{vt, {}};
  for (auto& b : arg.summands) out.add(b.substituted(images, *vt));
  return out;
}

// ---------------------------------------------------------------------------

RootSystemData RootSystemData::for_group(const GroupAction& g, const VarTablePtr& vt) {
  RootSystemData data{g, {}};
  const std::string& spec = g.spec();
  std::size_t nchars = static_cast<std::size_t>(g.num_chars());
  if (spec.rfind("zr:", 0) == 0) {
    int r = g.orders()[0];
    for (int i = 1; i < r; ++i)
      for (int j = i; j < r; ++j) {
        GvClass c;
        c.name = "b[" + std::to_string(i) + "," + std::to_string(j) + "]";
        c.exponent.assign(nchars, 0);
        for (int k = i; k <= j; ++k) c.exponent[static_cast<std::size_t>(k)] = 1;
        BracketProduct m(vt->size());
        m.mul_bracket(vt->mono({{"t3", 1}, {"t4", 1}}), 1);
        m.mul_bracket(vt->var("y"), 1);
        m.mul_bracket(vt->var("t3"), -1);
        m.mul_bracket(vt->var("t4"), -1);
        c.magnitude = std::move(m);
        data.classes.push_back(std::move(c));
      }
    return data;
  }
  if (spec == "z2z2") {
    auto unit = [&]() {
      BracketProduct m(vt->size());
      m.mul_bracket(vt->var("y"), 1);
      m.mul_bracket(vt->var("t4"), -1);
      return m;
    };
    auto weighted = [&](const Mono& num, const Mono& den) {
      BracketProduct m(vt->size());
      m.mul_bracket(num, 1);
      m.mul_bracket(vt->var("y"), 1);
      m.mul_bracket(den, -1);
      m.mul_bracket(vt->var("t4"), -1);
      return m;
    };
    int i10 = g.char_index_by_name("10");
    int i01 = g.char_index_by_name("01");
    int i11 = g.char_index_by_name("11");
    auto expo = [&](std::initializer_list<int> idxs) {
      SExp e(nchars, 0);
      for (int i : idxs) e[static_cast<std::size_t>(i)] = 1;
      return e;
    };
    data.classes.push_back({"b10", expo({i10}), unit()});
    data.classes.push_back({"b01", expo({i01}), unit()});
    data.classes.push_back({"b11", expo({i11}), unit()});
    data.classes.push_back({"b10+b01+b11", expo({i10, i01, i11}), unit()});
    data.classes.push_back({"b10+b01", expo({i10, i01}),
                            weighted(vt->mono({{"t1", 1}, {"t2", 1}, {"t3", -1}}),
                                     vt->mono({{"t3", 2}}))});
    data.classes.push_back({"b10+b11", expo({i10, i11}),
                            weighted(vt->mono({{"t1", 1}, {"t2", -1}, {"t3", 1}}),
                                     vt->mono({{"t2", 2}}))});
    data.classes.push_back({"b01+b11", expo({i01, i11}),
                            weighted(vt->mono({{"t1", -1}, {"t2", 1}, {"t3", 1}}),
                                     vt->mono({{"t1", 2}}))});
    return data;
  }
  fail(errc::unsupported_group, "no root-system data for " + spec);
}

GvValue gv_invariant(const GroupAction& g, const std::string& class_name, const VarTablePtr& vt) {
  RootSystemData data = RootSystemData::for_group(g, vt);
  std::string name = class_name;
  // accept "bi" as an alias for "b[i,i]"
  if (name.size() >= 2 && name[0] == 'b' && name.find('[') == std::string::npos &&
      name.find('+') == std::string::npos) {
    std::string idx = name.substr(1);
    bool numeric = !idx.empty() && idx.find_first_not_of("0123456789") == std::string::npos;
    if (numeric && g.spec().rfind("zr:", 0) == 0) name = "b[" + idx + "," + idx + "]";
  }
  for (auto& c : data.classes)
    if (c.name == name) return {c.magnitude, true};
  return {BracketProduct::zero_value(vt->size()), false};  // not a positive root
}

// ---------------------------------------------------------------------------

ExpArgument pt_argument(const RootSystemData& data, const VarTablePtr& vt, const Mono& q,
                        const std::function<Mono(const GvClass&)>& class_exponent,
                        const std::vector<int>* signs) {
  ExpArgument arg{vt, {}};
  std::vector<std::optional<Mono>> y_to_t4(vt->size());
  y_to_t4[static_cast<std::size_t>(vt->index_of("y"))] = vt->var("t4");
  for (std::size_t ci = 0; ci < data.classes.size(); ++ci) {
    const GvClass& c = data.classes[ci];
    BracketProduct b = c.magnitude.substituted(y_to_t4, *vt);  // P_{1,beta}(t4)
    b.negate();
    if (signs && (*signs)[ci] < 0) b.negate();
    b.mul_mono(class_exponent(c));
    b.mul_bracket(vt->var("y"), 1);
    b.mul_bracket(vt->var("t4"), -1);
    mul_q_bracket_pair(b, q, *vt);
    arg.add(std::move(b));
  }
  return arg;
}

PtEngine::PtEngine(const GroupAction& g) : data{g, {}} {
  std::vector<std::string> series;
  for (int c = 1; c < g.num_chars(); ++c) series.push_back("Q" + g.char_name(c));
  series.push_back("q");
  vt = cy_table(series);
  data = RootSystemData::for_group(g, vt);
  q = vt->var("q");
}

Mono PtEngine::class_mono(const GvClass& c, bool negate) const {
  Mono m(vt->size());
  for (std::size_t k = 1; k < c.exponent.size(); ++k)
    m.e[vt->coeff_count() + (k - 1)] = 4 * c.exponent[k] * (negate ? -1 : 1);
  return m;
}

ExpArgument PtEngine::argument(const std::vector<int>* signs, bool negate_Q) const {
  return pt_argument(data, vt, q,
                     [&](const GvClass& c) { return class_mono(c, negate_Q); }, signs);
}

Report pt_consistency(const GroupAction& g) {
  Report rep;
  rep.name = "pt-consistency:" + g.spec();
  PtEngine pt(g);
  ExactCtx ctx{pt.vt};
  int maxcls = 0;
  for (auto& c : pt.data.classes)
    maxcls = std::max(maxcls, static_cast<int>(total_degree(c.exponent)));
  int D = maxcls + 1;
  ExpArgument arg = pt.argument();
  Series<KFrac> s = expand_argument(arg, D, ctx);
  std::size_t nq = pt.vt->series_count();
  for (auto& c : pt.data.classes) {
    Timer t0;
    SExp e0(nq, 0);
    for (std::size_t k = 1; k < c.exponent.size(); ++k) e0[k - 1] = c.exponent[k];
    bool ok0 = s.coeff(e0).is_zero();  // q^0 coefficient vanishes
    rep.add(c.name + " n=0", ok0, t0.ms());

    Timer t1;
    SExp e1 = e0;
    e1[nq - 1] = 1;
    // expected P_{1,beta}(t4) [y]/[t4]
    std::vector<std::optional<Mono>> y_to_t4(pt.vt->size());
    y_to_t4[static_cast<std::size_t>(pt.vt->index_of("y"))] = pt.vt->var("t4");
    KFrac expect = ctx.from_bp(c.magnitude.substituted(y_to_t4, *pt.vt));
    KFrac yt4 = ctx.one();
    yt4.mul_factor(pt.vt->var("y"), 1);
    yt4.mul_factor(pt.vt->var("t4"), -1);
    expect = expect * yt4;
    bool ok1 = s.coeff(e1).equals(expect);
    rep.add(c.name + " n=1", ok1, t1.ms());
  }
  return rep;
}

Report pt_irreducible_series(int r, int order) {
  Report rep;
  rep.name = "pt-irreducible:zr:" + std::to_string(r);
  if (r < 2) fail(errc::bad_input, "pt_irreducible_series needs r >= 2");
  rep.note("vertex/edge data of an irreducible exceptional class; independent of r");
  VarTablePtr vt = cy_table({"q"});
  ExactCtx ctx{vt};
  Mono q = vt->var("q");

  // one-leg vertices at the two chart substitutions t1 -> t1^{-1} t2, t1 -> t1 t2^{-1}
  ExpArgument vertices{vt, {}};
  for (const char* sub : {"-", "+"}) {
    Mono u = sub[0] == '-' ? vt->mono({{"t1", -1}, {"t2", 1}}) : vt->mono({{"t1", 1}, {"t2", -1}});
    BracketProduct b(vt->size());
    b.mul_mono(q);
    b.mul_bracket(vt->var("y") * u, 1);
    b.mul_bracket(u, -1);
    vertices.add(std::move(b));
  }
  Series<KFrac> lhs = plethystic_exp_argument(vertices, order, ctx);

  // edge term at the first chart: t3^{-1} - (t1 t2)^{-1} + t4 - y
  KClass edge(vt->size());
  edge.add(vt->var("t3", -1), 1);
  edge.add(vt->mono({{"t1", -1}, {"t2", -1}}), -1);
  edge.add(vt->var("t4"), 1);
  edge.add(vt->var("y"), -1);
  BracketProduct ebp = bracket_class(-edge);
  ebp.negate();
  ebp.mul_mono(q);
  lhs = lhs * q_expand(ebp, order, ctx);

  BracketProduct closed(vt->size());
  closed.mul_bracket(vt->mono({{"t1", 1}, {"t2", 1}}), 1);
  closed.mul_bracket(vt->var("y"), 1);
  closed.mul_bracket(vt->var("t3"), -1);
  closed.mul_bracket(vt->var("t4"), -1);
  mul_q_bracket_pair(closed, q, *vt);
  Series<KFrac> rhs = q_expand(closed, order, ctx);

  for (int n = 0; n <= order; ++n) {
    Timer t;
    SExp e{n};
    bool ok = lhs.coeff(e).equals(rhs.coeff(e));
    rep.add("q^" + std::to_string(n), ok, t.ms());
    if (!ok && rep.notes.size() < 2) rep.note("first differing coefficient at q^" + std::to_string(n));
  }
  return rep;
}

// ---------------------------------------------------------------------------

Report verify_orbifold_conjecture(const GroupAction& g, const VerifyOptions& opt) {
  Report rep;
  rep.name = "orbifold:" + g.spec();
  Engine eng(g);
  ExpArgument arg = build_orbifold_argument(g, eng.vt);
  std::vector<SExp> exps = exponents_up_to(eng.vt->series_count(), opt.order);

  if (opt.exact) {
    ExactCtx ctx{eng.vt};
    Series<KFrac> lhs =
        dt_partition_function(g, opt.order, ctx, opt.rule, opt.workers, opt.cache_dir);
    Series<KFrac> rhs = plethystic_exp_argument(arg, opt.order, ctx);
    // comparisons fan out to the pool; the report assembles in exponent order
    std::vector<std::pair<bool, double>> res = parallel_map_indexed<std::pair<bool, double>>(
        exps.size(), opt.workers, [&](std::size_t i) {
          Timer t;
          bool ok = lhs.coeff(exps[i]).equals(rhs.coeff(exps[i]));
          return std::make_pair(ok, t.ms());
        });
    for (std::size_t i = 0; i < exps.size(); ++i) rep.add(exp_label(exps[i]), res[i].first, res[i].second);
    return rep;
  }

  std::mt19937_64 rng(opt.modular.seed);
  std::map<SExp, bool> ok;
  std::map<SExp, double> ms;
  for (auto& e : exps) ok[e] = true;
  for (int pi = 0; pi < opt.modular.primes && pi < 2; ++pi) {
    for (int trial = 0; trial < opt.modular.trials; ++trial) {
      for (int attempt = 0;; ++attempt) {
        EvalPoint pt(*eng.vt, kPrimes[pi], rng);
        PointCtx ctx{eng.vt, &pt};
        try {
          Series<Zp> lhs =
              dt_partition_function(g, opt.order, ctx, opt.rule, opt.workers, opt.cache_dir);
          Series<Zp> rhs = plethystic_exp_argument(arg, opt.order, ctx);
          for (auto& e : exps) {
            Timer t;
            if (!(lhs.coeff(e) == rhs.coeff(e))) ok[e] = false;
            ms[e] += t.ms();
          }
          break;
        } catch (const error& err) {
          if (err.code() != errc::evaluation_singular || attempt > 64) throw;
        }
      }
    }
  }
  for (auto& e : exps) rep.add(exp_label(e), ok[e], ms[e]);
  return rep;
}

// ---------------------------------------------------------------------------

Report verify_crc(const GroupAction& g, bool test_perturbations) {
  Report rep;
  rep.name = "crc:" + g.spec();
  Engine eng(g);
  const VarTablePtr& vt = eng.vt;
  ExactCtx ctx{vt};
  Mono qG = series_product(*vt);

  ExpArgument lhs = build_orbifold_argument(g, vt);
  // degree-0 DT factor of the resolution: the same chart sum in q_(G)
  std::vector<BracketProduct> rhs_charts;
  for (const Chart& ch : resolution_charts(g, *vt)) rhs_charts.push_back(nekrasov_F(ch, qG, *vt));

  RootSystemData data = RootSystemData::for_group(g, vt);
  auto class_mono = [&](const GvClass& c, bool neg) {
    Mono m(vt->size());
    for (std::size_t k = 0; k < c.exponent.size(); ++k)
      m.e[vt->coeff_count() + k] = 4 * c.exponent[k] * (neg ? -1 : 1);
    return m;
  };
  // per-class PT pair (Q^beta and Q^{-beta}) with magnitude sign +1
  std::vector<KFrac> pt_pair;
  for (auto& c : data.classes) {
    RootSystemData one{g, {c}};
    ExpArgument plus = pt_argument(one, vt, qG, [&](const GvClass& cc) { return class_mono(cc, false); });
    ExpArgument minus = pt_argument(one, vt, qG, [&](const GvClass& cc) { return class_mono(cc, true); });
    pt_pair.push_back(ctx.from_bp(plus.summands[0]) + ctx.from_bp(minus.summands[0]));
  }

  // base = LHS - chart part of RHS; the pt part enters with the sign vector
  KFrac base = ctx.zero();
  for (std::size_t i = 0; i < lhs.summands.size(); ++i) {
    base = base + ctx.from_bp(lhs.summands[i]);
    if (i < rhs_charts.size()) base = base - ctx.from_bp(rhs_charts[i]);
  }

  std::size_t k = data.classes.size();
  auto residual = [&](const std::vector<int>& signs) {
    KFrac s = base;
    for (std::size_t i = 0; i < k; ++i) {
      KFrac t = pt_pair[i];
      if (signs[i] < 0) t = -t;
      s = s - t;
    }
    return s;
  };

  // exhaustive search over sign vectors (k <= 7 in scope)
  Timer t_solve;
  bool solved = false;
  std::vector<int> solution;
  for (std::size_t mask = 0; mask < (1ull << k); ++mask) {
    std::vector<int> s(k, 1);
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ull << i)) s[i] = -1;
    if (residual(s).is_zero()) {
      solved = true;
      solution = s;
      break;
    }
  }
  if (!solved && k > 0) fail(errc::no_sign_vector_works, "crc identity has no sign vector");
  if (k == 0) {
    solution.clear();
    rep.note("no positive-root classes; identity is trivial");
    rep.add("identity", residual({}).is_zero(), t_solve.ms());
  } else {
    rep.add("identity", true, t_solve.ms());
  }
  rep.sign_vector = solution;
  for (std::size_t i = 0; i < k; ++i)
    rep.note(data.classes[i].name + " sign " + (solution[i] > 0 ? "+1" : "-1"));

  if (test_perturbations) {
    for (std::size_t i = 0; i < k; ++i) {
      Timer t;
      std::vector<int> s = solution;
      s[i] = -s[i];
      bool broke = !residual(s).is_zero();
      rep.add("flip " + data.classes[i].name + " breaks", broke, t.ms());
    }
  }
  return rep;
}

}  // namespace dt4
