#include <doctest.h>

#include "dt4/equality.hpp"
#include "dt4/json_io.hpp"
#include "dt4/vertex.hpp"
#include "oracles.hpp"

using namespace dt4;

namespace {

const SolidPartition kOrigin(std::vector<Box>{Box{0, 0, 0, 0}});
const SolidPartition kStick(std::vector<Box>{Box{0, 0, 0, 0}, Box{0, 0, 0, 1}});

// the twisted vertex class of the origin, expanded by hand
KClass origin_vtilde(const VarTable& vt) {
  KClass v(vt.size());
  v.add(vt.var("y"), -1);
  v.add(vt.var("t1", -1), 1);
  v.add(vt.var("t2", -1), 1);
  v.add(vt.var("t3", -1), 1);
  v.add(vt.mono({{"t1", -1}, {"t2", -1}}), -1);
  v.add(vt.mono({{"t1", -1}, {"t3", -1}}), -1);
  v.add(vt.mono({{"t2", -1}, {"t3", -1}}), -1);
  v.add(vt.var("t4"), 1);
  return v;
}

// colour decomposition of the box character
std::vector<KClass> colour_parts(const SolidPartition& pi, const GroupAction& g,
                                 const VarTable& vt) {
  std::vector<KClass> w(static_cast<std::size_t>(g.num_chars()), KClass(vt.size()));
  for (const Box& b : pi.boxes()) {
    Mono m(vt.size());
    for (int i = 0; i < 4; ++i) m.e[static_cast<std::size_t>(i)] = 4 * b[static_cast<std::size_t>(i)];
    w[static_cast<std::size_t>(g.color_of(b))].add(vt.reduce(m), 1);
  }
  return w;
}

// the z_r vertex assembled from its colour-graded closed form
KClass zr_display_vtilde(const SolidPartition& pi, const GroupAction& g, const VarTable& vt) {
  int r = g.orders()[0];
  auto w = colour_parts(pi, g, vt);
  auto part = [&](int c) { return w[static_cast<std::size_t>(((c % r) + r) % r)]; };
  auto pair_sum = [&](int shift) {  // sum_l W^(l) conj(W^(l-shift))
    KClass s(vt.size());
    for (int l = 0; l < r; ++l) s += part(l) * part(l - shift).bar();
    return s;
  };
  KClass one = KClass::one(vt.size());
  KClass t3f = one;
  t3f.add(vt.var("t3", -1), -1);  // (1 - t3^-1)
  KClass grp(vt.size());
  {
    KClass c0 = one;
    c0.add(vt.mono({{"t1", -1}, {"t2", -1}}), 1);  // 1 + (t1 t2)^-1
    grp += c0 * pair_sum(0);
    KClass c1(vt.size());
    c1.add(vt.var("t1", -1), -1);
    grp += c1 * pair_sum(1);
    KClass c2(vt.size());
    c2.add(vt.var("t2", -1), -1);
    grp += c2 * pair_sum(-1);
  }
  return part(0) - part(0).bar().times_mono(vt.var("y")) - t3f * grp;
}

// the z2 x z2 vertex assembled from its colour-graded closed form
KClass z22_display_vtilde(const SolidPartition& pi, const GroupAction& g, const VarTable& vt) {
  auto w = colour_parts(pi, g, vt);
  auto part = [&](int a, int b) {
    return w[static_cast<std::size_t>(g.char_index({((a % 2) + 2) % 2, ((b % 2) + 2) % 2}))];
  };
  auto pair_sum = [&](int da, int db) {  // sum_ab W^(ab) conj(W^(a-da, b-db))
    KClass s(vt.size());
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) s += part(a, b) * part(a - da, b - db).bar();
    return s;
  };
  KClass c00 = KClass::one(vt.size());
  c00.add(vt.mono({{"t1", -1}, {"t2", -1}, {"t3", -1}}), -1);
  KClass c10(vt.size());
  c10.add(vt.var("t1", -1), -1);
  c10.add(vt.mono({{"t2", -1}, {"t3", -1}}), 1);
  KClass c01(vt.size());
  c01.add(vt.var("t2", -1), -1);
  c01.add(vt.mono({{"t1", -1}, {"t3", -1}}), 1);
  KClass c11(vt.size());
  c11.add(vt.var("t3", -1), -1);
  c11.add(vt.mono({{"t1", -1}, {"t2", -1}}), 1);
  KClass w00 = part(0, 0);
  return w00 - w00.bar().times_mono(vt.var("y")) - c00 * pair_sum(0, 0) - c10 * pair_sum(1, 0) -
         c01 * pair_sum(0, 1) - c11 * pair_sum(1, 1);
}

// the z3 age-2 vertex assembled from its colour-graded closed form
KClass z3_display_vtilde(const SolidPartition& pi, const GroupAction& g, const VarTable& vt) {
  auto w = colour_parts(pi, g, vt);
  auto part = [&](int c) { return w[static_cast<std::size_t>(((c % 3) + 3) % 3)]; };
  auto shifted = [&](int shift) {  // sum_l W^(l) conj(W^(l-shift))
    KClass s(vt.size());
    for (int l = 0; l < 3; ++l) s += part(l) * part(l - shift).bar();
    return s;
  };
  KClass c0 = KClass::one(vt.size());
  c0.add(vt.mono({{"t1", -1}, {"t2", -1}, {"t3", -1}}), -1);
  KClass c1(vt.size());
  c1.add(vt.var("t1", -1), 1);
  c1.add(vt.var("t2", -1), 1);
  c1.add(vt.var("t3", -1), 1);
  KClass c2(vt.size());
  c2.add(vt.mono({{"t1", -1}, {"t2", -1}}), 1);
  c2.add(vt.mono({{"t1", -1}, {"t3", -1}}), 1);
  c2.add(vt.mono({{"t2", -1}, {"t3", -1}}), 1);
  KClass w0 = part(0);
  return w0 - w0.bar().times_mono(vt.var("y")) - c0 * shifted(0) + c1 * shifted(1) -
         c2 * shifted(-1);
}

}  // namespace

TEST_SUITE_BEGIN("vertex");

TEST_CASE("vertex class of the origin") {
  VarTablePtr vt = cy_table({});
  CHECK(vertex_class(kOrigin, *vt, Twist::nekrasov) == origin_vtilde(*vt));
  CHECK(vertex_class(SolidPartition{}, *vt, Twist::nekrasov).is_zero());
  KClass untw = origin_vtilde(*vt);
  untw.add(vt->var("y"), 1);  // drop the -y term
  CHECK(vertex_class(kOrigin, *vt, Twist::none) == untw);
}

TEST_CASE("g_fixed_part: examples and idempotence") {
  VarTablePtr vt = cy_table({});
  GroupAction z2 = GroupAction::zr(2);
  KClass v(vt->size());
  v.add(vt->var("t1"), 1);
  v.add(vt->var("t2"), -1);
  CHECK(g_fixed_part(v, z2, *vt).is_zero());

  KClass fixed = g_fixed_part(origin_vtilde(*vt), z2, *vt);
  KClass expect(vt->size());
  expect.add(vt->var("y"), -1);
  expect.add(vt->var("t3", -1), 1);
  expect.add(vt->mono({{"t1", -1}, {"t2", -1}}), -1);
  expect.add(vt->var("t4"), 1);
  CHECK(fixed == expect);
  CHECK(g_fixed_part(fixed, z2, *vt) == fixed);  // idempotent

  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    KClass k(vt->size());
    for (int t = 0; t < 4; ++t) k.add(oracle::random_mono(*vt, rng), 1);
    KClass f = g_fixed_part(k, z2, *vt);
    CHECK(g_fixed_part(f, z2, *vt) == f);
    CHECK(g_fixed_part(k.bar(), z2, *vt) == f.bar());  // commutes with bar
  }
}

TEST_CASE("g_fixed vertex matches the colour-graded closed forms") {
  VarTablePtr vt = cy_table({});
  for (int n = 0; n <= 3; ++n)
    for (auto& pi : enumerate_solid_partitions(n)) {
      for (int r : {2, 3, 4}) {
        GroupAction g = GroupAction::zr(r);
        CHECK(g_fixed_part(vertex_class(pi, *vt, Twist::nekrasov), g, *vt) ==
              zr_display_vtilde(pi, g, *vt));
      }
      GroupAction g22 = GroupAction::z2z2();
      CHECK(g_fixed_part(vertex_class(pi, *vt, Twist::nekrasov), g22, *vt) ==
            z22_display_vtilde(pi, g22, *vt));
      GroupAction z3 = GroupAction::z3age2();
      CHECK(g_fixed_part(vertex_class(pi, *vt, Twist::nekrasov), z3, *vt) ==
            z3_display_vtilde(pi, z3, *vt));
    }
}

TEST_CASE("square root property: v + bar(v) reconstructs T^vir") {
  VarTablePtr vt = cy_table({});
  for (int n = 0; n <= 4; ++n)
    for (auto& pi : enumerate_solid_partitions(n)) {
      KClass v = vertex_class(pi, *vt, Twist::none);
      CHECK(v + v.bar() == t_vir(pi, *vt));
      // the twist only moves the tautological y-terms across the square root
      KClass tw = vertex_class(pi, *vt, Twist::nekrasov);
      KClass zbar = character(pi, *vt).bar();
      KClass ydiff = zbar.times_mono(vt->var("y")) + zbar.bar().times_mono(vt->var("y", -1));
      CHECK(tw + tw.bar() + ydiff == t_vir(pi, *vt));
      for (const GroupAction& g : {GroupAction::zr(2), GroupAction::zr(3),
                                   GroupAction::z3age2(), GroupAction::z2z2()}) {
        KClass vg = g_fixed_part(v, g, *vt);
        CHECK(vg + vg.bar() == g_fixed_part(t_vir(pi, *vt), g, *vt));
      }
    }
}

TEST_CASE("contribution of the single box") {
  VarTablePtr vt = cy_table({});
  GroupAction triv = GroupAction::trivial();
  Contribution c = contribution(kOrigin, triv, *vt);
  CHECK(c.sign == -1);
  BracketProduct expect(vt->size());
  expect.mul_bracket(vt->var("y"), 1);
  expect.mul_bracket(vt->mono({{"t1", 1}, {"t2", 1}}), 1);
  expect.mul_bracket(vt->mono({{"t1", 1}, {"t3", 1}}), 1);
  expect.mul_bracket(vt->mono({{"t2", 1}, {"t3", 1}}), 1);
  expect.mul_bracket(vt->var("t1"), -1);
  expect.mul_bracket(vt->var("t2"), -1);
  expect.mul_bracket(vt->var("t3"), -1);
  expect.mul_bracket(vt->var("t4"), -1);
  CHECK(rf_equal(c.value, expect));

  GroupAction z2 = GroupAction::zr(2);
  Contribution c2 = contribution(kOrigin, z2, *vt);
  CHECK(c2.sign == -1);
  BracketProduct e2(vt->size());
  e2.mul_bracket(vt->var("y"), 1);
  e2.mul_bracket(vt->mono({{"t1", 1}, {"t2", 1}}), 1);
  e2.mul_bracket(vt->var("t3"), -1);
  e2.mul_bracket(vt->var("t4"), -1);
  CHECK(rf_equal(c2.value, e2));

  Contribution ce = contribution(SolidPartition{}, triv, *vt);
  CHECK(ce.sign == 1);
  CHECK(ce.value.factors().empty());
}

TEST_CASE("contribution value is representative independent") {
  VarTablePtr re = cy_table({});
  VarTablePtr un = cy_table({}, /*reduce_t4=*/false);
  std::vector<std::optional<Mono>> none(un->size());
  GroupAction triv = GroupAction::trivial();
  for (int n = 0; n <= 3; ++n)
    for (auto& pi : enumerate_solid_partitions(n)) {
      // reduced pipeline
      Contribution c = contribution(pi, triv, *re);
      // unreduced pipeline, reduced at the end
      KClass v_un = vertex_class(pi, *un, Twist::nekrasov);
      KClass v_red(re->size());
      for (auto& [m, co] : v_un.terms()) v_red.add(re->reduce(m), co);
      BracketProduct b = bracket_class(-v_red);
      CHECK(rf_equal(c.value, b));
    }
}

TEST_CASE("dt series basics") {
  GroupAction triv = GroupAction::trivial();
  Engine eng(triv);
  ExactCtx ctx{eng.vt};
  Series<KFrac> s0 = dt_partition_function(triv, 0, ctx);
  CHECK(s0.coeff(SExp{0}).equals(ctx.one()));
  CHECK(s0.terms().size() == 1);

  Series<KFrac> s1 = dt_partition_function(triv, 1, ctx);
  Contribution c = contribution(kOrigin, triv, *eng.vt);
  CHECK(s1.coeff(SExp{1}).equals(contribution_value(c, ctx)));

  GroupAction z2 = GroupAction::zr(2);
  Engine eng2(z2);
  ExactCtx ctx2{eng2.vt};
  Series<KFrac> s2 = dt_partition_function(z2, 2, ctx2);
  CHECK(s2.coeff(SExp{0, 1}).is_zero());  // origin always has the trivial colour
  CHECK_FALSE(s2.coeff(SExp{1, 1}).is_zero());
}

TEST_CASE("dt series coefficients symmetric under t1 <-> t2 for zr") {
  GroupAction z2 = GroupAction::zr(2);
  Engine eng(z2);
  ExactCtx ctx{eng.vt};
  Series<KFrac> s = dt_partition_function(z2, 3, ctx);
  std::vector<std::optional<Mono>> swap(eng.vt->size());
  swap[static_cast<std::size_t>(eng.vt->index_of("t1"))] = eng.vt->var("t2");
  swap[static_cast<std::size_t>(eng.vt->index_of("t2"))] = eng.vt->var("t1");
  for (auto& [e, c] : s.terms()) {
    KFrac swapped = c.substituted(swap, *eng.vt);
    CHECK(rf_equal(c, swapped));
  }
}

TEST_CASE("byte-identical series JSON for any worker count") {
  GroupAction g = GroupAction::z2z2();
  Engine eng(g);
  ExactCtx ctx{eng.vt};
  Series<KFrac> s1 = dt_partition_function(g, 3, ctx, {}, 1);
  Series<KFrac> s3 = dt_partition_function(g, 3, ctx, {}, 3);
  CHECK(json_of(s1).dump() == json_of(s3).dump());
}

TEST_CASE("cohomological map of bracket contributions") {
  VarTablePtr vt = cy_table({});
  VarTablePtr cvt = cohom_table({});
  GroupAction z2 = GroupAction::zr(2);
  Contribution c = contribution(kOrigin, z2, *vt);
  // [y][t1t2]/([t3][t4]) with sign -1  ->  -m(l1+l2)/(l3 l4)
  CohomFrac got = cohomological_map(c, *vt, cvt);
  LaurentPoly m = LaurentPoly::monomial(cvt->var("m"));
  LaurentPoly l12(cvt->size()), l3(cvt->size()), l4(cvt->size());
  l12.add_term(cvt->var("l1"), 1);
  l12.add_term(cvt->var("l2"), 1);
  l3.add_term(cvt->var("l3"), 1);
  l4.add_term(cvt->var("l1"), -1);
  l4.add_term(cvt->var("l2"), -1);
  l4.add_term(cvt->var("l3"), -1);
  RationalFn expect(-(m * l12), l3 * l4);
  CHECK(got.to_rational_fn().equals(expect));

  GroupAction triv = GroupAction::trivial();
  Contribution cb = contribution(kOrigin, triv, *vt);
  CohomFrac gb = cohomological_map(cb, *vt, cvt);
  LaurentPoly l13(cvt->size()), l23(cvt->size()), l1(cvt->size()), l2(cvt->size());
  l13.add_term(cvt->var("l1"), 1);
  l13.add_term(cvt->var("l3"), 1);
  l23.add_term(cvt->var("l2"), 1);
  l23.add_term(cvt->var("l3"), 1);
  l1.add_term(cvt->var("l1"), 1);
  l2.add_term(cvt->var("l2"), 1);
  RationalFn expb(-(m * l12 * l13 * l23), l1 * l2 * l3 * l4);
  CHECK(gb.to_rational_fn().equals(expb));

  Contribution empty = contribution(SolidPartition{}, triv, *vt);
  CHECK(cohomological_map(empty, *vt, cvt).to_rational_fn().equals(
      RationalFn::constant(cvt->size(), 1)));
}

TEST_CASE("order-1 b-series certifies the cohomological functor") {
  VarTablePtr vt = cy_table({});
  VarTablePtr cvt = cohom_table({});
  for (const GroupAction& g : {GroupAction::trivial(), GroupAction::zr(2), GroupAction::zr(3),
                               GroupAction::z3age2(), GroupAction::z2z2()}) {
    for (int n = 0; n <= 3; ++n)
      for (auto& pi : enumerate_solid_partitions(n)) {
        Contribution c = contribution(pi, g, *vt);
        BSeries1 b = b_series_order1(c, *vt, cvt);
        CHECK(b.c0.equals(cohomological_map(c, *vt, cvt)));
      }
  }
}

TEST_CASE("insertion-free contributions and m-degree bookkeeping") {
  VarTablePtr vt = cy_table({});
  VarTablePtr cvt = cohom_table({});
  GroupAction triv = GroupAction::trivial();

  CohomFrac f = insertion_free_contribution(kOrigin, triv, *vt, cvt);
  LaurentPoly l12(cvt->size()), l13(cvt->size()), l23(cvt->size());
  l12.add_term(cvt->var("l1"), 1);
  l12.add_term(cvt->var("l2"), 1);
  l13.add_term(cvt->var("l1"), 1);
  l13.add_term(cvt->var("l3"), 1);
  l23.add_term(cvt->var("l2"), 1);
  l23.add_term(cvt->var("l3"), 1);
  LaurentPoly l1 = LaurentPoly::monomial(cvt->var("l1"));
  LaurentPoly l2 = LaurentPoly::monomial(cvt->var("l2"));
  LaurentPoly l3 = LaurentPoly::monomial(cvt->var("l3"));
  LaurentPoly l4(cvt->size());
  l4.add_term(cvt->var("l1"), -1);
  l4.add_term(cvt->var("l2"), -1);
  l4.add_term(cvt->var("l3"), -1);
  CHECK(f.to_rational_fn().equals(RationalFn(-(l12 * l13 * l23), l1 * l2 * l3 * l4)));

  CHECK(insertion_free_contribution(SolidPartition{}, triv, *vt, cvt)
            .to_rational_fn()
            .equals(RationalFn::constant(cvt->size(), 1)));

  // deg_m(coh) = n0 and the m->infinity leading coefficient is the free value
  for (const GroupAction& g : {GroupAction::trivial(), GroupAction::zr(2), GroupAction::z2z2()}) {
    for (int n = 0; n <= 3; ++n)
      for (auto& pi : enumerate_solid_partitions(n)) {
        Contribution c = contribution(pi, g, *vt);
        CohomFrac coh = cohomological_map(c, *vt, cvt);
        int n0 = c.profile[0];
        CHECK(m_degree(coh, *cvt) == n0);
        CohomFrac lead = m_leading(coh, cvt);
        CohomFrac free = insertion_free_contribution(pi, g, *vt, cvt);
        CHECK(lead.equals(free));
      }
  }
}

TEST_CASE("dimensional reduction at the fixed-point level") {
  VarTablePtr vt = cy_table({});
  GroupAction triv = GroupAction::trivial();

  // a box along the fourth direction reduces to zero
  Contribution cs = contribution(kStick, triv, *vt);
  CHECK_FALSE(dimensional_reduce(cs, *vt).has_value());

  // the single box reduces to the 3-fold vertex value
  Contribution c0 = contribution(kOrigin, triv, *vt);
  auto r = dimensional_reduce(c0, *vt);
  REQUIRE(r.has_value());
  BracketProduct expect(vt->size());
  expect.mul_bracket(vt->mono({{"t1", 1}, {"t2", 1}}), 1);
  expect.mul_bracket(vt->mono({{"t1", 1}, {"t3", 1}}), 1);
  expect.mul_bracket(vt->mono({{"t2", 1}, {"t3", 1}}), 1);
  expect.mul_bracket(vt->var("t1"), -1);
  expect.mul_bracket(vt->var("t2"), -1);
  expect.mul_bracket(vt->var("t3"), -1);
  CHECK(rf_equal(r->value, expect));
  CHECK(r->sign == 1);  // (-1)^{sigma} * (-1)^{|pi|_{R0}} = (-1)^{1+0} * (-1)

  Contribution ce = contribution(SolidPartition{}, triv, *vt);
  auto re = dimensional_reduce(ce, *vt);
  REQUIRE(re.has_value());
  CHECK(re->value.factors().empty());
  CHECK(re->sign == 1);
}

TEST_CASE("exact and modular series agree at the evaluation points") {
  GroupAction g = GroupAction::zr(3);
  Engine eng(g);
  ExactCtx ctx{eng.vt};
  Series<KFrac> exact = dt_partition_function(g, 3, ctx);
  std::mt19937_64 rng(99);
  for (uint64_t p : kPrimes) {
    EvalPoint pt(*eng.vt, p, rng);
    PointCtx pctx{eng.vt, &pt};
    Series<Zp> modular = dt_partition_function(g, 3, pctx);
    for (auto& [e, c] : exact.terms()) CHECK(pt.frac(c) == modular.coeff(e));
  }
}

TEST_CASE("trivial weight in a denominator is rejected with context") {
  VarTablePtr vt = cy_table({});
  KClass bad(vt->size());
  bad.add(vt->unit(), -2);  // [-bad] puts [1]^2 in the denominator... sign flip
  CHECK_THROWS_AS(bracket_class(bad), error);
}

TEST_SUITE_END();
