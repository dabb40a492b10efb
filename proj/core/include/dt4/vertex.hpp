#pragma once

#include <optional>

#include "dt4/kclass.hpp"
#include "dt4/partitions.hpp"
#include "dt4/series.hpp"

namespace dt4 {

// Z_pi = sum over boxes of t1^i t2^j t3^k t4^l, reduced
KClass character(const SolidPartition& pi, const VarTable& vt);

// P_I = prod_{i in I} (1 - t_i) with every index barred, e.g. P̄123
KClass p_bar_123(const VarTable& vt);
KClass t_vir(const SolidPartition& pi, const VarTable& vt);  // Z + Z̄/t1234 - P̄1234 Z Z̄ /.. reduced

enum class Twist { none, nekrasov };

// v = Z - P̄123 Z Z̄ ; the nekrasov twist subtracts Z̄ y
KClass vertex_class(const SolidPartition& pi, const VarTable& vt, Twist twist);

// keeps the monomials of trivial G-weight; y is G-trivial
KClass g_fixed_part(const KClass& v, const GroupAction& g, const VarTable& vt);

// sign exponent selection: the orientation rules are |pi|+diag for the
// trivial group and |pi|_{R0}+diag for orbifolds; other functionals are an
// experiment hook
struct SignRule {
  enum class Base { group_default, size, r0, none };
  Base base = Base::group_default;
  bool diag = true;

  static SignRule parse(const std::string& s);
  std::string str() const;
  int exponent(const SolidPartition& pi, const GroupAction& g) const;
};

struct Contribution {
  int sign = 1;              // (-1)^sigma
  BracketProduct value;      // [-vtilde^G], no series variables
  KClass vclass;             // vtilde^G itself
  ColorProfile profile;      // series exponent of this fixed point
  std::string source;        // partition id

  Contribution() : value(0) {}
};

Contribution contribution(const SolidPartition& pi, const GroupAction& g, const VarTable& vt,
                          const SignRule& rule = {});

// value of a contribution in a coefficient context (sign included)
template <class Ctx>
typename Ctx::C contribution_value(const Contribution& c, const Ctx& ctx) {
  typename Ctx::C v = ctx.from_bp(c.value);
  if (c.sign < 0) v = -v;
  return v;
}

// Z^DT as a truncated series: sums sign * [-vtilde^G] q^profile over all
// coloured partitions of total size <= D. Deterministic for any worker
// count: partitions are sharded by index and shard sums merge in order.
template <class Ctx>
Series<typename Ctx::C> dt_partition_function(const GroupAction& g, int D, const Ctx& ctx,
                                              const SignRule& rule = {}, int workers = 1,
                                              const std::string& cache_dir = "");

// ---------------------------------------------------------------------------
// specializations of a single fixed-point contribution

// K-theoretic bracket -> leading cohomological value: [t^mu y^e] becomes the
// linear form <lambda,mu> + e m, with lambda4 = -lambda1-lambda2-lambda3
CohomFrac cohomological_map(const Contribution& c, const VarTable& vt,
                            const VarTablePtr& cohom_vt);

// order-1 expansion in b of a bracket product under t=e^{b lambda}, y=e^{b m}:
// value = c0 + c1 b + O(b^2); certifies cohomological_map on small cases
struct BSeries1 {
  CohomFrac c0;
  CohomFrac c1;
};
BSeries1 b_series_order1(const Contribution& c, const VarTable& vt, const VarTablePtr& cohom_vt);

// m-degree of a cohomological value (deg num - deg den in m)
int64_t m_degree(const CohomFrac& f, const VarTable& cohom_vt);
// leading coefficient in m: lim m^{-deg} f
CohomFrac m_leading(const CohomFrac& f, const VarTablePtr& cohom_vt);

// sign * prod over weights mu of the untwisted v^G: <lambda,mu>^{-c_mu}
CohomFrac insertion_free_contribution(const SolidPartition& pi, const GroupAction& g,
                                      const VarTable& vt, const VarTablePtr& cohom_vt,
                                      const SignRule& rule = {});

// y = t4 specialization at the K-class level. Returns nullopt (the zero
// contribution) when the trivial weight acquires a negative net coefficient;
// raises pole_at_reduction on a positive one. The surviving contributions
// carry the 3-fold sign, i.e. the 4-fold sign times (-1)^{|pi|_{R0}}.
std::optional<Contribution> dimensional_reduce(const Contribution& c, const VarTable& vt);

}  // namespace dt4
