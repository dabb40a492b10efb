#pragma once

#include <array>

#include "dt4/vertex.hpp"

namespace dt4 {

// ---------------------------------------------------------------------------
// reports

struct CheckResult {
  std::string label;
  bool pass = false;
  double ms = 0.0;
};

struct Report {
  std::string name;
  bool pass = true;
  std::vector<CheckResult> checks;
  std::vector<int> sign_vector;  // CRC only
  std::vector<std::string> notes;

  void add(std::string label, bool ok, double ms = 0.0) {
    pass = pass && ok;
    checks.push_back({std::move(label), ok, ms});
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

// ---------------------------------------------------------------------------
// engine bundle: a group together with its variable table

struct Engine {
  GroupAction group;
  VarTablePtr vt;

  explicit Engine(const GroupAction& g)
      : group(g), vt(cy_table(g.series_var_names())) {}
  static Engine parse(const std::string& spec) { return Engine(GroupAction::parse(spec)); }
};

// ---------------------------------------------------------------------------
// closed-formula building blocks

using Chart = std::array<Mono, 4>;  // four torus weights multiplying to 1

// F(a,b,c,d,y,q) = [ab][bc][ac]/([a][b][c][d]) * [y]/([y^{1/2}q][y^{1/2}q^{-1}])
BracketProduct nekrasov_F(const Chart& chart, const Mono& q, const VarTable& vt);

// torus charts of the crepant resolution: r charts for zr, 4 for z2z2
std::vector<Chart> resolution_charts(const GroupAction& g, const VarTable& vt);

// F_r + F^col_r (or F_{2,2} + F^col_{2,2}) in the group's series variables
ExpArgument build_orbifold_argument(const GroupAction& g, const VarTablePtr& vt);

// the same argument with y = t4: the dimensionally reduced 3-fold forms
ExpArgument three_d_argument(const GroupAction& g, const VarTablePtr& vt);

// ---------------------------------------------------------------------------
// K-theoretic Gopakumar-Vafa data over the positive-root classes

struct GvClass {
  std::string name;        // "b[1,2]", "b10+b01", ...
  SExp exponent;           // Q^beta as a monomial in the orbifold q-variables
  BracketProduct magnitude;  // P_{1,beta}(y) with sign fixed to +
};

struct RootSystemData {
  GroupAction group;
  std::vector<GvClass> classes;

  static RootSystemData for_group(const GroupAction& g, const VarTablePtr& vt);
};

struct GvValue {
  BracketProduct value;
  bool positive_root = false;  // false: P_{1,beta} = 0
};
GvValue gv_invariant(const GroupAction& g, const std::string& class_name, const VarTablePtr& vt);

// A5 < SO(3) stable-pair table, shipped as data; values over the rank-2
// torus (t, t4) with t^3 t4 = 1. The hypothesis field records the assumed
// vanishing under which the values hold.
struct A5GvEntry {
  std::string curve_class;  // combination of b1..b4
  std::string value;        // bracket expression, sign undetermined
};
struct A5Table {
  std::vector<A5GvEntry> entries;
  std::string hypothesis;
};
const A5Table& a5_gv_table();

// ---------------------------------------------------------------------------
// stable pairs on the resolution

// sum over positive classes of -P_{1,beta}(t4) [y] Q^beta / ([t4][y^{1/2}q][y^{1/2}q^{-1}])
// in the given table; Q^beta is rendered through `class_exponent`, and the
// q-brackets use `q`. Signs multiply class by class.
ExpArgument pt_argument(const RootSystemData& data, const VarTablePtr& vt, const Mono& q,
                        const std::function<Mono(const GvClass&)>& class_exponent,
                        const std::vector<int>* signs = nullptr);

// table with variables Q1..,q for standalone PT expansions of a group
struct PtEngine {
  RootSystemData data;
  VarTablePtr vt;       // coeff vars + class variables + q
  Mono q;               // the euler-characteristic variable
  explicit PtEngine(const GroupAction& g);
  Mono class_mono(const GvClass& c, bool negate) const;
  ExpArgument argument(const std::vector<int>* signs = nullptr, bool negate_Q = false) const;
};

// n=0 and n=1 coefficients of the PT argument against the tabulated values
Report pt_consistency(const GroupAction& g);

// the one-leg vertex/edge computation for an irreducible class, checked
// against the closed form to the requested order
Report pt_irreducible_series(int r, int order);

// ---------------------------------------------------------------------------
// conjecture verifiers

struct VerifyOptions {
  int order = 2;
  bool exact = true;
  ModularCfg modular{};
  SignRule rule{};
  int workers = 1;
  std::string cache_dir;
};

Report verify_orbifold_conjecture(const GroupAction& g, const VerifyOptions& opt);

// exact rational identity between the orbifold argument and the
// DT0 x PT(Q) x PT(Q^{-1}) argument, solving for the GV sign vector
Report verify_crc(const GroupAction& g, bool test_perturbations = true);

Report limits_suite(const GroupAction& g, const VerifyOptions& opt);

// ---------------------------------------------------------------------------
// age

struct GroupElementSpec {
  int order = 1;
  std::array<int, 4> powers{};
};

Rational age_of(const GroupElementSpec& g);  // not_su4 unless sum = 0 mod r

struct AgeElement {
  std::vector<int> tuple;  // generator powers
  Rational age;
};
struct AgeReport {
  std::vector<AgeElement> elements;
  bool age_at_most_one = true;
  std::optional<AgeElement> witness;  // an element of age >= 2
};
AgeReport age_report(const GroupAction& g);

}  // namespace dt4
