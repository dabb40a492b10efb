// dt4: K-theoretic Donaldson-Thomas series of [C^4/G] by equivariant
// localization over coloured solid partitions, with closed-formula,
// crepant-resolution and specialization-limit verifiers.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "dt4/json_io.hpp"
#include "dt4/version.hpp"

namespace {

using namespace dt4;

struct CommonOpts {
  std::string group = "trivial";
  int order = 2;
  std::string mode = "auto";  // exact | modular | auto
  std::string sign_rule = "default";
  uint64_t seed = 20260809ull;
  int trials = 3;
  int workers = 1;
  std::string cache_dir;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_order = true) {
  cmd->add_option("--group", o.group, "group spec: trivial|zr:R|z2z2|z3age2|custom:...");
  if (with_order) cmd->add_option("--order", o.order, "total series order D");
  cmd->add_option("--mode", o.mode, "exact|modular|auto (auto: exact up to order 3)");
  cmd->add_option("--sign-rule", o.sign_rule, "default|size+diag|r0+diag|size|r0|diag|none");
  cmd->add_option("--seed", o.seed, "RNG seed for modular identity testing");
  cmd->add_option("--trials", o.trials, "points per prime in modular mode");
  cmd->add_option("--workers", o.workers, "worker threads (does not affect output bytes)");
  cmd->add_option("--cache", o.cache_dir, "partition cache directory (default $DT4_CACHE)");
  cmd->add_option("--out", o.out, "write the deterministic payload to this file");
}

bool effective_exact(const CommonOpts& o) {
  if (o.mode == "exact") return true;
  if (o.mode == "modular") return false;
  if (o.mode == "auto") return o.order <= 3;
  fail(errc::bad_input, "mode must be exact, modular or auto");
}

Json config_json(const std::string& command, const CommonOpts& o, bool exact) {
  Json c;
  c["command"] = command;
  c["group"] = o.group;
  c["order"] = o.order;
  c["mode"] = exact ? "exact" : "modular";
  c["sign_rule"] = o.sign_rule;
  c["seed"] = o.seed;
  return c;
}

Json envelope(const std::string& command, const CommonOpts& o, bool exact) {
  Json j;
  j["dt4-schema"] = schema_version;
  j["build_id"] = build_id;
  j["config"] = config_json(command, o, exact);
  return j;
}

// the out-file payload omits wall times so equal configs give equal bytes
void emit(const Json& with_times, const Json& deterministic, const std::string& out) {
  std::cout << with_times.dump(2) << "\n";
  if (!out.empty()) {
    std::ofstream os(out);
    os << deterministic.dump(2) << "\n";
  }
}

std::string cache_or_env(const CommonOpts& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  const char* env = std::getenv("DT4_CACHE");
  return env ? env : "";
}

int run_compute(const CommonOpts& o) {
  GroupAction g = GroupAction::parse(o.group);
  Engine eng(g);
  bool exact = effective_exact(o);
  SignRule rule = SignRule::parse(o.sign_rule);
  Json j = envelope("compute", o, exact);
  j["group"] = o.group;
  j["order"] = o.order;
  j["sign_rule"] = o.sign_rule;
  if (exact) {
    ExactCtx ctx{eng.vt};
    Series<KFrac> s =
        dt_partition_function(g, o.order, ctx, rule, o.workers, cache_or_env(o));
    j["series"] = json_of(s);
  } else {
    // residues of every coefficient at the seeded points, a deterministic
    // fingerprint usable for cross-run comparisons at large orders
    std::mt19937_64 rng(o.seed);
    Json points = Json::array();
    for (uint64_t p : kPrimes)
      for (int t = 0; t < o.trials; ++t) {
        for (int attempt = 0;; ++attempt) {
          EvalPoint pt(*eng.vt, p, rng);
          PointCtx ctx{eng.vt, &pt};
          try {
            Series<Zp> s =
                dt_partition_function(g, o.order, ctx, rule, o.workers, cache_or_env(o));
            Json pj;
            pj["prime"] = p;
            pj["trial"] = t;
            pj["series"] = fingerprint_json(s);
            points.push_back(std::move(pj));
            break;
          } catch (const error& e) {
            if (e.code() != errc::evaluation_singular || attempt > 64) throw;
          }
        }
      }
    j["points"] = std::move(points);
  }
  emit(j, j, o.out);
  return 0;
}

int run_verify(const std::string& conjecture, const CommonOpts& o) {
  GroupAction g = GroupAction::parse(o.group);
  bool exact = effective_exact(o);
  VerifyOptions vo;
  vo.order = o.order;
  vo.exact = exact;
  vo.modular.seed = o.seed;
  vo.modular.trials = o.trials;
  vo.rule = SignRule::parse(o.sign_rule);
  vo.workers = o.workers;
  vo.cache_dir = cache_or_env(o);

  Report rep;
  if (conjecture == "orbifold") {
    rep = verify_orbifold_conjecture(g, vo);
  } else if (conjecture == "crc") {
    rep = verify_crc(g);
  } else if (conjecture == "pt") {
    rep = pt_consistency(g);
    int r = g.spec().rfind("zr:", 0) == 0 ? g.orders()[0] : 2;
    Report irr = pt_irreducible_series(std::max(r, 2), o.order);
    for (auto& c : irr.checks) rep.add(irr.name + " " + c.label, c.pass, c.ms);
    for (auto& n : irr.notes) rep.note(n);
  } else if (conjecture == "limits") {
    rep = limits_suite(g, vo);
  } else {
    fail(errc::bad_input, "conjecture must be orbifold, pt, crc or limits");
  }

  Json j = envelope("verify:" + conjecture, o, exact);
  j["report"] = json_of(rep, /*with_timings=*/true);
  Json jd = envelope("verify:" + conjecture, o, exact);
  jd["report"] = json_of(rep, /*with_timings=*/false);
  emit(j, jd, o.out);
  return rep.pass ? 0 : 1;
}

int run_partitions(const CommonOpts& o, int count) {
  Json j = envelope("partitions", o, /*exact=*/true);
  std::vector<SolidPartition> ps = enumerate_solid_partitions(count, cache_or_env(o));
  j["n"] = count;
  j["count"] = ps.size();
  if (o.group != "trivial") {
    GroupAction g = GroupAction::parse(o.group);
    std::map<std::string, std::size_t> by_profile;
    for (auto& p : ps) {
      ColorProfile cp = color_counts(p, g);
      std::string key;
      for (std::size_t i = 0; i < cp.size(); ++i)
        key += (i ? "," : "") + std::to_string(cp[i]);
      ++by_profile[key];
    }
    Json prof;
    for (auto& [k, v] : by_profile) prof[k] = v;
    j["profiles"] = std::move(prof);
  }
  emit(j, j, o.out);
  return 0;
}

int run_age(const CommonOpts& o) {
  GroupAction g = GroupAction::parse(o.group);
  AgeReport rep = age_report(g);
  Json j = envelope("age", o, /*exact=*/true);
  Json els = Json::array();
  for (auto& el : rep.elements) {
    Json e;
    e["tuple"] = el.tuple;
    e["age"] = rat_str(el.age);
    els.push_back(std::move(e));
  }
  j["elements"] = std::move(els);
  j["age_at_most_one"] = rep.age_at_most_one;
  if (rep.witness) {
    Json w;
    w["tuple"] = rep.witness->tuple;
    w["age"] = rat_str(rep.witness->age);
    j["witness"] = std::move(w);
  }
  emit(j, j, o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact K-theoretic DT partition functions of C^4 orbifolds"};
  app.require_subcommand(1);

  CommonOpts o;
  int count = 0;
  std::string conjecture = "orbifold";

  CLI::App* c_compute = app.add_subcommand("compute", "DT series by localization");
  add_common(c_compute, o);

  CLI::App* c_verify = app.add_subcommand("verify", "check a closed-formula identity");
  c_verify->add_option("--conjecture", conjecture, "orbifold|pt|crc|limits");
  add_common(c_verify, o);

  CLI::App* c_limits = app.add_subcommand("limits", "specialization limits suite");
  add_common(c_limits, o);

  CLI::App* c_parts = app.add_subcommand("partitions", "solid partition counts");
  c_parts->add_option("--count", count, "partition size n")->required();
  add_common(c_parts, o, /*with_order=*/false);

  CLI::App* c_age = app.add_subcommand("age", "ages of the group elements");
  add_common(c_age, o, /*with_order=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_compute->parsed()) return run_compute(o);
    if (c_verify->parsed()) return run_verify(conjecture, o);
    if (c_limits->parsed()) return run_verify("limits", o);
    if (c_parts->parsed()) return run_partitions(o, count);
    if (c_age->parsed()) return run_age(o);
  } catch (const error& e) {
    Json j;
    j["error"] = e.what();
    if (!e.context().empty()) j["context"] = e.context();
    std::cerr << j.dump(2) << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\": \"" << e.what() << "\"}\n";
    return 3;
  }
  return 2;
}
