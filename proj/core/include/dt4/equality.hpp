#pragma once

#include "dt4/modular.hpp"

namespace dt4 {

// Randomized identity testing configuration: `trials` independent points per
// prime, two primes. The seed fully determines the drawn points.
struct ModularCfg {
  uint64_t seed = 20260809ull;
  int trials = 3;
  int primes = 2;
};

inline Zp eval_at(const EvalPoint& pt, const RationalFn& x) { return pt.rational_fn(x); }
inline Zp eval_at(const EvalPoint& pt, const BracketProduct& x) { return pt.bracket_product(x); }
inline Zp eval_at(const EvalPoint& pt, const LaurentPoly& x) { return pt.poly(x); }
template <class F>
Zp eval_at(const EvalPoint& pt, const Frac<F>& x) {
  return pt.frac(x);
}

// Evaluates both sides at shared random points of F_p; a point that kills a
// denominator is resampled, never reported as a comparison result.
template <class A, class B>
bool modular_equal(const VarTable& vt, const A& a, const B& b, const ModularCfg& cfg = {}) {
  std::mt19937_64 rng(cfg.seed);
  for (int pi = 0; pi < cfg.primes && pi < 2; ++pi) {
    uint64_t p = kPrimes[pi];
    for (int t = 0; t < cfg.trials; ++t) {
      for (int attempt = 0;; ++attempt) {
        EvalPoint pt(vt, p, rng);
        try {
          if (!(eval_at(pt, a) == eval_at(pt, b))) return false;
          break;
        } catch (const error& e) {
          if (e.code() != errc::evaluation_singular || attempt > 64) throw;
        }
      }
    }
  }
  return true;
}

bool rf_equal(const RationalFn& a, const RationalFn& b);
bool rf_equal(const BracketProduct& a, const BracketProduct& b);
bool rf_equal(const KFrac& a, const KFrac& b);
bool rf_equal(const CohomFrac& a, const CohomFrac& b);

}  // namespace dt4
