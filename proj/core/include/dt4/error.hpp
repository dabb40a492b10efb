#pragma once

#include <stdexcept>
#include <string>

namespace dt4 {

enum class errc {
  trivial_weight_in_denominator,
  lattice_violation,
  non_expandable,
  nonzero_constant_term,
  order_mismatch,
  evaluation_singular,
  rank_mismatch,
  zero_linear_form,
  pole_at_reduction,
  chart_not_calabi_yau,
  unsupported_group,
  not_su4,
  identity_failed,
  no_sign_vector_works,
  bad_input,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::trivial_weight_in_denominator: return "TrivialWeightInDenominator";
    case errc::lattice_violation: return "LatticeViolation";
    case errc::non_expandable: return "NonExpandable";
    case errc::nonzero_constant_term: return "NonzeroConstantTerm";
    case errc::order_mismatch: return "OrderMismatch";
    case errc::evaluation_singular: return "EvaluationSingular";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::zero_linear_form: return "ZeroLinearForm";
    case errc::pole_at_reduction: return "PoleAtReduction";
    case errc::chart_not_calabi_yau: return "ChartNotCalabiYau";
    case errc::unsupported_group: return "UnsupportedGroup";
    case errc::not_su4: return "NotSU4";
    case errc::identity_failed: return "IdentityFailed";
    case errc::no_sign_vector_works: return "NoSignVectorWorks";
    case errc::bad_input: return "BadInput";
  }
  return "?";
}

class error : public std::runtime_error {
 public:
  error(errc code, std::string what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + std::move(what)), code_(code) {}
  errc code() const { return code_; }

  // context attached while unwinding (e.g. the offending partition)
  void set_context(std::string ctx) { context_ = std::move(ctx); }
  const std::string& context() const { return context_; }

 private:
  errc code_;
  std::string context_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace dt4
