#pragma once

#include <stdexcept>
#include <string>

namespace asysig {

enum class errc {
  constant_signal,
  width_mismatch,
  bad_window,
  bad_range,
  non_increasing_times,
  no_op_switch,
  syntax_error,
  unknown_kind,
  bad_parameter,
  inadmissible_input,
  not_deterministic,
  grid_too_coarse,
  budget_exceeded,
  missing_bounds,
  not_a_subsystem,
  precondition_failed,
  empty_normalized_domain,
  ill_defined_extension,
  hypothesis_e_failed,
  conclusion_failed,
  oracle_contract_violation,
  race_detected,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::constant_signal: return "ConstantSignal";
    case errc::width_mismatch: return "WidthMismatch";
    case errc::bad_window: return "BadWindow";
    case errc::bad_range: return "BadRange";
    case errc::non_increasing_times: return "NonIncreasingTimes";
    case errc::no_op_switch: return "NoOpSwitch";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_kind: return "UnknownKind";
    case errc::bad_parameter: return "BadParameter";
    case errc::inadmissible_input: return "InadmissibleInput";
    case errc::not_deterministic: return "NotDeterministic";
    case errc::grid_too_coarse: return "GridTooCoarse";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::missing_bounds: return "MissingBounds";
    case errc::not_a_subsystem: return "NotASubsystem";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::empty_normalized_domain: return "EmptyNormalizedDomain";
    case errc::ill_defined_extension: return "IllDefinedExtension";
    case errc::hypothesis_e_failed: return "HypothesisEFailed";
    case errc::conclusion_failed: return "ConclusionFailed";
    case errc::oracle_contract_violation: return "OracleContractViolation";
    case errc::race_detected: return "RaceDetected";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace asysig
