#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oc {

enum class ErrorCode {
  CyclicRelation,
  IndexOutOfRange,
  ArityMismatch,
  BudgetExceeded,
  NotALattice,
  NotJoinSemilattice,
  NotMeetSemilattice,
  NoLeastElement,
  StructureMismatch,
  NotIndependent,
  NotDistributive,
  BaseHypothesisViolated,
  NotMeetPreserving,
  NotSurjective,
  NotLatticeHom,
  ConstructionStalled,
  DepthUnreachable,
  NoMonochromaticSubset,
  NotAntichain,
  UnsupportedParams,
  UnsupportedOrdinal,
  IndependenceTooSmall,
  UnknownSuite,
  InvalidInput,
  PreconditionViolated,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// Node budget for backtracking searches. OC_BUDGET overrides the default.
std::uint64_t default_search_budget();

inline constexpr std::uint64_t kDefaultDownsetCap = 1'000'000;
inline constexpr std::size_t kDefaultLatticeCap = 8192;

}  // namespace oc
