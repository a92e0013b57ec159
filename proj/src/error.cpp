#include "ordercraft/error.hpp"

#include <cstdlib>

namespace oc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CyclicRelation: return "CyclicRelation";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotJoinSemilattice: return "NotJoinSemilattice";
    case ErrorCode::NotMeetSemilattice: return "NotMeetSemilattice";
    case ErrorCode::NoLeastElement: return "NoLeastElement";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::BaseHypothesisViolated: return "BaseHypothesisViolated";
    case ErrorCode::NotMeetPreserving: return "NotMeetPreserving";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::NotLatticeHom: return "NotLatticeHom";
    case ErrorCode::ConstructionStalled: return "ConstructionStalled";
    case ErrorCode::DepthUnreachable: return "DepthUnreachable";
    case ErrorCode::NoMonochromaticSubset: return "NoMonochromaticSubset";
    case ErrorCode::NotAntichain: return "NotAntichain";
    case ErrorCode::UnsupportedParams: return "UnsupportedParams";
    case ErrorCode::UnsupportedOrdinal: return "UnsupportedOrdinal";
    case ErrorCode::IndependenceTooSmall: return "IndependenceTooSmall";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

std::uint64_t default_search_budget() {
  static const std::uint64_t budget = [] {
    std::uint64_t value = 10'000'000;
    if (const char* env = std::getenv("OC_BUDGET")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && parsed > 0) value = parsed;
    }
    return value;
  }();
  return budget;
}

}  // namespace oc
