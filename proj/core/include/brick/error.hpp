#pragma once

#include <stdexcept>
#include <string>

namespace brick {

// Domain error vocabulary. The CLI prints the name on stderr and exits 1;
// library users can switch on the code.
enum class ErrorCode {
  invalid_band,
  too_few_levels,
  kernel_too_deep,
  disconnected_graph,
  not_sorting,
  not_a_contact,
  graph_mismatch,
  cyclic_graph,
  not_irreducible,
  dimension_too_large,
  oracle_mismatch,
  resource_limit,
  not_a_triangulation,
  not_relevant,
  not_antisymmetric,
  invalid_argument,
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_band: return "InvalidBand";
    case ErrorCode::too_few_levels: return "TooFewLevels";
    case ErrorCode::kernel_too_deep: return "KernelTooDeep";
    case ErrorCode::disconnected_graph: return "DisconnectedGraph";
    case ErrorCode::not_sorting: return "NotSorting";
    case ErrorCode::not_a_contact: return "NotAContact";
    case ErrorCode::graph_mismatch: return "GraphMismatch";
    case ErrorCode::cyclic_graph: return "CyclicGraph";
    case ErrorCode::not_irreducible: return "NotIrreducible";
    case ErrorCode::dimension_too_large: return "DimensionTooLarge";
    case ErrorCode::oracle_mismatch: return "OracleMismatch";
    case ErrorCode::resource_limit: return "ResourceLimit";
    case ErrorCode::not_a_triangulation: return "NotATriangulation";
    case ErrorCode::not_relevant: return "NotRelevant";
    case ErrorCode::not_antisymmetric: return "NotAntisymmetric";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// Internal invariants that theory guarantees; tripping one is a bug, not bad input.
#define BRICK_CHECK(cond, msg)                                                         \
  do {                                                                                 \
    if (!(cond)) throw std::logic_error(std::string("internal invariant: ") + (msg));  \
  } while (0)

}  // namespace brick
