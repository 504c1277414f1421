#include "hcms/error.hpp"

namespace hcms {

std::string_view token(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "DIMENSION_MISMATCH";
    case Errc::singular: return "SINGULAR";
    case Errc::no_solution: return "NO_SOLUTION";
    case Errc::overflow: return "OVERFLOW";
    case Errc::budget_exceeded: return "BUDGET_EXCEEDED";
    case Errc::not_in_image: return "NOT_IN_IMAGE";
    case Errc::not_compressible: return "NOT_COMPRESSIBLE";
    case Errc::not_hamming_partition: return "NOT_HAMMING_PARTITION";
    case Errc::r_not_invertible: return "R_NOT_INVERTIBLE";
    case Errc::height_negative: return "HEIGHT_NEGATIVE";
    case Errc::syndrome_not_decodable: return "SYNDROME_NOT_DECODABLE";
    case Errc::not_perfect: return "NOT_PERFECT";
    case Errc::decomposition_invalid: return "DECOMPOSITION_INVALID";
    case Errc::not_a_subspace: return "NOT_A_SUBSPACE";
    case Errc::params_not_perfect: return "PARAMS_NOT_PERFECT";
    case Errc::precondition_violation: return "PRECONDITION_VIOLATION";
    case Errc::malformed_input: return "MALFORMED_INPUT";
    case Errc::internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

}  // namespace hcms
