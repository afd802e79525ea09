#include "qtorus/error.hpp"

namespace qtorus {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::invalid_conductor: return "invalid-conductor";
    case ErrorCode::division_by_zero: return "division-by-zero";
    case ErrorCode::not_a_root_of_unity: return "not-a-root-of-unity";
    case ErrorCode::invalid_degree: return "invalid-degree";
    case ErrorCode::invalid_qmatrix: return "invalid-qmatrix";
    case ErrorCode::invalid_operand: return "invalid-operand";
    case ErrorCode::no_coroot: return "no-coroot";
    case ErrorCode::hypothesis_violated: return "hypothesis-violated";
    case ErrorCode::invalid_points: return "invalid-points";
    case ErrorCode::internal_inconsistency: return "internal-inconsistency";
    case ErrorCode::not_simple: return "not-simple";
    case ErrorCode::field_too_small: return "field-too-small";
    case ErrorCode::not_in_domain: return "not-in-domain";
    case ErrorCode::not_integrable: return "not-integrable";
    case ErrorCode::invalid_truncation: return "invalid-truncation";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::invalid_input: return "invalid-input";
    }
    return "unknown";
}

} // namespace qtorus
