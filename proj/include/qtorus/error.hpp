#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtorus {

enum class ErrorCode {
    invalid_conductor,
    division_by_zero,
    not_a_root_of_unity,
    invalid_degree,
    invalid_qmatrix,
    invalid_operand,
    no_coroot,
    hypothesis_violated,
    invalid_points,
    internal_inconsistency,
    not_simple,
    field_too_small,
    not_in_domain,
    not_integrable,
    invalid_truncation,
    invalid_argument,
    invalid_input,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures surface as this exception; `code()` is stable and
// machine readable, `what()` carries a human message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace qtorus
