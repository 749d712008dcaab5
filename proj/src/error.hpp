#pragma once

#include <stdexcept>
#include <string>

namespace majeur {

// Mirrors the mj_status codes of the public C surface.
enum class ErrorCode {
    invalid_input = 1,
    contract_violation = 2,
    unsupported_order = 3,
    resource_limit = 4,
    invalid_comparison = 5,
    invalid_argument = 6,
    unavailable = 7,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace majeur
