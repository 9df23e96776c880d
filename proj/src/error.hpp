#pragma once

#include <stdexcept>
#include <string>

namespace qqsim {

enum class ErrorCode {
    Parse,            // malformed input text or Pauli label
    Dimension,        // operands with mismatched qubit counts
    InvalidArgument,  // contract violation by the caller
    Contextual,       // structure requested for a contextual operator set
    Infeasible,       // requested random instance cannot exist
    Limit,            // size guard exceeded (dense matrices, joint tables)
    Internal,         // consistency trap; indicates a bug, not bad input
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace qqsim
