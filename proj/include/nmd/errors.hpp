#pragma once

#include <stdexcept>
#include <string>

namespace nmd {

// Exit-code categories used by the CLI.
enum class ErrorKind {
  InputError,      // exit 2: file/parse/dimension problems
  ResonanceError,  // exit 3: resonance or small-divisor abort
  NumericalError,  // exit 4: convergence/residual/divergence failures
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline Error input_error(const std::string& what) { return Error(ErrorKind::InputError, what); }
inline Error resonance_error(const std::string& what) { return Error(ErrorKind::ResonanceError, what); }
inline Error numerical_error(const std::string& what) { return Error(ErrorKind::NumericalError, what); }

}  // namespace nmd
