#ifndef EQLAB_ERROR_HPP
#define EQLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqlab {

/// Coarse classification of every failure the library reports.
enum class ErrorCode {
    ArityMismatch,
    FieldMismatch,
    InvalidArgument,
    DomainError,      // mathematical precondition violated (singular matrix, zero divisor, ...)
    NotSmooth,
    NonIsolated,
    Undetermined,     // a certified computation hit its resource ceiling
    Unsupported,
    Parse,
    Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const char* what) {
    if (!cond) throw Error(code, what);
}

} // namespace eqlab

#endif
