#ifndef WILDVF_ERROR_HPP
#define WILDVF_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace wildvf {

enum class ErrorCode {
    ContextMismatch,
    UnknownVariable,
    LengthMismatch,
    ShapeMismatch,
    DimensionMismatch,
    NotCommuting,
    NotNilpotent,
    SingularTwist,
    Undecided,
    NotClosed,
    NotIndependent,
    NotHomomorphism,
    InvalidStructure,
    RecipeExhausted,
    ParseError,
    InternalError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The message names the violated
/// invariant and, where there is one, the offending index.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace wildvf

#endif
