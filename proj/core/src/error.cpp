#include "wildvf/error.hpp"

namespace wildvf {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotCommuting: return "NotCommuting";
        case ErrorCode::NotNilpotent: return "NotNilpotent";
        case ErrorCode::SingularTwist: return "SingularTwist";
        case ErrorCode::Undecided: return "Undecided";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::NotIndependent: return "NotIndependent";
        case ErrorCode::NotHomomorphism: return "NotHomomorphism";
        case ErrorCode::InvalidStructure: return "InvalidStructure";
        case ErrorCode::RecipeExhausted: return "RecipeExhausted";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

namespace {
std::string compose(ErrorCode code, const std::string& detail) {
    std::string out(to_string(code));
    if (!detail.empty()) {
        out += ' ';
        out += detail;
    }
    return out;
}
}  // namespace

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), code_(code), detail_(detail) {}

}  // namespace wildvf
