#ifndef OMFRAME_ERROR_HPP
#define OMFRAME_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace omframe {

/// Stable error categories. The CLI maps these to exit codes and to the
/// "code" field of its structured output, so never renumber them.
enum class ErrorCode {
    ZeroVector,
    TooShort,
    DegreeBound,
    SizeMismatch,
    GcdNontrivial,
    DependentComponents,
    InvalidWitness,
    SearchExhausted,
    Parse,
    NotInvertible,
    InvalidField,
};

inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroVector: return "E_ZERO_VECTOR";
        case ErrorCode::TooShort: return "E_TOO_SHORT";
        case ErrorCode::DegreeBound: return "E_DEGREE_BOUND";
        case ErrorCode::SizeMismatch: return "E_SIZE_MISMATCH";
        case ErrorCode::GcdNontrivial: return "E_GCD_NONTRIVIAL";
        case ErrorCode::DependentComponents: return "E_DEPENDENT_COMPONENTS";
        case ErrorCode::InvalidWitness: return "E_INVALID_WITNESS";
        case ErrorCode::SearchExhausted: return "E_SEARCH_EXHAUSTED";
        case ErrorCode::Parse: return "E_PARSE";
        case ErrorCode::NotInvertible: return "E_NOT_INVERTIBLE";
        case ErrorCode::InvalidField: return "E_INVALID_FIELD";
    }
    return "E_UNKNOWN";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace omframe

#endif
