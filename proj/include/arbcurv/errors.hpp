#pragma once

#include <stdexcept>
#include <string>

namespace arbcurv {

// Error taxonomy shared by the library and the CLI exit codes:
//   config    bad run parameters (dimensions, grids, missing setup)
//   data      bad or insufficient input data (panels, CSV cells)
//   numerical a numeric procedure failed (degenerate alignment,
//             non-convergent iteration, invalid spectrum)
//   internal  broken invariant inside the pipeline (e.g. lookahead)
enum class ErrorCategory { config, data, numerical, internal };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), cat_(cat) {}
    ErrorCategory category() const noexcept { return cat_; }

private:
    ErrorCategory cat_;
};

[[noreturn]] inline void throw_config(const std::string& msg)    { throw Error(ErrorCategory::config, msg); }
[[noreturn]] inline void throw_data(const std::string& msg)      { throw Error(ErrorCategory::data, msg); }
[[noreturn]] inline void throw_numerical(const std::string& msg) { throw Error(ErrorCategory::numerical, msg); }
[[noreturn]] inline void throw_internal(const std::string& msg)  { throw Error(ErrorCategory::internal, msg); }

inline const char* category_name(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::config:    return "config";
        case ErrorCategory::data:      return "data";
        case ErrorCategory::numerical: return "numerical";
        case ErrorCategory::internal:  return "internal";
    }
    return "internal";
}

// Process exit codes used by the CLI. 0 is success.
inline int exit_code(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::config:    return 2;
        case ErrorCategory::data:      return 3;
        case ErrorCategory::numerical: return 4;
        case ErrorCategory::internal:  return 5;
    }
    return 5;
}

} // namespace arbcurv
