#include "ekz/error.hpp"

namespace ekz {

const char* to_string(ErrorCategory category) noexcept {
    switch (category) {
        case ErrorCategory::Domain: return "domain";
        case ErrorCategory::Data: return "data";
        case ErrorCategory::Parse: return "parse";
        case ErrorCategory::Io: return "io";
        case ErrorCategory::Resource: return "resource";
    }
    return "unknown";
}

}  // namespace ekz
