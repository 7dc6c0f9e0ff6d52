#pragma once

#include <stdexcept>
#include <string>

namespace realnf {

enum class FailKind { NotSingular, NotCorank2, NotIsolated, OutOfScope, Degenerate, Internal };

class ClassifyError : public std::runtime_error {
  public:
    FailKind kind;
    ClassifyError(FailKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// CLI status buckets
inline const char* status_of(FailKind k) {
    switch (k) {
        case FailKind::NotIsolated: return "not-isolated";
        case FailKind::Degenerate: return "degenerate";
        default: return "out-of-scope";
    }
}

}  // namespace realnf
