#pragma once

#include <stdexcept>
#include <string>

namespace framelab {

// Error categories surfaced by the CLI as distinct exit codes.
enum class ErrorKind {
    Config,                   // bad configuration / parse failure
    NumericFailure,           // decomposition backend failed
    RepresentationImpossible, // no iteration operator at tolerance
    Range,                    // index/window out of range
    Pattern,                  // interleave/enumeration pattern exhausted or invalid
    Label,                    // missing or unexpected vector label
    NotFrameSequence,         // lower bound vanishes where one is required
    Discretization,           // parameter does not map onto the sample grid
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

    const char* kind_name() const {
        switch (kind_) {
            case ErrorKind::Config: return "config";
            case ErrorKind::NumericFailure: return "numeric-failure";
            case ErrorKind::RepresentationImpossible: return "representation-impossible";
            case ErrorKind::Range: return "range";
            case ErrorKind::Pattern: return "pattern";
            case ErrorKind::Label: return "label";
            case ErrorKind::NotFrameSequence: return "not-frame-sequence";
            case ErrorKind::Discretization: return "discretization";
        }
        return "unknown";
    }

  private:
    ErrorKind kind_;
};

}  // namespace framelab
