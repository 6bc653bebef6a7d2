#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Base for all domain errors. `code` is a stable machine-readable tag that the
// CLI copies into error reports; `what()` carries the human diagnostic.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct GroupNotFullError : Error {
    explicit GroupNotFullError(const std::string& msg) : Error("GroupNotFull", msg) {}
};

struct NotPointedError : Error {
    explicit NotPointedError(const std::string& msg) : Error("NotPointed", msg) {}
};

struct NotSplittableError : Error {
    explicit NotSplittableError(const std::string& msg) : Error("NotSplittable", msg) {}
};

struct FanAxiomError : Error {
    explicit FanAxiomError(const std::string& msg) : Error("FanAxiomViolation", msg) {}
};

struct GluingError : Error {
    explicit GluingError(const std::string& msg) : Error("GluingViolation", msg) {}
};

struct SemigroupConeMismatchError : Error {
    explicit SemigroupConeMismatchError(const std::string& msg)
        : Error("SemigroupConeMismatch", msg) {}
};

struct NotCartierError : Error {
    explicit NotCartierError(const std::string& msg) : Error("NotCartier", msg) {}
};

struct NonCompleteFanError : Error {
    explicit NonCompleteFanError(const std::string& msg) : Error("NonCompleteFan", msg) {}
};

struct SheafIncompatibleError : Error {
    explicit SheafIncompatibleError(const std::string& msg) : Error("SheafIncompatible", msg) {}
};

struct DegeneratePolytopeError : Error {
    explicit DegeneratePolytopeError(const std::string& msg) : Error("DegeneratePolytope", msg) {}
};

struct MalformedDocumentError : Error {
    explicit MalformedDocumentError(const std::string& msg) : Error("MalformedDocument", msg) {}
};

struct UnknownConeError : Error {
    explicit UnknownConeError(const std::string& msg) : Error("UnknownCone", msg) {}
};

// The jacobian sheaf of a valid triple failed the compatibility test that
// theory guarantees; always a bug, never a data error.
struct InternalIncompatibilityError : Error {
    explicit InternalIncompatibilityError(const std::string& msg)
        : Error("InternalIncompatibility", msg) {}
};

// Raised when two routes that must agree (e.g. the two smoothness tests)
// disagree; always a bug, never a data error.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error("InternalError", msg) {}
};

} // namespace toric
