#pragma once

#include <stdexcept>
#include <string>

namespace gpc {

struct DegenerateParameter : std::runtime_error {
    explicit DegenerateParameter(const std::string& what) : std::runtime_error(what) {}
};

struct SingularParameter : std::runtime_error {
    explicit SingularParameter(const std::string& what) : std::runtime_error(what) {}
};

struct ContextMismatch : std::runtime_error {
    explicit ContextMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct Def1Violation : std::runtime_error {
    explicit Def1Violation(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateStructure : std::runtime_error {
    explicit DegenerateStructure(const std::string& what) : std::runtime_error(what) {}
};

struct APCViolation : std::runtime_error {
    explicit APCViolation(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolation : std::runtime_error {
    explicit PreconditionViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Input-file / schema problem; `where` is a JSON-pointer-ish path into the file.
struct SchemaError : std::runtime_error {
    std::string where;
    SchemaError(const std::string& where_, const std::string& what)
        : std::runtime_error(where_ + ": " + what), where(where_) {}
};

} // namespace gpc
