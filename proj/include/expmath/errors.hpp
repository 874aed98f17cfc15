#pragma once

#include <stdexcept>
#include <string>

namespace expmath {

// Base of every library error. kind() is a short machine-readable tag.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Searches that legitimately come back empty. The CLI maps these to exit code 3.
class NotFound : public Error {
public:
    explicit NotFound(const std::string& what, std::string stage = "")
        : Error("NotFound", what), stage_(std::move(stage)) {}
    NotFound(std::string kind, const std::string& what, std::string stage)
        : Error(std::move(kind), what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

// Broken internal invariants. The CLI maps these to exit code 4.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error("InternalError", what) {}
    InternalError(std::string kind, const std::string& what) : Error(std::move(kind), what) {}
};

// Invalid arguments or input that fails a precondition.
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error("InvalidInput", what) {}
    InvalidInput(std::string kind, const std::string& what) : Error(std::move(kind), what) {}
};

}  // namespace expmath
