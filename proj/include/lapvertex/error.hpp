#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lapvertex {

enum class ErrorKind {
    SelfLoop,
    DuplicateEdge,
    Disconnected,
    IndexOutOfRange,
    BadParams,
    ParseError,
    GiveUp,
    NoConvergence,
    NearPole,
    QuadratureNoConvergence,
    TooLarge,
    IdenticalVertices,
    NotAnEdge,
    BadIndex,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` distinguishes failure modes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace lapvertex
