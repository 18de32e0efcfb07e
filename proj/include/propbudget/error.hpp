#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace propbudget {

enum class ErrorKind {
    InvalidCost,
    InvalidLimit,
    InvalidBudget,
    InvalidProfile,
    TooLargeForExact,
    NoApprover,
    ParseError,
    DuplicateItem,
    UnknownItem,
    InvalidSpec,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidCost: return "InvalidCost";
    case ErrorKind::InvalidLimit: return "InvalidLimit";
    case ErrorKind::InvalidBudget: return "InvalidBudget";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::TooLargeForExact: return "TooLargeForExact";
    case ErrorKind::NoApprover: return "NoApprover";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateItem: return "DuplicateItem";
    case ErrorKind::UnknownItem: return "UnknownItem";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what)
        , kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace propbudget
