#pragma once

#include <stdexcept>
#include <string>

namespace nvk {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    ShapeMismatch,
    DegreeCapExceeded,
    NotDerivation,
    NotCommAssoc,
    NotZinbiel,
    NotPreNovikov,
    NotNovikov,
    NotRightNovikov,
    NotLie,
    NotRepresentation,
    InvalidRepresentation,
    NotOOperator,
    NotMatchedPair,
    DualNotNovikov,
    DegenerateForm,
    NotClosed,
    CapExceeded,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

// Every library failure carries a machine-checkable kind; the message is
// prefixed with the kind name so it reads well when printed as-is.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace nvk
