#pragma once

#include <stdexcept>
#include <string>

namespace asres {

/// Category of a failure. The CLI maps these onto exit codes.
enum class ErrorKind {
    structural,       // operands built over incompatible rings
    domain,           // argument outside the operation's domain
    invalid_semigroup,
    out_of_hypothesis,
    construction_bug, // a symbolic self-check failed
    parse,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for errors caused by bad user input rather than a failed check.
    bool is_usage_error() const noexcept {
        return kind_ != ErrorKind::construction_bug;
    }

private:
    ErrorKind kind_;
};

} // namespace asres
