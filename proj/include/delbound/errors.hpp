#ifndef DELBOUND_ERRORS_HPP
#define DELBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace delbound {

/// Failure classes; the CLI maps each onto its exit code.
enum class ErrorKind {
    validation,     ///< malformed or out-of-range input
    not_certified,  ///< no polynomial passed the cone certificate
    numeric,        ///< eigensolver, overflow or internal consistency failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

class NumericError : public Error {
public:
    explicit NumericError(const std::string& what) : Error(ErrorKind::numeric, what) {}
};

class NotCertifiedError : public Error {
public:
    explicit NotCertifiedError(const std::string& what) : Error(ErrorKind::not_certified, what) {}
};

}  // namespace delbound

#endif
