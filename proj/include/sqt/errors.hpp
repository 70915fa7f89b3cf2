#pragma once

#include <stdexcept>
#include <string>

namespace sqt {

struct NotHermitian : std::runtime_error {
    explicit NotHermitian(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainViolation : std::runtime_error {
    explicit DomainViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct LengthMismatch : std::runtime_error {
    explicit LengthMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotMajorized : std::runtime_error {
    explicit NotMajorized(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotIsometry : std::runtime_error {
    explicit NotIsometry(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotIsometryFamily : std::runtime_error {
    explicit NotIsometryFamily(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotOrthonormal : std::runtime_error {
    explicit NotOrthonormal(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadWeights : std::runtime_error {
    explicit BadWeights(const std::string& msg) : std::runtime_error(msg) {}
};

struct BadDims : std::runtime_error {
    explicit BadDims(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownName : std::runtime_error {
    explicit UnknownName(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParameterOutOfRange : std::runtime_error {
    explicit ParameterOutOfRange(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sqt
