#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gyro {

enum class ErrorKind {
    BallMismatch,
    NonFinite,
    OutsideBall,
    Domain,
    Degenerate,
    Indeterminate,
    Incidence,
    VertexProximity,
    NonTransversal,
    NotCollinear,
    Consistency,
    GeneratorExhausted,
};

std::string_view to_string(ErrorKind kind) noexcept;

class GyroError : public std::runtime_error {
public:
    GyroError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace gyro
