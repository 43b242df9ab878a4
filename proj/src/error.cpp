#include "gyro/error.hpp"

namespace gyro {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::BallMismatch: return "ball-mismatch";
        case ErrorKind::NonFinite: return "non-finite";
        case ErrorKind::OutsideBall: return "outside-ball";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::Indeterminate: return "indeterminate";
        case ErrorKind::Incidence: return "incidence";
        case ErrorKind::VertexProximity: return "vertex-proximity";
        case ErrorKind::NonTransversal: return "non-transversal";
        case ErrorKind::NotCollinear: return "not-collinear";
        case ErrorKind::Consistency: return "consistency";
        case ErrorKind::GeneratorExhausted: return "generator-exhausted";
    }
    return "unknown";
}

}  // namespace gyro
