#pragma once

// Geodesics of the s-ball as Euclidean carriers: diameters through the
// origin, or circular arcs orthogonal to the boundary circle.

#include <optional>
#include <span>
#include <utility>
#include <variant>

#include "gyro/mobius.hpp"

namespace gyro {

/// Default incidence tolerance, relative to s.
inline constexpr double kIncidenceTolerance = 1e-9;

struct Diameter {
    double theta = 0.0;  ///< direction in [0, π)
};

struct Arc {
    Complex center;
    double radius = 0.0;
};

/// Unit-disc equation a·|z|² + 2·Re(conj(b)·z) + a = 0, scaled so a² + |b|² = 1, a >= 0.
struct GeodesicCoefficients {
    double a = 0.0;
    Complex b;
};

class Gyroline {
public:
    static Gyroline diameter(double theta, BallParam ball = {});
    /// Validates |c|² = r² + s² within 1e-10·s².
    static Gyroline arc(Complex center, double radius, BallParam ball = {});
    static Gyroline from_coefficients(double a, Complex b, BallParam ball = {});

    bool is_diameter() const noexcept { return std::holds_alternative<Diameter>(form_); }
    const Diameter* as_diameter() const noexcept { return std::get_if<Diameter>(&form_); }
    const Arc* as_arc() const noexcept { return std::get_if<Arc>(&form_); }
    const std::variant<Diameter, Arc>& form() const noexcept { return form_; }
    BallParam ball() const noexcept { return ball_; }

    GeodesicCoefficients coefficients() const;

    /// The two boundary points of the geodesic, in s-ball coordinates.
    std::pair<Complex, Complex> ideal_endpoints() const;

    /// Canonical-form comparison; relative tolerance on center/radius, absolute on theta.
    bool approx_equal(const Gyroline& other, double tol = 1e-9) const;

private:
    Gyroline(std::variant<Diameter, Arc> form, BallParam ball) : form_(form), ball_(ball) {}

    std::variant<Diameter, Arc> form_;
    BallParam ball_;
};

Gyroline gyroline_through(const DiscPoint& a, const DiscPoint& b);

/// Euclidean distance from p to the carrier circle or line.
double euclidean_distance(const Gyroline& line, const DiscPoint& p);

/// True iff the Euclidean distance from p to the carrier is <= tol·s.
bool contains(const Gyroline& line, const DiscPoint& p, double tol = kIncidenceTolerance);

/// Gyrodistance from p to its nearest point of the line.
double distance_to_line(const Gyroline& line, const DiscPoint& p);

/// The common interior point, or nullopt when the geodesics do not meet in the ball.
/// Throws Indeterminate for identical lines.
std::optional<DiscPoint> intersect(const Gyroline& first, const Gyroline& second);

bool collinear(std::span<const DiscPoint> points, double tol = kIncidenceTolerance);

/// Gyroline parameter of p (assumed on gyroline ab): 0 at a, 1 at b.
double segment_parameter(const DiscPoint& a, const DiscPoint& b, const DiscPoint& p);

/// True iff p lies between a and b on their gyroline (p assumed incident).
bool on_segment(const DiscPoint& a, const DiscPoint& b, const DiscPoint& p);

/// Image of a gyroline under the isometry z ↦ e^{iθ}(z0 ⊕ z).
Gyroline map_gyroline(const Gyroline& line, const DiscIsometry& iso);

}  // namespace gyro
