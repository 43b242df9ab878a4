#include "gyro/gyroline.hpp"

#include <cmath>
#include <numbers>

namespace gyro {

namespace {

// Chord-to-origin distance below which two points span a diameter.
constexpr double kDiameterThreshold = 1e-12;
// Normalized-coefficient separation below which two geodesics coincide.
constexpr double kIdenticalThreshold = 1e-12;

double normalize_theta(double theta) {
    theta = std::fmod(theta, std::numbers::pi);
    if (theta < 0.0) theta += std::numbers::pi;
    if (theta >= std::numbers::pi) theta -= std::numbers::pi;
    return theta;
}

double cross(Complex u, Complex w) { return u.real() * w.imag() - u.imag() * w.real(); }

void require_same_ball(BallParam a, BallParam b) {
    if (a != b) throw GyroError(ErrorKind::BallMismatch, "gyroline and point belong to different balls");
}

}  // namespace

Gyroline Gyroline::diameter(double theta, BallParam ball) {
    if (!std::isfinite(theta)) throw GyroError(ErrorKind::NonFinite, "diameter angle must be finite");
    return Gyroline(Diameter{normalize_theta(theta)}, ball);
}

Gyroline Gyroline::arc(Complex center, double radius, BallParam ball) {
    const double s = ball.s();
    if (!std::isfinite(center.real()) || !std::isfinite(center.imag()) || !std::isfinite(radius)) {
        throw GyroError(ErrorKind::NonFinite, "arc parameters must be finite");
    }
    if (radius <= 0.0) throw GyroError(ErrorKind::Domain, "arc radius must be positive");
    const double c2 = std::norm(center);
    if (std::abs(c2 - (radius * radius + s * s)) > 1e-10 * std::max(s * s, c2)) {
        throw GyroError(ErrorKind::Domain, "arc is not orthogonal to the boundary circle");
    }
    if (std::abs(center) - radius >= s) {
        throw GyroError(ErrorKind::Domain, "arc does not meet the open ball");
    }
    return Gyroline(Arc{center, radius}, ball);
}

Gyroline Gyroline::from_coefficients(double a, Complex b, BallParam ball) {
    if (a < 0.0) {
        a = -a;
        b = -b;
    }
    const double nb = std::abs(b);
    if (nb == 0.0) throw GyroError(ErrorKind::Degenerate, "geodesic coefficients vanish");
    if (a <= 1e-15 * nb) {
        return Gyroline(Diameter{normalize_theta(std::arg(Complex{0.0, -1.0} * b))}, ball);
    }
    const Complex c = -b / a;
    const double excess = std::norm(c) - 1.0;
    if (!(excess > 0.0)) throw GyroError(ErrorKind::Domain, "coefficients do not describe a disc geodesic");
    const double s = ball.s();
    return Gyroline(Arc{c * s, std::sqrt(excess) * s}, ball);
}

GeodesicCoefficients Gyroline::coefficients() const {
    if (const auto* d = as_diameter()) {
        return {0.0, Complex{0.0, 1.0} * std::polar(1.0, d->theta)};
    }
    const auto& arc = std::get<Arc>(form_);
    const Complex c = arc.center / ball_.s();
    const double scale = std::sqrt(1.0 + std::norm(c));
    return {1.0 / scale, -c / scale};
}

std::pair<Complex, Complex> Gyroline::ideal_endpoints() const {
    const double s = ball_.s();
    if (const auto* d = as_diameter()) {
        const Complex e = std::polar(s, d->theta);
        return {e, -e};
    }
    const auto& arc = std::get<Arc>(form_);
    const double phi = std::atan2(arc.radius, s);
    const double base = std::arg(arc.center);
    return {std::polar(s, base - phi), std::polar(s, base + phi)};
}

bool Gyroline::approx_equal(const Gyroline& other, double tol) const {
    if (ball_ != other.ball_) return false;
    if (const auto* d = as_diameter()) {
        const auto* o = other.as_diameter();
        if (!o) return false;
        const double gap = std::abs(d->theta - o->theta);
        return std::min(gap, std::numbers::pi - gap) <= tol;
    }
    const auto* o = other.as_arc();
    if (!o) return false;
    const auto& arc = std::get<Arc>(form_);
    const double scale = std::max(ball_.s(), std::abs(arc.center));
    return std::abs(arc.center - o->center) <= tol * scale &&
           std::abs(arc.radius - o->radius) <= tol * scale;
}

Gyroline gyroline_through(const DiscPoint& a, const DiscPoint& b) {
    require_same_ball(a.ball(), b.ball());
    if (points_equal(a, b)) {
        throw GyroError(ErrorKind::Degenerate, "a gyroline needs two distinct points");
    }
    const Complex u = a.unit();
    const Complex w = b.unit();
    const double det = cross(u, w);
    if (std::abs(det) <= kDiameterThreshold * std::abs(u - w)) {
        const Complex far = std::norm(u) >= std::norm(w) ? u : w;
        return Gyroline::diameter(std::arg(far), a.ball());
    }
    // Orthogonal circle through u and w: 2·Re(conj(c)·p) = 1 + |p|² for p in {u, w}.
    const double ru = 1.0 + std::norm(u);
    const double rw = 1.0 + std::norm(w);
    const double cx = (ru * w.imag() - rw * u.imag()) / (2.0 * det);
    const double cy = (u.real() * rw - w.real() * ru) / (2.0 * det);
    return Gyroline::from_coefficients(1.0, -Complex{cx, cy}, a.ball());
}

double euclidean_distance(const Gyroline& line, const DiscPoint& p) {
    require_same_ball(line.ball(), p.ball());
    const double s = line.ball().s();
    const Complex u = p.unit();
    if (const auto* d = line.as_diameter()) {
        return std::abs(cross(std::polar(1.0, d->theta), u)) * s;
    }
    const auto& arc = *line.as_arc();
    const Complex c = arc.center / s;
    const double r = arc.radius / s;
    // |u - c|² - r² = |u|² - 2 Re(conj(c) u) + 1, which avoids cancellation for large arcs.
    const double power = std::norm(u) - 2.0 * (std::conj(c) * u).real() + 1.0;
    return std::abs(power) / (std::abs(u - c) + r) * s;
}

bool contains(const Gyroline& line, const DiscPoint& p, double tol) {
    return euclidean_distance(line, p) <= tol * line.ball().s();
}

double distance_to_line(const Gyroline& line, const DiscPoint& p) {
    require_same_ball(line.ball(), p.ball());
    // Move p to the origin; the nearest point of the image geodesic is at
    // Euclidean (= gyro) distance |c'| - r' from 0.
    const GeodesicCoefficients k = line.coefficients();
    const Complex q = p.unit();
    const double a = k.a * (1.0 + std::norm(q)) + 2.0 * (std::conj(k.b) * q).real();
    const Complex b = 2.0 * k.a * q + k.b + std::conj(k.b) * q * q;
    const double nb = std::abs(b);
    const double root = std::sqrt(std::max(0.0, (nb - a) * (nb + a)));
    return std::abs(a) / (nb + root) * line.ball().s();
}

std::optional<DiscPoint> intersect(const Gyroline& first, const Gyroline& second) {
    require_same_ball(first.ball(), second.ball());
    const GeodesicCoefficients k1 = first.coefficients();
    const GeodesicCoefficients k2 = second.coefficients();
    const BallParam ball = first.ball();

    if (first.is_diameter() && second.is_diameter()) {
        if (std::abs(cross(k1.b, k2.b)) <= kIdenticalThreshold) {
            throw GyroError(ErrorKind::Indeterminate, "identical gyrolines have no unique intersection");
        }
        return DiscPoint(Complex{0.0, 0.0}, ball);
    }

    // Subtracting the two equations leaves the radical axis Re(conj(n)·z) = 0,
    // a line through the origin.
    const Complex n = k2.a * k1.b - k1.a * k2.b;
    if (std::abs(n) <= kIdenticalThreshold) {
        throw GyroError(ErrorKind::Indeterminate, "identical gyrolines have no unique intersection");
    }
    const Complex dir = Complex{0.0, 1.0} * n / std::abs(n);
    const GeodesicCoefficients& k = k1.a >= k2.a ? k1 : k2;
    // z = t·dir: t² - 2κt + 1 = 0, roots are mutually inverse.
    const double kappa = -(std::conj(k.b) * dir).real() / k.a;
    if (!(std::abs(kappa) > 1.0)) return std::nullopt;
    const double outer = kappa + std::copysign(std::sqrt((kappa - 1.0) * (kappa + 1.0)), kappa);
    const double inner = 1.0 / outer;
    const bool outer_inside = std::abs(outer) < 1.0 - 1e-12;
    const bool inner_inside = std::abs(inner) < 1.0 - 1e-12;
    if (outer_inside && inner_inside) {
        throw GyroError(ErrorKind::Consistency, "both intersection roots fall inside the ball");
    }
    if (!inner_inside) return std::nullopt;
    return DiscPoint::from_unit(inner * dir, ball);
}

bool collinear(std::span<const DiscPoint> points, double tol) {
    if (points.size() < 2) throw GyroError(ErrorKind::Degenerate, "collinearity needs at least two points");
    std::size_t bi = 0, bj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double d = hyp_distance(points[i], points[j]).v;
            if (d > best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    }
    if (points_equal(points[bi], points[bj])) return true;
    const Gyroline line = gyroline_through(points[bi], points[bj]);
    for (const auto& p : points) {
        if (!contains(line, p, tol)) return false;
    }
    return true;
}

double segment_parameter(const DiscPoint& a, const DiscPoint& b, const DiscPoint& p) {
    const Complex span = unit::add(-a.unit(), b.unit());
    const Complex offset = unit::add(-a.unit(), p.unit());
    const double len = std::atanh(std::abs(span));
    if (len == 0.0) throw GyroError(ErrorKind::Degenerate, "segment endpoints coincide");
    const double along = std::atanh(std::abs(offset));
    const double sign = (offset * std::conj(span)).real() < 0.0 ? -1.0 : 1.0;
    return sign * along / len;
}

bool on_segment(const DiscPoint& a, const DiscPoint& b, const DiscPoint& p) {
    const double t = segment_parameter(a, b, p);
    return t >= 0.0 && t <= 1.0;
}

Gyroline map_gyroline(const Gyroline& line, const DiscIsometry& iso) {
    require_same_ball(line.ball(), iso.translation.ball());
    const GeodesicCoefficients k = line.coefficients();
    // Image under z ↦ z0 ⊕ z is the preimage under w ↦ (⊖z0) ⊕ w.
    const Complex p = -iso.translation.unit();
    const double a = k.a * (1.0 + std::norm(p)) + 2.0 * (std::conj(k.b) * p).real();
    const Complex b = 2.0 * k.a * p + k.b + std::conj(k.b) * p * p;
    return Gyroline::from_coefficients(a, std::polar(1.0, iso.rotation) * b, line.ball());
}

}  // namespace gyro
