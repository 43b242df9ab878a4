#include "gyro/mobius.hpp"

#include <cmath>
#include <sstream>

namespace gyro {

namespace {

void require_same_ball(const DiscPoint& a, const DiscPoint& b) {
    if (a.ball() != b.ball()) {
        std::ostringstream msg;
        msg << "points belong to different balls (s=" << a.ball().s() << " vs s=" << b.ball().s()
            << ")";
        throw GyroError(ErrorKind::BallMismatch, msg.str());
    }
}

}  // namespace

BallParam::BallParam(double s) : s_(s) {
    if (!std::isfinite(s) || s <= 0.0) {
        throw GyroError(ErrorKind::Domain, "ball radius s must be a positive finite real");
    }
}

DiscPoint::DiscPoint(Complex z, BallParam ball) : z_(z), ball_(ball) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw GyroError(ErrorKind::NonFinite, "point has non-finite coordinates");
    }
    if (std::abs(z) >= ball.s()) {
        std::ostringstream msg;
        msg << "point (" << z.real() << ", " << z.imag() << ") is outside the open ball of radius "
            << ball.s();
        throw GyroError(ErrorKind::OutsideBall, msg.str());
    }
}

DiscPoint DiscPoint::from_unit(Complex u, BallParam ball) { return DiscPoint(u * ball.s(), ball); }

DiscPoint GyrationFactor::apply(const DiscPoint& p) const {
    return DiscPoint::from_unit(u * p.unit(), p.ball());
}

Complex unit::scalar_mul(double r, Complex a) {
    const double n = std::abs(a);
    if (n == 0.0) return {0.0, 0.0};
    return std::tanh(r * std::atanh(n)) * (a / n);
}

DiscPoint mobius_add(const DiscPoint& a, const DiscPoint& b) {
    require_same_ball(a, b);
    return DiscPoint::from_unit(unit::add(a.unit(), b.unit()), a.ball());
}

DiscPoint mobius_neg(const DiscPoint& a) { return DiscPoint(-a.z(), a.ball()); }

DiscPoint mobius_sub(const DiscPoint& a, const DiscPoint& b) { return mobius_add(a, mobius_neg(b)); }

GyrationFactor gyr(const DiscPoint& a, const DiscPoint& b) {
    require_same_ball(a, b);
    return GyrationFactor{unit::gyr(a.unit(), b.unit())};
}

DiscPoint mobius_scalar_mul(double r, const DiscPoint& a) {
    if (!std::isfinite(r)) {
        throw GyroError(ErrorKind::NonFinite, "scalar multiplier must be finite");
    }
    return DiscPoint::from_unit(unit::scalar_mul(r, a.unit()), a.ball());
}

GammaLength hyp_distance(const DiscPoint& a, const DiscPoint& b) {
    require_same_ball(a, b);
    const double v = unit::distance(a.unit(), b.unit()) * a.ball().s();
    return gamma_correct(v, a.ball());
}

GammaLength gamma_correct(double v, BallParam ball) {
    const double s = ball.s();
    if (!(v >= 0.0) || !(v < s)) {
        std::ostringstream msg;
        msg << "gyrolength " << v << " outside [0, " << s << ")";
        throw GyroError(ErrorKind::Domain, msg.str());
    }
    const double ratio = v / s;
    return GammaLength{v, v / ((1.0 - ratio) * (1.0 + ratio))};
}

DiscPoint rescale(const DiscPoint& p, BallParam target) {
    return DiscPoint(p.z() * (target.s() / p.ball().s()), target);
}

bool points_equal(const DiscPoint& a, const DiscPoint& b, double tol) {
    if (a.ball() != b.ball()) return false;
    const double scale = tol * a.ball().s();
    return std::abs(a.re() - b.re()) <= scale && std::abs(a.im() - b.im()) <= scale;
}

DiscPoint gyroline_point(const DiscPoint& a, const DiscPoint& b, double t) {
    return mobius_add(a, mobius_scalar_mul(t, mobius_add(mobius_neg(a), b)));
}

DiscPoint DiscIsometry::operator()(const DiscPoint& z) const {
    const DiscPoint moved = mobius_add(translation, z);
    return DiscPoint::from_unit(std::polar(1.0, rotation) * moved.unit(), z.ball());
}

}  // namespace gyro
